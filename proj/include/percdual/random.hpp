#pragma once

#include <cstdint>
#include <random>

#include "percdual/errors.hpp"
#include "percdual/lattice.hpp"

namespace percdual {

/// SplitMix64 finaliser; used to derive independent per-trial seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

/// Independent site occupancy with probability p over the window.
///
/// Generator: std::mt19937_64 seeded with `seed`, whose output sequence is
/// fixed by the C++ standard. Cells are visited row by row from the bottom-left
/// corner; a cell is occupied when the top 53 bits of its draw, read as an
/// integer, are below p * 2^53. No standard distribution object is involved,
/// so the result is identical across platforms and standard libraries.
inline Config random_config(const Window& window, double p, std::uint64_t seed) {
  if (!(p >= 0.0 && p <= 1.0)) throw InvalidInput("occupancy probability must lie in [0, 1]");
  constexpr double kScale = 9007199254740992.0;  // 2^53
  const auto threshold = static_cast<std::uint64_t>(p * kScale);
  std::mt19937_64 gen(seed);
  CellSet occupied;
  for (int j = window.y0; j < window.y0 + window.height; ++j) {
    for (int i = window.x0; i < window.x0 + window.width; ++i) {
      const std::uint64_t draw = gen() >> 11;
      if (p >= 1.0 || draw < threshold) occupied.insert(Cell{i, j});
    }
  }
  return Config(std::move(occupied), window);
}

}  // namespace percdual
