#pragma once

// Outermost boundaries of finite cell sets and cycle merging.
//
// The outer face of a finite cell set is traced by walking its boundary edges
// with the set on the left, always taking the rightmost admissible turn. The
// rightmost rule keeps the unbounded face on the right, so every traced edge
// is an outermost edge; at a pinch corner (two set cells diagonal, the other
// two cells outside) it continues around the diagonal cell, which is the star
// reading of that corner. The resulting circuit visits each corner at most
// twice and is split at repeated corners into simple cycles.

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <utility>
#include <vector>

#include "percdual/cycle.hpp"
#include "percdual/errors.hpp"
#include "percdual/lattice.hpp"

namespace percdual {

/// Closed corner walk that may revisit corners but never repeats an edge.
struct Circuit {
  std::vector<Corner> corners;  // closing step back to corners.front() is implicit
};

struct OutermostBoundary {
  std::vector<Cycle> cycles;
  std::vector<Corner> meeting_points;  // corners lying on two or more cycles

  std::set<Edge> edge_set() const {
    std::set<Edge> out;
    for (const Cycle& c : cycles) out.insert(c.sorted_edges().begin(), c.sorted_edges().end());
    return out;
  }

  std::set<Corner> corner_set() const {
    std::set<Corner> out;
    for (const Cycle& c : cycles) out.insert(c.sorted_corners().begin(), c.sorted_corners().end());
    return out;
  }

  /// Interior of some cycle, otherwise exterior. Cells are never on a cycle.
  Location classify(Cell x) const {
    for (const Cycle& c : cycles) {
      if (c.classify(x) == Location::interior) return Location::interior;
    }
    return Location::exterior;
  }

  Location classify(Corner p) const {
    bool interior = false;
    for (const Cycle& c : cycles) {
      const Location l = c.classify(p);
      if (l == Location::on) return Location::on;
      interior = interior || l == Location::interior;
    }
    return interior ? Location::interior : Location::exterior;
  }
};

namespace detail {

constexpr int kStepA[4] = {1, 0, -1, 0};  // E N W S
constexpr int kStepB[4] = {0, 1, 0, -1};

inline Corner step(Corner p, int dir) { return Corner{p.a + kStepA[dir], p.b + kStepB[dir]}; }

}  // namespace detail

/// Outer-face circuit of the finite set described by `inside`, starting on the
/// bottom edge of `start`, which must be a lowest-then-leftmost member.
/// `max_steps` bounds the walk (four per member cell is always enough).
template <class Inside>
Circuit trace_outer_circuit(const Inside& inside, Cell start, std::size_t max_steps) {
  Circuit out;
  const Corner origin{start.i, start.j};
  Corner p = origin;
  int dir = 0;
  do {
    if (out.corners.size() > max_steps) throw ConstructionFailure("outer contour trace did not close");
    out.corners.push_back(p);
    p = detail::step(p, dir);
    bool moved = false;
    for (const int turn : {3, 0, 1}) {  // right, straight, left
      const int d = (dir + turn) % 4;
      const auto [left, right] = directed_sides(p, detail::step(p, d));
      if (inside(left) && !inside(right)) {
        dir = d;
        moved = true;
        break;
      }
    }
    if (!moved) throw ConstructionFailure("outer contour trace reached a dead end");
  } while (!(p == origin && dir == 0));
  return out;
}

/// Splits a circuit at repeated corners into simple cycles. Throws
/// ConstructionFailure if a corner is visited more than twice.
inline std::vector<Cycle> split_circuit(const Circuit& circuit) {
  std::map<Corner, int> visits;
  for (const Corner& c : circuit.corners) {
    if (++visits[c] > 2) {
      std::ostringstream msg;
      msg << "circuit visits corner " << c << " more than twice";
      throw ConstructionFailure(msg.str());
    }
  }
  std::vector<Cycle> cycles;
  std::vector<Corner> stack;
  std::map<Corner, std::size_t> position;
  for (const Corner& c : circuit.corners) {
    const auto it = position.find(c);
    if (it == position.end()) {
      position.emplace(c, stack.size());
      stack.push_back(c);
      continue;
    }
    const std::size_t k = it->second;
    cycles.emplace_back(std::vector<Corner>(stack.begin() + static_cast<std::ptrdiff_t>(k), stack.end()));
    for (std::size_t m = k + 1; m < stack.size(); ++m) position.erase(stack[m]);
    stack.resize(k + 1);
  }
  cycles.emplace_back(std::move(stack));
  std::sort(cycles.begin(), cycles.end());
  return cycles;
}

/// Boundary of the unbounded face of a finite, star-connected cell set.
template <class Range>
OutermostBoundary trace_outer_boundary(const Range& cells) {
  if (cells.empty()) throw InvalidInput("cannot trace the boundary of an empty set");
  const CellMask mask(cells);
  Cell start = *cells.begin();
  for (const Cell& c : cells) {
    if (std::pair(c.j, c.i) < std::pair(start.j, start.i)) start = c;
  }
  const Circuit circuit = trace_outer_circuit([&](Cell c) { return mask.contains(c); }, start, 4 * cells.size() + 4);

  OutermostBoundary out;
  out.cycles = split_circuit(circuit);
  std::map<Corner, int> seen;
  for (const Cycle& c : out.cycles) {
    for (const Corner& p : c.sorted_corners()) ++seen[p];
  }
  for (const auto& [p, n] : seen) {
    if (n > 1) out.meeting_points.push_back(p);
  }
  return out;
}

/// Edges with one side in `comp` and the other side vacant.
inline std::set<Edge> boundary_edges(const Config& cfg, const CellSet& comp) {
  std::set<Edge> out;
  for (const Cell& c : comp) {
    for (const Edge& e : cell_edges(c)) {
      const auto [x, y] = edge_cells(e);
      const Cell other = (x == c) ? y : x;
      if (cfg.vacant(other)) out.insert(e);
    }
  }
  return out;
}

/// Outermost boundary of a mode-connected occupied set. Plus mode always
/// yields exactly one cycle; star mode yields cycles meeting at pinch corners.
inline OutermostBoundary outermost_boundary(const Config& cfg, const CellSet& comp, Mode mode) {
  if (comp.empty()) throw InvalidInput("outermost boundary of an empty component");
  for (const Cell& c : comp) {
    if (cfg.vacant(c)) throw InvalidInput("component contains a vacant cell");
  }
  if (!is_connected(comp, mode)) throw InvalidInput(std::string("component is not ") + to_string(mode) + "-connected");
  OutermostBoundary out = trace_outer_boundary(comp);
  if (mode == Mode::plus && out.cycles.size() != 1) {
    throw ConstructionFailure("plus component traced to more than one cycle");
  }
  return out;
}

/// Outermost boundary of a cell set taken on its own (the set is the occupied region).
inline OutermostBoundary outermost_boundary_of(const CellSet& cells, Mode mode) {
  return outermost_boundary(Config(cells), cells, mode);
}

/// Single cycle bounding the union of the closed interiors of two cycles that
/// share at least two corners.
inline Cycle merge_cycles(const Cycle& c1, const Cycle& c2) {
  if (c1 == c2) return c1;
  std::size_t shared = 0;
  for (const Corner& p : c2.sorted_corners()) shared += c1.has_corner(p) ? 1 : 0;
  if (shared < 2) throw InvalidInput("cycles to merge share fewer than two corners");

  std::vector<Cell> region = c1.interior_cells();
  const std::vector<Cell> more = c2.interior_cells();
  region.insert(region.end(), more.begin(), more.end());
  std::sort(region.begin(), region.end());
  region.erase(std::unique(region.begin(), region.end()), region.end());

  OutermostBoundary merged = trace_outer_boundary(region);
  if (merged.cycles.size() != 1) {
    std::ostringstream msg;
    msg << "merge produced " << merged.cycles.size() << " cycles from " << c1 << " and " << c2;
    throw ConstructionFailure(msg.str());
  }
  return std::move(merged.cycles.front());
}

}  // namespace percdual
