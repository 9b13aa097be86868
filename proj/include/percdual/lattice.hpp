#pragma once

// Lattice primitives for the unit-square tiling of the plane.
//
// Cell (i, j) is the closed square [i, i+1] x [j, j+1]; its centre is
// (i + 1/2, j + 1/2). Corners are integer points and edges are unit segments
// between horizontally or vertically neighbouring corners.

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <deque>
#include <limits>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "percdual/errors.hpp"

namespace percdual {

/// Adjacency mode: star squares share at least a corner, plus squares share an edge.
enum class Mode { star, plus };

inline const char* to_string(Mode m) { return m == Mode::star ? "star" : "plus"; }

inline Mode other(Mode m) { return m == Mode::star ? Mode::plus : Mode::star; }

struct Cell {
  int i = 0;
  int j = 0;

  friend auto operator<=>(const Cell&, const Cell&) = default;
};

struct Corner {
  int a = 0;
  int b = 0;

  friend auto operator<=>(const Corner&, const Corner&) = default;
};

enum class Orientation : std::uint8_t { horizontal, vertical };

/// Unit edge stored by its lexicographically smaller endpoint.
struct Edge {
  Corner origin;
  Orientation orientation = Orientation::horizontal;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Cell& c) { return os << '(' << c.i << ',' << c.j << ')'; }
inline std::ostream& operator<<(std::ostream& os, const Corner& c) { return os << '<' << c.a << ',' << c.b << '>'; }
inline std::ostream& operator<<(std::ostream& os, const Edge& e) {
  return os << (e.orientation == Orientation::horizontal ? "H" : "V") << e.origin;
}

using CellSet = std::set<Cell>;

// ---------------------------------------------------------------------------
// Adjacency

/// Edge-sharing neighbours in the fixed order E, N, W, S.
inline std::array<Cell, 4> plus_neighbors(Cell c) {
  return {Cell{c.i + 1, c.j}, Cell{c.i, c.j + 1}, Cell{c.i - 1, c.j}, Cell{c.i, c.j - 1}};
}

/// Corner-sharing neighbours in the order E, N, W, S, NE, NW, SW, SE.
inline std::array<Cell, 8> star_neighbors(Cell c) {
  return {Cell{c.i + 1, c.j},     Cell{c.i, c.j + 1},     Cell{c.i - 1, c.j},     Cell{c.i, c.j - 1},
          Cell{c.i + 1, c.j + 1}, Cell{c.i - 1, c.j + 1}, Cell{c.i - 1, c.j - 1}, Cell{c.i + 1, c.j - 1}};
}

inline bool adjacent(Cell x, Cell y, Mode mode) {
  const int di = std::abs(x.i - y.i);
  const int dj = std::abs(x.j - y.j);
  if (di > 1 || dj > 1 || (di == 0 && dj == 0)) return false;
  return mode == Mode::star || di + dj == 1;
}

template <class Fn>
void for_each_neighbor(Cell c, Mode mode, Fn&& fn) {
  if (mode == Mode::plus) {
    for (const Cell& n : plus_neighbors(c)) fn(n);
  } else {
    for (const Cell& n : star_neighbors(c)) fn(n);
  }
}

// ---------------------------------------------------------------------------
// Incidence

/// Corners of a cell, counterclockwise from the lower-left one.
inline std::array<Corner, 4> cell_corners(Cell c) {
  return {Corner{c.i, c.j}, Corner{c.i + 1, c.j}, Corner{c.i + 1, c.j + 1}, Corner{c.i, c.j + 1}};
}

/// Bottom, right, top, left.
inline std::array<Edge, 4> cell_edges(Cell c) {
  return {Edge{{c.i, c.j}, Orientation::horizontal}, Edge{{c.i + 1, c.j}, Orientation::vertical},
          Edge{{c.i, c.j + 1}, Orientation::horizontal}, Edge{{c.i, c.j}, Orientation::vertical}};
}

/// The two cells containing the edge: (below, above) for horizontal edges and
/// (left, right) for vertical ones.
inline std::pair<Cell, Cell> edge_cells(Edge e) {
  if (e.orientation == Orientation::horizontal) {
    return {Cell{e.origin.a, e.origin.b - 1}, Cell{e.origin.a, e.origin.b}};
  }
  return {Cell{e.origin.a - 1, e.origin.b}, Cell{e.origin.a, e.origin.b}};
}

inline std::pair<Corner, Corner> edge_endpoints(Edge e) {
  if (e.orientation == Orientation::horizontal) return {e.origin, Corner{e.origin.a + 1, e.origin.b}};
  return {e.origin, Corner{e.origin.a, e.origin.b + 1}};
}

inline bool unit_apart(Corner p, Corner q) { return std::abs(p.a - q.a) + std::abs(p.b - q.b) == 1; }

inline Edge edge_between(Corner p, Corner q) {
  if (!unit_apart(p, q)) throw InvalidInput("corners are not unit neighbours");
  const Corner lo = std::min(p, q);
  return Edge{lo, p.b == q.b ? Orientation::horizontal : Orientation::vertical};
}

/// Cells on the left and right of the directed unit step p -> q.
inline std::pair<Cell, Cell> directed_sides(Corner p, Corner q) {
  if (q.a == p.a + 1) return {Cell{p.a, p.b}, Cell{p.a, p.b - 1}};
  if (q.b == p.b + 1) return {Cell{p.a - 1, p.b}, Cell{p.a, p.b}};
  if (q.a == p.a - 1) return {Cell{q.a, q.b - 1}, Cell{q.a, q.b}};
  if (q.b == p.b - 1) return {Cell{q.a, q.b}, Cell{q.a - 1, q.b}};
  throw InvalidInput("corners are not unit neighbours");
}

// ---------------------------------------------------------------------------
// Dual lattice bookkeeping
//
// Dual cell (a, b) is the unit square centred on primal corner (a, b). Its
// corners are primal cell centres: dual corner (p, q) sits at the centre of
// primal cell (p - 1, q - 1). Dual objects reuse Cell/Corner with this reading.

inline Cell dual_cell_at(Corner primal) { return Cell{primal.a, primal.b}; }
inline Cell primal_cell_at(Corner dual) { return Cell{dual.a - 1, dual.b - 1}; }

// ---------------------------------------------------------------------------
// Dense membership

struct Window {
  int x0 = 0;
  int y0 = 0;
  int width = 0;
  int height = 0;

  /// A width x height window whose centre cell is (0, 0).
  static Window centered(int width, int height) { return Window{-(width / 2), -(height / 2), width, height}; }

  bool contains(Cell c) const { return c.i >= x0 && c.i < x0 + width && c.j >= y0 && c.j < y0 + height; }
  std::size_t area() const { return static_cast<std::size_t>(width) * static_cast<std::size_t>(height); }

  friend bool operator==(const Window&, const Window&) = default;
};

/// Bitmap over the bounding box of a finite cell set; lookups outside the box are false.
class CellMask {
 public:
  CellMask() = default;

  template <class Range>
  explicit CellMask(const Range& cells) {
    bool first = true;
    int x1 = 0, y1 = 0;
    for (const Cell& c : cells) {
      if (first) {
        x0_ = x1 = c.i;
        y0_ = y1 = c.j;
        first = false;
      } else {
        x0_ = std::min(x0_, c.i);
        y0_ = std::min(y0_, c.j);
        x1 = std::max(x1, c.i);
        y1 = std::max(y1, c.j);
      }
    }
    if (first) return;
    width_ = x1 - x0_ + 1;
    height_ = y1 - y0_ + 1;
    bits_.assign(static_cast<std::size_t>(width_) * static_cast<std::size_t>(height_), 0);
    for (const Cell& c : cells) bits_[index(c)] = 1;
  }

  bool contains(Cell c) const {
    if (c.i < x0_ || c.j < y0_ || c.i >= x0_ + width_ || c.j >= y0_ + height_) return false;
    return bits_[index(c)] != 0;
  }

 private:
  std::size_t index(Cell c) const {
    return static_cast<std::size_t>(c.j - y0_) * static_cast<std::size_t>(width_) + static_cast<std::size_t>(c.i - x0_);
  }

  int x0_ = 0;
  int y0_ = 0;
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> bits_;
};

// ---------------------------------------------------------------------------
// Configurations

/// Finite set of occupied cells; every other cell of the plane is vacant.
class Config {
 public:
  Config() = default;

  explicit Config(CellSet occupied, std::optional<Window> window = std::nullopt)
      : occupied_(std::move(occupied)), window_(window), mask_(occupied_) {
    if (window_) {
      if (window_->width < 0 || window_->height < 0) throw InvalidInput("window has negative extent");
      for (const Cell& c : occupied_) {
        if (!window_->contains(c)) throw InvalidInput("occupied cell outside the window");
      }
    }
  }

  bool occupied(Cell c) const { return mask_.contains(c); }
  bool vacant(Cell c) const { return !mask_.contains(c); }

  const CellSet& occupied_cells() const { return occupied_; }
  const std::optional<Window>& window() const { return window_; }

  friend bool operator==(const Config& x, const Config& y) {
    return x.occupied_ == y.occupied_ && x.window_ == y.window_;
  }

 private:
  CellSet occupied_;
  std::optional<Window> window_;
  CellMask mask_;
};

/// Maximal mode-connected set of occupied cells containing `seed`; empty when
/// the seed is vacant. Breadth-first in neighbour order E,N,W,S(,NE,NW,SW,SE).
inline CellSet component(const Config& cfg, Cell seed, Mode mode) {
  CellSet out;
  if (cfg.vacant(seed)) return out;
  std::deque<Cell> queue{seed};
  out.insert(seed);
  while (!queue.empty()) {
    const Cell c = queue.front();
    queue.pop_front();
    for_each_neighbor(c, mode, [&](Cell n) {
      if (cfg.occupied(n) && out.insert(n).second) queue.push_back(n);
    });
  }
  return out;
}

/// Vacant cells sharing at least a corner with some cell of `comp`.
inline CellSet halo(const Config& cfg, const CellSet& comp) {
  CellSet out;
  for (const Cell& c : comp) {
    for (const Cell& n : star_neighbors(c)) {
      if (cfg.vacant(n) && !comp.contains(n)) out.insert(n);
    }
  }
  return out;
}

inline bool is_connected(const CellSet& cells, Mode mode) {
  if (cells.empty()) return true;
  CellSet seen{*cells.begin()};
  std::vector<Cell> stack{*cells.begin()};
  while (!stack.empty()) {
    const Cell c = stack.back();
    stack.pop_back();
    for_each_neighbor(c, mode, [&](Cell n) {
      if (cells.contains(n) && seen.insert(n).second) stack.push_back(n);
    });
  }
  return seen.size() == cells.size();
}

/// Throws InvalidInput unless `comp` is a full (maximal) mode component of `cfg`.
inline void require_component(const Config& cfg, const CellSet& comp, Mode mode) {
  if (comp.empty()) throw InvalidInput("component is empty");
  for (const Cell& c : comp) {
    if (cfg.vacant(c)) throw InvalidInput("component contains a vacant cell");
  }
  if (!is_connected(comp, mode)) throw InvalidInput(std::string("component is not ") + to_string(mode) + "-connected");
  for (const Cell& c : comp) {
    bool escapes = false;
    for_each_neighbor(c, mode, [&](Cell n) { escapes = escapes || (cfg.occupied(n) && !comp.contains(n)); });
    if (escapes) throw InvalidInput("component is not maximal");
  }
}

/// Lowest row first, then leftmost.
inline Cell lowest_leftmost(const CellSet& cells) {
  return *std::min_element(cells.begin(), cells.end(),
                           [](Cell x, Cell y) { return std::pair(x.j, x.i) < std::pair(y.j, y.i); });
}

}  // namespace percdual
