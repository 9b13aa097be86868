#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "percdual/errors.hpp"
#include "percdual/lattice.hpp"

namespace percdual {

enum class Location { interior, on, exterior };

inline const char* to_string(Location l) {
  switch (l) {
    case Location::interior: return "interior";
    case Location::on: return "on";
    case Location::exterior: return "exterior";
  }
  return "?";
}

/// Simple closed rectilinear curve on the corner lattice.
///
/// Stored in canonical form: counterclockwise, starting at the
/// lexicographically smallest corner. Cells are classified by their centres
/// with a horizontal ray, which never meets a lattice corner.
class Cycle {
 public:
  Cycle() = default;

  explicit Cycle(std::vector<Corner> corners) : corners_(std::move(corners)) {
    const std::size_t n = corners_.size();
    if (n < 4) throw InvalidInput("cycle needs at least four corners");
    for (std::size_t k = 0; k < n; ++k) {
      if (!unit_apart(corners_[k], corners_[(k + 1) % n])) throw InvalidInput("consecutive cycle corners are not unit neighbours");
    }
    sorted_corners_ = corners_;
    std::sort(sorted_corners_.begin(), sorted_corners_.end());
    if (std::adjacent_find(sorted_corners_.begin(), sorted_corners_.end()) != sorted_corners_.end()) {
      throw InvalidInput("cycle repeats a corner");
    }

    area2_ = 0;
    for (std::size_t k = 0; k < n; ++k) {
      const Corner& p = corners_[k];
      const Corner& q = corners_[(k + 1) % n];
      area2_ += static_cast<std::int64_t>(p.a) * q.b - static_cast<std::int64_t>(q.a) * p.b;
    }
    if (area2_ < 0) {
      std::reverse(corners_.begin(), corners_.end());
      area2_ = -area2_;
    }
    std::rotate(corners_.begin(), std::min_element(corners_.begin(), corners_.end()), corners_.end());

    sorted_edges_.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
      const Corner& p = corners_[k];
      const Corner& q = corners_[(k + 1) % n];
      const Edge e = edge_between(p, q);
      sorted_edges_.push_back(e);
      if (e.orientation == Orientation::vertical) crossings_.emplace_back(e.origin.b, e.origin.a);
    }
    std::sort(sorted_edges_.begin(), sorted_edges_.end());
    std::sort(crossings_.begin(), crossings_.end());
  }

  bool empty() const { return corners_.empty(); }
  std::size_t length() const { return corners_.size(); }
  const std::vector<Corner>& corners() const { return corners_; }

  /// Twice the enclosed area; positive for every non-empty canonical cycle.
  std::int64_t signed_area2() const { return area2_; }

  /// Edges in traversal order; edge k joins corner k to corner k+1.
  std::vector<Edge> edges() const {
    std::vector<Edge> out;
    out.reserve(corners_.size());
    for (std::size_t k = 0; k < corners_.size(); ++k) out.push_back(edge_between(corners_[k], corners_[(k + 1) % corners_.size()]));
    return out;
  }

  const std::vector<Edge>& sorted_edges() const { return sorted_edges_; }
  const std::vector<Corner>& sorted_corners() const { return sorted_corners_; }

  bool has_edge(Edge e) const { return std::binary_search(sorted_edges_.begin(), sorted_edges_.end(), e); }
  bool has_corner(Corner c) const { return std::binary_search(sorted_corners_.begin(), sorted_corners_.end(), c); }

  Location classify(Cell c) const {
    // Vertical edges crossing row c.j strictly to the right of the centre.
    const auto lo = std::lower_bound(crossings_.begin(), crossings_.end(), std::pair(c.j, c.i + 1));
    const auto hi = std::lower_bound(crossings_.begin(), crossings_.end(), std::pair(c.j + 1, std::numeric_limits<int>::min()));
    return ((hi - lo) % 2 == 1) ? Location::interior : Location::exterior;
  }

  /// A corner off the curve lies in the same region as each of its four cells.
  Location classify(Corner p) const {
    if (has_corner(p)) return Location::on;
    return classify(Cell{p.a, p.b});
  }

  /// An edge off the curve lies in the same region as both of its cells.
  Location classify(Edge e) const {
    if (has_edge(e)) return Location::on;
    return classify(edge_cells(e).second);
  }

  /// Every cell whose centre lies inside the curve.
  std::vector<Cell> interior_cells() const {
    std::vector<Cell> out;
    for (std::size_t k = 0; k + 1 < crossings_.size(); k += 2) {
      const auto& [row, x_in] = crossings_[k];
      const auto& [row_out, x_out] = crossings_[k + 1];
      for (int x = x_in; x < x_out; ++x) out.push_back(Cell{x, row});
      (void)row_out;
    }
    return out;
  }

  friend bool operator==(const Cycle& x, const Cycle& y) { return x.corners_ == y.corners_; }
  friend bool operator<(const Cycle& x, const Cycle& y) { return x.corners_ < y.corners_; }

 private:
  std::vector<Corner> corners_;
  std::vector<Corner> sorted_corners_;
  std::vector<Edge> sorted_edges_;
  std::vector<std::pair<int, int>> crossings_;  // (row, x) of vertical edges
  std::int64_t area2_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, const Cycle& c) {
  os << '[';
  for (std::size_t k = 0; k < c.corners().size(); ++k) os << (k ? " " : "") << c.corners()[k];
  return os << ']';
}

/// Unit square boundary of a single cell.
inline Cycle cell_cycle(Cell c) {
  const auto k = cell_corners(c);
  return Cycle({k.begin(), k.end()});
}

inline Location interior_classify(const Cycle& c, Cell x) { return c.classify(x); }
inline Location interior_classify(const Cycle& c, Corner p) { return c.classify(p); }

}  // namespace percdual
