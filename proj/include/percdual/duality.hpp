#pragma once

// Surrounding cycles of vacant squares.
//
// dual_plus_cycle: around a finite star component, a plus-connected cycle of
// vacant squares. Built by placing a dual square on every corner of the
// component's outermost boundary and reading the outer contour of that plus
// region as a sequence of primal cell centres.
//
// dual_star_cycle: around a finite plus component, a star-connected cycle of
// vacant squares. Built by merging, edge by edge along the component's
// boundary cycle, the small local cycles of exterior halo squares, then
// reading off the square behind each edge of the merged cycle.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "percdual/boundary.hpp"
#include "percdual/cycle.hpp"
#include "percdual/errors.hpp"
#include "percdual/lattice.hpp"

namespace percdual {

/// Cyclic sequence of distinct cells, consecutive ones mode-adjacent.
struct SCycle {
  std::vector<Cell> cells;
  Mode mode = Mode::plus;

  /// Rotated to start at the smallest cell and oriented counterclockwise by the
  /// signed area of the centre polygon (ties broken by the smaller sequence).
  static SCycle canonical(std::vector<Cell> cells, Mode mode) {
    SCycle out{std::move(cells), mode};
    auto& v = out.cells;
    if (v.size() < 2) return out;
    std::rotate(v.begin(), std::min_element(v.begin(), v.end()), v.end());
    std::int64_t area2 = 0;
    for (std::size_t k = 0; k < v.size(); ++k) {
      const Cell& p = v[k];
      const Cell& q = v[(k + 1) % v.size()];
      area2 += static_cast<std::int64_t>(p.i) * q.j - static_cast<std::int64_t>(q.i) * p.j;
    }
    std::vector<Cell> reversed(v.rbegin(), v.rend());
    std::rotate(reversed.begin(), std::min_element(reversed.begin(), reversed.end()), reversed.end());
    if (area2 < 0 || (area2 == 0 && reversed < v)) v = std::move(reversed);
    return out;
  }

  CellSet cell_set() const { return CellSet(cells.begin(), cells.end()); }

  friend bool operator==(const SCycle&, const SCycle&) = default;
  friend bool operator<(const SCycle& x, const SCycle& y) {
    return std::pair(x.mode, x.cells) < std::pair(y.mode, y.cells);
  }
};

inline std::ostream& operator<<(std::ostream& os, const SCycle& s) {
  os << to_string(s.mode) << '[';
  for (std::size_t k = 0; k < s.cells.size(); ++k) os << (k ? " " : "") << s.cells[k];
  return os << ']';
}

// ---------------------------------------------------------------------------
// Plus cycle around a star component

struct StarDualTrace {
  OutermostBoundary outer_boundary;      // of the star component
  CellSet halo;                          // vacant squares touching the component
  CellSet vertex_squares;                // dual cells, one per boundary corner
  Cycle dual_boundary;                   // outer contour of vertex_squares, dual corners
  std::vector<Cell> dual_boundary_cells; // the same contour read as primal cell centres
  CellSet exterior_halo;                 // halo squares outside every boundary cycle
};

struct SurroundingPlusCycle {
  SCycle cycle;
  StarDualTrace trace;
};

/// Halo squares exterior to every cycle of `b`.
inline CellSet exterior_halo_star(const Config& cfg, const CellSet& comp, const OutermostBoundary& b) {
  CellSet out;
  for (const Cell& c : halo(cfg, comp)) {
    if (b.classify(c) == Location::exterior) out.insert(c);
  }
  return out;
}

/// One dual cell per distinct corner of `b`.
inline CellSet vertex_squares(const OutermostBoundary& b) {
  CellSet out;
  for (const Corner& p : b.corner_set()) out.insert(dual_cell_at(p));
  return out;
}

inline SurroundingPlusCycle dual_plus_cycle(const Config& cfg, const CellSet& comp) {
  require_component(cfg, comp, Mode::star);
  SurroundingPlusCycle out;
  StarDualTrace& t = out.trace;
  t.outer_boundary = outermost_boundary(cfg, comp, Mode::star);
  t.halo = halo(cfg, comp);
  t.exterior_halo = exterior_halo_star(cfg, comp, t.outer_boundary);
  t.vertex_squares = vertex_squares(t.outer_boundary);
  if (!is_connected(t.vertex_squares, Mode::plus)) throw ConstructionFailure("vertex squares are not plus-connected");

  // Vertex squares play the occupied role on the dual lattice.
  const Config dual(t.vertex_squares);
  OutermostBoundary dual_outer = outermost_boundary(dual, t.vertex_squares, Mode::plus);
  t.dual_boundary = std::move(dual_outer.cycles.front());
  for (const Corner& q : t.dual_boundary.corners()) t.dual_boundary_cells.push_back(primal_cell_at(q));

  for (const Cell& y : t.dual_boundary_cells) {
    if (!t.exterior_halo.contains(y)) {
      std::ostringstream msg;
      msg << "dual contour vertex " << y << " is not an exterior halo square";
      throw ConstructionFailure(msg.str());
    }
  }
  out.cycle = SCycle::canonical(t.dual_boundary_cells, Mode::plus);
  return out;
}

// ---------------------------------------------------------------------------
// Star cycle around a plus component

struct MergeStep {
  enum class Kind {
    merge_local,     // boundary edge still on the cycle: merge its local cycle
    local_contained, // boundary edge interior and its local cells already inside
    merge_neighbor,  // exterior halo square next to an engulfed edge square merged alone
    skip_neighbor,   // square next to an engulfed edge square, outside but not in the exterior halo
  };
  std::size_t edge_index = 0;
  Kind kind = Kind::merge_local;
  std::optional<Cell> cell;
  std::size_t cycle_length = 0;  // after the step
};

inline const char* to_string(MergeStep::Kind k) {
  switch (k) {
    case MergeStep::Kind::merge_local: return "merge_local";
    case MergeStep::Kind::local_contained: return "local_contained";
    case MergeStep::Kind::merge_neighbor: return "merge_neighbor";
    case MergeStep::Kind::skip_neighbor: return "skip_neighbor";
  }
  return "?";
}

struct PlusDualTrace {
  Cycle outer_boundary;                // boundary cycle of the plus component
  std::vector<Edge> boundary_edges;    // its edges in counterclockwise order
  CellSet halo;                        // vacant squares touching the component
  CellSet exterior_halo;               // halo squares outside the boundary cycle
  std::vector<Cell> edge_squares;      // square across each boundary edge, aligned with boundary_edges
  std::vector<CellSet> local_cells;    // edge square plus its exterior-halo plus neighbours
  std::vector<Cycle> local_cycles;     // outer contour of each local_cells entry
  std::vector<MergeStep> merge_log;
  Cycle merged;                        // final merged cycle
};

struct SurroundingStarCycle {
  SCycle cycle;
  PlusDualTrace trace;
};

inline std::string dump(const PlusDualTrace& t) {
  std::ostringstream os;
  os << "outer_boundary=" << t.outer_boundary << "\nedge_squares=";
  for (const Cell& w : t.edge_squares) os << w;
  os << "\nexterior_halo=";
  for (const Cell& c : t.exterior_halo) os << c;
  os << "\nmerge_log:";
  for (const MergeStep& s : t.merge_log) {
    os << "\n  edge " << s.edge_index << ' ' << to_string(s.kind);
    if (s.cell) os << ' ' << *s.cell;
    os << " length=" << s.cycle_length;
  }
  if (!t.merged.empty()) os << "\nmerged=" << t.merged;
  return os.str();
}

/// Exterior halo and, for each boundary edge of `b` in order, the square on its outer side.
inline std::pair<CellSet, std::vector<Cell>> exterior_halo_plus(const Config& cfg, const CellSet& comp, const Cycle& b) {
  CellSet exterior;
  for (const Cell& c : halo(cfg, comp)) {
    if (b.classify(c) == Location::exterior) exterior.insert(c);
  }
  std::vector<Cell> across;
  const auto& k = b.corners();
  for (std::size_t n = 0; n < k.size(); ++n) across.push_back(directed_sides(k[n], k[(n + 1) % k.size()]).second);
  return {std::move(exterior), std::move(across)};
}

/// `w` together with its plus neighbours inside `exterior_halo`.
inline CellSet local_cells(const CellSet& exterior_halo, Cell w) {
  CellSet out{w};
  for (const Cell& n : plus_neighbors(w)) {
    if (exterior_halo.contains(n)) out.insert(n);
  }
  return out;
}

inline Cycle local_cycle(const Config& cfg, const CellSet& exterior_halo, Cell w) {
  (void)cfg;
  if (!exterior_halo.contains(w)) throw InvalidInput("local cycle seed is not an exterior halo square");
  return trace_outer_boundary(local_cells(exterior_halo, w)).cycles.front();
}

/// Merges the local cycles into the component's boundary cycle in boundary
/// edge order. Expects every field of `t` up to `local_cycles` to be filled;
/// appends to `t.merge_log` and returns the merged cycle. Throws
/// ConstructionFailure, with a trace dump, if the result does not surround
/// the component and its halo using exterior halo edges only.
inline Cycle iterative_merge(PlusDualTrace& t, const CellSet& comp) {
  Cycle current = t.outer_boundary;
  auto fail = [&](const std::string& why) -> void {
    t.merged = current;
    throw ConstructionFailure(why + "\n" + dump(t));
  };

  for (std::size_t i = 0; i < t.boundary_edges.size(); ++i) {
    const Edge e = t.boundary_edges[i];
    if (current.has_edge(e)) {
      current = merge_cycles(current, t.local_cycles[i]);
      t.merge_log.push_back({i, MergeStep::Kind::merge_local, std::nullopt, current.length()});
      continue;
    }
    const CellSet& local = t.local_cells[i];
    const bool contained = std::all_of(local.begin(), local.end(),
                                       [&](Cell c) { return current.classify(c) == Location::interior; });
    if (contained) {
      t.merge_log.push_back({i, MergeStep::Kind::local_contained, std::nullopt, current.length()});
      continue;
    }
    const Cell w = t.edge_squares[i];
    const auto [a, b] = edge_cells(e);
    const Cell inner = (a == w) ? b : a;
    for (const Cell& y : plus_neighbors(w)) {
      if (y == inner || current.classify(y) != Location::exterior) continue;
      if (t.exterior_halo.contains(y)) {
        current = merge_cycles(current, cell_cycle(y));
        t.merge_log.push_back({i, MergeStep::Kind::merge_neighbor, y, current.length()});
      } else {
        t.merge_log.push_back({i, MergeStep::Kind::skip_neighbor, y, current.length()});
      }
    }
  }

  const auto& k = current.corners();
  for (std::size_t n = 0; n < k.size(); ++n) {
    const Cell inside = directed_sides(k[n], k[(n + 1) % k.size()]).first;
    if (!t.exterior_halo.contains(inside)) {
      std::ostringstream msg;
      msg << "merged cycle runs along " << inside << ", which is not an exterior halo square";
      fail(msg.str());
    }
  }
  for (const Edge& e : t.boundary_edges) {
    if (current.classify(e) != Location::interior) fail("a component boundary edge is not strictly inside the merged cycle");
  }
  for (const CellSet* group : {&comp, static_cast<const CellSet*>(&t.halo)}) {
    for (const Cell& c : *group) {
      if (current.classify(c) != Location::interior) {
        std::ostringstream msg;
        msg << "square " << c << " is not inside the merged cycle";
        fail(msg.str());
      }
    }
  }
  for (const CellSet& local : t.local_cells) {
    for (const Cell& c : local) {
      if (current.classify(c) != Location::interior) fail("a local cycle is not inside the merged cycle");
    }
  }
  return current;
}

/// Walks the edges of `merged`, maps each to the exterior halo square on its
/// inner side and collapses consecutive repeats.
inline SCycle extract_scycle(const Cycle& merged, const CellSet& exterior_halo) {
  std::vector<Cell> seq;
  const auto& k = merged.corners();
  for (std::size_t n = 0; n < k.size(); ++n) {
    const auto [inside, outside] = directed_sides(k[n], k[(n + 1) % k.size()]);
    if (!exterior_halo.contains(inside)) {
      std::ostringstream msg;
      msg << "edge " << edge_between(k[n], k[(n + 1) % k.size()]) << " has no exterior halo square inside";
      throw ConstructionFailure(msg.str());
    }
    if (exterior_halo.contains(outside)) {
      std::ostringstream msg;
      msg << "edge " << edge_between(k[n], k[(n + 1) % k.size()]) << " borders two exterior halo squares";
      throw ConstructionFailure(msg.str());
    }
    if (seq.empty() || seq.back() != inside) seq.push_back(inside);
  }
  if (seq.size() > 1 && seq.front() == seq.back()) seq.pop_back();
  const CellSet distinct(seq.begin(), seq.end());
  if (distinct.size() != seq.size()) throw ConstructionFailure("edge walk revisits a square non-consecutively");
  return SCycle::canonical(std::move(seq), Mode::star);
}

inline SurroundingStarCycle dual_star_cycle(const Config& cfg, const CellSet& comp) {
  require_component(cfg, comp, Mode::plus);
  SurroundingStarCycle out;
  PlusDualTrace& t = out.trace;
  t.outer_boundary = outermost_boundary(cfg, comp, Mode::plus).cycles.front();
  t.boundary_edges = t.outer_boundary.edges();
  t.halo = halo(cfg, comp);
  std::tie(t.exterior_halo, t.edge_squares) = exterior_halo_plus(cfg, comp, t.outer_boundary);

  for (std::size_t i = 0; i < t.edge_squares.size(); ++i) {
    const Cell w = t.edge_squares[i];
    if (!t.exterior_halo.contains(w)) throw ConstructionFailure("square across a boundary edge is not in the exterior halo\n" + dump(t));
    t.local_cells.push_back(local_cells(t.exterior_halo, w));
    t.local_cycles.push_back(local_cycle(cfg, t.exterior_halo, w));
    if (!t.local_cycles.back().has_edge(t.boundary_edges[i])) {
      throw ConstructionFailure("local cycle misses its boundary edge\n" + dump(t));
    }
  }
  t.merged = iterative_merge(t, comp);
  out.cycle = extract_scycle(t.merged, t.exterior_halo);
  return out;
}

}  // namespace percdual
