#pragma once

// Brute-force outermost-edge oracle: enumerate every simple cycle of the
// corner graph of a small component and test each edge against all of them.
// Exponential; guarded by kOracleMaxCells.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "percdual/cycle.hpp"
#include "percdual/errors.hpp"
#include "percdual/lattice.hpp"

namespace percdual {

inline constexpr std::size_t kOracleMaxCells = 8;

/// All simple cycles of the graph whose vertices are the corners of `comp`
/// and whose edges are the edges of its cells.
inline std::vector<Cycle> enumerate_corner_cycles(const CellSet& comp, std::size_t max_cells = kOracleMaxCells) {
  if (comp.size() > max_cells) throw TooLarge("component too large for cycle enumeration");

  std::set<Edge> edges;
  for (const Cell& c : comp) {
    for (const Edge& e : cell_edges(c)) edges.insert(e);
  }
  std::map<Corner, std::vector<Corner>> adj;
  for (const Edge& e : edges) {
    const auto [p, q] = edge_endpoints(e);
    adj[p].push_back(q);
    adj[q].push_back(p);
  }

  std::vector<Cycle> out;
  std::vector<Corner> path;
  std::set<Corner> on_path;
  // Each cycle is found from its smallest corner, in both directions; keep the
  // direction whose second corner is smaller than its last.
  auto extend = [&](auto& self, Corner root, Corner at) -> void {
    for (const Corner& next : adj[at]) {
      if (next == root && path.size() >= 4 && path[1] < path.back()) {
        out.emplace_back(path);
      } else if (root < next && !on_path.contains(next)) {
        path.push_back(next);
        on_path.insert(next);
        self(self, root, next);
        on_path.erase(next);
        path.pop_back();
      }
    }
  };
  for (const auto& [root, unused] : adj) {
    path.assign(1, root);
    on_path = {root};
    extend(extend, root, root);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// True iff every cycle of the corner graph either contains `e` or has `e` in its exterior.
inline bool outermost_edge_oracle(const std::vector<Cycle>& cycles, Edge e) {
  return std::all_of(cycles.begin(), cycles.end(), [&](const Cycle& c) { return c.classify(e) != Location::interior; });
}

inline bool outermost_edge_oracle(const Config& cfg, const CellSet& comp, Edge e) {
  (void)cfg;
  return outermost_edge_oracle(enumerate_corner_cycles(comp), e);
}

/// Every edge of the corner graph that passes the oracle.
inline std::set<Edge> outermost_edges_by_oracle(const CellSet& comp) {
  const std::vector<Cycle> cycles = enumerate_corner_cycles(comp);
  std::set<Edge> out;
  for (const Cell& c : comp) {
    for (const Edge& e : cell_edges(c)) {
      if (outermost_edge_oracle(cycles, e)) out.insert(e);
    }
  }
  return out;
}

}  // namespace percdual
