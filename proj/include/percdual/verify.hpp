#pragma once

// Executable certificates for the surrounding-cycle constructions.
//
// Every audit recomputes what it needs (component, halo, boundaries) from the
// configuration instead of trusting the construction trace, so a report
// certifies the output against the definitions, not against itself.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "percdual/boundary.hpp"
#include "percdual/cycle.hpp"
#include "percdual/duality.hpp"
#include "percdual/errors.hpp"
#include "percdual/lattice.hpp"
#include "percdual/random.hpp"

namespace percdual {

struct Check {
  std::string name;
  bool passed = false;
  std::optional<std::string> witness;
};

enum class Status { pass, fail, skip };

inline const char* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::skip: return "skip";
  }
  return "?";
}

class PropertyReport {
 public:
  void add(std::string name, bool passed, const std::string& witness = {}) {
    Check c{std::move(name), passed, std::nullopt};
    if (!passed) c.witness = witness.empty() ? std::string("unspecified") : witness;
    checks_.push_back(std::move(c));
  }

  void mark_skipped(std::string reason) {
    skipped_ = true;
    skip_reason_ = std::move(reason);
  }

  void merge(const PropertyReport& other) {
    checks_.insert(checks_.end(), other.checks_.begin(), other.checks_.end());
  }

  /// Conjunction of all checks.
  bool overall() const {
    return std::all_of(checks_.begin(), checks_.end(), [](const Check& c) { return c.passed; });
  }

  Status status() const {
    if (skipped_) return Status::skip;
    return overall() ? Status::pass : Status::fail;
  }

  bool skipped() const { return skipped_; }
  const std::string& skip_reason() const { return skip_reason_; }
  const std::vector<Check>& checks() const { return checks_; }

  const Check* first_failure() const {
    for (const Check& c : checks_) {
      if (!c.passed) return &c;
    }
    return nullptr;
  }

  bool passed(const std::string& name) const {
    for (const Check& c : checks_) {
      if (c.name == name) return c.passed;
    }
    return false;
  }

  /// One line per check: name, status and witness separated by tabs.
  std::string serialize() const {
    std::ostringstream os;
    if (skipped_) os << "report\tskip\t" << sanitize(skip_reason_) << '\n';
    for (const Check& c : checks_) {
      os << c.name << '\t' << (c.passed ? "pass" : "fail") << '\t' << (c.witness ? sanitize(*c.witness) : "-") << '\n';
    }
    return os.str();
  }

  static std::string sanitize(std::string s) {
    std::replace(s.begin(), s.end(), '\t', ' ');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
  }

 private:
  std::vector<Check> checks_;
  bool skipped_ = false;
  std::string skip_reason_;
};

namespace detail {

template <class T>
std::string describe(const T& x) {
  std::ostringstream os;
  os << x;
  return os.str();
}

inline std::string describe_cells(const std::vector<Cell>& cells) {
  std::ostringstream os;
  for (const Cell& c : cells) os << c;
  return os.str();
}

/// Axis-aligned segment in doubled coordinates (every point of interest is a
/// multiple of 1/2, so doubling makes them integral).
struct Segment2 {
  int x0, y0, x1, y1;  // x0 <= x1, y0 <= y1
};

inline Segment2 make_segment(int ax, int ay, int bx, int by) {
  return Segment2{std::min(ax, bx), std::min(ay, by), std::max(ax, bx), std::max(ay, by)};
}

/// Exact squared Euclidean distance between two axis-aligned segments.
inline std::int64_t distance2(const Segment2& s, const Segment2& t) {
  const std::int64_t dx = std::max({0, t.x0 - s.x1, s.x0 - t.x1});
  const std::int64_t dy = std::max({0, t.y0 - s.y1, s.y0 - t.y1});
  return dx * dx + dy * dy;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// S-cycles

inline PropertyReport check_scycle(const Config& cfg, const SCycle& s) {
  PropertyReport r;
  r.add("scycle_length", s.cells.size() >= 3, "length " + std::to_string(s.cells.size()));

  const CellSet distinct = s.cell_set();
  r.add("scycle_distinct", distinct.size() == s.cells.size(), "repeated square in " + detail::describe(s));

  std::string gap;
  for (std::size_t k = 0; k < s.cells.size() && gap.empty(); ++k) {
    const Cell& x = s.cells[k];
    const Cell& y = s.cells[(k + 1) % s.cells.size()];
    if (!adjacent(x, y, s.mode)) gap = detail::describe(x) + "->" + detail::describe(y);
  }
  r.add("scycle_adjacent", gap.empty() && !s.cells.empty(), std::string(to_string(s.mode)) + " gap " + gap);

  std::string occupied;
  for (const Cell& c : s.cells) {
    if (cfg.occupied(c)) {
      occupied = detail::describe(c);
      break;
    }
  }
  r.add("scycle_vacant", occupied.empty(), "occupied square " + occupied);
  return r;
}

/// Clauses shared by both surrounding-cycle statements: every cycle square is a
/// halo square, the outermost boundary of the cycle squares is one cycle, and
/// every component or halo square is on the cycle or inside that boundary.
inline PropertyReport check_surrounding(const Config& cfg, const CellSet& comp, const SCycle& s) {
  PropertyReport r;
  const CellSet ring = halo(cfg, comp);
  std::string stray;
  for (const Cell& c : s.cells) {
    if (!ring.contains(c)) {
      stray = detail::describe(c);
      break;
    }
  }
  r.add("cycle_in_halo", stray.empty() && !s.cells.empty(), "square outside halo " + stray);

  const CellSet cells = s.cell_set();
  std::optional<OutermostBoundary> outer;
  try {
    if (!cells.empty() && is_connected(cells, s.mode)) outer = outermost_boundary_of(cells, s.mode);
  } catch (const Error& e) {
    r.add("cycle_outer_boundary_single", false, e.what());
    r.add("cycle_surrounds_component_and_halo", false, e.what());
    return r;
  }
  r.add("cycle_outer_boundary_single", outer && outer->cycles.size() == 1,
        outer ? std::to_string(outer->cycles.size()) + " cycles" : "cycle squares not connected");

  std::string uncovered;
  if (outer) {
    for (const CellSet* group : {&comp, &ring}) {
      for (const Cell& c : *group) {
        if (!cells.contains(c) && outer->classify(c) != Location::interior) {
          uncovered = detail::describe(c);
          break;
        }
      }
      if (!uncovered.empty()) break;
    }
  }
  r.add("cycle_surrounds_component_and_halo", outer.has_value() && uncovered.empty(), "uncovered square " + uncovered);
  return r;
}

/// Pairwise boundary cycles touch in at most one corner and have disjoint open interiors.
inline PropertyReport check_star_boundary_structure(const OutermostBoundary& b) {
  PropertyReport r;
  std::string touching;
  for (std::size_t x = 0; x < b.cycles.size() && touching.empty(); ++x) {
    for (std::size_t y = x + 1; y < b.cycles.size(); ++y) {
      std::size_t shared = 0;
      for (const Corner& p : b.cycles[y].sorted_corners()) shared += b.cycles[x].has_corner(p) ? 1 : 0;
      if (shared > 1) {
        touching = detail::describe(b.cycles[x]) + " & " + detail::describe(b.cycles[y]);
        break;
      }
    }
  }
  r.add("boundary_cycles_touch_at_most_once", touching.empty(), touching);

  int x0 = 0, y0 = 0, x1 = -1, y1 = -1;
  bool first = true;
  for (const Cycle& c : b.cycles) {
    for (const Corner& p : c.corners()) {
      if (first) {
        x0 = x1 = p.a;
        y0 = y1 = p.b;
        first = false;
      }
      x0 = std::min(x0, p.a);
      x1 = std::max(x1, p.a);
      y0 = std::min(y0, p.b);
      y1 = std::max(y1, p.b);
    }
  }
  std::string overlap;
  for (int j = y0; j < y1 && overlap.empty(); ++j) {
    for (int i = x0; i < x1; ++i) {
      int inside = 0;
      for (const Cycle& c : b.cycles) inside += c.classify(Cell{i, j}) == Location::interior ? 1 : 0;
      if (inside > 1) {
        overlap = detail::describe(Cell{i, j});
        break;
      }
    }
  }
  r.add("boundary_interiors_disjoint", overlap.empty(), "square inside two cycles " + overlap);
  return r;
}

/// Minimum squared distance, in doubled coordinates, between the polygon
/// through `centres` and the edges of `b`. A value >= 1 means >= 1/2 in the plane.
inline std::int64_t clearance2(const std::vector<Cell>& centres, const OutermostBoundary& b) {
  std::vector<detail::Segment2> walls;
  for (const Edge& e : b.edge_set()) {
    const auto [p, q] = edge_endpoints(e);
    walls.push_back(detail::make_segment(2 * p.a, 2 * p.b, 2 * q.a, 2 * q.b));
  }
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::size_t k = 0; k < centres.size(); ++k) {
    const Cell& u = centres[k];
    const Cell& v = centres[(k + 1) % centres.size()];
    const auto vertex = detail::make_segment(2 * u.i + 1, 2 * u.j + 1, 2 * u.i + 1, 2 * u.j + 1);
    const auto side = detail::make_segment(2 * u.i + 1, 2 * u.j + 1, 2 * v.i + 1, 2 * v.j + 1);
    for (const auto& w : walls) best = std::min({best, detail::distance2(vertex, w), detail::distance2(side, w)});
  }
  return best;
}

// ---------------------------------------------------------------------------
// Audits of construction outputs

inline PropertyReport audit_plus_dual(const Config& cfg, const CellSet& comp, const SurroundingPlusCycle& out) {
  PropertyReport r = check_scycle(cfg, out.cycle);
  r.add("cycle_is_plus", out.cycle.mode == Mode::plus, "mode " + std::string(to_string(out.cycle.mode)));
  r.merge(check_surrounding(cfg, comp, out.cycle));

  const OutermostBoundary b = outermost_boundary(cfg, comp, Mode::star);
  r.merge(check_star_boundary_structure(b));

  const CellSet ring = halo(cfg, comp);
  std::string inner;
  for (const Cell& y : out.trace.dual_boundary_cells) {
    if (!ring.contains(y) || b.classify(y) != Location::exterior) {
      inner = detail::describe(y);
      break;
    }
  }
  r.add("contour_on_exterior_halo", inner.empty(), "contour square " + inner);
  r.add("vertex_squares_plus_connected", is_connected(out.trace.vertex_squares, Mode::plus), "disconnected");

  const std::int64_t d2 = clearance2(out.trace.dual_boundary_cells, b);
  r.add("half_unit_clearance", d2 >= 1, "doubled squared distance " + std::to_string(d2));
  return r;
}

inline PropertyReport audit_star_dual(const Config& cfg, const CellSet& comp, const SurroundingStarCycle& out) {
  const PlusDualTrace& t = out.trace;
  PropertyReport r = check_scycle(cfg, out.cycle);
  r.add("cycle_is_star", out.cycle.mode == Mode::star, "mode " + std::string(to_string(out.cycle.mode)));
  r.merge(check_surrounding(cfg, comp, out.cycle));

  const Cycle b = outermost_boundary(cfg, comp, Mode::plus).cycles.front();
  CellSet exterior;
  for (const Cell& c : halo(cfg, comp)) {
    if (b.classify(c) == Location::exterior) exterior.insert(c);
  }

  std::string uncovered;
  for (const Cell& c : exterior) {
    const bool covered = std::any_of(t.local_cells.begin(), t.local_cells.end(),
                                     [&](const CellSet& local) { return local.contains(c); });
    if (!covered) {
      uncovered = detail::describe(c);
      break;
    }
  }
  r.add("local_cycles_cover_exterior_halo", uncovered.empty() && !t.local_cells.empty(), "square " + uncovered);

  std::string missed;
  const std::vector<Edge> edges = b.edges();
  if (edges.size() != t.local_cycles.size()) missed = "edge count mismatch";
  for (std::size_t i = 0; i < edges.size() && missed.empty(); ++i) {
    if (!t.local_cycles[i].has_edge(edges[i])) missed = detail::describe(edges[i]);
  }
  r.add("local_cycle_contains_boundary_edge", missed.empty(), "edge " + missed);

  const Cycle& merged = t.merged;
  const CellSet ring = halo(cfg, comp);
  std::string outside;
  for (const CellSet* group : {&comp, &ring}) {
    for (const Cell& c : *group) {
      if (merged.empty() || merged.classify(c) != Location::interior) {
        outside = detail::describe(c);
        break;
      }
    }
    if (!outside.empty()) break;
  }
  r.add("merged_surrounds_component_and_halo", outside.empty(), "square " + outside);

  std::string foreign;
  const auto& k = merged.corners();
  for (std::size_t n = 0; n < k.size(); ++n) {
    const Cell inside = directed_sides(k[n], k[(n + 1) % k.size()]).first;
    if (!exterior.contains(inside)) {
      foreign = detail::describe(inside);
      break;
    }
  }
  r.add("merged_uses_exterior_halo_edges", foreign.empty() && !merged.empty(), "square " + foreign);

  std::string touching;
  for (const Edge& e : edges) {
    if (merged.empty() || merged.classify(e) != Location::interior) {
      touching = detail::describe(e);
      break;
    }
  }
  r.add("boundary_strictly_inside_merged", touching.empty(), "edge " + touching);

  std::string mismatch;
  try {
    const OutermostBoundary own = outermost_boundary_of(out.cycle.cell_set(), Mode::star);
    const auto merged_edges = std::set<Edge>(merged.sorted_edges().begin(), merged.sorted_edges().end());
    if (own.edge_set() != merged_edges) mismatch = std::to_string(own.cycles.size()) + " cycles, edge sets differ";
  } catch (const Error& e) {
    mismatch = e.what();
  }
  r.add("cycle_boundary_equals_merged", mismatch.empty(), mismatch);

  std::string direct;
  try {
    CellSet filled = comp;
    filled.insert(exterior.begin(), exterior.end());
    const OutermostBoundary contour = outermost_boundary_of(filled, Mode::plus);
    if (contour.cycles.front() != merged) direct = "direct contour " + detail::describe(contour.cycles.front());
  } catch (const Error& e) {
    direct = e.what();
  }
  r.add("merged_matches_direct_contour", direct.empty(), direct);
  return r;
}

inline PropertyReport check_theorem_star(const Config& cfg, Cell origin) {
  PropertyReport r;
  const CellSet comp = component(cfg, origin, Mode::star);
  if (comp.empty()) {
    r.mark_skipped("vacant origin");
    return r;
  }
  try {
    r = audit_plus_dual(cfg, comp, dual_plus_cycle(cfg, comp));
    r.add("construction", true);
  } catch (const Error& e) {
    r.add("construction", false, e.what());
  }
  return r;
}

inline PropertyReport check_theorem_plus(const Config& cfg, Cell origin) {
  PropertyReport r;
  const CellSet comp = component(cfg, origin, Mode::plus);
  if (comp.empty()) {
    r.mark_skipped("vacant origin");
    return r;
  }
  try {
    r = audit_star_dual(cfg, comp, dual_star_cycle(cfg, comp));
    r.add("construction", true);
  } catch (const Error& e) {
    r.add("construction", false, e.what());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Enumeration oracles

inline constexpr std::size_t kScycleMaxCells = 24;

/// Every canonical S-cycle (length >= 3) whose squares lie in `cells`.
inline std::vector<SCycle> enumerate_scycles(const CellSet& cells, Mode mode) {
  if (cells.size() > kScycleMaxCells) throw TooLarge("cell set too large for S-cycle enumeration");
  std::vector<SCycle> out;
  std::vector<Cell> path;
  // Found from the smallest square, once per direction; keep second < last.
  auto extend = [&](auto& self, Cell root, Cell at) -> void {
    for_each_neighbor(at, mode, [&](Cell next) {
      if (!cells.contains(next)) return;
      if (next == root) {
        if (path.size() >= 3 && path[1] < path.back()) out.push_back(SCycle::canonical(path, mode));
        return;
      }
      if (next < root || std::find(path.begin(), path.end(), next) != path.end()) return;
      path.push_back(next);
      self(self, root, next);
      path.pop_back();
    });
  };
  for (const Cell& root : cells) {
    path.assign(1, root);
    extend(extend, root, root);
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// S-cycles inside the halo of `comp` that satisfy the surrounding-cycle
/// clauses: plus S-cycles for a star component, star S-cycles for a plus one.
inline std::vector<SCycle> surrounding_candidates(const Config& cfg, const CellSet& comp, Mode component_mode) {
  std::vector<SCycle> out;
  for (const SCycle& s : enumerate_scycles(halo(cfg, comp), other(component_mode))) {
    if (check_surrounding(cfg, comp, s).overall()) out.push_back(s);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Randomised trials

struct TrialPlan {
  Window window = Window::centered(16, 16);
  double p = 0.5;
  std::uint64_t seed = 0;
  std::size_t trials = 1;
};

enum class Which { star, plus, both };

inline const char* to_string(Which w) {
  switch (w) {
    case Which::star: return "star";
    case Which::plus: return "plus";
    case Which::both: return "both";
  }
  return "?";
}

struct TrialCounts {
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t skip = 0;
};

struct TrialFailure {
  std::size_t trial = 0;
  Mode mode = Mode::star;
  std::string check;
  std::string witness;
  Config config;
};

struct TrialSummary {
  TrialPlan plan;
  Which which = Which::both;
  TrialCounts star;
  TrialCounts plus;
  std::optional<TrialFailure> first_failure;

  bool ok() const { return star.fail == 0 && plus.fail == 0; }
};

inline Config trial_config(const TrialPlan& plan, std::size_t trial) {
  return random_config(plan.window, plan.p, splitmix64(plan.seed ^ splitmix64(trial)));
}

/// Runs `plan.trials` seeded trials, each analysing the component of cell
/// (0, 0). Deterministic in the plan; `threads` only changes wall time.
inline TrialSummary run_trials(const TrialPlan& plan, Which which, unsigned threads = 1) {
  if (plan.trials < 1) throw InvalidInput("a trial plan needs at least one trial");
  if (!(plan.p >= 0.0 && plan.p <= 1.0)) throw InvalidInput("occupancy probability must lie in [0, 1]");

  struct Outcome {
    Status star = Status::skip;
    Status plus = Status::skip;
    std::optional<TrialFailure> failure;
  };
  std::vector<Outcome> outcomes(plan.trials);

  auto run_one = [&](std::size_t t) {
    const Config cfg = trial_config(plan, t);
    Outcome& o = outcomes[t];
    auto record = [&](const PropertyReport& r, Mode mode) {
      const Status s = r.status();
      if (s == Status::fail && !o.failure) {
        const Check* c = r.first_failure();
        o.failure = TrialFailure{t, mode, c->name, c->witness.value_or(""), cfg};
      }
      return s;
    };
    if (which != Which::plus) o.star = record(check_theorem_star(cfg, Cell{0, 0}), Mode::star);
    if (which != Which::star) o.plus = record(check_theorem_plus(cfg, Cell{0, 0}), Mode::plus);
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(plan.trials)));
  if (threads == 1) {
    for (std::size_t t = 0; t < plan.trials; ++t) run_one(t);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) {
      pool.emplace_back([&] {
        for (std::size_t t = next++; t < plan.trials; t = next++) run_one(t);
      });
    }
    for (std::thread& th : pool) th.join();
  }

  TrialSummary summary;
  summary.plan = plan;
  summary.which = which;
  auto tally = [](TrialCounts& counts, Status s) {
    if (s == Status::pass) ++counts.pass;
    if (s == Status::fail) ++counts.fail;
    if (s == Status::skip) ++counts.skip;
  };
  for (const Outcome& o : outcomes) {
    if (which != Which::plus) tally(summary.star, o.star);
    if (which != Which::star) tally(summary.plus, o.plus);
    if (o.failure && !summary.first_failure) summary.first_failure = o.failure;
  }
  return summary;
}

/// Line-delimited summary; identical plans give byte-identical text. The
/// failure witness references the trial index, from which the configuration
/// is regenerated with trial_config.
inline std::string serialize(const TrialSummary& s) {
  std::ostringstream os;
  os << "plan\twindow=" << s.plan.window.width << 'x' << s.plan.window.height << "\tp=" << s.plan.p
     << "\tseed=" << s.plan.seed << "\ttrials=" << s.plan.trials << "\tmode=" << to_string(s.which) << '\n';
  auto line = [&](const char* name, const TrialCounts& c) {
    os << name << "\tpass=" << c.pass << "\tfail=" << c.fail << "\tskip=" << c.skip << '\n';
  };
  if (s.which != Which::plus) line("star", s.star);
  if (s.which != Which::star) line("plus", s.plus);
  if (s.first_failure) {
    const TrialFailure& f = *s.first_failure;
    os << "first_failure\ttrial=" << f.trial << "\tcomponent=" << to_string(f.mode) << "\tcheck=" << f.check
       << "\twitness=" << PropertyReport::sanitize(f.witness) << '\n';
  } else {
    os << "first_failure\t-\n";
  }
  os << "result\t" << (s.ok() ? "pass" : "fail") << '\n';
  return os.str();
}

}  // namespace percdual
