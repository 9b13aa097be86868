#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "percdual/boundary.hpp"
#include "percdual/duality.hpp"
#include "percdual/io.hpp"
#include "percdual/lattice.hpp"
#include "percdual/random.hpp"
#include "percdual/render.hpp"
#include "percdual/verify.hpp"

using namespace percdual;
using nlohmann::json;

namespace {

constexpr int kSuccess = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input;
  std::optional<std::string> origin;
  double p = 0.5;
  std::uint64_t seed = 0;
  std::string window = "16x16";
  std::size_t trials = 100;
  std::string mode;
  bool trace = false;
  std::string format;
};

ConfigDocument load(const std::string& path) {
  std::string text;
  if (path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw UsageError("cannot read " + path);
    text.assign(std::istreambuf_iterator<char>(in), {});
  }
  return parse_any(text);
}

Cell parse_cell(const std::string& s) {
  int i = 0, j = 0;
  char comma = 0;
  std::istringstream in(s);
  if (!(in >> i >> comma >> j) || comma != ',' || !in.eof()) throw UsageError("expected i,j but got '" + s + "'");
  return Cell{i, j};
}

Window parse_window(const std::string& s) {
  int w = 0, h = 0;
  char x = 0;
  std::istringstream in(s);
  if (!(in >> w >> x >> h) || x != 'x' || !in.eof() || w <= 0 || h <= 0) {
    throw UsageError("--window expects WxH with positive sides, got '" + s + "'");
  }
  return Window::centered(w, h);
}

Mode parse_mode(const std::string& s) {
  if (s == "star") return Mode::star;
  if (s == "plus") return Mode::plus;
  throw UsageError("--mode must be star or plus here, got '" + s + "'");
}

Which parse_which(const std::string& s) {
  if (s == "star") return Which::star;
  if (s == "plus") return Which::plus;
  if (s == "both") return Which::both;
  throw UsageError("--mode must be star, plus or both, got '" + s + "'");
}

void require_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  std::string list;
  for (const char* a : allowed) list += std::string(list.empty() ? "" : "|") + a;
  throw UsageError("--format must be " + list + " here, got '" + format + "'");
}

unsigned thread_count() {
  const char* env = std::getenv("PERC_DUALITY_THREADS");
  if (env == nullptr || *env == '\0') return 1;
  char* end = nullptr;
  const unsigned long n = std::strtoul(env, &end, 10);
  if (*end != '\0' || n == 0 || n > 1024) throw UsageError("PERC_DUALITY_THREADS must be an integer in 1..1024");
  return static_cast<unsigned>(n);
}

Cell origin_of(const ConfigDocument& doc, const Options& o) {
  if (o.origin) return parse_cell(*o.origin);
  return doc.origin.value_or(Cell{0, 0});
}

CellSet origin_component(const ConfigDocument& doc, const Options& o, Mode mode) {
  const Cell origin = origin_of(doc, o);
  CellSet comp = component(doc.config, origin, mode);
  std::ostringstream msg;
  msg << "origin " << origin << " is vacant";
  if (comp.empty()) throw UsageError(msg.str());
  return comp;
}

json cell_json(Cell c) { return json::array({c.i, c.j}); }

template <class Range>
json cells_json(const Range& cells) {
  json out = json::array();
  for (const Cell& c : cells) out.push_back(cell_json(c));
  return out;
}

json cycle_json(const Cycle& c) {
  json out = json::array();
  for (const Corner& p : c.corners()) out.push_back(json::array({p.a, p.b}));
  return out;
}

template <class Range>
std::string joined(const Range& items) {
  std::ostringstream os;
  bool first = true;
  for (const auto& x : items) {
    os << (first ? "" : " ") << x;
    first = false;
  }
  return os.str();
}

std::string cycle_text(const Cycle& c) { return joined(c.corners()); }

void print_scycle(const SCycle& s) {
  std::cout << "cycle\t" << to_string(s.mode) << "\tlength=" << s.cells.size() << '\n';
  std::cout << "cells\t" << joined(s.cells) << '\n';
}

int cmd_gen(const Options& o) {
  require_format(o.format.empty() ? "text" : o.format, {"text", "json"});
  const ConfigDocument doc{random_config(parse_window(o.window), o.p, o.seed), Cell{0, 0}};
  std::cout << (o.format == "json" ? serialize_config_json(doc) : serialize_config(doc));
  return kSuccess;
}

int cmd_component(const Options& o) {
  const std::string format = o.format.empty() ? "text" : o.format;
  require_format(format, {"text", "json"});
  const Mode mode = parse_mode(o.mode.empty() ? "star" : o.mode);
  const ConfigDocument doc = load(o.input);
  const CellSet comp = origin_component(doc, o, mode);
  if (format == "json") {
    std::cout << json{{"mode", to_string(mode)}, {"cells", cells_json(comp)}}.dump() << '\n';
  } else {
    std::cout << "component\t" << to_string(mode) << "\tsize=" << comp.size() << '\n';
    std::cout << "cells\t" << joined(comp) << '\n';
  }
  return kSuccess;
}

int cmd_boundary(const Options& o) {
  const std::string format = o.format.empty() ? "text" : o.format;
  require_format(format, {"text", "json"});
  const Mode mode = parse_mode(o.mode.empty() ? "star" : o.mode);
  const ConfigDocument doc = load(o.input);
  const CellSet comp = origin_component(doc, o, mode);
  const OutermostBoundary b = outermost_boundary(doc.config, comp, mode);
  if (format == "json") {
    json cycles = json::array();
    for (const Cycle& c : b.cycles) cycles.push_back(cycle_json(c));
    json meet = json::array();
    for (const Corner& p : b.meeting_points) meet.push_back(json::array({p.a, p.b}));
    std::cout << json{{"mode", to_string(mode)}, {"cycles", cycles}, {"meeting_points", meet}}.dump() << '\n';
  } else {
    std::cout << "boundary\t" << to_string(mode) << "\tcycles=" << b.cycles.size()
              << "\tedges=" << b.edge_set().size() << '\n';
    for (const Cycle& c : b.cycles) std::cout << "cycle\tlength=" << c.length() << '\t' << cycle_text(c) << '\n';
    std::cout << "meeting_points\t" << (b.meeting_points.empty() ? "-" : joined(b.meeting_points)) << '\n';
  }
  return kSuccess;
}

int cmd_dual_plus(const Options& o) {
  const std::string format = o.format.empty() ? "text" : o.format;
  require_format(format, {"text", "json"});
  const ConfigDocument doc = load(o.input);
  const CellSet comp = origin_component(doc, o, Mode::star);
  const SurroundingPlusCycle out = dual_plus_cycle(doc.config, comp);
  const StarDualTrace& t = out.trace;
  if (format == "json") {
    json j{{"mode", "plus"}, {"cells", cells_json(out.cycle.cells)}};
    if (o.trace) {
      json cycles = json::array();
      for (const Cycle& c : t.outer_boundary.cycles) cycles.push_back(cycle_json(c));
      j["trace"] = {{"outer_boundary", cycles},
                    {"halo", cells_json(t.halo)},
                    {"exterior_halo", cells_json(t.exterior_halo)},
                    {"vertex_squares", cells_json(t.vertex_squares)},
                    {"dual_boundary", cycle_json(t.dual_boundary)}};
    }
    std::cout << j.dump() << '\n';
    return kSuccess;
  }
  print_scycle(out.cycle);
  if (o.trace) {
    for (const Cycle& c : t.outer_boundary.cycles) std::cout << "outer_boundary\t" << cycle_text(c) << '\n';
    std::cout << "halo\t" << joined(t.halo) << '\n';
    std::cout << "exterior_halo\t" << joined(t.exterior_halo) << '\n';
    std::cout << "vertex_squares\t" << joined(t.vertex_squares) << '\n';
    std::cout << "dual_boundary\t" << cycle_text(t.dual_boundary) << '\n';
  }
  return kSuccess;
}

int cmd_dual_star(const Options& o) {
  const std::string format = o.format.empty() ? "text" : o.format;
  require_format(format, {"text", "json"});
  const ConfigDocument doc = load(o.input);
  const CellSet comp = origin_component(doc, o, Mode::plus);
  const SurroundingStarCycle out = dual_star_cycle(doc.config, comp);
  const PlusDualTrace& t = out.trace;
  if (format == "json") {
    json j{{"mode", "star"}, {"cells", cells_json(out.cycle.cells)}};
    if (o.trace) {
      json log = json::array();
      for (const MergeStep& s : t.merge_log) {
        log.push_back({{"edge", s.edge_index},
                       {"kind", to_string(s.kind)},
                       {"cell", s.cell ? cell_json(*s.cell) : json(nullptr)},
                       {"length", s.cycle_length}});
      }
      j["trace"] = {{"outer_boundary", cycle_json(t.outer_boundary)},
                    {"halo", cells_json(t.halo)},
                    {"exterior_halo", cells_json(t.exterior_halo)},
                    {"edge_squares", cells_json(t.edge_squares)},
                    {"merge_log", log},
                    {"merged", cycle_json(t.merged)}};
    }
    std::cout << j.dump() << '\n';
    return kSuccess;
  }
  print_scycle(out.cycle);
  if (o.trace) {
    std::cout << "outer_boundary\t" << cycle_text(t.outer_boundary) << '\n';
    std::cout << "halo\t" << joined(t.halo) << '\n';
    std::cout << "exterior_halo\t" << joined(t.exterior_halo) << '\n';
    std::cout << "edge_squares\t" << joined(t.edge_squares) << '\n';
    for (const MergeStep& s : t.merge_log) {
      std::cout << "merge\tedge=" << s.edge_index << '\t' << to_string(s.kind) << '\t';
      if (s.cell) {
        std::cout << *s.cell;
      } else {
        std::cout << '-';
      }
      std::cout << "\tlength=" << s.cycle_length << '\n';
    }
    std::cout << "merged\t" << cycle_text(t.merged) << '\n';
  }
  return kSuccess;
}

int cmd_verify(const Options& o) {
  require_format(o.format.empty() ? "text" : o.format, {"text"});
  const Which which = parse_which(o.mode.empty() ? "both" : o.mode);
  if (!o.input.empty()) {
    const ConfigDocument doc = load(o.input);
    const Cell origin = origin_of(doc, o);
    bool ok = true;
    auto run = [&](const char* name, const PropertyReport& r) {
      std::cout << "component\t" << name << '\t' << to_string(r.status()) << '\n' << r.serialize();
      ok = ok && r.status() != Status::fail;
    };
    if (which != Which::plus) run("star", check_theorem_star(doc.config, origin));
    if (which != Which::star) run("plus", check_theorem_plus(doc.config, origin));
    std::cout << "result\t" << (ok ? "pass" : "fail") << '\n';
    return ok ? kSuccess : kVerificationFailed;
  }
  if (!(o.p >= 0.0 && o.p <= 1.0)) throw UsageError("--p must lie in [0, 1]");
  if (o.trials < 1) throw UsageError("--trials must be at least 1");
  const TrialPlan plan{parse_window(o.window), o.p, o.seed, o.trials};
  const TrialSummary summary = run_trials(plan, which, thread_count());
  std::cout << serialize(summary);
  return summary.ok() ? kSuccess : kVerificationFailed;
}

int cmd_render(const Options& o) {
  const std::string format = o.format.empty() ? "svg" : o.format;
  require_format(format, {"svg", "text"});
  const Which which = parse_which(o.mode.empty() ? "both" : o.mode);
  const ConfigDocument doc = load(o.input);
  const Cell origin = origin_of(doc, o);

  std::vector<Cycle> boundaries;
  std::optional<SCycle> plus_cycle, star_cycle;
  if (which != Which::plus) {
    const CellSet comp = component(doc.config, origin, Mode::star);
    if (!comp.empty()) {
      const SurroundingPlusCycle g = dual_plus_cycle(doc.config, comp);
      boundaries = g.trace.outer_boundary.cycles;
      plus_cycle = g.cycle;
    }
  }
  if (which != Which::star) {
    const CellSet comp = component(doc.config, origin, Mode::plus);
    if (!comp.empty()) {
      const SurroundingStarCycle h = dual_star_cycle(doc.config, comp);
      if (which == Which::plus) boundaries.push_back(h.trace.outer_boundary);
      star_cycle = h.cycle;
    }
  }
  const SceneDocument scene = make_scene(doc.config, std::move(boundaries), plus_cycle, star_cycle);
  std::cout << (format == "svg" ? render_svg(scene) : render_ascii(scene));
  return kSuccess;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Star and plus percolation duality: components, boundaries, dual cycles and verification."};
  app.require_subcommand(1);
  Options o;

  auto input = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("-i,--input", o.input, "GridText or JSON configuration ('-' for stdin)");
    if (required) opt->required();
    sub->add_option("--origin", o.origin, "origin cell as i,j (defaults to the file's marker, then 0,0)");
  };
  auto format = [&](CLI::App* sub, const char* help) { sub->add_option("--format", o.format, help); };
  auto plan = [&](CLI::App* sub) {
    sub->add_option("--p", o.p, "occupancy probability")->capture_default_str();
    sub->add_option("--seed", o.seed, "random seed")->capture_default_str();
    sub->add_option("--window", o.window, "window size WxH, centred on cell 0,0")->capture_default_str();
  };

  auto* gen = app.add_subcommand("gen", "generate a random configuration");
  plan(gen);
  format(gen, "text|json");

  auto* comp = app.add_subcommand("component", "component of the origin");
  input(comp, true);
  comp->add_option("--mode", o.mode, "star|plus");
  format(comp, "text|json");

  auto* bnd = app.add_subcommand("boundary", "outermost boundary of the origin's component");
  input(bnd, true);
  bnd->add_option("--mode", o.mode, "star|plus");
  format(bnd, "text|json");

  auto* dplus = app.add_subcommand("dual-plus", "plus cycle of vacant squares around the star component");
  input(dplus, true);
  dplus->add_flag("--trace", o.trace, "print the construction trace");
  format(dplus, "text|json");

  auto* dstar = app.add_subcommand("dual-star", "star cycle of vacant squares around the plus component");
  input(dstar, true);
  dstar->add_flag("--trace", o.trace, "print the construction trace");
  format(dstar, "text|json");

  auto* ver = app.add_subcommand("verify", "check both constructions on a file or on random trials");
  input(ver, false);
  plan(ver);
  ver->add_option("--trials", o.trials, "number of random trials")->capture_default_str();
  ver->add_option("--mode", o.mode, "star|plus|both");
  format(ver, "text");

  auto* ren = app.add_subcommand("render", "draw the configuration, boundary and dual cycles");
  input(ren, true);
  ren->add_option("--mode", o.mode, "star|plus|both");
  format(ren, "svg|text");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*gen) return cmd_gen(o);
    if (*comp) return cmd_component(o);
    if (*bnd) return cmd_boundary(o);
    if (*dplus) return cmd_dual_plus(o);
    if (*dstar) return cmd_dual_star(o);
    if (*ver) return cmd_verify(o);
    if (*ren) return cmd_render(o);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const TooLarge& e) {
    std::cerr << "too large: " << e.what() << '\n';
    return kUsage;
  } catch (const ConstructionFailure& e) {
    std::cerr << "construction failed: " << e.what() << '\n';
    return kVerificationFailed;
  }
  return kUsage;
}
