#pragma once

// ASCII overlays and SVG scenes of a configuration, its boundaries and dual cycles.
//
// Palette: occupied squares gray, plus dual cycle blue, star dual cycle orange,
// boundary polylines black.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "percdual/boundary.hpp"
#include "percdual/cycle.hpp"
#include "percdual/duality.hpp"
#include "percdual/lattice.hpp"

namespace percdual {

inline constexpr const char* kOccupiedFill = "#808080";
inline constexpr const char* kPlusCycleColor = "#1f77b4";
inline constexpr const char* kStarCycleColor = "#ff7f0e";
inline constexpr const char* kBoundaryColor = "#000000";

struct SceneDocument {
  Window view;
  CellSet occupied;
  std::vector<Cycle> boundaries;
  std::optional<SCycle> plus_cycle;
  std::optional<SCycle> star_cycle;
};

/// The configuration's window grown to cover every drawn cycle; without a
/// window, the bounding box of everything drawn plus a one-cell margin.
inline Window scene_view(const Config& cfg, const std::vector<Cycle>& boundaries,
                         const std::vector<const SCycle*>& cycles) {
  std::vector<Cell> cells;
  const int margin = cfg.window() ? 0 : 1;
  if (const auto& w = cfg.window(); w && w->width > 0 && w->height > 0) {
    cells.push_back(Cell{w->x0, w->y0});
    cells.push_back(Cell{w->x0 + w->width - 1, w->y0 + w->height - 1});
  } else {
    cells.assign(cfg.occupied_cells().begin(), cfg.occupied_cells().end());
  }
  for (const SCycle* s : cycles) cells.insert(cells.end(), s->cells.begin(), s->cells.end());
  for (const Cycle& c : boundaries) {
    for (const Corner& p : c.corners()) {
      cells.push_back(Cell{p.a, p.b});
      cells.push_back(Cell{p.a - 1, p.b - 1});
    }
  }
  if (cells.empty()) return Window{0, 0, 1, 1};
  int x0 = cells.front().i, x1 = x0, y0 = cells.front().j, y1 = y0;
  for (const Cell& c : cells) {
    x0 = std::min(x0, c.i);
    x1 = std::max(x1, c.i);
    y0 = std::min(y0, c.j);
    y1 = std::max(y1, c.j);
  }
  return Window{x0 - margin, y0 - margin, x1 - x0 + 1 + 2 * margin, y1 - y0 + 1 + 2 * margin};
}

inline SceneDocument make_scene(const Config& cfg, std::vector<Cycle> boundaries, std::optional<SCycle> plus_cycle,
                                std::optional<SCycle> star_cycle) {
  std::vector<const SCycle*> drawn;
  if (plus_cycle) drawn.push_back(&*plus_cycle);
  if (star_cycle) drawn.push_back(&*star_cycle);
  SceneDocument scene;
  scene.view = scene_view(cfg, boundaries, drawn);
  scene.occupied = cfg.occupied_cells();
  scene.boundaries = std::move(boundaries);
  scene.plus_cycle = std::move(plus_cycle);
  scene.star_cycle = std::move(star_cycle);
  return scene;
}

/// One character per cell, top row first: '#' occupied, '.' vacant, 'P' plus
/// cycle, 'S' star cycle, '*' both cycles.
inline std::string render_ascii(const SceneDocument& scene) {
  const CellSet plus = scene.plus_cycle ? scene.plus_cycle->cell_set() : CellSet{};
  const CellSet star = scene.star_cycle ? scene.star_cycle->cell_set() : CellSet{};
  const Window& w = scene.view;
  std::string out;
  for (int j = w.y0 + w.height - 1; j >= w.y0; --j) {
    for (int i = w.x0; i < w.x0 + w.width; ++i) {
      const Cell c{i, j};
      const bool p = plus.contains(c), s = star.contains(c);
      if (p && s) {
        out.push_back('*');
      } else if (p) {
        out.push_back('P');
      } else if (s) {
        out.push_back('S');
      } else {
        out.push_back(scene.occupied.contains(c) ? '#' : '.');
      }
    }
    out.push_back('\n');
  }
  return out;
}

inline std::string render_svg(const SceneDocument& scene, int unit = 20) {
  const Window& w = scene.view;
  const int top = w.y0 + w.height;
  auto x = [&](double a) { return (a - w.x0) * unit; };
  auto y = [&](double b) { return (top - b) * unit; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w.width * unit << "\" height=\"" << w.height * unit
     << "\" viewBox=\"0 0 " << w.width * unit << ' ' << w.height * unit << "\">\n"
     << "<rect x=\"0\" y=\"0\" width=\"" << w.width * unit << "\" height=\"" << w.height * unit
     << "\" fill=\"#ffffff\"/>\n";

  auto cells = [&](const char* id, const char* fill, const auto& range, const char* opacity) {
    os << "<g id=\"" << id << "\" fill=\"" << fill << "\" fill-opacity=\"" << opacity << "\">\n";
    for (const Cell& c : range) {
      os << "<rect x=\"" << x(c.i) << "\" y=\"" << y(c.j + 1) << "\" width=\"" << unit << "\" height=\"" << unit
         << "\"/>\n";
    }
    os << "</g>\n";
  };
  cells("occupied", kOccupiedFill, scene.occupied, "1");

  auto dual = [&](const char* id, const char* color, const SCycle& s) {
    cells(id, color, s.cells, "0.35");
    os << "<polygon class=\"" << id << "\" fill=\"none\" stroke=\"" << color << "\" stroke-width=\"2\" points=\"";
    for (std::size_t k = 0; k < s.cells.size(); ++k) {
      os << (k ? " " : "") << x(s.cells[k].i + 0.5) << ',' << y(s.cells[k].j + 0.5);
    }
    os << "\"/>\n";
  };
  if (scene.plus_cycle) dual("plus-cycle", kPlusCycleColor, *scene.plus_cycle);
  if (scene.star_cycle) dual("star-cycle", kStarCycleColor, *scene.star_cycle);

  os << "<g id=\"boundary\" fill=\"none\" stroke=\"" << kBoundaryColor << "\" stroke-width=\"2\">\n";
  for (const Cycle& c : scene.boundaries) {
    os << "<polygon class=\"boundary\" points=\"";
    for (std::size_t k = 0; k < c.corners().size(); ++k) {
      os << (k ? " " : "") << x(c.corners()[k].a) << ',' << y(c.corners()[k].b);
    }
    os << "\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace percdual
