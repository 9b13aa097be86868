#pragma once

// Configuration files.
//
// GridText: one text row per lattice row, top row first. '#' occupied,
// '.' vacant, '@' occupied origin, 'o' vacant origin. Without an origin
// marker the bottom-left character is cell (0, 0); with one, coordinates are
// relative to the marked cell, which becomes (0, 0). Every row ends in '\n'.
//
// JSON: {"occupied": [[i, j], ...], "window": {"x0", "y0", "width", "height"},
// "origin": [i, j]}; window and origin may be omitted or null.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "percdual/errors.hpp"
#include "percdual/lattice.hpp"

namespace percdual {

struct ConfigDocument {
  Config config;
  std::optional<Cell> origin;

  friend bool operator==(const ConfigDocument&, const ConfigDocument&) = default;
};

inline ConfigDocument parse_config(std::string_view text) {
  std::vector<std::string> rows;
  std::string current;
  for (const char ch : text) {
    if (ch == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      rows.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) rows.push_back(std::move(current));
  if (rows.empty()) throw ParseError(1, 1, "empty grid");

  const std::size_t width = rows.front().size();
  if (width == 0) throw ParseError(1, 1, "empty row");
  std::optional<std::pair<std::size_t, std::size_t>> marker;  // (row, column), zero based
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != width) {
      throw ParseError(r + 1, std::min(rows[r].size(), width) + 1,
                       "row " + std::to_string(r + 1) + " has " + std::to_string(rows[r].size()) +
                           " columns, expected " + std::to_string(width));
    }
    for (std::size_t c = 0; c < width; ++c) {
      const char ch = rows[r][c];
      if (ch == '@' || ch == 'o') {
        if (marker) throw ParseError(r + 1, c + 1, "second origin marker");
        marker = std::pair(r, c);
      } else if (ch != '#' && ch != '.') {
        throw ParseError(r + 1, c + 1, std::string("illegal character '") + ch + "'");
      }
    }
  }

  const int w = static_cast<int>(width);
  const int h = static_cast<int>(rows.size());
  int ox = 0, oy = 0;  // marker position in bottom-left coordinates
  if (marker) {
    ox = static_cast<int>(marker->second);
    oy = h - 1 - static_cast<int>(marker->first);
  }
  CellSet occupied;
  for (int r = 0; r < h; ++r) {
    for (int c = 0; c < w; ++c) {
      const char ch = rows[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
      if (ch == '#' || ch == '@') occupied.insert(Cell{c - ox, (h - 1 - r) - oy});
    }
  }
  ConfigDocument doc{Config(std::move(occupied), Window{-ox, -oy, w, h}), std::nullopt};
  if (marker) doc.origin = Cell{0, 0};
  return doc;
}

/// Rows cover the configuration's window, or the bounding box of its occupied
/// cells and origin when it has none.
inline std::string serialize_config(const ConfigDocument& doc) {
  Window win;
  if (doc.config.window()) {
    win = *doc.config.window();
  } else {
    std::vector<Cell> cells(doc.config.occupied_cells().begin(), doc.config.occupied_cells().end());
    if (doc.origin) cells.push_back(*doc.origin);
    if (cells.empty()) return {};
    int x0 = cells.front().i, x1 = x0, y0 = cells.front().j, y1 = y0;
    for (const Cell& c : cells) {
      x0 = std::min(x0, c.i);
      x1 = std::max(x1, c.i);
      y0 = std::min(y0, c.j);
      y1 = std::max(y1, c.j);
    }
    win = Window{x0, y0, x1 - x0 + 1, y1 - y0 + 1};
  }
  if (doc.origin && !win.contains(*doc.origin)) throw InvalidInput("origin lies outside the window");

  std::string out;
  out.reserve(static_cast<std::size_t>(win.width + 1) * static_cast<std::size_t>(win.height));
  for (int j = win.y0 + win.height - 1; j >= win.y0; --j) {
    for (int i = win.x0; i < win.x0 + win.width; ++i) {
      const Cell c{i, j};
      const bool occ = doc.config.occupied(c);
      if (doc.origin && *doc.origin == c) {
        out.push_back(occ ? '@' : 'o');
      } else {
        out.push_back(occ ? '#' : '.');
      }
    }
    out.push_back('\n');
  }
  return out;
}

inline std::string serialize_config_json(const ConfigDocument& doc) {
  nlohmann::json j;
  j["occupied"] = nlohmann::json::array();
  for (const Cell& c : doc.config.occupied_cells()) j["occupied"].push_back({c.i, c.j});
  if (const auto& w = doc.config.window()) {
    j["window"] = {{"x0", w->x0}, {"y0", w->y0}, {"width", w->width}, {"height", w->height}};
  } else {
    j["window"] = nullptr;
  }
  j["origin"] = doc.origin ? nlohmann::json{doc.origin->i, doc.origin->j} : nlohmann::json(nullptr);
  return j.dump() + "\n";
}

inline ConfigDocument parse_config_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(1, e.byte, e.what());
  }
  auto cell = [](const nlohmann::json& v) {
    if (!v.is_array() || v.size() != 2 || !v[0].is_number_integer() || !v[1].is_number_integer()) {
      throw ParseError(1, 1, "cells are [i, j] integer pairs");
    }
    return Cell{v[0].get<int>(), v[1].get<int>()};
  };
  if (!j.is_object() || !j.contains("occupied") || !j["occupied"].is_array()) {
    throw ParseError(1, 1, "expected an object with an \"occupied\" array");
  }
  CellSet occupied;
  for (const auto& v : j["occupied"]) occupied.insert(cell(v));
  std::optional<Window> window;
  if (j.contains("window") && !j["window"].is_null()) {
    const auto& w = j["window"];
    try {
      window = Window{w.at("x0").get<int>(), w.at("y0").get<int>(), w.at("width").get<int>(), w.at("height").get<int>()};
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(1, 1, std::string("bad window: ") + e.what());
    }
  }
  ConfigDocument doc{Config(std::move(occupied), window), std::nullopt};
  if (j.contains("origin") && !j["origin"].is_null()) doc.origin = cell(j["origin"]);
  return doc;
}

/// JSON when the first non-blank character is '{', GridText otherwise.
inline ConfigDocument parse_any(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_config_json(text);
  return parse_config(text);
}

}  // namespace percdual
