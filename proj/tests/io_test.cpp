#include <gtest/gtest.h>

#include <cmath>

#include "percdual/io.hpp"
#include "percdual/random.hpp"
#include "percdual/render.hpp"

using namespace percdual;

TEST(GridText, TopRowIsHighest) {
  const ConfigDocument doc = parse_config("#.\n.#\n");
  EXPECT_EQ(doc.config.occupied_cells(), (CellSet{{0, 1}, {1, 0}}));
  EXPECT_FALSE(doc.origin.has_value());
  EXPECT_EQ(doc.config.window(), (Window{0, 0, 2, 2}));
}

TEST(GridText, OriginMarkerBecomesZero) {
  const ConfigDocument doc = parse_config("..#\n.@.\n...\n");
  EXPECT_EQ(doc.origin, (Cell{0, 0}));
  EXPECT_EQ(doc.config.occupied_cells(), (CellSet{{0, 0}, {1, 1}}));
  EXPECT_EQ(doc.config.window(), (Window{-1, -1, 3, 3}));

  const ConfigDocument vacant = parse_config("#o\n");
  EXPECT_EQ(vacant.origin, (Cell{0, 0}));
  EXPECT_EQ(vacant.config.occupied_cells(), (CellSet{{-1, 0}}));
}

TEST(GridText, RoundTripIsIdentityOnCanonicalText) {
  for (const std::string t : {"#.\n.#\n", "..#\n.@.\n...\n", "o\n", "###\n#.#\n###\n", "....\n.##.\n"}) {
    EXPECT_EQ(serialize_config(parse_config(t)), t);
  }
}

TEST(GridText, SerializeIsIdempotentAfterCanonicalising) {
  const std::string sloppy = "#.\r\n.#";
  const std::string once = serialize_config(parse_config(sloppy));
  EXPECT_EQ(once, "#.\n.#\n");
  EXPECT_EQ(serialize_config(parse_config(once)), once);
}

TEST(GridText, RaggedRowsNameTheRow) {
  try {
    parse_config("##\n#\n##\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_NE(std::string(e.what()).find("row 2"), std::string::npos);
  }
}

TEST(GridText, DuplicateOriginAndIllegalCharacter) {
  try {
    parse_config("@.\n.o\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 2u);
  }
  try {
    parse_config("#.\n#x\n");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_EQ(e.column(), 2u);
  }
  EXPECT_THROW(parse_config(""), ParseError);
}

TEST(Json, RoundTrip) {
  const ConfigDocument doc = parse_config("..#\n.@.\n...\n");
  const std::string text = serialize_config_json(doc);
  EXPECT_EQ(text,
            "{\"occupied\":[[0,0],[1,1]],\"origin\":[0,0],\"window\":{\"height\":3,\"width\":3,\"x0\":-1,\"y0\":-1}}\n");
  EXPECT_EQ(parse_config_json(text), doc);
  EXPECT_EQ(serialize_config_json(parse_config_json(text)), text);
  EXPECT_EQ(parse_any(text), doc);
}

TEST(Json, WindowAndOriginOptional) {
  const ConfigDocument doc = parse_config_json(R"({"occupied": [[2, 3]]})");
  EXPECT_EQ(doc.config.occupied_cells(), (CellSet{{2, 3}}));
  EXPECT_FALSE(doc.config.window().has_value());
  EXPECT_EQ(serialize_config(doc), "#\n");
  EXPECT_THROW(parse_config_json(R"({"occupied": [[1]]})"), ParseError);
  EXPECT_THROW(parse_config_json("{"), ParseError);
  EXPECT_THROW(parse_config_json(R"({"occupied": [[9, 9]], "window": {"x0": 0, "y0": 0, "width": 2, "height": 2}})"),
               InvalidInput);
}

TEST(RandomConfig, ExtremesAndDeterminism) {
  const Window w = Window::centered(8, 8);
  EXPECT_TRUE(random_config(w, 0.0, 1).occupied_cells().empty());
  EXPECT_EQ(random_config(w, 1.0, 1).occupied_cells().size(), 64u);
  EXPECT_EQ(random_config(w, 0.5, 99), random_config(w, 0.5, 99));
  EXPECT_NE(random_config(w, 0.5, 99), random_config(w, 0.5, 100));
  EXPECT_THROW(random_config(w, -0.1, 1), InvalidInput);
}

// The generator is specified bit for bit, so a fixed seed pins the grid.
TEST(RandomConfig, GoldenGrid) {
  const ConfigDocument doc{random_config(Window::centered(6, 4), 0.5, 3), Cell{0, 0}};
  EXPECT_EQ(serialize_config(doc), ".#####\n..#@#.\n.#.##.\n.#.#.#\n");
}

TEST(RandomConfig, DensityWithinThreeSigma) {
  const Config cfg = random_config(Window::centered(64, 64), 0.5, 2024);
  const double n = 64.0 * 64.0;
  const double k = static_cast<double>(cfg.occupied_cells().size());
  EXPECT_LT(std::abs(k - 0.5 * n), 3.0 * std::sqrt(n * 0.25));
}

// Without a window the view is the drawing grown by one cell.
TEST(Render, AsciiOverlay) {
  const Config cfg(CellSet{{0, 0}});
  const auto g = dual_plus_cycle(cfg, {{0, 0}});
  const auto scene = make_scene(cfg, g.trace.outer_boundary.cycles, g.cycle, std::nullopt);
  EXPECT_EQ(render_ascii(scene), ".....\n.PPP.\n.P#P.\n.PPP.\n.....\n");
  const auto h = dual_star_cycle(cfg, {{0, 0}});
  EXPECT_EQ(render_ascii(make_scene(cfg, {}, g.cycle, h.cycle)), ".....\n.***.\n.*#*.\n.***.\n.....\n");
}

TEST(Render, SvgHasOnePolygonPerCycleAndPalette) {
  const Config cfg(CellSet{{0, 0}, {1, 1}});
  const auto g = dual_plus_cycle(cfg, {{0, 0}, {1, 1}});
  const auto h = dual_star_cycle(cfg, {{0, 0}});
  const std::string svg = render_svg(make_scene(cfg, g.trace.outer_boundary.cycles, g.cycle, h.cycle));
  std::size_t polygons = 0;
  for (std::size_t at = svg.find("<polygon"); at != std::string::npos; at = svg.find("<polygon", at + 1)) ++polygons;
  EXPECT_EQ(polygons, 4u);
  EXPECT_NE(svg.find(kOccupiedFill), std::string::npos);
  EXPECT_NE(svg.find(kPlusCycleColor), std::string::npos);
  EXPECT_NE(svg.find(kStarCycleColor), std::string::npos);
  EXPECT_NE(svg.find(kBoundaryColor), std::string::npos);
  EXPECT_EQ(svg.rfind("</svg>\n"), svg.size() - 7);
}
