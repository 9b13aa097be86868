#include <gtest/gtest.h>

#include <random>

#include "flood_oracle.hpp"
#include "percdual/boundary.hpp"
#include "percdual/cycle.hpp"

using namespace percdual;

namespace {

Cycle rectangle(int x0, int y0, int x1, int y1) {
  std::vector<Corner> k;
  for (int a = x0; a < x1; ++a) k.push_back({a, y0});
  for (int b = y0; b < y1; ++b) k.push_back({x1, b});
  for (int a = x1; a > x0; --a) k.push_back({a, y1});
  for (int b = y1; b > y0; --b) k.push_back({x0, b});
  return Cycle(k);
}

}  // namespace

TEST(Cycle, RejectsMalformedSequences) {
  EXPECT_THROW(Cycle({{0, 0}, {1, 0}, {1, 1}}), InvalidInput);
  EXPECT_THROW(Cycle({{0, 0}, {2, 0}, {2, 1}, {0, 1}}), InvalidInput);
  EXPECT_THROW(Cycle({{0, 0}, {1, 0}, {1, 1}, {1, 0}, {1, 1}, {0, 1}}), InvalidInput);
}

TEST(Cycle, CanonicalFormIsCounterclockwiseFromSmallestCorner) {
  const Cycle cw({{1, 1}, {1, 0}, {0, 0}, {0, 1}});
  const Cycle ccw({{1, 0}, {1, 1}, {0, 1}, {0, 0}});
  EXPECT_EQ(cw, ccw);
  EXPECT_EQ(cw.corners().front(), (Corner{0, 0}));
  EXPECT_EQ(cw.corners()[1], (Corner{1, 0}));
  EXPECT_EQ(cw.signed_area2(), 2);
}

TEST(Cycle, ClassifiesCellsCornersEdges) {
  const Cycle c = rectangle(0, 0, 3, 3);
  EXPECT_EQ(c.length(), 12u);
  EXPECT_EQ(c.classify(Cell{1, 1}), Location::interior);
  EXPECT_EQ(c.classify(Cell{3, 1}), Location::exterior);
  EXPECT_EQ(c.classify(Corner{1, 1}), Location::interior);
  EXPECT_EQ(c.classify(Corner{0, 2}), Location::on);
  EXPECT_EQ(c.classify(Corner{4, 2}), Location::exterior);
  EXPECT_EQ(c.classify(Edge{{1, 1}, Orientation::horizontal}), Location::interior);
  EXPECT_EQ(c.classify(Edge{{0, 0}, Orientation::horizontal}), Location::on);
  EXPECT_EQ(c.classify(Edge{{3, 3}, Orientation::vertical}), Location::exterior);
  EXPECT_EQ(c.interior_cells().size(), 9u);
}

TEST(Cycle, EdgesFollowTraversal) {
  const Cycle c = cell_cycle(Cell{2, 5});
  const auto e = c.edges();
  ASSERT_EQ(e.size(), 4u);
  EXPECT_EQ(e[0], (Edge{{2, 5}, Orientation::horizontal}));
  EXPECT_EQ(e[1], (Edge{{3, 5}, Orientation::vertical}));
  for (const Edge& x : e) EXPECT_TRUE(c.has_edge(x));
}

// Random polyomino outlines against the flood-fill oracle.
TEST(Cycle, ClassificationMatchesFloodFill) {
  std::mt19937_64 gen(11);
  int checked = 0;
  for (int round = 0; round < 300; ++round) {
    CellSet cells;
    for (int i = 0; i < 7; ++i) {
      for (int j = 0; j < 7; ++j) {
        if (gen() % 2) cells.insert({i, j});
      }
    }
    if (cells.empty()) continue;
    const CellSet comp = component(Config(cells), *cells.begin(), Mode::star);
    for (const Cycle& c : trace_outer_boundary(comp).cycles) {
      const CellSet inside = oracle::flood_inside(c);
      const auto listed = c.interior_cells();
      EXPECT_EQ(CellSet(listed.begin(), listed.end()), inside) << c;
      for (int i = -1; i <= 8; ++i) {
        for (int j = -1; j <= 8; ++j) {
          const Location want = inside.contains(Cell{i, j}) ? Location::interior : Location::exterior;
          ASSERT_EQ(c.classify(Cell{i, j}), want) << c << " cell " << Cell{i, j};
          ++checked;
        }
      }
    }
  }
  EXPECT_GT(checked, 10000);
}
