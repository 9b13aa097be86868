#include <gtest/gtest.h>

#include <vector>

#include "percdual/lattice.hpp"

using namespace percdual;

TEST(Adjacency, PlusAndStarNeighbourOrder) {
  const auto p = plus_neighbors(Cell{0, 0});
  EXPECT_EQ(std::vector<Cell>(p.begin(), p.end()), (std::vector<Cell>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
  const auto s = star_neighbors(Cell{0, 0});
  EXPECT_EQ(std::vector<Cell>(s.begin(), s.end()),
            (std::vector<Cell>{{1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, 1}, {-1, 1}, {-1, -1}, {1, -1}}));
}

TEST(Adjacency, DiagonalIsStarOnly) {
  EXPECT_TRUE(adjacent({0, 0}, {1, 1}, Mode::star));
  EXPECT_FALSE(adjacent({0, 0}, {1, 1}, Mode::plus));
  EXPECT_TRUE(adjacent({0, 0}, {0, -1}, Mode::plus));
  EXPECT_FALSE(adjacent({0, 0}, {0, 0}, Mode::star));
  EXPECT_FALSE(adjacent({0, 0}, {2, 0}, Mode::star));
}

TEST(Incidence, EdgeCellsAndEndpoints) {
  const Edge h{{2, 3}, Orientation::horizontal};
  EXPECT_EQ(edge_cells(h), std::pair(Cell{2, 2}, Cell{2, 3}));
  EXPECT_EQ(edge_endpoints(h), std::pair(Corner{2, 3}, Corner{3, 3}));
  const Edge v{{2, 3}, Orientation::vertical};
  EXPECT_EQ(edge_cells(v), std::pair(Cell{1, 3}, Cell{2, 3}));
  EXPECT_EQ(edge_endpoints(v), std::pair(Corner{2, 3}, Corner{2, 4}));
  EXPECT_EQ(edge_between({3, 3}, {2, 3}), h);
  EXPECT_THROW(edge_between({0, 0}, {1, 1}), InvalidInput);
}

TEST(Incidence, DirectedSidesAroundCell) {
  // Walking the unit square of (0,0) counterclockwise keeps the cell on the left.
  const auto k = cell_corners(Cell{0, 0});
  for (std::size_t n = 0; n < 4; ++n) {
    const auto [left, right] = directed_sides(k[n], k[(n + 1) % 4]);
    EXPECT_EQ(left, (Cell{0, 0}));
    EXPECT_NE(right, (Cell{0, 0}));
    EXPECT_TRUE(adjacent(left, right, Mode::plus));
  }
}

TEST(Incidence, CellEdgesAreTheFourSides) {
  for (const Edge& e : cell_edges(Cell{5, -2})) {
    const auto [a, b] = edge_cells(e);
    EXPECT_TRUE(a == (Cell{5, -2}) || b == (Cell{5, -2}));
  }
}

TEST(DualLattice, RoundTrip) {
  EXPECT_EQ(dual_cell_at(Corner{3, 4}), (Cell{3, 4}));
  EXPECT_EQ(primal_cell_at(Corner{3, 4}), (Cell{2, 3}));
}

TEST(Window, CenteredContainsOrigin) {
  const Window w = Window::centered(16, 16);
  EXPECT_EQ(w, (Window{-8, -8, 16, 16}));
  EXPECT_TRUE(w.contains({0, 0}));
  EXPECT_TRUE(w.contains({7, 7}));
  EXPECT_FALSE(w.contains({8, 0}));
  EXPECT_EQ(w.area(), 256u);
  EXPECT_EQ(Window::centered(3, 3), (Window{-1, -1, 3, 3}));
}

TEST(Config, OccupiedOutsideWindowRejected) {
  EXPECT_THROW(Config(CellSet{{5, 5}}, Window{0, 0, 2, 2}), InvalidInput);
  const Config cfg(CellSet{{1, 1}}, Window{0, 0, 2, 2});
  EXPECT_TRUE(cfg.occupied({1, 1}));
  EXPECT_TRUE(cfg.vacant({0, 0}));
  EXPECT_TRUE(cfg.vacant({100, -100}));
}

TEST(Component, BreadthFirstByMode) {
  // Diagonal pair: one star component, two plus components.
  const Config cfg(CellSet{{0, 0}, {1, 1}});
  EXPECT_EQ(component(cfg, {0, 0}, Mode::star), (CellSet{{0, 0}, {1, 1}}));
  EXPECT_EQ(component(cfg, {0, 0}, Mode::plus), (CellSet{{0, 0}}));
  EXPECT_TRUE(component(cfg, {5, 5}, Mode::star).empty());
}

TEST(Halo, SingleCellHasEightSquares) {
  const Config cfg(CellSet{{0, 0}});
  const CellSet h = halo(cfg, {{0, 0}});
  EXPECT_EQ(h.size(), 8u);
  EXPECT_FALSE(h.contains({0, 0}));
}

TEST(Halo, SkipsOccupiedNeighbours) {
  // Plus component {(0,0)} next to a diagonal occupied cell: that cell is not vacant.
  const Config cfg(CellSet{{0, 0}, {1, 1}});
  const CellSet h = halo(cfg, {{0, 0}});
  EXPECT_EQ(h.size(), 7u);
  EXPECT_FALSE(h.contains({1, 1}));
}

TEST(RequireComponent, RejectsBadInputs) {
  const Config cfg(CellSet{{0, 0}, {1, 0}, {3, 0}});
  EXPECT_THROW(require_component(cfg, {}, Mode::plus), InvalidInput);
  EXPECT_THROW(require_component(cfg, {{0, 0}, {2, 0}}, Mode::plus), InvalidInput);
  EXPECT_THROW(require_component(cfg, {{0, 0}, {3, 0}}, Mode::plus), InvalidInput);
  EXPECT_THROW(require_component(cfg, {{0, 0}}, Mode::plus), InvalidInput);
  EXPECT_NO_THROW(require_component(cfg, {{0, 0}, {1, 0}}, Mode::plus));
}

TEST(LowestLeftmost, RowThenColumn) {
  EXPECT_EQ(lowest_leftmost({{0, 1}, {5, 0}, {3, 0}}), (Cell{3, 0}));
}
