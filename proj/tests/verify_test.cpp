#include <gtest/gtest.h>

#include "percdual/verify.hpp"

using namespace percdual;

namespace {

const std::vector<Cell> kRing8{{-1, -1}, {0, -1}, {1, -1}, {1, 0}, {1, 1}, {0, 1}, {-1, 1}, {-1, 0}};
const std::vector<Cell> kPlusNeighbours{{1, 0}, {0, 1}, {-1, 0}, {0, -1}};

}  // namespace

TEST(CheckScycle, RingPassesInPlusMode) {
  EXPECT_TRUE(check_scycle(Config(CellSet{{0, 0}}), SCycle::canonical(kRing8, Mode::plus)).overall());
}

TEST(CheckScycle, PlusNeighboursFailAsPlusPassAsStar) {
  const Config cfg(CellSet{{0, 0}});
  const PropertyReport plus = check_scycle(cfg, SCycle{kPlusNeighbours, Mode::plus});
  EXPECT_FALSE(plus.passed("scycle_adjacent"));
  ASSERT_NE(plus.first_failure(), nullptr);
  EXPECT_TRUE(plus.first_failure()->witness.has_value());
  const PropertyReport star = check_scycle(cfg, SCycle{kPlusNeighbours, Mode::star});
  EXPECT_TRUE(star.passed("scycle_adjacent"));
}

TEST(CheckScycle, RepeatedSquareFails) {
  std::vector<Cell> cells = kRing8;
  cells.push_back(kRing8.front());
  EXPECT_FALSE(check_scycle(Config(CellSet{{0, 0}}), SCycle{cells, Mode::star}).passed("scycle_distinct"));
}

TEST(StarComponentChecks, TrivialAndPinchedInstancesPass) {
  EXPECT_EQ(check_theorem_star(Config(CellSet{{0, 0}}), {0, 0}).status(), Status::pass);
  EXPECT_EQ(check_theorem_star(Config(CellSet{{0, 0}, {1, 1}}), {0, 0}).status(), Status::pass);
  EXPECT_EQ(check_theorem_star(Config(CellSet{{0, 0}}), {4, 4}).status(), Status::skip);
}

TEST(StarComponentChecks, FlippingACycleSquareBreaksVacancy) {
  const Config cfg(CellSet{{0, 0}});
  const SurroundingPlusCycle out = dual_plus_cycle(cfg, {{0, 0}});
  CellSet occupied = cfg.occupied_cells();
  occupied.insert(out.cycle.cells[2]);
  const PropertyReport r = check_scycle(Config(occupied), out.cycle);
  EXPECT_FALSE(r.passed("scycle_vacant"));
  ASSERT_NE(r.first_failure(), nullptr);
  EXPECT_NE(r.first_failure()->witness->find("(1,-1)"), std::string::npos);
}

TEST(PlusComponentChecks, TrivialAndTrominoPass) {
  EXPECT_EQ(check_theorem_plus(Config(CellSet{{0, 0}}), {0, 0}).status(), Status::pass);
  EXPECT_EQ(check_theorem_plus(Config(CellSet{{0, 0}, {1, 0}, {0, 1}}), {0, 0}).status(), Status::pass);
  EXPECT_EQ(check_theorem_plus(Config(CellSet{}), {0, 0}).status(), Status::skip);
}

TEST(PlusComponentChecks, DeletingACycleSquareBreaksAdjacency) {
  const Config cfg(CellSet{{0, 0}});
  SCycle s = dual_star_cycle(cfg, {{0, 0}}).cycle;
  s.cells.erase(s.cells.begin() + 3);  // (1,0): its neighbours (1,-1) and (1,1) are two apart
  const PropertyReport r = check_scycle(cfg, s);
  EXPECT_FALSE(r.passed("scycle_adjacent"));
}

TEST(Surrounding, OpenArcDoesNotSurround) {
  const Config cfg(CellSet{{0, 0}});
  const std::vector<Cell> arc(kRing8.begin(), kRing8.begin() + 5);
  EXPECT_FALSE(check_surrounding(cfg, {{0, 0}}, SCycle{arc, Mode::plus}).overall());
  EXPECT_TRUE(check_surrounding(cfg, {{0, 0}}, SCycle{kRing8, Mode::plus}).overall());
}

TEST(Clearance, SingleCellHasExactlyHalfUnit) {
  const Config cfg(CellSet{{0, 0}});
  const SurroundingPlusCycle out = dual_plus_cycle(cfg, {{0, 0}});
  // Doubled coordinates: distance 1/2 is 1 in doubled units, squared 1.
  EXPECT_EQ(clearance2(out.trace.dual_boundary_cells, out.trace.outer_boundary), 1);
}

TEST(StarBoundaryStructure, DiagonalPairTouchesOnce) {
  const Config cfg(CellSet{{0, 0}, {1, 1}});
  const auto r = check_star_boundary_structure(outermost_boundary(cfg, {{0, 0}, {1, 1}}, Mode::star));
  EXPECT_TRUE(r.overall());
}

TEST(StarBoundaryStructure, OverlappingCyclesAreReported) {
  OutermostBoundary b;
  b.cycles = {Cycle({{0, 0}, {1, 0}, {2, 0}, {2, 1}, {1, 1}, {0, 1}}), cell_cycle({1, 0})};
  const auto r = check_star_boundary_structure(b);
  EXPECT_FALSE(r.passed("boundary_cycles_touch_at_most_once"));
  EXPECT_FALSE(r.passed("boundary_interiors_disjoint"));
}

TEST(EnumerateScycles, RingCollinearAndEmpty) {
  const CellSet ring(kRing8.begin(), kRing8.end());
  const auto plus = enumerate_scycles(ring, Mode::plus);
  ASSERT_EQ(plus.size(), 1u);
  EXPECT_EQ(plus[0].cells, kRing8);
  EXPECT_TRUE(enumerate_scycles({{0, 0}, {1, 0}, {2, 0}}, Mode::plus).empty());
  EXPECT_TRUE(enumerate_scycles({{0, 0}, {1, 0}, {2, 0}}, Mode::star).empty());
  EXPECT_TRUE(enumerate_scycles({}, Mode::star).empty());
}

TEST(EnumerateScycles, StarTriangleIsACycle) {
  EXPECT_EQ(enumerate_scycles({{0, 0}, {1, 0}, {1, 1}}, Mode::star).size(), 1u);
}

TEST(EnumerateScycles, GuardThrows) {
  CellSet big;
  for (int i = 0; i < 25; ++i) big.insert({i, 0});
  EXPECT_THROW(enumerate_scycles(big, Mode::star), TooLarge);
}

TEST(PropertyReport, SerializeOneLinePerCheck) {
  PropertyReport r;
  r.add("a", true);
  r.add("b", false, "x\ty");
  EXPECT_EQ(r.serialize(), "a\tpass\t-\nb\tfail\tx y\n");
  EXPECT_EQ(r.status(), Status::fail);
  r.mark_skipped("why");
  EXPECT_EQ(r.status(), Status::skip);
}

TEST(RunTrials, DeterministicAndThreadIndependent) {
  const TrialPlan plan{Window::centered(12, 12), 0.6, 42, 150};
  const std::string one = serialize(run_trials(plan, Which::both));
  EXPECT_EQ(one, serialize(run_trials(plan, Which::both)));
  EXPECT_EQ(one, serialize(run_trials(plan, Which::both, 3)));
  EXPECT_NE(one.find("result\tpass"), std::string::npos);
}

TEST(RunTrials, EmptyLatticeSkipsEverything) {
  const TrialSummary s = run_trials(TrialPlan{Window::centered(8, 8), 0.0, 1, 20}, Which::both);
  EXPECT_EQ(s.star.skip, 20u);
  EXPECT_EQ(s.plus.skip, 20u);
  EXPECT_TRUE(s.ok());
}

TEST(RunTrials, FullWindowPasses) {
  const TrialSummary s = run_trials(TrialPlan{Window::centered(9, 9), 1.0, 1, 3}, Which::both);
  EXPECT_EQ(s.star.pass, 3u);
  EXPECT_EQ(s.plus.pass, 3u);
}

TEST(RunTrials, RejectsBadPlans) {
  EXPECT_THROW(run_trials(TrialPlan{Window::centered(4, 4), 0.5, 1, 0}, Which::both), InvalidInput);
  EXPECT_THROW(run_trials(TrialPlan{Window::centered(4, 4), 1.5, 1, 1}, Which::both), InvalidInput);
}
