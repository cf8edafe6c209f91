#include <gtest/gtest.h>

#include "primal/crosscheck.hpp"
#include "primal/error.hpp"
#include "primal/oracle.hpp"

using namespace primal;

namespace {

ErrorCode oracle_error(const FunctionalMap& f, const oracle::OracleBudget& budget) {
  try {
    oracle::oracle_predicates(f, budget);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "oracle accepted the budget";
  return ErrorCode::MalformedInput;
}

}  // namespace

TEST(OracleOpens, Counts) {
  EXPECT_EQ(oracle::oracle_opens(FunctionalMap::load({0, 0, 0})).size(), 5u);
  EXPECT_EQ(oracle::oracle_opens(FunctionalMap::load({1, 2, 0})).size(), 2u);
  EXPECT_EQ(oracle::oracle_opens(FunctionalMap::load({0, 1, 2})).size(), 8u);
}

TEST(OraclePredicates, ChainAgreesWithPipeline) {
  const auto f = FunctionalMap::load({0, 0, 1});
  const auto o = oracle::oracle_predicates(f);
  EXPECT_EQ(o.recurrent, PointSet(3, {0}));
  EXPECT_EQ(o.non_wandering, PointSet(3, {0}));
  EXPECT_EQ(o.open_count, 4u);
  const auto result = check_instance(f);
  EXPECT_TRUE(result.ok());
  for (const auto& d : result.disagreements) ADD_FAILURE() << d;
}

TEST(OraclePredicates, TowerHasOneMinimalSet) {
  const auto o = oracle::oracle_predicates(gen_tower(2, 2, 3));
  ASSERT_EQ(o.minimal_sets.size(), 1u);
  EXPECT_EQ(o.minimal_sets[0], PointSet(8, {tower_point(3, 0, 0), tower_point(3, 1, 0)}));
  EXPECT_FALSE(o.top_ergodic.value());
  EXPECT_FALSE(o.sensitive);
}

TEST(OraclePredicates, CycleIsMixing) {
  const auto o = oracle::oracle_predicates(FunctionalMap::load({1, 2, 3, 4, 0}));
  EXPECT_TRUE(o.transitive);
  EXPECT_TRUE(o.top_ergodic.value());
  EXPECT_TRUE(o.weakly_mixing.value());
  EXPECT_TRUE(o.strongly_mixing.value());
  EXPECT_TRUE(o.transitive_points.is_full());
}

TEST(OraclePredicates, MixingSkippedAboveCap) {
  const auto o = oracle::oracle_predicates(gen_random(9, 3));
  EXPECT_FALSE(o.top_ergodic.has_value());
  EXPECT_FALSE(o.weakly_mixing.has_value());
  EXPECT_FALSE(o.strongly_mixing.has_value());
}

TEST(OraclePredicates, Budgets) {
  EXPECT_EQ(oracle_error(gen_random(13, 1), {}), ErrorCode::BudgetExceeded);
  EXPECT_THROW(oracle::oracle_opens(gen_random(13, 1)), Error);
  // A 5-cycle needs a window of at least five steps after the first n.
  EXPECT_EQ(oracle_error(FunctionalMap::load({1, 2, 3, 4, 0}), {.horizon = 8}),
            ErrorCode::BudgetExceeded);
  EXPECT_EQ(oracle_error(gen_random(4, 1), {.n_cap = 17}), ErrorCode::BudgetExceeded);
}

TEST(ForEachMap, EnumeratesAllMaps) {
  std::size_t count = 0;
  std::vector<Point> first, last;
  for_each_map(3, [&](const FunctionalMap& f) {
    if (count == 0) first.assign(f.succ().begin(), f.succ().end());
    last.assign(f.succ().begin(), f.succ().end());
    ++count;
  });
  EXPECT_EQ(count, 27u);
  EXPECT_EQ(first, (std::vector<Point>{0, 0, 0}));
  EXPECT_EQ(last, (std::vector<Point>{2, 2, 2}));
  count = 0;
  for_each_map(0, [&](const FunctionalMap&) { ++count; });
  EXPECT_EQ(count, 0u);
}

TEST(OracleProperty, AllMapsOnThreePointsAgree) {
  for_each_map(3, [](const FunctionalMap& f) {
    const auto r = check_instance(f);
    for (const auto& d : r.disagreements) ADD_FAILURE() << d;
    for (const auto& t : r.theorem_failures) ADD_FAILURE() << t.name << ": " << t.detail;
  });
}

TEST(OracleProperty, RandomMapsAgree) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto f = gen_random(5 + seed % 6, 77 + seed);
    const auto r = check_instance(f);
    for (const auto& d : r.disagreements) ADD_FAILURE() << "seed " << seed << ": " << d;
    EXPECT_TRUE(r.theorem_failures.empty());
  }
}
