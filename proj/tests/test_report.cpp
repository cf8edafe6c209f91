#include <gtest/gtest.h>

#include "primal/error.hpp"
#include "primal/report.hpp"

using namespace primal;

namespace {

ErrorCode parse_error(std::string_view text) {
  try {
    parse_map_document(text);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parsed: " << text;
  return ErrorCode::IndexOutOfRange;
}

Json report_for(const FunctionalMap& f, const std::optional<Json>& family = std::nullopt) {
  const Analysis a = analyze(f);
  return build_report(a, run_theorem_checks(a), family);
}

}  // namespace

TEST(ParseMap, PlainAndJson) {
  EXPECT_EQ(parse_map_document("1 2 0\n").map, FunctionalMap::load({1, 2, 0}));
  EXPECT_EQ(parse_map_document("  {\"n\": 3, \"succ\": [0, 0, 1]}").map, FunctionalMap::load({0, 0, 1}));
  const auto doc = parse_map_document(R"({"n":2,"succ":[1,0],"family":{"name":"tower"}})");
  ASSERT_TRUE(doc.family.has_value());
  EXPECT_EQ((*doc.family)["name"], "tower");
}

TEST(ParseMap, Errors) {
  EXPECT_EQ(parse_error("0 0 3"), ErrorCode::IndexOutOfRange);
  EXPECT_EQ(parse_error("0 x 1"), ErrorCode::MalformedInput);
  EXPECT_EQ(parse_error(R"({"n":2,"succ":[0]})"), ErrorCode::MalformedInput);
  EXPECT_EQ(parse_error(R"({"n":2,"succ":[0, 1)"), ErrorCode::MalformedInput);
  EXPECT_EQ(parse_error(R"({"succ":"0 1"})"), ErrorCode::MalformedInput);
  EXPECT_EQ(parse_error("   \n"), ErrorCode::EmptyDomain);
}

TEST(Serialize, NatSetAndRelation) {
  const auto j = natset_to_json(EventuallyPeriodicNatSet::arithmetic(1, 3));
  EXPECT_EQ(j.dump(), R"({"t":0,"prefix":[],"p":3,"residues":[1]})");
  PairRelation r(2);
  r.insert(1, 0);
  r.insert(0, 0);
  EXPECT_EQ(relation_to_json(r).dump(), "[[0,0],[1,0]]");
  EXPECT_EQ(map_to_json(FunctionalMap::load({1, 0})).dump(), R"({"n":2,"succ":[1,0]})");
}

TEST(Report, CycleSummary) {
  const Json r = report_for(FunctionalMap::load({1, 2, 0}));
  EXPECT_EQ(r["schema"], "primal-report");
  EXPECT_EQ(r["version"], kReportVersion);
  EXPECT_TRUE(r["system"]["transitive"].get<bool>());
  EXPECT_TRUE(r["system"]["strongly_mixing"].get<bool>());
  EXPECT_EQ(r["system"]["ergodic_kind"], "single_cycle");
  EXPECT_EQ(r["open_set_count"], 2);
  EXPECT_TRUE(r["stability"]["lyapunov_stable"].get<bool>());
  for (const auto& c : r["theorem_checks"]) EXPECT_TRUE(c["passed"].get<bool>()) << c["name"];
  EXPECT_EQ(r["relations"]["prox"].size(), 9u);
}

TEST(Report, Deterministic) {
  const auto f = gen_random(9, 5);
  EXPECT_EQ(report_for(f).dump(2), report_for(f).dump(2));
}

TEST(Report, CaveatsFollowFamily) {
  EXPECT_EQ(caveats_for(std::nullopt).size(), 1u);
  const Json tower = {{"name", "tower"}, {"m", 2}, {"n", 2}, {"J", 3}};
  const Json r = report_for(gen_tower(2, 2, 3), tower);
  ASSERT_EQ(r["caveats"].size(), 2u);
  EXPECT_EQ(r["caveats"][1], std::string(kTowerCaveat));
  EXPECT_EQ(r["system"]["recurrent_set"].size(), 2u);
  EXPECT_EQ(r["family"], tower);
  EXPECT_EQ(caveats_for(Json{{"name", "mod-mul"}}).back(), std::string(kModMulCaveat));
}

TEST(Report, OpenCountOmittedAboveCap) {
  const Analysis a = analyze(gen_random(21, 3));
  EXPECT_FALSE(a.open_count.has_value());
  EXPECT_TRUE(build_report(a, run_theorem_checks(a))["open_set_count"].is_null());
}

TEST(Analyze, BudgetExceeded) {
  try {
    analyze(gen_random(65, 1));
    FAIL() << "expected BudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
  }
  EXPECT_NO_THROW(analyze(gen_random(65, 1), {.max_points = 65}));
}

TEST(Dot, Fragments) {
  const std::string dot = render_dot(PrimalSystem(FunctionalMap::load({0, 0, 1, 3})));
  EXPECT_EQ(dot.rfind("digraph primal {", 0), 0u);
  EXPECT_NE(dot.find("label=\"minimal sets: {0} {3}\""), std::string::npos);
  EXPECT_NE(dot.find("subgraph cluster_1"), std::string::npos);
  EXPECT_NE(dot.find("n0 -> n0 [style=bold, penwidth=2.5];"), std::string::npos);
  EXPECT_NE(dot.find("n2 -> n1;"), std::string::npos);
  EXPECT_NE(dot.find("shape=doublecircle"), std::string::npos);
}
