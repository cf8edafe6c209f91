#include "primal/crosscheck.hpp"

#include <algorithm>
#include <string>

namespace primal {

namespace {

std::string pt(Point x) { return std::to_string(x); }

}  // namespace

std::vector<std::string> compare_with_oracle(const Analysis& a, const oracle::OracleVerdicts& o) {
  const PrimalSystem& sys = a.sys;
  const std::size_t n = sys.size();
  std::vector<std::string> out;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
  };

  expect(a.open_count.has_value() && *a.open_count == o.open_count, "open set count");
  for (Point x = 0; x < n; ++x) {
    const PointFlags& fl = a.points.flags[x];
    expect(sys.V[x] == o.minimal_open[x], "V(" + pt(x) + ")");
    expect(fl.periodic == o.periodic.contains(x), "periodic(" + pt(x) + ")");
    expect(fl.recurrent == o.recurrent.contains(x), "recurrent(" + pt(x) + ")");
    expect(fl.quasi_periodic == o.quasi_periodic.contains(x), "quasi_periodic(" + pt(x) + ")");
    expect(fl.almost_periodic == o.almost_periodic.contains(x), "almost_periodic(" + pt(x) + ")");
    expect(fl.transitive_point == o.transitive_points.contains(x), "transitive_point(" + pt(x) + ")");
    expect(fl.non_wandering == o.non_wandering.contains(x), "non_wandering(" + pt(x) + ")");
    expect(a.points.omega[x] == o.omega[x], "omega(" + pt(x) + ")");
  }
  expect(a.system.omega_set == o.non_wandering, "non-wandering set");
  expect(a.system.recurrent_set == o.recurrent, "recurrent set");
  expect(a.system.minimal_sets == o.minimal_sets, "minimal sets");
  expect(a.system.transitive == o.transitive, "transitive");
  expect(a.system.transitive_points == o.transitive_points, "transitive points");
  if (o.top_ergodic) expect(a.system.top_ergodic == *o.top_ergodic, "topologically ergodic");
  if (o.weakly_mixing) expect(a.system.weakly_mixing == *o.weakly_mixing, "weakly mixing");
  if (o.strongly_mixing) expect(a.system.strongly_mixing == *o.strongly_mixing, "strongly mixing");
  expect(a.entourage.as_point_set() == o.entourage, "base entourage");
  expect(a.relations.prox.as_point_set() == o.prox, "Prox");
  expect(a.relations.asym.as_point_set() == o.asym, "Asym");
  expect(a.relations.syprox.as_point_set() == o.syprox, "SyProx");
  expect(a.triangle.as_point_set() == o.triangle, "triangle relation");
  expect(a.stability.witnesses.size() == n && o.stable_points.is_full(), "Lyapunov stability");
  expect(a.chaos.sensitive == o.sensitive, "sensitivity");
  return out;
}

InstanceResult check_instance(const FunctionalMap& f, const oracle::OracleBudget& budget) {
  AnalysisBudget ab;
  ab.max_points = std::max(ab.max_points, f.size());
  ab.open_cap = std::max(ab.open_cap, f.size());
  const Analysis a = analyze(f, ab);
  const auto o = oracle::oracle_predicates(f, budget);
  InstanceResult r;
  r.disagreements = compare_with_oracle(a, o);
  for (auto& c : run_theorem_checks(a)) {
    if (!c.passed) r.theorem_failures.push_back(std::move(c));
  }
  return r;
}

void for_each_map(std::size_t n, const std::function<void(const FunctionalMap&)>& fn) {
  if (n == 0) return;
  std::vector<std::int64_t> succ(n, 0);
  for (;;) {
    fn(FunctionalMap::load(succ));
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (++succ[i] < static_cast<std::int64_t>(n)) break;
      succ[i] = 0;
      if (i == 0) return;
    }
  }
}

}  // namespace primal
