#include "primal/analysis.hpp"

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>

#include "primal/error.hpp"

namespace primal {

namespace {

std::optional<std::size_t> env_size(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') return std::nullopt;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(raw, &end, 10);
  if (*end != '\0') {
    throw Error(ErrorCode::MalformedInput, std::string(name) + " must be a non-negative integer");
  }
  return static_cast<std::size_t>(v);
}

std::string describe(const PointSet& s) {
  std::ostringstream out;
  out << '{';
  bool first = true;
  s.for_each([&](Point x) {
    out << (first ? "" : ",") << x;
    first = false;
  });
  out << '}';
  return out.str();
}

// Collects a pass/fail verdict plus the first counterexample.
class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); result_.passed = true; }

  void expect(bool ok, const std::string& what) {
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what;
    }
  }

  TheoremCheck done() { return std::move(result_); }

 private:
  TheoremCheck result_;
};

EventuallyPeriodicNatSet rectangle_hits(const FunctionalMap& f2, std::size_t n, const PointSet& u1,
                                        const PointSet& u2, const PointSet& v1, const PointSet& v2) {
  PointSet from(n * n), to(n * n);
  u1.for_each([&](Point a) { u2.for_each([&](Point b) { from.insert(pair_index(n, a, b)); }); });
  v1.for_each([&](Point a) { v2.for_each([&](Point b) { to.insert(pair_index(n, a, b)); }); });
  return hit_set(f2, from, to);
}

}  // namespace

AnalysisBudget AnalysisBudget::from_env() {
  AnalysisBudget b;
  if (auto v = env_size("PRIMAL_MAX_POINTS")) b.max_points = *v;
  if (auto v = env_size("PRIMAL_OPEN_CAP")) b.open_cap = *v;
  return b;
}

Analysis analyze(FunctionalMap f, const AnalysisBudget& budget) {
  if (f.size() > budget.max_points) {
    throw Error(ErrorCode::BudgetExceeded, "map has " + std::to_string(f.size()) +
                                               " points; the analysis budget allows " +
                                               std::to_string(budget.max_points));
  }
  PrimalSystem sys(std::move(f));
  std::optional<std::size_t> open_count;
  if (sys.size() <= budget.open_cap && budget.open_cap <= kMaxOpenCap) {
    open_count = enumerate_opens(sys.f, budget.open_cap).size();
  }
  auto points = classify_points(sys);
  auto system = analyze_system(sys, points);
  auto entourage = base_entourage(sys);
  auto triangle = triangle_relation(sys);
  auto relations = prox_asym_syprox(sys);
  auto stability = stability_check(sys);
  auto chaos = chaos_verdict(sys);
  return Analysis{std::move(sys),       open_count,           std::move(points),
                  std::move(system),    std::move(entourage), std::move(triangle),
                  std::move(relations), std::move(stability), chaos};
}

bool all_passed(const std::vector<TheoremCheck>& checks) {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

std::vector<TheoremCheck> run_theorem_checks(const Analysis& a) {
  const PrimalSystem& sys = a.sys;
  const FunctionalMap& f = sys.f;
  const std::size_t n = sys.size();
  const PointSet periodic = sys.rho.periodic_points();
  std::vector<TheoremCheck> out;

  {
    Check c("non_wandering_is_eventual_image");
    PointSet from_points(n);
    for (Point x = 0; x < n; ++x) {
      if (a.points.flags[x].non_wandering) from_points.insert(x);
    }
    const PointSet eventual = non_wandering_set(f);
    c.expect(from_points == eventual,
             "definitional " + describe(from_points) + " vs eventual image " + describe(eventual));
    c.expect(eventual == periodic, "eventual image " + describe(eventual) + " is not the periodic set");
    c.expect(a.system.omega_set == eventual, "report omega set differs");
    out.push_back(c.done());
  }
  {
    Check c("recurrent_is_periodic");
    PointSet omega_union(n);
    for (Point x = 0; x < n; ++x) {
      c.expect(a.points.flags[x].recurrent == sys.rho.is_periodic(x),
               "point " + std::to_string(x));
      omega_union |= a.points.omega[x];
    }
    c.expect(a.system.recurrent_set == periodic, "recurrent set");
    c.expect(omega_union == periodic, "union of limit sets " + describe(omega_union));
    out.push_back(c.done());
  }
  {
    Check c("minimal_sets_are_cycles");
    for (const auto& m : a.system.minimal_sets) {
      c.expect(!m.empty() && is_closed(f, m), "minimal set " + describe(m) + " not closed");
      m.for_each([&](Point x) {
        c.expect(closure(f, PointSet::singleton(n, x)) == m,
                 "minimal set " + describe(m) + " has a smaller closed subset");
      });
    }
    // Every minimal set is the closure of any of its points, so scanning
    // point closures finds them all.
    std::vector<PointSet> found;
    for (Point x = 0; x < n; ++x) {
      const PointSet orbit = closure(f, PointSet::singleton(n, x));
      bool minimal = true;
      orbit.for_each([&](Point y) {
        minimal = minimal && closure(f, PointSet::singleton(n, y)) == orbit;
      });
      if (minimal && std::find(found.begin(), found.end(), orbit) == found.end()) {
        found.push_back(orbit);
      }
    }
    std::sort(found.begin(), found.end(),
              [](const PointSet& l, const PointSet& r) { return l.lex_less(r); });
    c.expect(found == a.system.minimal_sets, "minimal sets from point closures differ");
    out.push_back(c.done());
  }
  {
    Check c("transitive_iff_single_cycle");
    const bool by_def = is_transitive_by_definition(sys);
    c.expect(a.system.transitive == by_def, "characterization vs definition");
    c.expect(a.system.transitive == !a.system.transitive_points.empty(), "transitive points");
    if (a.system.transitive) c.expect(a.system.transitive_points.is_full(), "not every point transitive");
    out.push_back(c.done());
  }
  {
    Check c("ergodic_iff_weakly_iff_strongly_mixing");
    c.expect(a.system.top_ergodic == a.system.weakly_mixing, "ergodic vs weakly mixing");
    c.expect(a.system.weakly_mixing == a.system.strongly_mixing, "weakly vs strongly mixing");
    c.expect(a.system.transitive == a.system.top_ergodic, "transitive vs ergodic on a finite space");
    out.push_back(c.done());
  }
  {
    Check c("ergodic_iff_surjective_and_nested");
    c.expect(is_top_ergodic(sys) == is_top_ergodic_by_definition(sys),
             "characterization vs D(V(x), V(y)) infinite for all x, y");
    out.push_back(c.done());
  }
  {
    Check c("lyapunov_stable");
    c.expect(a.stability.witnesses.size() == n, "missing witnesses");
    for (const auto& w : a.stability.witnesses) {
      c.expect(w.stable_set_is_neighbourhood, "point " + std::to_string(w.x));
    }
    out.push_back(c.done());
  }
  {
    Check c("never_sensitive");
    c.expect(!a.chaos.sensitive, "sensitive");
    c.expect(!a.chaos.ay_chaotic && !a.chaos.d_chaotic, "chaotic");
    out.push_back(c.done());
  }
  {
    Check c("asym_equals_syprox_equals_prox");
    c.expect(a.relations.asym == a.relations.syprox, "asym vs syprox");
    c.expect(a.relations.syprox == a.relations.prox, "syprox vs prox");
    out.push_back(c.done());
  }
  {
    Check c("prox_equals_triangle");
    c.expect(a.relations.prox == a.triangle, "prox vs triangle");
    out.push_back(c.done());
  }
  {
    Check c("orbital_relation_is_triangle_union_inverse");
    c.expect(orbital_relation(sys) == (a.triangle | a.triangle.inverse()), "relations differ");
    c.expect(a.triangle.is_reflexive() && a.triangle.is_transitive(), "triangle not a preorder");
    for (std::size_t comp = 0; comp < sys.rho.component_count; ++comp) {
      const PointSet members = sys.rho.component_set(comp);
      members.for_each([&](Point x) {
        members.for_each([&](Point y) {
          c.expect(a.triangle.contains(x, y), "component " + std::to_string(comp) + " not full");
        });
      });
    }
    out.push_back(c.done());
  }
  {
    Check c("triangle_witnesses_hold");
    for (Point x = 0; x < n; ++x) {
      for (Point y = 0; y < n; ++y) {
        if (const auto w = triangle_witness(sys, x, y)) {
          c.expect(w->first <= w->second &&
                       iterate(f, sys.rho, x, w->first) == iterate(f, sys.rho, y, w->second),
                   "witness for (" + std::to_string(x) + "," + std::to_string(y) + ")");
        }
      }
    }
    out.push_back(c.done());
  }
  {
    Check c("quasi_periodic_iff_periodic");
    for (Point x = 0; x < n; ++x) {
      c.expect(a.points.flags[x].quasi_periodic == a.points.flags[x].periodic,
               "point " + std::to_string(x));
    }
    out.push_back(c.done());
  }
  {
    Check c("returning_point_is_quasi_and_eventually_periodic");
    for (Point x = 0; x < n; ++x) {
      const std::size_t horizon = sys.rho.tail_len[x] + sys.rho.period_of(x);
      bool returns = false;
      for (std::size_t k = 1; k <= horizon && !returns; ++k) {
        returns = sys.V[x].contains(iterate(f, sys.rho, x, k));
      }
      if (returns) {
        c.expect(a.points.flags[x].quasi_periodic && a.points.flags[x].eventually_periodic,
                 "point " + std::to_string(x));
      }
    }
    out.push_back(c.done());
  }
  {
    Check c("almost_periodic_iff_recurrent");
    for (Point x = 0; x < n; ++x) {
      c.expect(a.points.flags[x].almost_periodic == a.points.flags[x].recurrent,
               "point " + std::to_string(x));
    }
    out.push_back(c.done());
  }
  {
    Check c("omega_limit_is_component_cycle");
    for (Point x = 0; x < n; ++x) {
      const PointSet cycle = sys.rho.cycle_set(sys.rho.cycle_id[x]);
      c.expect(a.points.omega[x] == cycle,
               "omega(" + std::to_string(x) + ") = " + describe(a.points.omega[x]));
    }
    out.push_back(c.done());
  }
  {
    Check c("point_closure_is_orbit");
    for (Point x = 0; x < n; ++x) {
      PointSet orbit(n);
      Point y = x;
      for (std::size_t k = 0; k <= n; ++k, y = f(y)) orbit.insert(y);
      c.expect(closure(f, PointSet::singleton(n, x)) == orbit, "point " + std::to_string(x));
    }
    out.push_back(c.done());
  }
  {
    Check c("minimal_opens_nested_or_disjoint");
    for (Point x = 0; x < n; ++x) {
      c.expect(is_open(f, sys.V[x]) && sys.V[x].contains(x), "V(" + std::to_string(x) + ")");
      for (Point y = 0; y < n; ++y) {
        const bool ok = sys.V[x].subset_of(sys.V[y]) || sys.V[y].subset_of(sys.V[x]) ||
                        !sys.V[x].intersects(sys.V[y]);
        c.expect(ok, "V(" + std::to_string(x) + "), V(" + std::to_string(y) + ")");
      }
    }
    out.push_back(c.done());
  }
  {
    Check c("infinite_preorbit_iff_eventual_image");
    const PointSet eventual = non_wandering_set(f);
    for (Point x = 0; x < n; ++x) {
      c.expect(has_infinite_preorbit(sys, x) == eventual.contains(x), "point " + std::to_string(x));
    }
    out.push_back(c.done());
  }
  {
    Check c("product_hits_factor");
    const FunctionalMap f2 = product_map(f);
    auto check_quartet = [&](Point x1, Point x2, Point y1, Point y2) {
      const auto lhs = rectangle_hits(f2, n, sys.V[x1], sys.V[x2], sys.V[y1], sys.V[y2]);
      const auto rhs = hit_set(f, sys.V[x1], sys.V[y1]).intersect(hit_set(f, sys.V[x2], sys.V[y2]));
      c.expect(lhs == rhs, "quartet " + std::to_string(x1) + "," + std::to_string(x2) + "," +
                               std::to_string(y1) + "," + std::to_string(y2));
    };
    if (n <= 4) {
      for (Point x1 = 0; x1 < n; ++x1)
        for (Point x2 = 0; x2 < n; ++x2)
          for (Point y1 = 0; y1 < n; ++y1)
            for (Point y2 = 0; y2 < n; ++y2) check_quartet(x1, x2, y1, y2);
    } else {
      SplitMix64 rng(n);
      for (int i = 0; i < 64; ++i) {
        check_quartet(static_cast<Point>(rng.below(n)), static_cast<Point>(rng.below(n)),
                      static_cast<Point>(rng.below(n)), static_cast<Point>(rng.below(n)));
      }
    }
    out.push_back(c.done());
  }
  return out;
}

}  // namespace primal
