#include "primal/global.hpp"

#include <algorithm>

namespace primal {

std::string_view to_string(ErgodicKind kind) {
  switch (kind) {
    case ErgodicKind::NotErgodic: return "not_ergodic";
    case ErgodicKind::SingleCycle: return "single_cycle";
  }
  return "unknown";
}

PointSet non_wandering_set(const FunctionalMap& f) {
  PointSet current = PointSet::full(f.size());
  for (;;) {
    PointSet next = f.image(current);
    if (next == current) return current;
    current = std::move(next);
  }
}

PointSet recurrent_set(const PrimalSystem& sys) { return sys.rho.periodic_points(); }

std::vector<PointSet> minimal_sets(const PrimalSystem& sys) {
  std::vector<PointSet> out;
  out.reserve(sys.rho.cycles.size());
  // Cycle ids are already ordered by least member.
  for (std::size_t c = 0; c < sys.rho.cycles.size(); ++c) out.push_back(sys.rho.cycle_set(c));
  return out;
}

bool is_transitive(const PrimalSystem& sys) {
  return sys.rho.component_count == 1 && sys.rho.cycles.size() == 1 &&
         sys.rho.cycle_len[0] == sys.size();
}

bool is_transitive_by_definition(const PrimalSystem& sys) {
  const std::size_t n = sys.size();
  for (Point x = 0; x < n; ++x) {
    bool all = true;
    for (Point y = 0; y < n && all; ++y) all = hit_set(sys.f, PointSet::singleton(n, x), sys.V[y]).is_infinite();
    if (all) return true;
  }
  return false;
}

bool is_top_ergodic(const PrimalSystem& sys) {
  if (!sys.f.is_surjective()) return false;
  const std::size_t n = sys.size();
  for (Point x = 0; x < n; ++x) {
    for (Point y = x + 1; y < n; ++y) {
      if (!sys.V[x].subset_of(sys.V[y]) && !sys.V[y].subset_of(sys.V[x])) return false;
    }
  }
  return true;
}

bool is_top_ergodic_by_definition(const PrimalSystem& sys) {
  const std::size_t n = sys.size();
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      if (!hit_set(sys.f, sys.V[x], sys.V[y]).is_infinite()) return false;
    }
  }
  return true;
}

bool is_weakly_mixing(const PrimalSystem& sys) {
  const std::size_t n = sys.size();
  // Diagonal quartets first: each failure there is already a witness.
  std::vector<EventuallyPeriodicNatSet> distinct;
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      auto d = hit_set(sys.f, sys.V[x], sys.V[y]);
      if (!d.is_infinite()) return false;
      if (std::find(distinct.begin(), distinct.end(), d) == distinct.end()) {
        distinct.push_back(std::move(d));
      }
    }
  }
  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = i + 1; j < distinct.size(); ++j) {
      if (!distinct[i].intersect(distinct[j]).is_infinite()) return false;
    }
  }
  return true;
}

bool is_strongly_mixing(const PrimalSystem& sys) {
  const std::size_t n = sys.size();
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      if (!hit_set(sys.f, sys.V[x], sys.V[y]).is_cofinite()) return false;
    }
  }
  return true;
}

ErgodicKind ergodic_kind(const PrimalSystem& sys) {
  return is_top_ergodic(sys) ? ErgodicKind::SingleCycle : ErgodicKind::NotErgodic;
}

SystemReport analyze_system(const PrimalSystem& sys, const PointClassification& points) {
  const std::size_t n = sys.size();
  SystemReport r;
  r.omega_set = non_wandering_set(sys.f);
  r.recurrent_set = recurrent_set(sys);
  r.minimal_sets = minimal_sets(sys);
  r.transitive = is_transitive(sys);
  r.transitive_points = PointSet(n);
  for (Point x = 0; x < n; ++x) {
    if (points.flags[x].transitive_point) r.transitive_points.insert(x);
  }
  r.top_ergodic = is_top_ergodic(sys);
  r.weakly_mixing = is_weakly_mixing(sys);
  r.strongly_mixing = is_strongly_mixing(sys);
  r.ergodic_kind = ergodic_kind(sys);
  return r;
}

}  // namespace primal
