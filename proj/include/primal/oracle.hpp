#ifndef PRIMAL_ORACLE_HPP
#define PRIMAL_ORACLE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "primal/functional_map.hpp"
#include "primal/point_set.hpp"

// Brute-force re-derivation of every dynamical verdict straight from the
// definitions: the topology is the explicit list of backward-invariant
// subsets, closures are intersections of closed sets, and "infinitely often"
// is read off an explicit unrolling of the dynamics. Nothing here relies on
// the rho decomposition or on any characterization; it is slow on purpose
// and only meant for small spaces.
namespace primal::oracle {

struct OracleBudget {
  std::size_t n_cap = 12;
  // Quantifiers over pairs and quartets of open sets run only up to here.
  std::size_t mixing_cap = 8;
  // Unrolling length; 0 selects 4*n*n. Every eventually periodic sequence in
  // play must settle before horizon/2 and repeat within the last half.
  std::size_t horizon = 0;

  std::size_t horizon_for(std::size_t n) const { return horizon ? horizon : 4 * n * n; }
};

inline constexpr std::size_t kMaxOracleCap = 16;

// All open sets as ascending bitmasks. Throws Error{BudgetExceeded} when
// n > n_cap.
std::vector<std::uint32_t> oracle_opens(const FunctionalMap& f, const OracleBudget& budget = {});

struct OracleVerdicts {
  std::size_t open_count = 0;
  std::vector<PointSet> minimal_open;  // intersection of the opens around x
  PointSet periodic;
  PointSet recurrent;
  PointSet quasi_periodic;
  PointSet almost_periodic;
  PointSet transitive_points;
  PointSet non_wandering;
  std::vector<PointSet> omega;
  std::vector<PointSet> minimal_sets;  // lexicographic order
  bool transitive = false;
  // Present only when n <= mixing_cap.
  std::optional<bool> top_ergodic;
  std::optional<bool> weakly_mixing;
  std::optional<bool> strongly_mixing;
  // Relations on X as subsets of X x X, pair (x, y) at x*n + y.
  PointSet entourage;
  PointSet prox;
  PointSet asym;
  PointSet syprox;
  PointSet triangle;
  PointSet stable_points;
  bool sensitive = false;
};

// Throws Error{BudgetExceeded} when n > n_cap or the horizon is too short
// for this map.
OracleVerdicts oracle_predicates(const FunctionalMap& f, const OracleBudget& budget = {});

}  // namespace primal::oracle

#endif  // PRIMAL_ORACLE_HPP
