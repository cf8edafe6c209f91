#ifndef PRIMAL_DYNAMICS_HPP
#define PRIMAL_DYNAMICS_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "primal/functional_map.hpp"
#include "primal/natset.hpp"
#include "primal/rho.hpp"
#include "primal/topology.hpp"

namespace primal {

// A map together with the skeleton every analysis needs.
struct PrimalSystem {
  explicit PrimalSystem(FunctionalMap map)
      : f(std::move(map)), rho(rho_decompose(f)), V(minimal_opens(f, rho)) {}

  std::size_t size() const noexcept { return f.size(); }

  FunctionalMap f;
  RhoDecomposition rho;
  MinimalOpenFamily V;
};

// D(A, B) = {k : f^k(A) meets B}. The image sequence A, f(A), f^2(A), ...
// is run until a state repeats; the repeat fixes the threshold and period.
EventuallyPeriodicNatSet hit_set(const FunctionalMap& f, const PointSet& a, const PointSet& b);

// D({x}, B) read off the rho lasso of x; agrees with hit_set on singletons.
EventuallyPeriodicNatSet hit_set_from_point(const PrimalSystem& sys, Point x, const PointSet& b);

// A backward path x = p[0], p[1], ..., p[m] with f(p[k]) = p[k-1].
struct Preorbit {
  std::vector<Point> points;
  // The path cannot be extended, or it is a prefix of an infinite preorbit.
  bool complete = false;
  // p[m] has an infinite preorbit, so the path continues forever.
  bool extends_to_infinite = false;
};

struct PreorbitLimits {
  std::size_t max_length = 16;  // points per emitted path
  std::size_t max_count = 64;   // emitted paths
};

// Complete preorbits of x, each truncated to max_length points. Depth-first,
// preimages visited in ascending order. Throws Error{LimitExceeded} carrying
// the exact number of truncated paths when it exceeds max_count.
std::vector<Preorbit> preorbits(const PrimalSystem& sys, Point x, PreorbitLimits limits = {});

// Number of paths preorbits() would emit (saturating).
std::uint64_t count_preorbits(const PrimalSystem& sys, Point x, std::size_t max_length);

// True iff V(x) reaches back into a cycle, i.e. x lies in every f^k(X).
bool has_infinite_preorbit(const PrimalSystem& sys, Point x);

// Intersection of the closures of the tail orbits O(f^k(x)), k >= 0. The
// orbits stop changing once f^k(x) is on its cycle, so k runs up to
// tail + period.
PointSet omega_limit(const PrimalSystem& sys, Point x);

struct PointFlags {
  bool periodic = false;
  bool eventually_periodic = false;
  bool recurrent = false;
  bool quasi_periodic = false;
  bool almost_periodic = false;
  bool transitive_point = false;
  bool non_wandering = false;
};

struct PointClassification {
  std::vector<PointFlags> flags;
  std::vector<PointSet> omega;
  // D(x, V(x)) per point.
  std::vector<EventuallyPeriodicNatSet> return_times;
};

// Per-point predicates evaluated from their definitions. A neighbourhood U
// of x always contains V(x) and D(x, .) and D(., .) only grow with their
// arguments, so every "for all neighbourhoods" quantifier is decided at
// U = V(x), and every "for all non-empty open U" at the sets V(y).
//
// quasi-periodicity is found by searching for m with mN inside D(x, V(x));
// the verdict must match periodicity or Error{CertificateFailure} is thrown.
PointClassification classify_points(const PrimalSystem& sys);

}  // namespace primal

#endif  // PRIMAL_DYNAMICS_HPP
