#ifndef PRIMAL_TOPOLOGY_HPP
#define PRIMAL_TOPOLOGY_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "primal/functional_map.hpp"
#include "primal/rho.hpp"

namespace primal {

// Open sets of the primal topology are the backward-invariant sets,
// f^{-1}(A) subset of A; closed sets are the forward-invariant ones.

// V[x]: the smallest open set containing x, i.e. every y with f^k(y) = x for
// some k >= 0. Any two members are nested or disjoint.
struct MinimalOpenFamily {
  std::vector<PointSet> V;

  const PointSet& operator[](Point x) const { return V[x]; }
  std::size_t size() const noexcept { return V.size(); }
};

MinimalOpenFamily minimal_opens(const FunctionalMap& f);
MinimalOpenFamily minimal_opens(const FunctionalMap& f, const RhoDecomposition& rho);

bool is_open(const FunctionalMap& f, const PointSet& a);
bool is_closed(const FunctionalMap& f, const PointSet& a);

// Smallest closed superset: A, f(A), f^2(A), ... accumulated.
PointSet closure(const FunctionalMap& f, const PointSet& a);

inline constexpr std::size_t kDefaultOpenCap = 20;
inline constexpr std::size_t kMaxOpenCap = 30;

// Every open set of a small space, as bitmasks over the points.
struct OpenSetCatalog {
  std::size_t n = 0;
  std::size_t n_cap = kDefaultOpenCap;
  std::vector<std::uint32_t> masks;  // ascending

  std::size_t size() const noexcept { return masks.size(); }
  PointSet at(std::size_t i) const;
  bool contains(const PointSet& a) const;
};

// Filters all 2^n subsets. Throws Error{DomainTooLarge} when n > n_cap or
// n_cap > kMaxOpenCap.
OpenSetCatalog enumerate_opens(const FunctionalMap& f, std::size_t n_cap = kDefaultOpenCap);

PointSet mask_to_set(std::size_t n, std::uint64_t mask);
std::uint64_t set_to_mask(const PointSet& s);

}  // namespace primal

#endif  // PRIMAL_TOPOLOGY_HPP
