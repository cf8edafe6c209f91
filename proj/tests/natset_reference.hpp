#ifndef PRIMAL_TESTS_NATSET_REFERENCE_HPP
#define PRIMAL_TESTS_NATSET_REFERENCE_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <vector>

#include "primal/functional_map.hpp"
#include "primal/natset.hpp"

namespace primal::testing {

// A raw (not canonical) threshold/period rule and its explicit expansion.
struct RawRule {
  std::size_t t = 0;
  std::vector<bool> prefix;
  std::size_t p = 1;
  std::vector<bool> residues;

  bool member(std::uint64_t k) const { return k < t ? prefix[k] : residues[k % p]; }

  std::vector<bool> expand(std::size_t len) const {
    std::vector<bool> out(len);
    for (std::size_t k = 0; k < len; ++k) out[k] = member(k);
    return out;
  }

  EventuallyPeriodicNatSet build() const {
    return EventuallyPeriodicNatSet::from_rule(t, prefix, p, residues);
  }
};

// Thresholds up to 20, periods up to 10. Densities vary so that empty,
// finite and cofinite sets all show up.
inline RawRule random_rule(SplitMix64& rng) {
  RawRule r;
  r.t = rng.below(21);
  r.p = 1 + rng.below(10);
  const std::uint64_t density = rng.below(5);
  auto draw = [&] {
    if (density == 0) return false;
    if (density == 4) return true;
    return rng.below(4) < density;
  };
  for (std::size_t k = 0; k < r.t; ++k) r.prefix.push_back(draw());
  for (std::size_t k = 0; k < r.p; ++k) r.residues.push_back(draw());
  return r;
}

// Windowed answers on an explicit array whose periodic part starts before
// `settled` and repeats at least twice after it.
inline bool explicit_infinite(const std::vector<bool>& a, std::size_t settled) {
  for (std::size_t k = settled; k < a.size(); ++k) {
    if (a[k]) return true;
  }
  return false;
}

inline bool explicit_cofinite(const std::vector<bool>& a, std::size_t settled) {
  for (std::size_t k = settled; k < a.size(); ++k) {
    if (!a[k]) return false;
  }
  return true;
}

// Least m with every window [k, k+m] meeting the set, over starts k below
// `starts`; nullopt when some start sees no member at all.
inline std::optional<std::uint64_t> explicit_gap(const std::vector<bool>& a, std::size_t starts) {
  std::uint64_t gap = 0;
  std::size_t next = a.size();
  std::vector<std::size_t> next_member(a.size() + 1, a.size());
  for (std::size_t k = a.size(); k-- > 0;) {
    if (a[k]) next = k;
    next_member[k] = next;
  }
  for (std::size_t k = 0; k < starts; ++k) {
    if (next_member[k] == a.size()) return std::nullopt;
    gap = std::max<std::uint64_t>(gap, next_member[k] - k);
  }
  return gap;
}

}  // namespace primal::testing

#endif  // PRIMAL_TESTS_NATSET_REFERENCE_HPP
