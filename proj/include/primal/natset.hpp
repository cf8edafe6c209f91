#ifndef PRIMAL_NATSET_HPP
#define PRIMAL_NATSET_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace primal {

// An eventually periodic subset S of the naturals:
//
//   k < t:   k in S  <=>  prefix[k]
//   k >= t:  k in S  <=>  residues[k mod p]
//
// Values are always canonical: p is the least period of the tail and t is the
// least threshold for which the tail rule holds, so two sets are equal exactly
// when their fields are. The empty set is t = 0, p = 1, residues = {}.
class EventuallyPeriodicNatSet {
 public:
  EventuallyPeriodicNatSet() : residues_(1, false) {}

  static EventuallyPeriodicNatSet empty() { return {}; }
  static EventuallyPeriodicNatSet full();
  // {offset + step*j : j >= 0}; step >= 1.
  static EventuallyPeriodicNatSet arithmetic(std::uint64_t offset, std::uint64_t step);
  static EventuallyPeriodicNatSet finite(const std::vector<std::uint64_t>& members);

  // Throws Error{MalformedInput} unless prefix.size() == threshold,
  // residues.size() == period and period >= 1.
  static EventuallyPeriodicNatSet from_rule(std::size_t threshold, std::vector<bool> prefix,
                                            std::size_t period, std::vector<bool> residues);

  // From an explicit lasso: hits[k] for k < t + p, where the membership
  // sequence repeats with period p from index t on.
  static EventuallyPeriodicNatSet from_lasso(const std::vector<bool>& hits, std::size_t t,
                                             std::size_t p);

  std::size_t threshold() const noexcept { return prefix_.size(); }
  std::size_t period() const noexcept { return residues_.size(); }
  const std::vector<bool>& prefix() const noexcept { return prefix_; }
  const std::vector<bool>& residues() const noexcept { return residues_; }
  std::vector<std::uint64_t> prefix_members() const;
  std::vector<std::uint64_t> residue_members() const;

  bool member(std::uint64_t k) const noexcept;

  bool is_infinite() const noexcept;
  bool is_cofinite() const noexcept;

  // Least m such that every window [k, k+m] meets the set, if any.
  std::optional<std::uint64_t> syndetic_gap() const;
  bool is_syndetic() const { return syndetic_gap().has_value(); }

  // Least m in [1, m_max] with {0, m, 2m, ...} a subset of the set. The
  // default cap is p*(t+1).
  std::optional<std::uint64_t> contains_multiples(std::optional<std::uint64_t> m_max = {}) const;

  EventuallyPeriodicNatSet intersect(const EventuallyPeriodicNatSet& other) const;

  bool operator==(const EventuallyPeriodicNatSet& other) const = default;

 private:
  void canonicalize();

  std::vector<bool> prefix_;
  std::vector<bool> residues_;
};

}  // namespace primal

#endif  // PRIMAL_NATSET_HPP
