#include "primal/natset.hpp"

#include <algorithm>
#include <numeric>

#include "primal/error.hpp"

namespace primal {

EventuallyPeriodicNatSet EventuallyPeriodicNatSet::full() {
  EventuallyPeriodicNatSet s;
  s.residues_ = {true};
  return s;
}

EventuallyPeriodicNatSet EventuallyPeriodicNatSet::arithmetic(std::uint64_t offset,
                                                              std::uint64_t step) {
  if (step == 0) throw Error(ErrorCode::MalformedInput, "arithmetic progression needs step >= 1");
  EventuallyPeriodicNatSet s;
  s.prefix_.assign(offset, false);
  s.residues_.assign(step, false);
  s.residues_[offset % step] = true;
  s.canonicalize();
  return s;
}

EventuallyPeriodicNatSet EventuallyPeriodicNatSet::finite(
    const std::vector<std::uint64_t>& members) {
  EventuallyPeriodicNatSet s;
  if (members.empty()) return s;
  s.prefix_.assign(*std::max_element(members.begin(), members.end()) + 1, false);
  for (auto k : members) s.prefix_[k] = true;
  s.canonicalize();
  return s;
}

EventuallyPeriodicNatSet EventuallyPeriodicNatSet::from_rule(std::size_t threshold,
                                                             std::vector<bool> prefix,
                                                             std::size_t period,
                                                             std::vector<bool> residues) {
  if (prefix.size() != threshold || period == 0 || residues.size() != period) {
    throw Error(ErrorCode::MalformedInput, "inconsistent eventually periodic set fields");
  }
  EventuallyPeriodicNatSet s;
  s.prefix_ = std::move(prefix);
  s.residues_ = std::move(residues);
  s.canonicalize();
  return s;
}

EventuallyPeriodicNatSet EventuallyPeriodicNatSet::from_lasso(const std::vector<bool>& hits,
                                                              std::size_t t, std::size_t p) {
  if (p == 0 || hits.size() != t + p) {
    throw Error(ErrorCode::MalformedInput, "lasso length must equal t + p with p >= 1");
  }
  EventuallyPeriodicNatSet s;
  s.prefix_.assign(hits.begin(), hits.begin() + static_cast<std::ptrdiff_t>(t));
  s.residues_.assign(p, false);
  for (std::size_t k = t; k < t + p; ++k) s.residues_[k % p] = hits[k];
  s.canonicalize();
  return s;
}

void EventuallyPeriodicNatSet::canonicalize() {
  const std::size_t p = residues_.size();
  for (std::size_t d = 1; d < p; ++d) {
    if (p % d != 0) continue;
    bool rotates = true;
    for (std::size_t r = 0; r < p && rotates; ++r) rotates = residues_[r] == residues_[(r + d) % p];
    if (rotates) {
      residues_.resize(d);
      break;
    }
  }
  const std::size_t q = residues_.size();
  while (!prefix_.empty() && prefix_.back() == residues_[(prefix_.size() - 1) % q]) {
    prefix_.pop_back();
  }
}

std::vector<std::uint64_t> EventuallyPeriodicNatSet::prefix_members() const {
  std::vector<std::uint64_t> out;
  for (std::size_t k = 0; k < prefix_.size(); ++k) {
    if (prefix_[k]) out.push_back(k);
  }
  return out;
}

std::vector<std::uint64_t> EventuallyPeriodicNatSet::residue_members() const {
  std::vector<std::uint64_t> out;
  for (std::size_t r = 0; r < residues_.size(); ++r) {
    if (residues_[r]) out.push_back(r);
  }
  return out;
}

bool EventuallyPeriodicNatSet::member(std::uint64_t k) const noexcept {
  if (k < prefix_.size()) return prefix_[k];
  return residues_[k % residues_.size()];
}

bool EventuallyPeriodicNatSet::is_infinite() const noexcept {
  return std::find(residues_.begin(), residues_.end(), true) != residues_.end();
}

bool EventuallyPeriodicNatSet::is_cofinite() const noexcept {
  return std::find(residues_.begin(), residues_.end(), false) == residues_.end();
}

std::optional<std::uint64_t> EventuallyPeriodicNatSet::syndetic_gap() const {
  if (!is_infinite()) return std::nullopt;
  const std::uint64_t t = threshold();
  const std::uint64_t p = period();
  // dist(k) is p-periodic from t on, so windows starting below t + p decide.
  std::uint64_t next_member = t + p;
  while (!member(next_member)) ++next_member;
  std::uint64_t worst = 0;
  for (std::uint64_t k = t + p; k-- > 0;) {
    if (member(k)) next_member = k;
    worst = std::max(worst, next_member - k);
  }
  return worst;
}

std::optional<std::uint64_t> EventuallyPeriodicNatSet::contains_multiples(
    std::optional<std::uint64_t> m_max) const {
  const std::uint64_t t = threshold();
  const std::uint64_t p = period();
  const std::uint64_t cap = m_max.value_or(p * (t + 1));
  for (std::uint64_t m = 1; m <= cap; ++m) {
    bool ok = true;
    for (std::uint64_t k = 0; k < t && ok; k += m) ok = prefix_[k];
    // Multiples of m past t sweep exactly the multiples of gcd(m, p) mod p.
    const std::uint64_t g = std::gcd(m, p);
    for (std::uint64_t r = 0; r < p && ok; r += g) ok = residues_[r];
    if (ok) return m;
  }
  return std::nullopt;
}

EventuallyPeriodicNatSet EventuallyPeriodicNatSet::intersect(
    const EventuallyPeriodicNatSet& other) const {
  const std::size_t t = std::max(threshold(), other.threshold());
  const std::size_t p = std::lcm(period(), other.period());
  std::vector<bool> hits(t + p);
  for (std::size_t k = 0; k < t + p; ++k) hits[k] = member(k) && other.member(k);
  return from_lasso(hits, t, p);
}

}  // namespace primal
