#include "primal/point_set.hpp"

#include <algorithm>
#include <bit>

#include "primal/error.hpp"

namespace primal {

const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::EmptyDomain: return "EmptyDomain";
    case ErrorCode::DomainTooLarge: return "DomainTooLarge";
    case ErrorCode::LimitExceeded: return "LimitExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::CertificateFailure: return "CertificateFailure";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

PointSet::PointSet(std::size_t universe)
    : universe_(universe), words_((universe + 63) / 64, 0) {}

PointSet::PointSet(std::size_t universe, std::initializer_list<Point> points)
    : PointSet(universe) {
  for (Point x : points) insert(x);
}

PointSet PointSet::full(std::size_t universe) {
  PointSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
  if (universe % 64 != 0) {
    s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
  }
  return s;
}

PointSet PointSet::singleton(std::size_t universe, Point x) {
  PointSet s(universe);
  s.insert(x);
  return s;
}

PointSet PointSet::from_points(std::size_t universe, const std::vector<Point>& points) {
  PointSet s(universe);
  for (Point x : points) s.insert(x);
  return s;
}

std::size_t PointSet::count() const noexcept {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool PointSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](auto w) { return w == 0; });
}

bool PointSet::subset_of(const PointSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & ~other.words_[i]) return false;
  }
  return true;
}

bool PointSet::intersects(const PointSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] & other.words_[i]) return true;
  }
  return false;
}

PointSet& PointSet::operator|=(const PointSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

PointSet& PointSet::operator&=(const PointSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

PointSet PointSet::operator|(const PointSet& other) const {
  PointSet r = *this;
  r |= other;
  return r;
}

PointSet PointSet::operator&(const PointSet& other) const {
  PointSet r = *this;
  r &= other;
  return r;
}

PointSet PointSet::complement() const {
  PointSet r = full(universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) r.words_[i] &= ~words_[i];
  return r;
}

std::vector<Point> PointSet::members() const {
  std::vector<Point> out;
  out.reserve(count());
  for_each([&](Point x) { out.push_back(x); });
  return out;
}

std::size_t PointSet::hash() const noexcept {
  // FNV-1a over the words.
  std::uint64_t h = 1469598103934665603ull ^ universe_;
  for (auto w : words_) {
    h ^= w;
    h *= 1099511628211ull;
    h ^= h >> 29;
  }
  return static_cast<std::size_t>(h);
}

bool PointSet::lex_less(const PointSet& other) const {
  const auto a = members();
  const auto b = other.members();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

}  // namespace primal
