#ifndef PRIMAL_FUNCTIONAL_MAP_HPP
#define PRIMAL_FUNCTIONAL_MAP_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "primal/point_set.hpp"

namespace primal {

// A total self-map f on X = {0, ..., n-1}, held as its successor table.
class FunctionalMap {
 public:
  // Validates the table. Throws Error{EmptyDomain} for an empty table and
  // Error{IndexOutOfRange} for any entry outside [0, n).
  static FunctionalMap load(std::span<const std::int64_t> raw);
  static FunctionalMap load(std::initializer_list<std::int64_t> raw);

  std::size_t size() const noexcept { return succ_.size(); }
  Point operator()(Point x) const noexcept { return succ_[x]; }
  std::span<const Point> succ() const noexcept { return succ_; }

  // f(A) and f^{-1}(A).
  PointSet image(const PointSet& a) const;
  PointSet preimage(const PointSet& a) const;

  bool is_surjective() const;
  bool is_bijective() const { return is_surjective(); }

  bool operator==(const FunctionalMap& other) const = default;

 private:
  explicit FunctionalMap(std::vector<Point> succ) : succ_(std::move(succ)) {}

  std::vector<Point> succ_;
};

// f2(x, y) = (f(x), f(y)) on n*n points; the pair (x, y) has index x*n + y.
FunctionalMap product_map(const FunctionalMap& f);

inline Point pair_index(std::size_t n, Point x, Point y) {
  return static_cast<Point>(x * n + y);
}

// i -> m*i mod N on Z_N. Requires m >= 2, N >= 1.
FunctionalMap gen_mod_mul(std::uint64_t m, std::uint64_t modulus);

// (i, j) -> ((i+1) mod m, floor(j/n)) on Z_m x {0..J}, point (i, j) stored
// at index i*(J+1) + j. The set is invariant because floor(j/n) <= j.
// Requires m >= 1, n >= 2.
FunctionalMap gen_tower(std::uint64_t m, std::uint64_t n, std::uint64_t depth);

inline Point tower_point(std::uint64_t depth, std::uint64_t i, std::uint64_t j) {
  return static_cast<Point>(i * (depth + 1) + j);
}

// Each successor drawn independently and uniformly from [0, n) with
// SplitMix64 seeded by `seed`, using rejection sampling to avoid modulo bias.
FunctionalMap gen_random(std::size_t n, std::uint64_t seed);

// SplitMix64 (Steele, Lea, Flood 2014). Fixed constants so generated corpora
// are reproducible across platforms.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() noexcept {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Uniform on [0, bound); bound > 0.
  std::uint64_t below(std::uint64_t bound) noexcept {
    const std::uint64_t threshold = (0 - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

 private:
  std::uint64_t state_;
};

}  // namespace primal

#endif  // PRIMAL_FUNCTIONAL_MAP_HPP
