#include "primal/functional_map.hpp"

#include <limits>
#include <string>

#include "primal/error.hpp"

namespace primal {

FunctionalMap FunctionalMap::load(std::span<const std::int64_t> raw) {
  if (raw.empty()) throw Error(ErrorCode::EmptyDomain, "map has no points");
  if (raw.size() > std::numeric_limits<Point>::max()) {
    throw Error(ErrorCode::DomainTooLarge, "map has too many points");
  }
  const auto n = static_cast<std::int64_t>(raw.size());
  std::vector<Point> succ;
  succ.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    if (raw[i] < 0 || raw[i] >= n) {
      throw Error(ErrorCode::IndexOutOfRange,
                  "succ[" + std::to_string(i) + "] = " + std::to_string(raw[i]) +
                      " is outside [0, " + std::to_string(n) + ")");
    }
    succ.push_back(static_cast<Point>(raw[i]));
  }
  return FunctionalMap(std::move(succ));
}

FunctionalMap FunctionalMap::load(std::initializer_list<std::int64_t> raw) {
  return load(std::span<const std::int64_t>(raw.begin(), raw.size()));
}

PointSet FunctionalMap::image(const PointSet& a) const {
  PointSet out(size());
  a.for_each([&](Point x) { out.insert(succ_[x]); });
  return out;
}

PointSet FunctionalMap::preimage(const PointSet& a) const {
  PointSet out(size());
  for (Point y = 0; y < size(); ++y) {
    if (a.contains(succ_[y])) out.insert(y);
  }
  return out;
}

bool FunctionalMap::is_surjective() const {
  return image(PointSet::full(size())).is_full();
}

FunctionalMap product_map(const FunctionalMap& f) {
  const std::size_t n = f.size();
  std::vector<std::int64_t> raw(n * n);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) raw[pair_index(n, x, y)] = pair_index(n, f(x), f(y));
  }
  return FunctionalMap::load(raw);
}

FunctionalMap gen_mod_mul(std::uint64_t m, std::uint64_t modulus) {
  if (m < 2 || modulus < 1) {
    throw Error(ErrorCode::MalformedInput, "mod-mul requires m >= 2 and N >= 1");
  }
  std::vector<std::int64_t> raw(modulus);
  for (std::uint64_t i = 0; i < modulus; ++i) {
    raw[i] = static_cast<std::int64_t>(((m % modulus) * i) % modulus);
  }
  return FunctionalMap::load(raw);
}

FunctionalMap gen_tower(std::uint64_t m, std::uint64_t n, std::uint64_t depth) {
  if (m < 1 || n < 2) {
    throw Error(ErrorCode::MalformedInput, "tower requires m >= 1 and n >= 2");
  }
  std::vector<std::int64_t> raw(m * (depth + 1));
  for (std::uint64_t i = 0; i < m; ++i) {
    for (std::uint64_t j = 0; j <= depth; ++j) {
      raw[tower_point(depth, i, j)] = tower_point(depth, (i + 1) % m, j / n);
    }
  }
  return FunctionalMap::load(raw);
}

FunctionalMap gen_random(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw Error(ErrorCode::EmptyDomain, "random map needs n >= 1");
  SplitMix64 rng(seed);
  std::vector<std::int64_t> raw(n);
  for (auto& v : raw) v = static_cast<std::int64_t>(rng.below(n));
  return FunctionalMap::load(raw);
}

}  // namespace primal
