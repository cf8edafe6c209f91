#include "primal/topology.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "primal/error.hpp"

namespace primal {

MinimalOpenFamily minimal_opens(const FunctionalMap& f) { return minimal_opens(f, rho_decompose(f)); }

MinimalOpenFamily minimal_opens(const FunctionalMap& f, const RhoDecomposition& rho) {
  const std::size_t n = f.size();
  MinimalOpenFamily fam;
  fam.V.assign(n, PointSet(n));

  // A periodic point is reached by its whole component.
  std::vector<PointSet> component_sets(rho.component_count, PointSet(n));
  for (Point x = 0; x < n; ++x) component_sets[rho.component_id[x]].insert(x);

  // Tail points: V(x) = {x} plus V(y) over preimages y, which sit strictly
  // further from the cycle. Resolve them from the outside in.
  std::vector<Point> order(n);
  std::iota(order.begin(), order.end(), Point{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Point a, Point b) { return rho.tail_len[a] > rho.tail_len[b]; });
  for (Point x : order) {
    if (rho.is_periodic(x)) {
      fam.V[x] = component_sets[rho.component_id[x]];
      continue;
    }
    fam.V[x].insert(x);
    const Point y = f(x);
    if (!rho.is_periodic(y)) fam.V[y] |= fam.V[x];
  }
  return fam;
}

bool is_open(const FunctionalMap& f, const PointSet& a) {
  return f.preimage(a).subset_of(a);
}

bool is_closed(const FunctionalMap& f, const PointSet& a) {
  return f.image(a).subset_of(a);
}

PointSet closure(const FunctionalMap& f, const PointSet& a) {
  PointSet acc = a;
  std::vector<Point> frontier = a.members();
  while (!frontier.empty()) {
    const Point y = f(frontier.back());
    frontier.pop_back();
    if (!acc.contains(y)) {
      acc.insert(y);
      frontier.push_back(y);
    }
  }
  return acc;
}

PointSet mask_to_set(std::size_t n, std::uint64_t mask) {
  PointSet s(n);
  for (Point x = 0; x < n; ++x) {
    if ((mask >> x) & 1u) s.insert(x);
  }
  return s;
}

std::uint64_t set_to_mask(const PointSet& s) {
  std::uint64_t mask = 0;
  s.for_each([&](Point x) { mask |= std::uint64_t{1} << x; });
  return mask;
}

PointSet OpenSetCatalog::at(std::size_t i) const { return mask_to_set(n, masks[i]); }

bool OpenSetCatalog::contains(const PointSet& a) const {
  const auto m = static_cast<std::uint32_t>(set_to_mask(a));
  return std::binary_search(masks.begin(), masks.end(), m);
}

OpenSetCatalog enumerate_opens(const FunctionalMap& f, std::size_t n_cap) {
  const std::size_t n = f.size();
  if (n_cap > kMaxOpenCap) {
    throw Error(ErrorCode::DomainTooLarge,
                "open-set cap " + std::to_string(n_cap) + " exceeds " + std::to_string(kMaxOpenCap));
  }
  if (n > n_cap) {
    throw Error(ErrorCode::DomainTooLarge, "open-set enumeration needs n <= " +
                                               std::to_string(n_cap) + ", got " + std::to_string(n));
  }
  // A is open iff it contains the preimage of each of its points.
  std::vector<std::uint32_t> pre(n, 0);
  for (Point y = 0; y < n; ++y) pre[f(y)] |= std::uint32_t{1} << y;

  OpenSetCatalog cat;
  cat.n = n;
  cat.n_cap = n_cap;
  const std::uint32_t limit = n == 32 ? 0 : (std::uint32_t{1} << n);
  for (std::uint32_t mask = 0; mask < limit; ++mask) {
    bool open = true;
    for (std::uint32_t bits = mask; bits && open; bits &= bits - 1) {
      open = (pre[__builtin_ctz(bits)] & ~mask) == 0;
    }
    if (open) cat.masks.push_back(mask);
  }
  return cat;
}

}  // namespace primal
