#include "primal/dynamics.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <unordered_map>

#include "primal/error.hpp"

namespace primal {

EventuallyPeriodicNatSet hit_set(const FunctionalMap& f, const PointSet& a, const PointSet& b) {
  if (a.empty() || b.empty()) return EventuallyPeriodicNatSet::empty();
  std::unordered_map<PointSet, std::size_t, PointSetHash> seen;
  std::vector<bool> hits;
  PointSet state = a;
  for (std::size_t k = 0;; ++k) {
    const auto [it, fresh] = seen.emplace(state, k);
    if (!fresh) {
      const std::size_t t = it->second;
      return EventuallyPeriodicNatSet::from_lasso(hits, t, k - t);
    }
    hits.push_back(state.intersects(b));
    state = f.image(state);
  }
}

EventuallyPeriodicNatSet hit_set_from_point(const PrimalSystem& sys, Point x, const PointSet& b) {
  if (b.empty()) return EventuallyPeriodicNatSet::empty();
  const std::size_t t = sys.rho.tail_len[x];
  const std::size_t p = sys.rho.period_of(x);
  std::vector<bool> hits(t + p);
  Point y = x;
  for (std::size_t k = 0; k < t + p; ++k) {
    hits[k] = b.contains(y);
    y = sys.f(y);
  }
  return EventuallyPeriodicNatSet::from_lasso(hits, t, p);
}

namespace {

std::vector<std::vector<Point>> preimage_lists(const FunctionalMap& f) {
  std::vector<std::vector<Point>> pre(f.size());
  for (Point y = 0; y < f.size(); ++y) pre[f(y)].push_back(y);
  return pre;
}

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b ? std::numeric_limits<std::uint64_t>::max()
                                                           : a + b;
}

}  // namespace

std::uint64_t count_preorbits(const PrimalSystem& sys, Point x, std::size_t max_length) {
  if (max_length == 0) return 0;
  const auto pre = preimage_lists(sys.f);
  const std::size_t n = sys.size();
  // paths[y] = emitted paths continuing from y when y is the d-th point.
  std::vector<std::uint64_t> paths(n, 1), next(n);
  for (std::size_t d = max_length - 1; d >= 1; --d) {
    for (Point y = 0; y < n; ++y) {
      if (pre[y].empty()) {
        next[y] = 1;
        continue;
      }
      std::uint64_t c = 0;
      for (Point z : pre[y]) c = saturating_add(c, paths[z]);
      next[y] = c;
    }
    paths.swap(next);
  }
  return paths[x];
}

bool has_infinite_preorbit(const PrimalSystem& sys, Point x) {
  bool found = false;
  sys.V[x].for_each([&](Point y) { found = found || sys.rho.is_periodic(y); });
  return found;
}

std::vector<Preorbit> preorbits(const PrimalSystem& sys, Point x, PreorbitLimits limits) {
  if (limits.max_length == 0) {
    throw Error(ErrorCode::MalformedInput, "preorbit length limit must be positive");
  }
  const std::uint64_t total = count_preorbits(sys, x, limits.max_length);
  if (total > limits.max_count) {
    throw Error(ErrorCode::LimitExceeded,
                "point " + std::to_string(x) + " has " + std::to_string(total) +
                    " preorbits within length " + std::to_string(limits.max_length),
                total);
  }
  const auto pre = preimage_lists(sys.f);
  std::vector<bool> infinite(sys.size());
  for (Point y = 0; y < sys.size(); ++y) infinite[y] = has_infinite_preorbit(sys, y);

  std::vector<Preorbit> out;
  std::vector<Point> path{x};
  // Index of the next preimage to try at each depth.
  std::vector<std::size_t> cursor{0};
  while (!path.empty()) {
    const Point tip = path.back();
    const bool leaf = pre[tip].empty();
    if (leaf || path.size() == limits.max_length) {
      Preorbit po;
      po.points = path;
      po.extends_to_infinite = infinite[tip];
      po.complete = po.extends_to_infinite || leaf;
      out.push_back(std::move(po));
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    std::size_t& c = cursor.back();
    if (c == pre[tip].size()) {
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    path.push_back(pre[tip][c++]);
    cursor.push_back(0);
  }
  return out;
}

PointSet omega_limit(const PrimalSystem& sys, Point x) {
  const std::size_t steps = sys.rho.tail_len[x] + sys.rho.period_of(x);
  PointSet acc = PointSet::full(sys.size());
  Point y = x;
  for (std::size_t k = 0; k <= steps; ++k) {
    acc &= closure(sys.f, PointSet::singleton(sys.size(), y));
    y = sys.f(y);
  }
  return acc;
}

PointClassification classify_points(const PrimalSystem& sys) {
  const std::size_t n = sys.size();
  PointClassification out;
  out.flags.resize(n);
  out.omega.reserve(n);
  out.return_times.reserve(n);
  for (Point x = 0; x < n; ++x) {
    PointFlags& fl = out.flags[x];
    fl.periodic = sys.rho.is_periodic(x);
    for (std::size_t k = 0; k <= n && !fl.eventually_periodic; ++k) {
      fl.eventually_periodic = sys.rho.is_periodic(iterate(sys.f, sys.rho, x, k));
    }

    auto returns = hit_set_from_point(sys, x, sys.V[x]);
    fl.recurrent = returns.is_infinite();
    fl.almost_periodic = returns.is_syndetic();
    // 0 lies in every D(x, U) with x in U, so whether mN counts 0 is moot.
    fl.quasi_periodic = returns.contains_multiples().has_value();
    if (fl.quasi_periodic != fl.periodic) {
      throw Error(ErrorCode::CertificateFailure,
                  "quasi-periodicity search disagrees with periodicity at point " + std::to_string(x));
    }

    fl.transitive_point = true;
    for (Point y = 0; y < n && fl.transitive_point; ++y) {
      fl.transitive_point = hit_set_from_point(sys, x, sys.V[y]).is_infinite();
    }

    fl.non_wandering = hit_set(sys.f, sys.V[x], sys.V[x]).is_infinite();
    out.omega.push_back(omega_limit(sys, x));
    out.return_times.push_back(std::move(returns));
  }
  return out;
}

}  // namespace primal
