#include "primal/proximal.hpp"

#include <string>

#include "primal/error.hpp"

namespace primal {

PairRelation PairRelation::diagonal(std::size_t n) {
  PairRelation r(n);
  for (Point x = 0; x < n; ++x) r.insert(x, x);
  return r;
}

PairRelation PairRelation::full(std::size_t n) {
  PairRelation r(n);
  r.bits_ = PointSet::full(n * n);
  return r;
}

PairRelation PairRelation::inverse() const {
  PairRelation r(n_);
  for (const auto& [x, y] : pairs()) r.insert(y, x);
  return r;
}

PairRelation PairRelation::compose(const PairRelation& other) const {
  PairRelation r(n_);
  for (const auto& [x, y] : pairs()) {
    for (Point z = 0; z < n_; ++z) {
      if (other.contains(y, z)) r.insert(x, z);
    }
  }
  return r;
}

PairRelation PairRelation::operator|(const PairRelation& other) const {
  PairRelation r = *this;
  r.bits_ |= other.bits_;
  return r;
}

bool PairRelation::is_reflexive() const {
  for (Point x = 0; x < n_; ++x) {
    if (!contains(x, x)) return false;
  }
  return true;
}

std::vector<std::pair<Point, Point>> PairRelation::pairs() const {
  std::vector<std::pair<Point, Point>> out;
  bits_.for_each([&](Point p) {
    out.emplace_back(static_cast<Point>(p / n_), static_cast<Point>(p % n_));
  });
  return out;
}

PairRelation base_entourage(const PrimalSystem& sys) {
  const std::size_t n = sys.size();
  PairRelation u(n);
  for (Point x = 0; x < n; ++x) {
    sys.V[x].for_each([&](Point y) { u.insert(x, y); });
  }
  return u;
}

PointSet stability_set(const PrimalSystem& sys, Point x, const PairRelation& entourage) {
  const std::size_t n = sys.size();
  PointSet out(n);
  PointSet seen(n * n);
  for (Point y = 0; y < n; ++y) {
    Point a = x, b = y;
    bool inside = true;
    seen = PointSet(n * n);
    while (inside && !seen.contains(pair_index(n, a, b))) {
      seen.insert(pair_index(n, a, b));
      inside = entourage.contains(a, b);
      a = sys.f(a);
      b = sys.f(b);
    }
    if (inside) out.insert(y);
  }
  return out;
}

StabilityCertificate stability_check(const PrimalSystem& sys) {
  const std::size_t n = sys.size();
  const PairRelation u = base_entourage(sys);
  StabilityCertificate cert;
  cert.witnesses.reserve(n);
  for (Point x = 0; x < n; ++x) {
    StabilityWitness w;
    w.x = x;
    w.neighbourhood = sys.V[x];
    w.steps_checked = sys.rho.tail_len[x] + sys.rho.period_of(x);
    PointSet image = sys.V[x];
    Point fx = x;
    for (std::size_t k = 0; k <= w.steps_checked; ++k) {
      if (!image.subset_of(sys.V[fx])) {
        throw Error(ErrorCode::CertificateFailure,
                    "f^" + std::to_string(k) + "(V(" + std::to_string(x) + ")) escapes V(f^k(x))");
      }
      image = sys.f.image(image);
      fx = sys.f(fx);
    }
    w.stable_set_is_neighbourhood = sys.V[x].subset_of(stability_set(sys, x, u));
    if (!w.stable_set_is_neighbourhood) {
      throw Error(ErrorCode::CertificateFailure,
                  "N(" + std::to_string(x) + ", U) is not a neighbourhood");
    }
    cert.witnesses.push_back(std::move(w));
  }
  return cert;
}

bool is_sensitive(const PrimalSystem& sys) {
  const PairRelation u = base_entourage(sys);
  for (Point x = 0; x < sys.size(); ++x) {
    if (sys.V[x].subset_of(stability_set(sys, x, u))) return false;
  }
  return true;
}

ChaosVerdict chaos_verdict(const PrimalSystem& sys) {
  ChaosVerdict v;
  v.sensitive = is_sensitive(sys);
  bool transitive = false;
  for (Point x = 0; x < sys.size() && !transitive; ++x) {
    bool all = true;
    for (Point y = 0; y < sys.size() && all; ++y) {
      all = hit_set_from_point(sys, x, sys.V[y]).is_infinite();
    }
    transitive = all;
  }
  const bool dense_periodic = closure(sys.f, sys.rho.periodic_points()).is_full();
  v.ay_chaotic = transitive && v.sensitive;
  v.d_chaotic = v.ay_chaotic && dense_periodic;
  return v;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> triangle_witness(const PrimalSystem& sys,
                                                                          Point x, Point y) {
  const auto& rho = sys.rho;
  if (rho.component_id[x] != rho.component_id[y]) return std::nullopt;
  const std::uint64_t m = rho.tail_len[x];
  const Point target = rho.cycle_entry[x];
  const std::uint64_t p = rho.period_of(y);
  const std::uint64_t lag =
      (rho.cycle_pos[target] + p - rho.cycle_pos[rho.cycle_entry[y]]) % p;
  std::uint64_t n = rho.tail_len[y] + lag;
  if (n < m) n += ((m - n + p - 1) / p) * p;
  return std::make_pair(m, n);
}

PairRelation triangle_relation(const PrimalSystem& sys) {
  const std::size_t n = sys.size();
  PairRelation r(n);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      if (triangle_witness(sys, x, y)) r.insert(x, y);
    }
  }
  return r;
}

PairRelation orbital_relation(const PrimalSystem& sys) {
  const std::size_t n = sys.size();
  PairRelation r(n);
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      if (sys.rho.component_id[x] == sys.rho.component_id[y]) r.insert(x, y);
    }
  }
  return r;
}

ProximalRelations prox_asym_syprox(const PrimalSystem& sys) {
  const std::size_t n = sys.size();
  const FunctionalMap f2 = product_map(sys.f);
  const PointSet target = base_entourage(sys).as_point_set();
  ProximalRelations out{PairRelation(n), PairRelation(n), PairRelation(n)};
  for (Point x = 0; x < n; ++x) {
    for (Point y = 0; y < n; ++y) {
      const auto d = hit_set(f2, PointSet::singleton(n * n, pair_index(n, x, y)), target);
      if (d.is_infinite()) out.prox.insert(x, y);
      if (d.is_cofinite()) out.asym.insert(x, y);
      if (d.is_syndetic()) out.syprox.insert(x, y);
    }
  }
  return out;
}

}  // namespace primal
