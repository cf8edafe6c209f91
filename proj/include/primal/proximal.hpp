#ifndef PRIMAL_PROXIMAL_HPP
#define PRIMAL_PROXIMAL_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "primal/dynamics.hpp"

namespace primal {

// A relation on X, stored as a subset of X x X with (x, y) at x*n + y. That
// layout is the point indexing of product_map(), so a relation doubles as a
// target set for the pair dynamics.
class PairRelation {
 public:
  PairRelation() = default;
  explicit PairRelation(std::size_t n) : n_(n), bits_(n * n) {}

  static PairRelation diagonal(std::size_t n);
  static PairRelation full(std::size_t n);

  std::size_t size() const noexcept { return n_; }
  bool contains(Point x, Point y) const { return bits_.contains(pair_index(n_, x, y)); }
  void insert(Point x, Point y) { bits_.insert(pair_index(n_, x, y)); }
  const PointSet& as_point_set() const noexcept { return bits_; }
  std::size_t count() const { return bits_.count(); }

  PairRelation inverse() const;
  PairRelation compose(const PairRelation& other) const;  // {(x,z): x R y, y S z}
  PairRelation operator|(const PairRelation& other) const;
  bool subset_of(const PairRelation& other) const { return bits_.subset_of(other.bits_); }
  bool is_reflexive() const;
  bool is_transitive() const { return compose(*this).subset_of(*this); }

  // Sorted (x, y) list.
  std::vector<std::pair<Point, Point>> pairs() const;

  bool operator==(const PairRelation& other) const = default;

 private:
  std::size_t n_ = 0;
  PointSet bits_;
};

// U = {(x, y) : y in V(x)}, the base entourage of the finest quasi-uniformity
// inducing the topology. Every entourage of that quasi-uniformity contains U.
PairRelation base_entourage(const PrimalSystem& sys);

// N(x, U) = {y : (f^k(x), f^k(y)) in U for all k}, from the definition: the
// pair orbit is followed until it repeats.
PointSet stability_set(const PrimalSystem& sys, Point x, const PairRelation& entourage);

struct StabilityWitness {
  Point x = 0;
  PointSet neighbourhood;        // V(x)
  std::size_t steps_checked = 0; // f^k(V(x)) inside V(f^k(x)) for k <= this
  bool stable_set_is_neighbourhood = false;  // V(x) inside N(x, U)
};

struct StabilityCertificate {
  std::vector<StabilityWitness> witnesses;
};

// Lyapunov stability at every point. For each x, checks the inclusion chain
// f^k(V(x)) inside V(f^k(x)) through k = tail + period (beyond which the
// iterates repeat) and that V(x) lies inside N(x, U). Continuity makes both
// hold always; Error{CertificateFailure} means a bug.
StabilityCertificate stability_check(const PrimalSystem& sys);

struct ChaosVerdict {
  bool sensitive = false;
  bool ay_chaotic = false;  // transitive and sensitive
  bool d_chaotic = false;   // additionally, periodic points dense
};

// Sensitivity asks for one entourage U with N(x, U) never a neighbourhood.
// N(x, .) grows with U, so the base entourage is the only candidate that
// needs testing.
bool is_sensitive(const PrimalSystem& sys);
ChaosVerdict chaos_verdict(const PrimalSystem& sys);

// x <| y iff f^m(x) = f^n(y) for some m <= n.
//
// x and y must share a component. Then f^m(x) with m = tail(x) sits on the
// cycle, y first lands on that point at some time n0, and again at
// n0 + j*period for every j, so n can be pumped past m. The returned witness
// is the (m, n) built that way; nullopt when the components differ.
std::optional<std::pair<std::uint64_t, std::uint64_t>> triangle_witness(const PrimalSystem& sys,
                                                                          Point x, Point y);
PairRelation triangle_relation(const PrimalSystem& sys);

// x ~ y: orbitally related.
PairRelation orbital_relation(const PrimalSystem& sys);

struct ProximalRelations {
  PairRelation prox;    // D_{f2}((x,y), U) infinite
  PairRelation asym;    // ... cofinite
  PairRelation syprox;  // ... syndetic
};

// Reading: D_{f2}((x, y), U) collects the times k at which the pair orbit
// (f^k(x), f^k(y)) lies in the base entourage U, seen as a subset of X x X.
// Larger entourages only add times, so U decides all three relations.
ProximalRelations prox_asym_syprox(const PrimalSystem& sys);

}  // namespace primal

#endif  // PRIMAL_PROXIMAL_HPP
