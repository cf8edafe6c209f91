#ifndef PRIMAL_GLOBAL_HPP
#define PRIMAL_GLOBAL_HPP

#include <string_view>
#include <vector>

#include "primal/dynamics.hpp"

namespace primal {

// On a finite space an ergodic primal system is a single periodic orbit. The
// other two shapes (the shift on Z, and a Z^- tail feeding a cycle) need an
// infinite domain and are never produced here.
enum class ErgodicKind { NotErgodic, SingleCycle };

std::string_view to_string(ErgodicKind kind);

struct SystemReport {
  PointSet omega_set;
  PointSet recurrent_set;
  std::vector<PointSet> minimal_sets;
  bool transitive = false;
  PointSet transitive_points;
  bool top_ergodic = false;
  bool weakly_mixing = false;
  bool strongly_mixing = false;
  ErgodicKind ergodic_kind = ErgodicKind::NotErgodic;
};

// Intersection of the image chain X, f(X), f^2(X), ...; it stabilises within
// n steps.
PointSet non_wandering_set(const FunctionalMap& f);

// Periodic points.
PointSet recurrent_set(const PrimalSystem& sys);

// The cycles, ordered by least point.
std::vector<PointSet> minimal_sets(const PrimalSystem& sys);

// One component whose cycle covers X.
bool is_transitive(const PrimalSystem& sys);
// Some x with D(x, V(y)) infinite for every y.
bool is_transitive_by_definition(const PrimalSystem& sys);

// f(X) = X and the minimal opens form a chain.
bool is_top_ergodic(const PrimalSystem& sys);
// D(V(x), V(y)) infinite for all x, y.
bool is_top_ergodic_by_definition(const PrimalSystem& sys);

// Weak mixing is ergodicity of f x f in the product topology, whose minimal
// opens are V(x1) x V(x2). Hits of f x f from one rectangle into another are
// D(V(x1), V(y1)) intersected with D(V(x2), V(y2)), so every pair of these
// hit sets must meet infinitely often.
bool is_weakly_mixing(const PrimalSystem& sys);

// N \ D(V(x), V(y)) finite for all x, y.
bool is_strongly_mixing(const PrimalSystem& sys);

ErgodicKind ergodic_kind(const PrimalSystem& sys);

SystemReport analyze_system(const PrimalSystem& sys, const PointClassification& points);

}  // namespace primal

#endif  // PRIMAL_GLOBAL_HPP
