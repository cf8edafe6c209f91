#ifndef PRIMAL_RHO_HPP
#define PRIMAL_RHO_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "primal/functional_map.hpp"

namespace primal {

// Tail/cycle skeleton of a functional graph.
//
// Every forward orbit of a finite self-map runs down a (possibly empty) tail
// and then loops on exactly one cycle. Points x and y are orbitally related
// (f^m(x) = f^n(y) for some m, n) exactly when they share a component, and
// each component carries exactly one cycle.
struct RhoDecomposition {
  // Least t >= 0 with f^t(x) periodic.
  std::vector<std::size_t> tail_len;
  // f^{tail_len[x]}(x).
  std::vector<Point> cycle_entry;
  // Cycle reached by x. Cycles are numbered by their least point.
  std::vector<std::size_t> cycle_id;
  // Period of each cycle, indexed by cycle id.
  std::vector<std::size_t> cycle_len;
  // Members of each cycle in orbit order, starting at the least point.
  std::vector<std::vector<Point>> cycles;
  // Position of a periodic point inside cycles[cycle_id[x]]; unused otherwise.
  std::vector<std::size_t> cycle_pos;
  // Class of x under orbital relation, numbered by least member.
  std::vector<std::size_t> component_id;
  std::size_t component_count = 0;

  bool is_periodic(Point x) const { return tail_len[x] == 0; }
  std::size_t period_of(Point x) const { return cycle_len[cycle_id[x]]; }
  PointSet periodic_points() const;
  PointSet cycle_set(std::size_t c) const;
  PointSet component_set(std::size_t c) const;
};

// Linear-time decomposition. Components come from a union-find over the
// edges (x, f(x)).
RhoDecomposition rho_decompose(const FunctionalMap& f);

// f^k(x) by direct stepping: O(k).
Point iterate(const FunctionalMap& f, Point x, std::uint64_t k);

// f^k(x) in O(min(k, n)): walk the tail, then index into the cycle.
Point iterate(const FunctionalMap& f, const RhoDecomposition& rho, Point x, std::uint64_t k);

// Disjoint-set forest with path halving and union by size.
class UnionFind {
 public:
  explicit UnionFind(std::size_t n);
  std::size_t find(std::size_t x);
  bool unite(std::size_t a, std::size_t b);

 private:
  std::vector<std::size_t> parent_;
  std::vector<std::size_t> size_;
};

}  // namespace primal

#endif  // PRIMAL_RHO_HPP
