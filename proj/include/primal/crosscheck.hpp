#ifndef PRIMAL_CROSSCHECK_HPP
#define PRIMAL_CROSSCHECK_HPP

#include <functional>
#include <string>
#include <vector>

#include "primal/analysis.hpp"
#include "primal/oracle.hpp"

namespace primal {

// Every verdict on which the characterization pipeline and the oracle
// disagree, one line each. Mixing verdicts are compared only when the oracle
// produced them.
std::vector<std::string> compare_with_oracle(const Analysis& a, const oracle::OracleVerdicts& o);

struct InstanceResult {
  std::vector<std::string> disagreements;
  std::vector<TheoremCheck> theorem_failures;

  bool ok() const { return disagreements.empty() && theorem_failures.empty(); }
};

// Runs both pipelines plus the theorem checks on one map.
InstanceResult check_instance(const FunctionalMap& f, const oracle::OracleBudget& budget = {});

// Calls fn on each of the n^n self-maps of {0..n-1} in lexicographic order.
void for_each_map(std::size_t n, const std::function<void(const FunctionalMap&)>& fn);

}  // namespace primal

#endif  // PRIMAL_CROSSCHECK_HPP
