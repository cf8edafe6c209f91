#ifndef PRIMAL_ANALYSIS_HPP
#define PRIMAL_ANALYSIS_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "primal/dynamics.hpp"
#include "primal/global.hpp"
#include "primal/proximal.hpp"

namespace primal {

struct AnalysisBudget {
  // Largest map analyze() accepts; pair relations live on n*n points.
  std::size_t max_points = 64;
  // Open sets are counted only up to this size.
  std::size_t open_cap = kDefaultOpenCap;

  // Reads PRIMAL_MAX_POINTS and PRIMAL_OPEN_CAP when set.
  static AnalysisBudget from_env();
};

// Everything the report needs about one map.
struct Analysis {
  PrimalSystem sys;
  std::optional<std::size_t> open_count;
  PointClassification points;
  SystemReport system;
  PairRelation entourage;
  PairRelation triangle;
  ProximalRelations relations;
  StabilityCertificate stability;
  ChaosVerdict chaos;
};

// Throws Error{BudgetExceeded} when n > budget.max_points.
Analysis analyze(FunctionalMap f, const AnalysisBudget& budget = {});

struct TheoremCheck {
  std::string name;
  bool passed = false;
  std::string detail;  // first counterexample when failed
};

// Cross-checks each characterization against its definitional counterpart
// on this instance.
std::vector<TheoremCheck> run_theorem_checks(const Analysis& a);

bool all_passed(const std::vector<TheoremCheck>& checks);

}  // namespace primal

#endif  // PRIMAL_ANALYSIS_HPP
