#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "strata/atlas.hpp"

namespace strata {

struct Criterion {
  int number = 0;
  std::string_view name;
  std::string_view summary;
  std::optional<double> budget_ms;
};

struct CriterionResult {
  int number = 0;
  std::string name;
  bool passed = false;
  double elapsed_ms = 0;
  std::optional<double> budget_ms;
  std::string detail;  ///< first failure, or a short tally on success
};

/// The acceptance checks, in numbered order.
const std::vector<Criterion>& acceptance_criteria();

/// Runs one check against `atlas`. A check that throws counts as failed;
/// so does one that exceeds its runtime budget.
CriterionResult run_criterion(const Criterion& c, const Atlas& atlas);

/// "all", a criterion name, or its number. Throws DomainError for anything else.
std::vector<CriterionResult> run_suite(std::string_view suite, const Atlas& atlas);

}  // namespace strata
