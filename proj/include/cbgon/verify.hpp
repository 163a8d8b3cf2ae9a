#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cbgon {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  double seconds = 0;
  double limit_seconds = 0;  // 0: no runtime limit
  std::string detail;
};

struct SuiteOptions {
  std::uint64_t seed = 0;  // offsets every seeded instance in the battery
  unsigned workers = 1;
};

/// Runs the eight acceptance criteria in order. A criterion passes only if
/// its check holds and it finished within its runtime limit.
std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options = {});

/// Individual criteria, exposed for the test binaries.
CriterionResult criterion_collinear_plus_one(const SuiteOptions& options);
CriterionResult criterion_plane_quintic_projection(const SuiteOptions& options);
CriterionResult criterion_formula_sweep(const SuiteOptions& options);
CriterionResult criterion_dimension_audit(const SuiteOptions& options);
CriterionResult criterion_cbconj_grids(const SuiteOptions& options);
CriterionResult criterion_planted_secant(const SuiteOptions& options);
CriterionResult criterion_fiber_spans(const SuiteOptions& options);
CriterionResult criterion_property_suites(const SuiteOptions& options);

}  // namespace cbgon
