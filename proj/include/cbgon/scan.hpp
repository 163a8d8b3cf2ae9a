#pragma once

#include "cbgon/schemes.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace cbgon {

struct ScanOptions {
  std::size_t max_points = 20;
  std::uint64_t node_budget = 10'000'000;  // independent subsets visited
  unsigned workers = 1;
};

struct ScanResult {
  std::vector<unsigned> degrees;
  unsigned e = 0;
  long long k = 0;   // d_3 + ... + d_n - n - 1
  long long m = 0;   // k + e + 2
  unsigned long long bound = 0;  // (e+1) * d_3 * ... * d_n
  /// Smallest size of a reduced subset failing to impose independent
  /// conditions in degree m, with the lexicographically first witness.
  std::optional<std::size_t> min_failing_degree;
  std::vector<std::size_t> witness;
  std::uint64_t subsets_visited = 0;
  bool pass = true;
};

/// Searches reduced subsets of the points of a zero-dimensional complete
/// intersection of type `degrees` for the smallest one failing to impose
/// independent conditions on forms of degree m. Failure persists under
/// supersets, so only independent subsets are extended and every branch is
/// cut at the best size found so far. The search is split into one task per
/// smallest index; results do not depend on the worker count.
///
/// Throws RangeViolation unless 0 <= e <= d_2 - 1, BudgetExceeded when Z has
/// more than max_points points or the node budget runs out.
ScanResult cbconj_scan(const FiniteSubscheme& z, const std::vector<unsigned>& degrees, unsigned e,
                       const ScanOptions& options = {});

/// k and m for the given type and e.
long long cbconj_twist(const std::vector<unsigned>& degrees);

}  // namespace cbgon
