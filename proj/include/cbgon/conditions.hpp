#pragma once

#include "cbgon/schemes.hpp"

#include <cstddef>

namespace cbgon {

/// Rank of the restriction map H0(O(m)) -> H0(O_Z(m)) and its defect.
/// failure_index equals h1(I_Z(m)) since h1(O_{P^n}(m)) vanishes.
struct ConditionsReport {
  long long degree = 0;
  std::size_t subscheme_degree = 0;
  std::size_t rank = 0;
  std::size_t failure_index = 0;
  bool independent = true;
};

ConditionsReport imposes_independent_conditions(const FiniteSubscheme& z, long long m);

/// True iff every degree-m form vanishing on all but one point of Z also
/// vanishes on the remaining one. Throws NonReducedSubscheme for fat points
/// and InvalidArgument for empty Z. The per-point rank checks are split
/// across `workers` threads.
bool cayley_bacharach(const FiniteSubscheme& z, long long m, unsigned workers = 1);

/// Cayley-Bacharach with respect to |K_C| = |O_C(sum a_i - n - 1)| for a
/// complete intersection curve C. Curve sections are represented by ambient
/// forms, which is exact because complete intersections are projectively normal.
bool cb_with_respect_to_canonical(const CompleteIntersection& curve, const FiniteSubscheme& z,
                                  unsigned workers = 1);

}  // namespace cbgon
