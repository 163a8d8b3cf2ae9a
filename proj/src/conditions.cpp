#include "cbgon/conditions.hpp"

#include "cbgon/error.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace cbgon {

ConditionsReport imposes_independent_conditions(const FiniteSubscheme& z, long long m) {
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "degree must be nonnegative");
  ConditionsReport r;
  r.degree = m;
  r.subscheme_degree = z.degree();
  r.rank = rank(evaluation_rows(z, m));
  r.failure_index = r.subscheme_degree - r.rank;
  r.independent = r.failure_index == 0;
  return r;
}

bool cayley_bacharach(const FiniteSubscheme& z, long long m, unsigned workers) {
  if (!z.is_reduced()) {
    throw Error(ErrorCode::NonReducedSubscheme,
                "the Cayley-Bacharach condition is defined for sets of distinct points only");
  }
  if (z.empty()) throw Error(ErrorCode::InvalidArgument, "Cayley-Bacharach needs at least one point");
  if (m < 0) throw Error(ErrorCode::InvalidArgument, "degree must be nonnegative");
  const Matrix full = evaluation_rows(z, m);
  const std::size_t full_rank = rank(full);

  // Z \ {z_i} has the same rank as Z iff row i lies in the span of the others.
  auto check = [&](std::size_t i) {
    std::vector<Vector> rest;
    for (std::size_t r = 0; r < full.rows(); ++r) {
      if (r != i) rest.emplace_back(full.row(r).begin(), full.row(r).end());
    }
    return rank(Matrix::from_rows(z.field(), full.cols(), rest)) == full_rank;
  };

  const std::size_t count = z.size();
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(count)));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) {
      if (!check(i)) return false;
    }
    return true;
  }
  std::atomic<bool> holds{true};
  std::vector<std::thread> threads;
  for (unsigned w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      for (std::size_t i = w; i < count && holds.load(); i += workers) {
        if (!check(i)) holds = false;
      }
    });
  }
  for (auto& t : threads) t.join();
  return holds.load();
}

bool cb_with_respect_to_canonical(const CompleteIntersection& curve, const FiniteSubscheme& z, unsigned workers) {
  if (curve.codimension() + 1 != curve.ambient_dim()) {
    throw Error(ErrorCode::InvalidArgument, "expected a complete intersection curve");
  }
  if (z.ambient_dim() != curve.ambient_dim() || z.field() != curve.field()) {
    throw Error(ErrorCode::FieldMismatch, "subscheme and curve live in different spaces");
  }
  if (!z.is_reduced()) {
    throw Error(ErrorCode::NonReducedSubscheme,
                "the Cayley-Bacharach condition is defined for sets of distinct points only");
  }
  const long long twist = curve.canonical_twist();
  if (twist < 0) {
    throw Error(ErrorCode::NegativeCanonicalTwist,
                "canonical twist " + std::to_string(twist) + " is negative (rational or elliptic curve range)");
  }
  for (const auto& p : z.points()) {
    if (!curve.contains(p.base())) {
      throw Error(ErrorCode::PointNotOnCurve, "point " + p.base().to_string() + " is not on the curve");
    }
  }
  return cayley_bacharach(z, twist, workers);
}

}  // namespace cbgon
