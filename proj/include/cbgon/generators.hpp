#pragma once

#include "cbgon/geometry.hpp"
#include "cbgon/schemes.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace cbgon {

inline constexpr unsigned kMaxRetries = 100;

/// Seeded source for "general" objects. mt19937_64 is fully specified by the
/// standard, and scalars are drawn by plain reduction, so streams are
/// reproducible across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  std::uint64_t below(std::uint64_t bound) { return engine_() % bound; }
  /// Uniform residue over F_p; an integer in [-9, 9] over QQ.
  Scalar scalar(Field field);
  Scalar nonzero_scalar(Field field);
  Vector vector(Field field, std::size_t length);

 private:
  std::mt19937_64 engine_;
};

Form random_form(Field field, std::size_t n, unsigned degree, Rng& rng);

/// Random grid CI of the given type in P^n, n = degrees.size(). Retries on
/// degenerate draws; throws RetryLimit after kMaxRetries.
GridIntersection random_grid_ci(Field field, const std::vector<unsigned>& degrees, std::uint64_t seed);

struct CurveSample {
  RationalCurve curve;
  unsigned attempts = 0;
};

/// Random complete intersection curve of the given type with at least
/// `min_points` F_p-points, smooth at every one of them.
CurveSample random_smooth_curve(Field field, const std::vector<unsigned>& degrees, std::uint64_t seed,
                                const EnumerationOptions& options = {}, std::size_t min_points = 1);

struct PlantedCurve {
  RationalCurve curve;
  LinearSubspace plane;                  // the planted (n-2)-plane
  std::vector<ProjectivePoint> planted;  // 2n-2 points on it
  unsigned attempts = 0;
};

/// Curve of the given type through a length-(4n-4) scheme supported on 2n-2
/// general points of a random (n-2)-plane, each with a general tangent
/// direction off the plane.
PlantedCurve planted_secant_curve(Field field, const std::vector<unsigned>& degrees, std::uint64_t seed,
                                  const EnumerationOptions& options = {});

/// (n-2)-plane spanned by n-1 distinct rational points of C, accepted only if
/// it meets C reducedly at smooth points.
LinearSubspace random_chord_center(const RationalCurve& c, Rng& rng);

}  // namespace cbgon
