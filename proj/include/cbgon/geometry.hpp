#pragma once

#include "cbgon/schemes.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cbgon {

/// Projective linear subspace cut out by independent linear forms.
class LinearSubspace {
 public:
  /// Throws DegenerateConfiguration if the forms are dependent.
  LinearSubspace(Field field, std::size_t n, std::vector<Form> dual_basis);

  Field field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  long long proj_dim() const noexcept {
    return static_cast<long long>(n_) - static_cast<long long>(dual_basis_.size());
  }
  const std::vector<Form>& dual_basis() const noexcept { return dual_basis_; }
  /// Reduced row echelon form of the dual coefficient matrix; equal
  /// subspaces have equal keys.
  const std::vector<Vector>& key() const noexcept { return key_; }
  /// Vectors spanning the subspace (a kernel basis of the dual matrix).
  std::vector<Vector> spanning_vectors() const;

  bool contains(const ProjectivePoint& p) const;
  bool contains(std::span<const Scalar> v) const;

  friend bool operator==(const LinearSubspace& a, const LinearSubspace& b) {
    return a.n_ == b.n_ && a.key_ == b.key_;
  }
  friend std::strong_ordering operator<=>(const LinearSubspace& a, const LinearSubspace& b);

  std::string to_string() const;

 private:
  Field field_;
  std::size_t n_;
  std::vector<Form> dual_basis_;
  std::vector<Vector> key_;
};

/// Smallest linear subspace containing the points. Requires a nonempty list.
LinearSubspace span(std::span<const ProjectivePoint> points);

/// The pencil of hyperplanes through an (n-2)-plane, i.e. the projection
/// P^n --> P^1, x |-> (l0(x) : l1(x)).
class PencilMap {
 public:
  explicit PencilMap(LinearSubspace center);

  const LinearSubspace& center() const noexcept { return center_; }
  const Form& l0() const noexcept { return center_.dual_basis()[0]; }
  const Form& l1() const noexcept { return center_.dual_basis()[1]; }

  /// Image in P^1, or nullopt on the center.
  std::optional<ProjectivePoint> image(const ProjectivePoint& p) const;
  /// H_t = t0*l1 - t1*l0.
  Form hyperplane(const ProjectivePoint& t) const;

 private:
  LinearSubspace center_;
};

/// A complete intersection curve with its F_p-points.
class RationalCurve {
 public:
  RationalCurve(CompleteIntersection curve, std::vector<ProjectivePoint> points);
  static RationalCurve enumerate(CompleteIntersection curve, const EnumerationOptions& options = {});

  const CompleteIntersection& curve() const noexcept { return curve_; }
  const std::vector<ProjectivePoint>& points() const noexcept { return points_; }
  std::size_t ambient_dim() const noexcept { return curve_.ambient_dim(); }
  Field field() const noexcept { return curve_.field(); }

 private:
  CompleteIntersection curve_;
  std::vector<ProjectivePoint> points_;
};

struct CenterIntersection {
  std::vector<ProjectivePoint> rational_points;
  /// Length of the scheme C n K.
  unsigned long long length = 0;
  /// True when the length was computed over the algebraic closure (point or
  /// line centers); otherwise only F_p-points were counted.
  bool length_exact = false;
};

/// Validates that C n K is reduced with C smooth along it. Throws
/// SingularAtCenter or NonReducedCenterIntersection.
CenterIntersection intersect_center(const RationalCurve& c, const LinearSubspace& center);

/// Length of the scheme C n L for a line L over the algebraic closure,
/// multiplicities included; nullopt if L lies on C.
std::optional<unsigned long long> line_section_length(const CompleteIntersection& c, const LinearSubspace& line);

/// deg C - length(C n K) for an (n-2)-plane K.
unsigned long long projection_degree(const RationalCurve& c, const LinearSubspace& center);

struct Fiber {
  ProjectivePoint over;  // point of P^1(F_p)
  FiniteSubscheme points;
};

/// One fiber per t in P^1(F_p) (lexicographic order); together they
/// partition C(F_p) minus the center.
std::vector<Fiber> fibers_over_rational_points(const RationalCurve& c, const PencilMap& pencil);

/// span(fiber) is exactly a hyperplane.
bool fiber_spans_hyperplane(std::size_t n, const FiniteSubscheme& fiber);
inline bool fiber_spans_hyperplane(const RationalCurve& c, const FiniteSubscheme& fiber) {
  return fiber_spans_hyperplane(c.ambient_dim(), fiber);
}

struct FiberSpanCheck {
  bool holds = true;
  /// Fewer than two fibers had n or more points.
  bool vacuous = false;
  std::size_t fibers_compared = 0;
};

/// Pairwise distinctness of span(F) over fibers F with at least n points.
FiberSpanCheck distinct_fiber_spans(std::size_t n, std::span<const FiniteSubscheme> fibers);
FiberSpanCheck one_fiber_per_hyperplane(const RationalCurve& c, const PencilMap& pencil);

struct SecantPlane {
  LinearSubspace plane;
  std::size_t secancy = 0;
};

struct CensusOptions {
  std::uint64_t budget = 10'000'000;  // max number of (n-1)-subsets examined
  unsigned workers = 1;
};

/// Every (n-2)-plane spanned by n-1 rational points of C meeting C(F_p) in
/// at least k points, deduplicated and sorted by key. Planes that are not
/// spanned by rational points are not found.
std::vector<SecantPlane> secant_census(const RationalCurve& c, std::size_t k, const CensusOptions& options = {});

/// Maximum secancy over the census; a lower bound for the geometric gamma.
std::size_t gamma_census(const RationalCurve& c, const CensusOptions& options = {});

struct GonalityReport {
  std::vector<unsigned> degrees;
  std::size_t n = 0;
  long long deg_c = 0;
  long long deg_s = 0;
  long long alpha = 0;
  long long lazarsfeld_lower = 0;
  long long corb_value = 0;
  long long cord_lower = 0;
  long long cord_upper = 0;
  long long key_lemma_lower = 0;
  std::optional<long long> noether_value;  // plane curves: d - 1
  std::optional<long long> gamma;
  std::optional<long long> projection_formula_value;  // deg C - gamma
  std::vector<std::string> hypothesis_violations;
};

/// Exact integer evaluation of the gonality formulas and bounds for a
/// complete intersection curve of type (a_1 <= ... <= a_{n-1}) in P^n.
/// deg_S and alpha default to a_2...a_{n-1} and a_1. Throws
/// DegreeOrderViolation unless 2 <= a_1 <= ... <= a_{n-1}.
GonalityReport gonality_report(const std::vector<unsigned>& degrees, std::optional<long long> gamma = std::nullopt,
                               std::optional<long long> deg_s = std::nullopt,
                               std::optional<long long> alpha = std::nullopt);

struct DimensionAudit {
  std::vector<unsigned> degrees;
  std::size_t n = 0;
  std::vector<unsigned long long> sections;  // C(a_i + n, n)
  long long sum_sections = 0;
  long long dim_grassmannian = 0;      // (n-2)-planes in P^n
  long long dim_incidence = 0;         // planes with 2n-1 points on them
  long long fiber_dim = 0;
  long long dim_y = 0;
  long long dim_psi = 0;
  long long dim_incidence_prime = 0;   // planes with 2n-2 points on them
  long long fiber_dim_prime = 0;
  long long dim_y_prime = 0;
  bool y_cannot_dominate = false;
  bool y_prime_matches_psi = false;
  bool sections_exceed_2n_minus_1 = false;
  bool sections_admit_planting = false;  // C(a_i+n, n) >= 4n - 4
  std::vector<std::string> hypothesis_violations;
};

/// Dimension count of the incidence correspondences behind the general
/// gonality value. Hypothesis violations (a_i < 4, n < 3) are reported,
/// never thrown.
DimensionAudit dimension_audit(const std::vector<unsigned>& degrees);

}  // namespace cbgon
