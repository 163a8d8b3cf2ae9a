#pragma once

#include "cbgon/field.hpp"
#include "cbgon/matrix.hpp"
#include "cbgon/polynomial.hpp"

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cbgon {

inline constexpr std::uint64_t kDefaultPointBudget = 10'000'000;

/// Point of P^n stored with its first nonzero coordinate equal to 1.
class ProjectivePoint {
 public:
  /// Throws InvalidArgument for the zero vector, FieldMismatch for mixed fields.
  explicit ProjectivePoint(Vector coords);
  static ProjectivePoint from_integers(Field field, const std::vector<long long>& coords);

  Field field() const noexcept { return coords_.front().field(); }
  std::size_t ambient_dim() const noexcept { return coords_.size() - 1; }
  const Vector& coords() const noexcept { return coords_; }

  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
  /// Lexicographic on canonical coordinates.
  friend std::strong_ordering operator<=>(const ProjectivePoint& a, const ProjectivePoint& b);

  std::string to_string() const;

 private:
  Vector coords_;
};

/// A reduced point, or a curvilinear length-2 point (base plus tangent direction).
class FatPoint {
 public:
  explicit FatPoint(ProjectivePoint base, std::optional<Vector> tangent = std::nullopt);

  const ProjectivePoint& base() const noexcept { return base_; }
  const std::optional<Vector>& tangent() const noexcept { return tangent_; }
  std::size_t length() const noexcept { return tangent_ ? 2 : 1; }

 private:
  ProjectivePoint base_;
  std::optional<Vector> tangent_;
};

/// Finite union of fat points with pairwise distinct supports.
class FiniteSubscheme {
 public:
  FiniteSubscheme(Field field, std::size_t n, std::vector<FatPoint> points);
  static FiniteSubscheme reduced(Field field, std::size_t n, std::vector<ProjectivePoint> points);

  Field field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  const std::vector<FatPoint>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  std::size_t degree() const noexcept;
  bool is_reduced() const noexcept;
  bool empty() const noexcept { return points_.empty(); }

  FiniteSubscheme without(std::size_t index) const;
  FiniteSubscheme subset(std::span<const std::size_t> indices) const;
  std::vector<ProjectivePoint> supports() const;

 private:
  Field field_;
  std::size_t n_;
  std::vector<FatPoint> points_;
};

/// V(f_1, ..., f_c) in P^n with forms sorted by nondecreasing degree.
class CompleteIntersection {
 public:
  CompleteIntersection(Field field, std::size_t n, std::vector<Form> forms);

  Field field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  std::size_t codimension() const noexcept { return forms_.size(); }
  std::size_t expected_dim() const noexcept { return n_ - forms_.size(); }
  const std::vector<Form>& forms() const noexcept { return forms_; }
  std::vector<unsigned> type() const;
  /// Product of the degrees (Bezout degree).
  unsigned long long degree() const;
  /// sum(a_i) - n - 1; the adjunction twist for curves.
  long long canonical_twist() const;

  bool contains(const ProjectivePoint& p) const;
  /// c x (n+1) matrix of partial derivatives at p.
  Matrix jacobian_at(const ProjectivePoint& p) const;

 private:
  Field field_;
  std::size_t n_;
  std::vector<Form> forms_;
  std::vector<std::vector<Form>> partials_;
};

/// (p^(n+1) - 1) / (p - 1); throws BudgetExceeded on 64-bit overflow.
std::uint64_t projective_space_size(std::size_t n, std::uint32_t p);

/// Random access to P^n(F_p) in lexicographic order of canonical coordinates.
class ProjectiveSpaceEnumerator {
 public:
  ProjectiveSpaceEnumerator(std::size_t n, Field field);

  std::uint64_t size() const noexcept { return size_; }
  ProjectivePoint point(std::uint64_t index) const;
  std::vector<std::uint32_t> residues(std::uint64_t index) const;

 private:
  std::size_t n_;
  Field field_;
  std::uint64_t size_;
};

std::vector<ProjectivePoint> enumerate_projective_space(std::size_t n, Field field,
                                                        std::uint64_t budget = kDefaultPointBudget);

struct EnumerationOptions {
  std::uint64_t budget = kDefaultPointBudget;
  unsigned workers = 1;
};

/// All F_p-points of X in lexicographic order. The enumerator partitions the
/// space into contiguous chunks, one per worker; output is independent of the
/// worker count.
std::vector<ProjectivePoint> rational_points(const CompleteIntersection& x,
                                             const EnumerationOptions& options = {});

/// Jacobian criterion; throws PointNotOnScheme if p is not on X.
bool is_smooth_at(const CompleteIntersection& x, const ProjectivePoint& p);

struct GridIntersection {
  CompleteIntersection ci;
  std::vector<ProjectivePoint> points;
};

/// Zero-dimensional CI whose i-th form is the product of the i-th list of
/// linear forms. Throws DegenerateConfiguration unless every choice of one
/// form per list meets in a single point lying on no other listed form.
GridIntersection make_grid_ci(const std::vector<std::vector<Form>>& linear_factor_lists);

/// One row per condition imposed by Z on degree-d forms, columns indexed by
/// monomial_basis(n, d). Fat points add a directional-derivative row.
/// Negative d gives a matrix with no columns.
Matrix evaluation_rows(const FiniteSubscheme& z, long long d);

}  // namespace cbgon
