#include "cbgon/geometry.hpp"

#include "cbgon/error.hpp"

#include <algorithm>
#include <atomic>
#include <limits>
#include <map>
#include <set>
#include <thread>

namespace cbgon {

namespace {

std::vector<Vector> coefficient_rows(const std::vector<Form>& forms) {
  std::vector<Vector> rows;
  for (const auto& f : forms) rows.push_back(f.linear_coefficients());
  return rows;
}

// Univariate polynomials, index = exponent.
using Poly = std::vector<Scalar>;

void trim(Poly& a) {
  while (!a.empty() && a.back().is_zero()) a.pop_back();
}

Poly poly_mod(Poly a, const Poly& b) {
  trim(a);
  const Scalar lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const Scalar f = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= f * b[i];
    trim(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Scalar inv = a.back().inverse();
    for (auto& c : a) c *= inv;
  }
  return a;
}

Poly poly_derivative(const Poly& a) {
  Poly d;
  for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * Scalar(a[i].field(), static_cast<long long>(i)));
  trim(d);
  return d;
}

Poly poly_mul(const Poly& a, const Poly& b, Field field) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1, Scalar(field));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

// Coefficients of f(s*u + t*w) indexed by the power of t.
Poly restrict_to_line(const Form& f, const Vector& u, const Vector& w) {
  const Field field = f.field();
  Poly total(f.degree() + 1, Scalar(field));
  for (const auto& [m, c] : f.terms()) {
    Poly term{c};
    for (std::size_t i = 0; i < u.size(); ++i) {
      const Poly lin{u[i], w[i]};
      for (unsigned e = 0; e < m.exponent(i); ++e) term = poly_mul(term, lin, field);
    }
    for (std::size_t k = 0; k < term.size(); ++k) total[k] += term[k];
  }
  return total;
}

// C n L as the gcd of the restricted binary forms: a power of the first
// coordinate times a dehomogenized polynomial. nullopt if L lies on C.
struct LineMeet {
  std::size_t order = 0;
  Poly common;
};

std::optional<LineMeet> restrict_to_line(const CompleteIntersection& c, const LinearSubspace& line) {
  const auto basis = line.spanning_vectors();
  const Vector& u = basis[0];
  const Vector& w = basis[1];
  LineMeet out;
  out.order = std::numeric_limits<std::size_t>::max();
  bool any = false;
  for (const auto& f : c.forms()) {
    const Poly g = restrict_to_line(f, u, w);
    std::size_t order = 0;
    while (order < g.size() && g[order].is_zero()) ++order;
    if (order == g.size()) continue;  // the line lies in this hypersurface
    out.order = std::min(out.order, order);
    Poly affine(g.rbegin(), g.rend());  // coefficient of s^(d-k) is g[k]
    trim(affine);
    out.common = any ? poly_gcd(out.common, affine) : poly_gcd(affine, Poly{});
    any = true;
  }
  if (!any) return std::nullopt;
  return out;
}

long long checked_mul(long long a, long long b) {
  long long out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw Error(ErrorCode::InvalidArgument, "degree product overflows");
  return out;
}

}  // namespace

LinearSubspace::LinearSubspace(Field field, std::size_t n, std::vector<Form> dual_basis)
    : field_(field), n_(n), dual_basis_(std::move(dual_basis)) {
  for (const auto& f : dual_basis_) {
    if (f.field() != field_) throw Error(ErrorCode::FieldMismatch, "dual form over another field");
    if (f.ambient_dim() != n_ || f.degree() != 1 || f.is_zero()) {
      throw Error(ErrorCode::InvalidArgument, "dual basis entries must be nonzero linear forms");
    }
  }
  if (dual_basis_.empty()) return;
  const Matrix m = Matrix::from_rows(field_, n_ + 1, coefficient_rows(dual_basis_));
  EchelonForm e = row_reduce(m);
  if (e.rows.size() != dual_basis_.size()) {
    throw Error(ErrorCode::DegenerateConfiguration, "dual basis forms are linearly dependent");
  }
  key_ = std::move(e.rows);
}

std::vector<Vector> LinearSubspace::spanning_vectors() const {
  if (dual_basis_.empty()) {
    std::vector<Vector> out;
    for (std::size_t i = 0; i <= n_; ++i) {
      Vector v(n_ + 1, Scalar(field_));
      v[i] = Scalar(field_, 1);
      out.push_back(std::move(v));
    }
    return out;
  }
  return kernel(Matrix::from_rows(field_, n_ + 1, key_));
}

bool LinearSubspace::contains(std::span<const Scalar> v) const {
  return std::all_of(dual_basis_.begin(), dual_basis_.end(),
                     [&](const Form& f) { return f.evaluate(v).is_zero(); });
}

bool LinearSubspace::contains(const ProjectivePoint& p) const { return contains(p.coords()); }

std::strong_ordering operator<=>(const LinearSubspace& a, const LinearSubspace& b) {
  if (auto c = a.n_ <=> b.n_; c != 0) return c;
  if (auto c = b.key_.size() <=> a.key_.size(); c != 0) return c;  // larger subspaces first
  for (std::size_t r = 0; r < a.key_.size(); ++r) {
    for (std::size_t k = 0; k <= a.n_; ++k) {
      if (auto c = a.key_[r][k] <=> b.key_[r][k]; c != 0) return c;
    }
  }
  return std::strong_ordering::equal;
}

std::string LinearSubspace::to_string() const {
  if (key_.empty()) return "P^" + std::to_string(n_);
  std::string out = "V(";
  for (std::size_t r = 0; r < key_.size(); ++r) {
    if (r != 0) out += ", ";
    out += Form::linear(field_, key_[r]).to_string();
  }
  return out + ')';
}

LinearSubspace span(std::span<const ProjectivePoint> points) {
  if (points.empty()) throw Error(ErrorCode::InvalidArgument, "span of no points");
  const Field field = points.front().field();
  const std::size_t n = points.front().ambient_dim();
  std::vector<Vector> rows;
  for (const auto& p : points) {
    if (p.field() != field || p.ambient_dim() != n) {
      throw Error(ErrorCode::FieldMismatch, "points from different spaces");
    }
    rows.push_back(p.coords());
  }
  std::vector<Form> dual;
  for (const auto& v : kernel(Matrix::from_rows(field, n + 1, rows))) dual.push_back(Form::linear(field, v));
  return LinearSubspace(field, n, std::move(dual));
}

PencilMap::PencilMap(LinearSubspace center) : center_(std::move(center)) {
  if (center_.dual_basis().size() != 2) {
    throw Error(ErrorCode::InvalidArgument, "a pencil center must be an (n-2)-plane");
  }
}

std::optional<ProjectivePoint> PencilMap::image(const ProjectivePoint& p) const {
  Scalar a = l0().evaluate(p.coords());
  Scalar b = l1().evaluate(p.coords());
  if (a.is_zero() && b.is_zero()) return std::nullopt;
  return ProjectivePoint(Vector{std::move(a), std::move(b)});
}

Form PencilMap::hyperplane(const ProjectivePoint& t) const {
  return l1().scaled(t.coords()[0]) - l0().scaled(t.coords()[1]);
}

RationalCurve::RationalCurve(CompleteIntersection curve, std::vector<ProjectivePoint> points)
    : curve_(std::move(curve)), points_(std::move(points)) {
  if (curve_.codimension() + 1 != curve_.ambient_dim()) {
    throw Error(ErrorCode::InvalidArgument, "expected n-1 forms cutting a curve in P^n");
  }
  if (curve_.field().is_rational()) {
    throw Error(ErrorCode::InvalidArgument, "curve point enumeration needs a prime field");
  }
}

RationalCurve RationalCurve::enumerate(CompleteIntersection curve, const EnumerationOptions& options) {
  if (curve.field().is_rational()) {
    throw Error(ErrorCode::InvalidArgument, "curve point enumeration needs a prime field");
  }
  auto points = rational_points(curve, options);
  return RationalCurve(std::move(curve), std::move(points));
}

CenterIntersection intersect_center(const RationalCurve& c, const LinearSubspace& center) {
  const std::size_t n = c.ambient_dim();
  if (center.ambient_dim() != n || center.field() != c.field()) {
    throw Error(ErrorCode::FieldMismatch, "center and curve live in different spaces");
  }
  if (center.proj_dim() != static_cast<long long>(n) - 2) {
    throw Error(ErrorCode::InvalidArgument, "projection center must be an (n-2)-plane");
  }
  CenterIntersection out;
  for (const auto& p : c.points()) {
    if (!center.contains(p)) continue;
    const Matrix jac = c.curve().jacobian_at(p);
    if (rank(jac) != c.curve().codimension()) {
      throw Error(ErrorCode::SingularAtCenter, "curve is singular at center point " + p.to_string());
    }
    // The tangent line is the kernel of the Jacobian; reducedness fails iff it lies in the center.
    const auto tangent_line = kernel(jac);
    const bool inside = std::all_of(tangent_line.begin(), tangent_line.end(),
                                    [&](const Vector& v) { return center.contains(v); });
    if (inside) {
      throw Error(ErrorCode::NonReducedCenterIntersection,
                  "center contains the tangent line of the curve at " + p.to_string());
    }
    out.rational_points.push_back(p);
  }

  if (center.proj_dim() == 0) {
    out.length = out.rational_points.size();
    out.length_exact = true;
  } else if (center.proj_dim() == 1) {
    const auto meet = restrict_to_line(c.curve(), center);
    if (!meet) throw Error(ErrorCode::DegenerateConfiguration, "the center line lies on the curve");
    const std::size_t affine_degree = meet->common.empty() ? 0 : meet->common.size() - 1;
    bool squarefree = meet->order <= 1;
    if (affine_degree >= 1) {
      const Poly d = poly_derivative(meet->common);
      squarefree = squarefree && !d.empty() && poly_gcd(meet->common, d).size() == 1;
    }
    if (!squarefree) {
      throw Error(ErrorCode::NonReducedCenterIntersection, "curve meets the center line non-reducedly");
    }
    out.length = meet->order + affine_degree;
    out.length_exact = true;
    if (out.length < out.rational_points.size()) {
      throw Error(ErrorCode::DegenerateConfiguration, "inconsistent center intersection length");
    }
  } else {
    out.length = out.rational_points.size();
  }
  return out;
}

std::optional<unsigned long long> line_section_length(const CompleteIntersection& c, const LinearSubspace& line) {
  if (line.proj_dim() != 1 || line.ambient_dim() != c.ambient_dim() || line.field() != c.field()) {
    throw Error(ErrorCode::InvalidArgument, "expected a line in the curve's ambient space");
  }
  const auto meet = restrict_to_line(c, line);
  if (!meet) return std::nullopt;
  return meet->order + (meet->common.empty() ? 0 : meet->common.size() - 1);
}

unsigned long long projection_degree(const RationalCurve& c, const LinearSubspace& center) {
  const auto meet = intersect_center(c, center);
  return c.curve().degree() - meet.length;
}

std::vector<Fiber> fibers_over_rational_points(const RationalCurve& c, const PencilMap& pencil) {
  intersect_center(c, pencil.center());
  const Field field = c.field();
  const std::uint32_t p = field.characteristic();
  const std::size_t n = c.ambient_dim();
  std::vector<std::vector<ProjectivePoint>> buckets(std::size_t{p} + 1);
  for (const auto& pt : c.points()) {
    const auto t = pencil.image(pt);
    if (!t) continue;
    const auto& tc = t->coords();
    const std::size_t index = tc[0].is_zero() ? 0 : 1 + tc[1].residue();
    buckets[index].push_back(pt);
  }
  std::vector<Fiber> out;
  out.reserve(buckets.size());
  for (std::size_t i = 0; i < buckets.size(); ++i) {
    const auto over = i == 0 ? ProjectivePoint::from_integers(field, {0, 1})
                             : ProjectivePoint::from_integers(field, {1, static_cast<long long>(i - 1)});
    out.push_back({over, FiniteSubscheme::reduced(field, n, std::move(buckets[i]))});
  }
  return out;
}

bool fiber_spans_hyperplane(std::size_t n, const FiniteSubscheme& fiber) {
  if (fiber.empty()) throw Error(ErrorCode::InvalidArgument, "empty fiber");
  const auto pts = fiber.supports();
  return span(pts).proj_dim() == static_cast<long long>(n) - 1;
}

FiberSpanCheck distinct_fiber_spans(std::size_t n, std::span<const FiniteSubscheme> fibers) {
  FiberSpanCheck out;
  std::set<LinearSubspace> seen;
  for (const auto& f : fibers) {
    if (f.size() < n) continue;
    ++out.fibers_compared;
    const auto pts = f.supports();
    if (!seen.insert(span(pts)).second) out.holds = false;
  }
  out.vacuous = out.fibers_compared < 2;
  return out;
}

FiberSpanCheck one_fiber_per_hyperplane(const RationalCurve& c, const PencilMap& pencil) {
  std::vector<FiniteSubscheme> fibers;
  for (auto& f : fibers_over_rational_points(c, pencil)) fibers.push_back(std::move(f.points));
  return distinct_fiber_spans(c.ambient_dim(), fibers);
}

std::vector<SecantPlane> secant_census(const RationalCurve& c, std::size_t k, const CensusOptions& options) {
  const std::size_t n = c.ambient_dim();
  const std::size_t choose = n - 1;
  if (k < choose) {
    throw Error(ErrorCode::InvalidArgument, "secancy threshold must be at least n-1 = " + std::to_string(choose));
  }
  const auto& pts = c.points();
  const std::size_t count = pts.size();
  if (binomial(count, choose) > options.budget) {
    throw Error(ErrorCode::BudgetExceeded, std::to_string(binomial(count, choose)) +
                                               " point subsets exceed the census budget " +
                                               std::to_string(options.budget));
  }

  // Task i handles the subsets whose smallest index is i.
  auto run_task = [&](std::size_t first) {
    std::map<LinearSubspace, std::size_t> found;
    std::vector<std::size_t> idx(choose);
    idx[0] = first;
    for (std::size_t j = 1; j < choose; ++j) idx[j] = first + j;
    if (choose > 0 && idx[choose - 1] >= count) return found;
    while (true) {
      std::vector<ProjectivePoint> chosen;
      for (std::size_t i : idx) chosen.push_back(pts[i]);
      LinearSubspace plane = span(chosen);
      if (plane.proj_dim() == static_cast<long long>(n) - 2 && !found.contains(plane)) {
        std::size_t secancy = 0;
        for (const auto& p : pts) secancy += plane.contains(p) ? 1 : 0;
        found.emplace(std::move(plane), secancy);
      }
      // Advance the tail idx[1..] through combinations of (first, count).
      std::size_t j = choose;
      while (j > 1 && idx[j - 1] == count - (choose - j) - 1) --j;
      if (j <= 1) break;
      ++idx[j - 1];
      for (std::size_t t = j; t < choose; ++t) idx[t] = idx[t - 1] + 1;
    }
    return found;
  };

  std::vector<std::map<LinearSubspace, std::size_t>> results(count);
  const unsigned workers = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) results[i] = run_task(i);
  };
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (unsigned w = 0; w < workers; ++w) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  std::map<LinearSubspace, std::size_t> merged;
  for (auto& r : results) {
    for (auto& [plane, secancy] : r) merged.emplace(plane, secancy);
  }
  std::vector<SecantPlane> out;
  for (auto& [plane, secancy] : merged) {
    if (secancy >= k) out.push_back({plane, secancy});
  }
  return out;
}

std::size_t gamma_census(const RationalCurve& c, const CensusOptions& options) {
  const auto census = secant_census(c, c.ambient_dim() - 1, options);
  if (census.empty()) return c.points().size();  // all points already lie in a smaller plane
  std::size_t best = 0;
  for (const auto& s : census) best = std::max(best, s.secancy);
  return best;
}

GonalityReport gonality_report(const std::vector<unsigned>& degrees, std::optional<long long> gamma,
                               std::optional<long long> deg_s, std::optional<long long> alpha) {
  if (degrees.empty()) throw Error(ErrorCode::DegreeOrderViolation, "no degrees given");
  if (degrees.front() < 2 || !std::is_sorted(degrees.begin(), degrees.end())) {
    throw Error(ErrorCode::DegreeOrderViolation, "degrees must satisfy 2 <= a_1 <= ... <= a_{n-1}");
  }
  GonalityReport r;
  r.degrees = degrees;
  r.n = degrees.size() + 1;
  const long long n = static_cast<long long>(r.n);
  r.deg_c = 1;
  for (unsigned a : degrees) r.deg_c = checked_mul(r.deg_c, a);
  long long tail = 1;
  for (std::size_t i = 1; i < degrees.size(); ++i) tail = checked_mul(tail, degrees[i]);
  r.deg_s = deg_s.value_or(tail);
  r.alpha = alpha.value_or(degrees.front());
  r.lazarsfeld_lower = checked_mul(static_cast<long long>(degrees.front()) - 1, tail);
  r.corb_value = r.deg_c - 2 * n + 2;
  r.cord_lower = r.deg_c - r.deg_s;
  r.cord_upper = r.deg_c - 2 * n + 3;
  r.key_lemma_lower = checked_mul(r.deg_s, r.alpha - 1);
  if (r.n == 2) r.noether_value = r.deg_c - 1;
  if (gamma) {
    r.gamma = gamma;
    r.projection_formula_value = r.deg_c - *gamma;
  }
  if (degrees.front() < 4) r.hypothesis_violations.push_back("a_1 >= 4 fails");
  if (degrees.size() >= 2 && degrees[0] == degrees[1]) r.hypothesis_violations.push_back("a_1 < a_2 fails");
  if (r.n < 3) r.hypothesis_violations.push_back("n >= 3 fails (general-curve value not applicable)");
  if (r.alpha < 4) r.hypothesis_violations.push_back("alpha >= 4 fails");
  return r;
}

DimensionAudit dimension_audit(const std::vector<unsigned>& degrees) {
  if (degrees.empty()) throw Error(ErrorCode::InvalidArgument, "no degrees given");
  DimensionAudit a;
  a.degrees = degrees;
  a.n = degrees.size() + 1;
  const long long n = static_cast<long long>(a.n);
  a.sections_exceed_2n_minus_1 = true;
  a.sections_admit_planting = true;
  for (unsigned d : degrees) {
    const unsigned long long h0 = binomial(d + a.n, a.n);
    if (h0 > static_cast<unsigned long long>(std::numeric_limits<long long>::max() / 4)) {
      throw Error(ErrorCode::InvalidArgument, "section count overflows");
    }
    a.sections.push_back(h0);
    a.sum_sections += static_cast<long long>(h0);
    if (static_cast<long long>(h0) <= 2 * n - 1) a.sections_exceed_2n_minus_1 = false;
    if (static_cast<long long>(h0) < 4 * n - 4) a.sections_admit_planting = false;
    if (d < 4) a.hypothesis_violations.push_back("a_i >= 4 fails for a_i = " + std::to_string(d));
  }
  if (a.n < 3) a.hypothesis_violations.push_back("n >= 3 fails");
  const long long c = static_cast<long long>(degrees.size());
  a.dim_grassmannian = 2 * (n - 1);
  // Each hypersurface loses one dimension for scaling and 2n-1 for the points.
  a.dim_incidence = a.dim_grassmannian + (2 * n - 1) * (n - 2);
  a.fiber_dim = a.sum_sections - c - c * (2 * n - 1);
  a.dim_y = a.dim_incidence + a.fiber_dim;
  a.dim_psi = a.sum_sections - c;
  a.dim_incidence_prime = a.dim_grassmannian + (2 * n - 2) * (n - 2);
  a.fiber_dim_prime = a.sum_sections - c - c * (2 * n - 2);
  a.dim_y_prime = a.dim_incidence_prime + a.fiber_dim_prime;
  a.y_cannot_dominate = a.dim_y < a.dim_psi;
  a.y_prime_matches_psi = a.dim_y_prime == a.dim_psi;
  return a;
}

}  // namespace cbgon
