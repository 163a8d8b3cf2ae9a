#include "cbgon/generators.hpp"

#include "cbgon/error.hpp"

#include <algorithm>
#include <set>

namespace cbgon {

Scalar Rng::scalar(Field field) {
  if (field.is_rational()) return Scalar(field, static_cast<long long>(below(19)) - 9);
  return Scalar(field, static_cast<long long>(below(field.characteristic())));
}

Scalar Rng::nonzero_scalar(Field field) {
  while (true) {
    Scalar s = scalar(field);
    if (!s.is_zero()) return s;
  }
}

Vector Rng::vector(Field field, std::size_t length) {
  Vector v;
  v.reserve(length);
  for (std::size_t i = 0; i < length; ++i) v.push_back(scalar(field));
  return v;
}

Form random_form(Field field, std::size_t n, unsigned degree, Rng& rng) {
  Form f(field, n, degree);
  for (const auto& m : monomial_basis(n, degree)) f.add_term(m, rng.scalar(field));
  return f;
}

GridIntersection random_grid_ci(Field field, const std::vector<unsigned>& degrees, std::uint64_t seed) {
  Rng rng(seed);
  const std::size_t n = degrees.size();
  for (unsigned attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::vector<std::vector<Form>> lists;
    for (unsigned d : degrees) {
      std::vector<Form> list;
      for (unsigned i = 0; i < d; ++i) list.push_back(Form::linear(field, rng.vector(field, n + 1)));
      lists.push_back(std::move(list));
    }
    try {
      return make_grid_ci(lists);
    } catch (const Error& err) {
      if (err.code() != ErrorCode::DegenerateConfiguration && err.code() != ErrorCode::InvalidArgument) throw;
    }
  }
  throw Error(ErrorCode::RetryLimit, "no transverse grid after " + std::to_string(kMaxRetries) + " draws");
}

namespace {

bool smooth_everywhere(const RationalCurve& c) {
  return std::all_of(c.points().begin(), c.points().end(),
                     [&](const ProjectivePoint& p) { return is_smooth_at(c.curve(), p); });
}

}  // namespace

CurveSample random_smooth_curve(Field field, const std::vector<unsigned>& degrees, std::uint64_t seed,
                                const EnumerationOptions& options, std::size_t min_points) {
  Rng rng(seed);
  const std::size_t n = degrees.size() + 1;
  for (unsigned attempt = 1; attempt <= kMaxRetries; ++attempt) {
    std::vector<Form> forms;
    for (unsigned d : degrees) forms.push_back(random_form(field, n, d, rng));
    if (std::any_of(forms.begin(), forms.end(), [](const Form& f) { return f.is_zero(); })) continue;
    auto curve = RationalCurve::enumerate(CompleteIntersection(field, n, std::move(forms)), options);
    if (curve.points().size() < min_points || !smooth_everywhere(curve)) continue;
    return {std::move(curve), attempt};
  }
  throw Error(ErrorCode::RetryLimit, "no curve smooth at its rational points after " +
                                         std::to_string(kMaxRetries) + " draws");
}

PlantedCurve planted_secant_curve(Field field, const std::vector<unsigned>& degrees, std::uint64_t seed,
                                  const EnumerationOptions& options) {
  Rng rng(seed);
  const std::size_t n = degrees.size() + 1;
  const std::size_t on_plane = 2 * n - 2;
  for (unsigned attempt = 1; attempt <= kMaxRetries; ++attempt) {
    // Random (n-2)-plane spanned by n-1 random vectors.
    std::vector<Vector> frame;
    for (std::size_t i = 0; i + 1 < n; ++i) frame.push_back(rng.vector(field, n + 1));
    if (rank(Matrix::from_rows(field, n + 1, frame)) != n - 1) continue;

    std::vector<ProjectivePoint> points;
    std::set<ProjectivePoint> seen;
    bool ok = true;
    for (std::size_t i = 0; i < on_plane && ok; ++i) {
      Vector v(n + 1, Scalar(field));
      for (const auto& f : frame) {
        const Scalar c = rng.scalar(field);
        for (std::size_t k = 0; k <= n; ++k) v[k] += c * f[k];
      }
      if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); })) {
        ok = false;
        break;
      }
      ProjectivePoint p(std::move(v));
      ok = seen.insert(p).second;
      points.push_back(std::move(p));
    }
    if (!ok) continue;

    std::vector<FatPoint> fat;
    for (const auto& p : points) {
      Vector t = rng.vector(field, n + 1);
      std::vector<Vector> rows = frame;
      rows.push_back(t);
      if (rank(Matrix::from_rows(field, n + 1, rows)) != n) {
        ok = false;
        break;
      }
      fat.emplace_back(p, std::move(t));
    }
    if (!ok) continue;
    const FiniteSubscheme scheme(field, n, std::move(fat));

    std::vector<Form> forms;
    for (unsigned d : degrees) {
      const auto basis = monomial_basis(n, d);
      const auto ker = kernel(evaluation_rows(scheme, d));
      Form f(field, n, d);
      for (const auto& v : ker) {
        const Scalar c = rng.scalar(field);
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], c * v[i]);
      }
      forms.push_back(std::move(f));
    }
    if (std::any_of(forms.begin(), forms.end(), [](const Form& f) { return f.is_zero(); })) continue;
    auto curve = RationalCurve::enumerate(CompleteIntersection(field, n, std::move(forms)), options);
    if (!smooth_everywhere(curve)) continue;
    auto plane = span(points);
    return {std::move(curve), std::move(plane), std::move(points), attempt};
  }
  throw Error(ErrorCode::RetryLimit, "no planted curve smooth at its rational points after " +
                                         std::to_string(kMaxRetries) + " draws");
}

LinearSubspace random_chord_center(const RationalCurve& c, Rng& rng) {
  const std::size_t n = c.ambient_dim();
  const auto& pts = c.points();
  if (pts.size() < n - 1) {
    throw Error(ErrorCode::InvalidArgument, "curve has too few rational points for a chord center");
  }
  for (unsigned attempt = 0; attempt < kMaxRetries; ++attempt) {
    std::set<std::size_t> idx;
    while (idx.size() < n - 1) idx.insert(static_cast<std::size_t>(rng.below(pts.size())));
    std::vector<ProjectivePoint> chosen;
    for (std::size_t i : idx) chosen.push_back(pts[i]);
    LinearSubspace center = span(chosen);
    if (center.proj_dim() != static_cast<long long>(n) - 2) continue;
    try {
      intersect_center(c, center);
      return center;
    } catch (const Error& err) {
      if (err.code() != ErrorCode::NonReducedCenterIntersection && err.code() != ErrorCode::SingularAtCenter &&
          err.code() != ErrorCode::DegenerateConfiguration) {
        throw;
      }
    }
  }
  throw Error(ErrorCode::RetryLimit, "no reduced chord center after " + std::to_string(kMaxRetries) + " draws");
}

}  // namespace cbgon
