#include "cbgon/verify.hpp"

#include "cbgon/conditions.hpp"
#include "cbgon/error.hpp"
#include "cbgon/generators.hpp"
#include "cbgon/geometry.hpp"
#include "cbgon/scan.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>
#include <sstream>

namespace cbgon {

namespace {

using Clock = std::chrono::steady_clock;

CriterionResult timed(int id, std::string title, double limit, const std::function<bool(std::ostringstream&)>& body) {
  CriterionResult r;
  r.id = id;
  r.title = std::move(title);
  r.limit_seconds = limit;
  std::ostringstream detail;
  const auto start = Clock::now();
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  r.seconds = std::chrono::duration<double>(Clock::now() - start).count();
  r.passed = ok && (limit <= 0 || r.seconds < limit);
  if (ok && !r.passed) detail << "; runtime limit exceeded";
  r.detail = detail.str();
  return r;
}

ProjectivePoint random_point(Field field, std::size_t n, Rng& rng) {
  for (;;) {
    Vector v = rng.vector(field, n + 1);
    if (std::any_of(v.begin(), v.end(), [](const Scalar& s) { return !s.is_zero(); })) return ProjectivePoint(v);
  }
}

std::vector<ProjectivePoint> distinct_points(Field field, std::size_t n, std::size_t count, Rng& rng) {
  std::set<ProjectivePoint> seen;
  std::vector<ProjectivePoint> out;
  while (out.size() < count) {
    auto p = random_point(field, n, rng);
    if (seen.insert(p).second) out.push_back(p);
  }
  return out;
}

Vector random_tangent(const ProjectivePoint& base, Rng& rng) {
  for (;;) {
    Vector t = rng.vector(base.field(), base.ambient_dim() + 1);
    Matrix m = Matrix::from_rows(base.field(), t.size(), {base.coords(), t});
    if (rank(m) == 2) return t;
  }
}

Matrix random_invertible(Field field, std::size_t size, Rng& rng) {
  for (;;) {
    std::vector<Vector> rows;
    for (std::size_t i = 0; i < size; ++i) rows.push_back(rng.vector(field, size));
    Matrix g = Matrix::from_rows(field, size, rows);
    if (rank(g) == size) return g;
  }
}

// Random matrix of a chosen rank: a product of random rows x r and r x cols factors.
Matrix random_matrix(Field field, std::size_t rows, std::size_t cols, Rng& rng) {
  const std::size_t r = rng.below(std::min(rows, cols) + 1);
  std::vector<Vector> a, b;
  for (std::size_t i = 0; i < rows; ++i) a.push_back(rng.vector(field, r));
  for (std::size_t i = 0; i < r; ++i) b.push_back(rng.vector(field, cols));
  if (r == 0) return Matrix(field, rows, cols);
  return Matrix::from_rows(field, r, a) * Matrix::from_rows(field, cols, b);
}

Field small_field(Rng& rng) {
  static const std::uint32_t primes[] = {2, 3, 5, 7, 11, 101, 65521};
  const auto i = rng.below(8);
  return i == 7 ? Field::rational() : Field::prime(primes[i]);
}

FiniteSubscheme random_scheme(Field field, std::size_t n, std::size_t count, bool fat, Rng& rng) {
  std::vector<FatPoint> pts;
  for (const auto& p : distinct_points(field, n, count, rng)) {
    if (fat && rng.below(2) == 0) {
      pts.emplace_back(p, random_tangent(p, rng));
    } else {
      pts.emplace_back(p);
    }
  }
  return FiniteSubscheme(field, n, std::move(pts));
}

FatPoint transform(const Matrix& g, const FatPoint& p) {
  ProjectivePoint base(g.apply(p.base().coords()));
  if (!p.tangent()) return FatPoint(base);
  return FatPoint(base, g.apply(*p.tangent()));
}

// Evaluation rows built directly from monomials at an arbitrary representative.
Matrix raw_rows(Field field, std::size_t n, long long d, const std::vector<std::pair<Vector, std::optional<Vector>>>& pts) {
  const auto basis = monomial_basis(n, static_cast<unsigned>(d));
  std::vector<Vector> rows;
  for (const auto& [v, t] : pts) {
    Vector row, drow;
    for (const auto& m : basis) {
      const Form f = Form::monomial(field, m, Scalar(field, 1));
      row.push_back(f.evaluate(v));
      if (t) drow.push_back(f.directional_derivative(v, *t));
    }
    rows.push_back(row);
    if (t) rows.push_back(drow);
  }
  return Matrix::from_rows(field, basis.size(), rows);
}

bool property(std::ostringstream& detail, const char* name, std::size_t cases, std::size_t failures,
              std::size_t minimum = 1000) {
  detail << name << " " << cases - failures << "/" << cases << "; ";
  return failures == 0 && cases >= minimum;
}

}  // namespace

CriterionResult criterion_collinear_plus_one(const SuiteOptions&) {
  const Field f = Field::prime(101);
  const FiniteSubscheme z = FiniteSubscheme::reduced(
      f, 2,
      {ProjectivePoint::from_integers(f, {1, 0, 1}), ProjectivePoint::from_integers(f, {0, 1, 1}),
       ProjectivePoint::from_integers(f, {1, 1, 2}), ProjectivePoint::from_integers(f, {1, 0, 0})});
  return timed(1, "three collinear points plus one: dependent and not CB for m=1", 1e-3, [&](std::ostringstream& d) {
    const auto c = imposes_independent_conditions(z, 1);
    const bool cb = cayley_bacharach(z, 1);
    d << "independent=" << (c.independent ? "true" : "false") << " failure_index=" << c.failure_index
      << " cb=" << (cb ? "true" : "false");
    return !c.independent && c.failure_index == 1 && !cb;
  });
}

CriterionResult criterion_plane_quintic_projection(const SuiteOptions& options) {
  return timed(2, "plane quintic over F_101 projected from a point: degree 4, fibers CB wrt K_C", 10.0,
               [&](std::ostringstream& d) {
                 const Field f = Field::prime(101);
                 const EnumerationOptions eo{kDefaultPointBudget, options.workers};
                 auto sample = random_smooth_curve(f, {5}, options.seed + 1, eo, 2);
                 Rng rng(options.seed + 1);
                 const auto center = random_chord_center(sample.curve, rng);
                 const auto degree = projection_degree(sample.curve, center);
                 std::size_t complete = 0, passed = 0, covered = 0;
                 const auto fibers = fibers_over_rational_points(sample.curve, PencilMap(center));
                 for (const auto& fiber : fibers) {
                   covered += fiber.points.size();
                   if (fiber.points.size() != degree) continue;
                   ++complete;
                   if (cb_with_respect_to_canonical(sample.curve.curve(), fiber.points, options.workers)) ++passed;
                 }
                 d << "points=" << sample.curve.points().size() << " projection_degree=" << degree
                   << " fibers=" << fibers.size() << " complete=" << complete << " cb=" << passed;
                 return degree == 4 && complete > 0 && passed == complete && fibers.size() == 102 &&
                        covered + 1 == sample.curve.points().size();
               });
}

CriterionResult criterion_formula_sweep(const SuiteOptions&) {
  return timed(3, "gonality formulas exact for a_i <= 10, n <= 5", 1.0, [&](std::ostringstream& d) {
    std::size_t cases = 0, chains = 0, failures = 0;
    std::vector<unsigned> degrees;
    std::function<void(std::size_t, unsigned)> sweep = [&](std::size_t len, unsigned lo) {
      if (degrees.size() == len) {
        const auto g = gonality_report(degrees);
        long long deg_c = 1, tail = 1;
        for (std::size_t i = 0; i < degrees.size(); ++i) {
          deg_c *= degrees[i];
          if (i > 0) tail *= degrees[i];
        }
        const long long n = static_cast<long long>(len) + 1, a1 = degrees[0];
        bool ok = g.deg_c == deg_c && g.deg_s == tail && g.alpha == a1 && g.lazarsfeld_lower == (a1 - 1) * tail &&
                  g.corb_value == deg_c - 2 * n + 2 && g.cord_lower == deg_c - tail &&
                  g.cord_upper == deg_c - 2 * n + 3 && g.key_lemma_lower == tail * (a1 - 1);
        if (len == 1) ok = ok && g.noether_value && *g.noether_value == a1 - 1;
        if (n >= 3 && a1 >= 4 && a1 < static_cast<long long>(degrees[1])) {
          ++chains;
          ok = ok && g.lazarsfeld_lower <= g.corb_value && g.corb_value <= g.cord_upper &&
               g.key_lemma_lower == g.cord_lower && g.hypothesis_violations.empty();
        }
        ++cases;
        if (!ok) ++failures;
        return;
      }
      for (unsigned a = lo; a <= 10; ++a) {
        degrees.push_back(a);
        sweep(len, a);
        degrees.pop_back();
      }
    };
    for (std::size_t len = 1; len <= 4; ++len) sweep(len, 2);
    const auto g45 = gonality_report({4, 5});
    d << "types=" << cases << " chains=" << chains << " failures=" << failures << " (4,5): lazarsfeld="
      << g45.lazarsfeld_lower << " corb=" << g45.corb_value << " cord=[" << g45.cord_lower << "," << g45.cord_upper
      << "]";
    return failures == 0 && chains > 0 && g45.lazarsfeld_lower == 15 && g45.corb_value == 16;
  });
}

CriterionResult criterion_dimension_audit(const SuiteOptions&) {
  return timed(4, "dimension audit: (4,5) gives 88 < 89, difference 1 across the sweep", 1.0,
               [&](std::ostringstream& d) {
                 const auto a = dimension_audit({4, 5});
                 bool ok = a.dim_y == 88 && a.dim_psi == 89 && a.y_cannot_dominate;
                 std::size_t cases = 0, failures = 0;
                 std::vector<unsigned> degrees;
                 std::function<void(std::size_t, unsigned)> sweep = [&](std::size_t len, unsigned lo) {
                   if (degrees.size() == len) {
                     const auto x = dimension_audit(degrees);
                     const long long n = static_cast<long long>(x.n);
                     long long sum = 0;
                     for (unsigned ai : degrees) sum += static_cast<long long>(binomial(ai + x.n, x.n));
                     const bool good = x.dim_psi - x.dim_y == 1 && x.fiber_dim == -2 * n * n + 2 * n + sum &&
                                       x.dim_y == sum - n && x.dim_psi == sum - n + 1 && x.y_cannot_dominate &&
                                       x.y_prime_matches_psi;
                     ++cases;
                     if (!good) ++failures;
                     return;
                   }
                   for (unsigned ai = lo; ai <= 10; ++ai) {
                     degrees.push_back(ai);
                     sweep(len, ai);
                     degrees.pop_back();
                   }
                 };
                 for (std::size_t len = 2; len <= 4; ++len) sweep(len, 4);
                 d << "(4,5): dim_Y=" << a.dim_y << " dim_Psi=" << a.dim_psi
                   << (a.y_cannot_dominate ? " cannot dominate" : " may dominate") << "; sweep " << cases - failures
                   << "/" << cases;
                 return ok && failures == 0;
               });
}

CriterionResult criterion_cbconj_grids(const SuiteOptions& options) {
  return timed(5, "cbconj scan on (2,2,4) grids over F_101, 5 seeds, e in {0,1}", 120.0, [&](std::ostringstream& d) {
    const Field f = Field::prime(101);
    std::size_t passed = 0, runs = 0;
    for (std::uint64_t s = 1; s <= 5; ++s) {
      const auto grid = random_grid_ci(f, {2, 2, 4}, options.seed + s);
      const auto z = FiniteSubscheme::reduced(f, 3, grid.points);
      for (unsigned e = 0; e <= 1; ++e) {
        ScanOptions so;
        so.workers = options.workers;
        const auto r = cbconj_scan(z, {2, 2, 4}, e, so);
        ++runs;
        const bool ok = r.pass && r.m == e + 2 && r.bound == (e + 1) * 4 &&
                        (!r.min_failing_degree || *r.min_failing_degree >= r.bound);
        if (ok) ++passed;
        d << "seed " << options.seed + s << " e=" << e << ": min_failing="
          << (r.min_failing_degree ? std::to_string(*r.min_failing_degree) : "none") << "; ";
      }
    }
    d << passed << "/" << runs << " PASS";
    return passed == runs;
  });
}

CriterionResult criterion_planted_secant(const SuiteOptions& options) {
  return timed(6, "planted 4-secant line on (4,5) curves found by the census, 5 seeds", 60.0,
               [&](std::ostringstream& d) {
                 const Field f = Field::prime(101);
                 std::size_t found = 0;
                 for (std::uint64_t s = 1; s <= 5; ++s) {
                   const auto planted = planted_secant_curve(f, {4, 5}, options.seed + s,
                                                             {kDefaultPointBudget, options.workers});
                   const auto census = secant_census(planted.curve, 4, {10'000'000, options.workers});
                   const bool in_census = std::any_of(census.begin(), census.end(), [&](const SecantPlane& p) {
                     return p.plane == planted.plane && p.secancy >= 4;
                   });
                   const std::size_t gamma = gamma_census(planted.curve, {10'000'000, options.workers});
                   if (in_census && gamma >= 4) ++found;
                   d << "seed " << options.seed + s << ": points=" << planted.curve.points().size()
                     << " census=" << census.size() << " gamma=" << gamma << "; ";
                 }
                 d << found << "/5 detected";
                 return found == 5;
               });
}

CriterionResult criterion_fiber_spans(const SuiteOptions& options) {
  // A fiber is the whole divisor f^{-1}(t), which has deg f points over the
  // closure. When the F_p-points of a fiber lie on a line G, the fiber spans
  // a hyperplane iff it is not contained in G, i.e. iff length(C n G) < deg f.
  return timed(7, "fibers of chord projections of (4,5) curves span distinct planes, 10 seeds", 0.0,
               [&](std::ostringstream& d) {
                 const Field f = Field::prime(101);
                 std::size_t good = 0, fibers_checked = 0, rational_deficient = 0, contained = 0;
                 for (std::uint64_t s = 1; s <= 10; ++s) {
                   auto sample = random_smooth_curve(f, {4, 5}, options.seed + 100 + s,
                                                     {kDefaultPointBudget, options.workers}, 3);
                   Rng rng(options.seed + 100 + s);
                   const PencilMap pencil(random_chord_center(sample.curve, rng));
                   const auto degree = projection_degree(sample.curve, pencil.center());
                   bool ok = true;
                   for (const auto& fiber : fibers_over_rational_points(sample.curve, pencil)) {
                     if (fiber.points.size() < 3) continue;
                     ++fibers_checked;
                     if (fiber_spans_hyperplane(sample.curve, fiber.points)) continue;
                     ++rational_deficient;
                     const auto pts = fiber.points.supports();
                     const auto length = line_section_length(sample.curve.curve(), span(pts));
                     if (!length || *length >= degree) {
                       ok = false;
                       ++contained;
                     }
                   }
                   ok = ok && one_fiber_per_hyperplane(sample.curve, pencil).holds;
                   if (ok) ++good;
                 }
                 d << good << "/10 instances; fibers with >= 3 rational points: " << fibers_checked
                   << ", rational points collinear: " << rational_deficient
                   << ", fiber contained in that line: " << contained;
                 return good == 10;
               });
}

CriterionResult criterion_property_suites(const SuiteOptions& options) {
  return timed(8, "property suites, 1000 cases each", 120.0, [&](std::ostringstream& d) {
    Rng rng(options.seed + 8);
    bool ok = true;

    {  // rank duality, kernel count, equivalence invariance
      std::size_t failures = 0;
      for (int i = 0; i < 1000; ++i) {
        const Field f = small_field(rng);
        const std::size_t rows = 1 + rng.below(6), cols = 1 + rng.below(6);
        const Matrix m = random_matrix(f, rows, cols, rng);
        const std::size_t r = rank(m);
        const auto ker = kernel(m);
        bool good = rank(m.transpose()) == r && ker.size() + r == cols;
        for (const auto& v : ker) {
          const auto w = m.apply(v);
          good = good && std::all_of(w.begin(), w.end(), [](const Scalar& s) { return s.is_zero(); });
        }
        const Matrix p = random_invertible(f, rows, rng), q = random_invertible(f, cols, rng);
        good = good && rank(p * m * q) == r;
        if (!good) ++failures;
      }
      ok = property(d, "rank-duality", 1000, failures) && ok;
    }

    {  // Euler relation
      std::size_t failures = 0, cases = 0;
      while (cases < 1000) {
        const Field f = small_field(rng);
        const unsigned deg = 1 + static_cast<unsigned>(rng.below(4));
        if (!f.is_rational() && deg % f.characteristic() == 0) continue;
        const std::size_t n = 1 + rng.below(3);
        const Form g = random_form(f, n, deg, rng);
        const Vector x = rng.vector(f, n + 1);
        Scalar lhs(f);
        for (std::size_t i = 0; i <= n; ++i) lhs += x[i] * g.partial(i).evaluate(x);
        if (lhs != Scalar(f, deg) * g.evaluate(x)) ++failures;
        ++cases;
      }
      ok = property(d, "euler", cases, failures) && ok;
    }

    {  // CB implies dependent
      std::size_t failures = 0, cb_true = 0;
      for (int i = 0; i < 1000; ++i) {
        const Field f = Field::prime(i % 2 ? 7 : 101);
        FiniteSubscheme z = FiniteSubscheme::reduced(f, 2, {});
        long long m = 0;
        if (i % 4 == 0) {
          // Complete intersections of two forms of degrees a, b are CB for a + b - 3.
          const unsigned a = 1 + static_cast<unsigned>(rng.below(2)), b = 2;
          const auto grid = random_grid_ci(Field::prime(101), {a, b}, rng.next());
          z = FiniteSubscheme::reduced(Field::prime(101), 2, grid.points);
          m = a + b - 3;
        } else {
          const std::size_t n = 1 + rng.below(3);
          z = FiniteSubscheme::reduced(f, n, distinct_points(f, n, 2 + rng.below(6), rng));
          m = static_cast<long long>(rng.below(4));
        }
        const bool cb = cayley_bacharach(z, m);
        if (cb) {
          ++cb_true;
          if (imposes_independent_conditions(z, m).independent) ++failures;
        }
      }
      d << "(cb-true " << cb_true << ") ";
      ok = property(d, "cb-implies-dependent", 1000, failures) && cb_true >= 100 && ok;
    }

    {  // failure index monotone under subsets
      std::size_t failures = 0;
      for (int i = 0; i < 1000; ++i) {
        const Field f = Field::prime(i % 3 ? 7 : 101);
        const std::size_t n = 1 + rng.below(3);
        const auto z = random_scheme(f, n, 1 + rng.below(8), true, rng);
        const long long m = static_cast<long long>(rng.below(4));
        std::vector<std::size_t> sub;
        for (std::size_t j = 0; j < z.size(); ++j) {
          if (rng.below(2)) sub.push_back(j);
        }
        const auto whole = imposes_independent_conditions(z, m);
        const auto part = imposes_independent_conditions(z.subset(sub), m);
        if (part.failure_index > whole.failure_index) ++failures;
      }
      ok = property(d, "monotonicity", 1000, failures) && ok;
    }

    {  // PGL invariance
      std::size_t failures = 0;
      for (int i = 0; i < 1000; ++i) {
        const Field f = i % 5 == 0 ? Field::rational() : Field::prime(i % 2 ? 7 : 101);
        const std::size_t n = 1 + rng.below(3);
        const bool fat = i % 2 == 0;
        const auto z = random_scheme(f, n, 2 + rng.below(5), fat, rng);
        const long long m = static_cast<long long>(rng.below(4));
        const Matrix g = random_invertible(f, n + 1, rng);
        std::vector<FatPoint> moved;
        for (const auto& p : z.points()) moved.push_back(transform(g, p));
        const FiniteSubscheme gz(f, n, moved);
        const auto a = imposes_independent_conditions(z, m), b = imposes_independent_conditions(gz, m);
        bool good = a.rank == b.rank && a.independent == b.independent;
        if (!fat) good = good && cayley_bacharach(z, m) == cayley_bacharach(gz, m);
        if (!good) ++failures;
      }
      ok = property(d, "pgl-invariance", 1000, failures) && ok;
    }

    {  // fiber partition of plane curves over small primes
      std::size_t failures = 0, cases = 0;
      static const std::uint32_t primes[] = {5, 7, 11, 13};
      while (cases < 1000) {
        const Field f = Field::prime(primes[rng.below(4)]);
        const unsigned deg = 2 + static_cast<unsigned>(rng.below(3));
        const CompleteIntersection ci(f, 2, {random_form(f, 2, deg, rng)});
        if (ci.forms()[0].is_zero()) continue;
        // Oracle: scan the plane directly.
        std::vector<ProjectivePoint> on_curve;
        for (const auto& p : enumerate_projective_space(2, f)) {
          if (ci.forms()[0].evaluate(p.coords()).is_zero()) on_curve.push_back(p);
        }
        std::vector<ProjectivePoint> smooth;
        for (const auto& p : on_curve) {
          if (is_smooth_at(ci, p)) smooth.push_back(p);
        }
        if (smooth.empty()) continue;
        const RationalCurve curve(ci, on_curve);
        const auto& p = smooth[rng.below(smooth.size())];
        const PencilMap pencil(span(std::vector<ProjectivePoint>{p}));
        const auto fibers = fibers_over_rational_points(curve, pencil);
        std::multiset<ProjectivePoint> seen;
        bool good = fibers.size() == f.characteristic() + 1u;
        for (const auto& fiber : fibers) {
          const Form h = pencil.hyperplane(fiber.over);
          for (const auto& q : fiber.points.supports()) {
            seen.insert(q);
            good = good && h.evaluate(q.coords()).is_zero();
          }
        }
        std::multiset<ProjectivePoint> expected(on_curve.begin(), on_curve.end());
        expected.erase(p);
        good = good && seen == expected;
        if (!good) ++failures;
        ++cases;
      }
      ok = property(d, "fiber-partition", cases, failures) && ok;
    }

    {  // scaling invariance of evaluation ranks
      std::size_t failures = 0;
      for (int i = 0; i < 1000; ++i) {
        const Field f = i % 4 == 0 ? Field::rational() : Field::prime(i % 2 ? 7 : 101);
        const std::size_t n = 1 + rng.below(3);
        const auto z = random_scheme(f, n, 1 + rng.below(5), true, rng);
        const long long d = static_cast<long long>(rng.below(4));
        std::vector<std::pair<Vector, std::optional<Vector>>> raw;
        for (const auto& p : z.points()) {
          const Scalar lambda = rng.nonzero_scalar(f);
          Vector v = p.base().coords();
          for (auto& x : v) x *= lambda;
          std::optional<Vector> t;
          if (p.tangent()) {
            const Scalar mu = rng.nonzero_scalar(f), nu = rng.scalar(f);
            t = *p.tangent();
            for (std::size_t j = 0; j < t->size(); ++j) (*t)[j] = mu * (*t)[j] + nu * v[j];
          }
          raw.emplace_back(std::move(v), std::move(t));
        }
        if (rank(raw_rows(f, n, d, raw)) != rank(evaluation_rows(z, d))) ++failures;
      }
      ok = property(d, "scaling-invariance", 1000, failures) && ok;
    }
    return ok;
  });
}

std::vector<CriterionResult> run_acceptance_suite(const SuiteOptions& options) {
  return {criterion_collinear_plus_one(options), criterion_plane_quintic_projection(options),
          criterion_formula_sweep(options),        criterion_dimension_audit(options),
          criterion_cbconj_grids(options),         criterion_planted_secant(options),
          criterion_fiber_spans(options),          criterion_property_suites(options)};
}

}  // namespace cbgon
