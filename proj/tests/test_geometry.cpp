#include "cbgon/error.hpp"
#include "cbgon/generators.hpp"
#include "cbgon/geometry.hpp"
#include "helpers.hpp"

#include <doctest.h>

#include <set>

using namespace cbgon;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

const Field kF101 = Field::prime(101);

}  // namespace

TEST_CASE("span examples") {
  const Field f = kF101;
  CHECK(span(std::vector{point(f, {1, 0, 0, 0}), point(f, {0, 1, 0, 0})}).proj_dim() == 1);
  const auto all = span(std::vector{point(f, {1, 0, 0, 0}), point(f, {0, 1, 0, 0}), point(f, {0, 0, 1, 0}),
                                    point(f, {0, 0, 0, 1})});
  CHECK(all.proj_dim() == 3);
  CHECK(all.dual_basis().empty());
  const std::vector coplanar{point(f, {1, 0, 0, 5}), point(f, {0, 1, 0, 7}), point(f, {0, 0, 1, 9}),
                             point(f, {1, 1, 1, 21})};
  const auto plane = span(coplanar);
  CHECK(plane.proj_dim() == 2);
  std::vector<oracle::Row> coords = residues(coplanar);
  CHECK(oracle::gauss_rank(coords, 101) == 3);
  for (const auto& p : coplanar) CHECK(plane.contains(p));
  CHECK_FALSE(plane.contains(point(f, {0, 0, 0, 1})));
}

TEST_CASE("subspace keys identify equal subspaces") {
  const Field f = kF101;
  const auto a = span(std::vector{point(f, {1, 0, 0, 0}), point(f, {0, 1, 0, 0})});
  const auto b = span(std::vector{point(f, {1, 1, 0, 0}), point(f, {1, 2, 0, 0})});
  CHECK(a == b);
  const LinearSubspace c(f, 3, {parse_form("x2", 3, f), parse_form("x2 + x3", 3, f)});
  CHECK(a == c);
  CHECK(code_of([&] { LinearSubspace(f, 3, {parse_form("x2", 3, f), parse_form("2*x2", 3, f)}); }) ==
        ErrorCode::DegenerateConfiguration);
}

TEST_CASE("projection degree examples") {
  auto quintic = random_smooth_curve(kF101, {5}, 3, {}, 2);
  const auto& p = quintic.curve.points().front();
  CHECK(projection_degree(quintic.curve, span(std::vector{p})) == 4);
  Rng rng(1);
  const ProjectivePoint off = [&] {
    for (;;) {
      ProjectivePoint q(rng.vector(kF101, 3));
      if (!quintic.curve.curve().contains(q)) return q;
    }
  }();
  CHECK(projection_degree(quintic.curve, span(std::vector{off})) == 5);

  const auto planted = planted_secant_curve(kF101, {4, 5}, 4);
  CHECK(projection_degree(planted.curve, planted.plane) == 16);
  const auto meet = intersect_center(planted.curve, planted.plane);
  CHECK(meet.length == 4);
  CHECK(meet.length_exact);
  CHECK(meet.rational_points.size() == 4);
  CHECK(projection_degree(planted.curve, planted.plane) + meet.length == 20);

  // Every line through two points of C: the degree drops by the exact length.
  for (std::size_t i = 1; i < 6; ++i) {
    const auto line = span(std::vector{planted.curve.points()[0], planted.curve.points()[i]});
    try {
      const auto m = intersect_center(planted.curve, line);
      CHECK(projection_degree(planted.curve, line) + m.length == 20);
      CHECK(m.length >= m.rational_points.size());
    } catch (const Error& e) {
      CHECK((e.code() == ErrorCode::NonReducedCenterIntersection || e.code() == ErrorCode::SingularAtCenter));
    }
  }
}

TEST_CASE("non-reduced or singular centers are rejected") {
  const Field f = kF101;
  // Nodal cubic: the node is a singular point of C.
  const RationalCurve nodal = RationalCurve::enumerate(
      CompleteIntersection(f, 2, {parse_form("x1^2*x2 - x0^2*x2 - x0^3", 2, f)}));
  CHECK(code_of([&] { intersect_center(nodal, span(std::vector{point(f, {0, 0, 1})})); }) ==
        ErrorCode::SingularAtCenter);
  // Twisted-cubic-like curve x0*x2 = x1^2, x1*x3 = x2^2 contains a line; use
  // the tangent line of the conic-over-line instead: C = V(x1^2 - x0*x2, x3).
  const RationalCurve conic = RationalCurve::enumerate(
      CompleteIntersection(f, 3, {parse_form("x3", 3, f), parse_form("x1^2 - x0*x2", 3, f)}));
  const LinearSubspace tangent(f, 3, {parse_form("x2", 3, f), parse_form("x3", 3, f)});
  CHECK(code_of([&] { intersect_center(conic, tangent); }) == ErrorCode::NonReducedCenterIntersection);
}

TEST_CASE("fibers partition the rational points") {
  auto quintic = random_smooth_curve(kF101, {5}, 5, {}, 2);
  const auto& c = quintic.curve;
  const auto& p = c.points()[1];
  const PencilMap pencil(span(std::vector{p}));
  const auto fibers = fibers_over_rational_points(c, pencil);
  CHECK(fibers.size() == 102);
  std::size_t total = 0;
  std::set<ProjectivePoint> seen;
  // Oracle: each curve point other than P lies in exactly the fiber of its image.
  for (const auto& fiber : fibers) {
    total += fiber.points.size();
    const Form h = pencil.hyperplane(fiber.over);
    for (const auto& q : fiber.points.supports()) {
      CHECK(h.evaluate(q.coords()).is_zero());
      CHECK(seen.insert(q).second);
    }
    if (fiber.points.size() >= 2) CHECK(fiber_spans_hyperplane(c, fiber.points));
  }
  CHECK(total + 1 == c.points().size());
  CHECK_FALSE(seen.count(p));
  CHECK(one_fiber_per_hyperplane(c, pencil).holds);

  // A line in P^2 projected from a point off it: every fiber one point.
  const RationalCurve line = RationalCurve::enumerate(CompleteIntersection(kF101, 2, {parse_form("x2", 2, kF101)}));
  for (const auto& fiber : fibers_over_rational_points(line, PencilMap(span(std::vector{point(kF101, {0, 0, 1})})))) {
    CHECK(fiber.points.size() == 1);
  }
}

TEST_CASE("fiber span predicates") {
  const Field f = kF101;
  CHECK_FALSE(fiber_spans_hyperplane(3, FiniteSubscheme::reduced(f, 3, {point(f, {1, 0, 0, 0}), point(f, {0, 1, 0, 0})})));
  const auto section = FiniteSubscheme::reduced(
      f, 3, {point(f, {1, 0, 0, 0}), point(f, {0, 1, 0, 0}), point(f, {0, 0, 1, 0}), point(f, {1, 1, 1, 0})});
  CHECK(fiber_spans_hyperplane(3, section));
  // Two fibers in the same hyperplane: a negative control.
  const auto other = FiniteSubscheme::reduced(
      f, 3, {point(f, {1, 2, 0, 0}), point(f, {0, 1, 3, 0}), point(f, {1, 0, 5, 0})});
  const std::vector<FiniteSubscheme> same{section, other};
  CHECK_FALSE(distinct_fiber_spans(3, same).holds);
  const std::vector<FiniteSubscheme> few{section};
  const auto vacuous = distinct_fiber_spans(3, few);
  CHECK(vacuous.holds);
  CHECK(vacuous.vacuous);
}

TEST_CASE("sparse pencils over tiny fields are vacuous") {
  const Field f3 = Field::prime(3);
  const RationalCurve conic =
      RationalCurve::enumerate(CompleteIntersection(f3, 2, {parse_form("x0*x1 - x2^2", 2, f3)}));
  const PencilMap pencil(span(std::vector{conic.points().front()}));
  const auto check = one_fiber_per_hyperplane(conic, pencil);
  CHECK(check.holds);
  CHECK(check.vacuous);
}

TEST_CASE("secant census") {
  const auto planted = planted_secant_curve(kF101, {4, 5}, 2);
  const auto census = secant_census(planted.curve, 4);
  const auto it = std::find_if(census.begin(), census.end(), [&](const SecantPlane& s) { return s.plane == planted.plane; });
  REQUIRE(it != census.end());
  CHECK(it->secancy >= 4);
  CHECK(gamma_census(planted.curve) >= 4);
  for (const auto& p : planted.planted) CHECK(planted.curve.curve().contains(p));

  // Census oracle: count curve points on every line through two of them.
  const auto& pts = planted.curve.points();
  std::set<std::vector<Vector>> expect;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const auto line = span(std::vector{pts[i], pts[j]});
      std::size_t on = 0;
      for (const auto& q : pts) on += line.contains(q) ? 1 : 0;
      if (on >= 3) expect.insert(line.key());
    }
  }
  std::set<std::vector<Vector>> got;
  for (const auto& s : secant_census(planted.curve, 3)) got.insert(s.plane.key());
  CHECK(got == expect);

  CHECK(secant_census(planted.curve, 4, {10'000'000, 3}).size() == census.size());
  CHECK(code_of([&] { secant_census(planted.curve, 4, {10, 1}); }) == ErrorCode::BudgetExceeded);

  // Plane curves: every rational point is a 1-secant 0-plane.
  auto quintic = random_smooth_curve(kF101, {5}, 1, {}, 1);
  CHECK(secant_census(quintic.curve, 1).size() == quintic.curve.points().size());
  CHECK(gamma_census(quintic.curve) >= 1);
}

TEST_CASE("random (4,5) curves have no rational 5-secant lines") {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    auto sample = random_smooth_curve(kF101, {4, 5}, 50 + seed, {}, 2);
    const auto census = secant_census(sample.curve, 5);
    if (!census.empty()) MESSAGE("seed " << 50 + seed << ": " << census.size() << " rational 5-secant lines");
    CHECK(gamma_census(sample.curve) >= 2);
  }
}

TEST_CASE("gonality formulas") {
  const auto g = gonality_report({4, 5});
  CHECK(g.n == 3);
  CHECK(g.deg_c == 20);
  CHECK(g.deg_s == 5);
  CHECK(g.lazarsfeld_lower == 15);
  CHECK(g.corb_value == 16);
  CHECK(g.cord_lower == 20 - 5);
  CHECK(g.cord_upper == 17);
  CHECK(g.key_lemma_lower == 15);
  CHECK(g.hypothesis_violations.empty());
  const auto plane = gonality_report({5});
  REQUIRE(plane.noether_value);
  CHECK(*plane.noether_value == 4);
  const auto g3 = gonality_report({4, 5, 6});
  CHECK(g3.corb_value == 120 - 8 + 2);
  CHECK(g3.lazarsfeld_lower == 3 * 5 * 6);
  const auto with_gamma = gonality_report({4, 5}, 4);
  REQUIRE(with_gamma.projection_formula_value);
  CHECK(*with_gamma.projection_formula_value == 16);
  CHECK_FALSE(gonality_report({4, 4}).hypothesis_violations.empty());
  CHECK_FALSE(gonality_report({3, 5}).hypothesis_violations.empty());
  CHECK(code_of([] { gonality_report({5, 4}); }) == ErrorCode::DegreeOrderViolation);
  CHECK(code_of([] { gonality_report({1, 4}); }) == ErrorCode::DegreeOrderViolation);
}

TEST_CASE("dimension audit") {
  const auto a = dimension_audit({4, 5});
  CHECK(a.dim_y == 35 + 56 - 3);
  CHECK(a.dim_psi == 89);
  CHECK(a.y_cannot_dominate);
  CHECK(a.dim_y_prime == a.dim_psi);
  const auto b = dimension_audit({4, 4, 4});
  CHECK(b.sections == std::vector<unsigned long long>{70, 70, 70});
  CHECK(b.sections_exceed_2n_minus_1);
  for (unsigned x = 2; x <= 9; ++x) {
    for (unsigned y = x; y <= 9; ++y) {
      const auto d = dimension_audit({x, y});
      CHECK(d.dim_psi - d.dim_y == 1);
    }
  }
  CHECK_FALSE(dimension_audit({3, 5}).hypothesis_violations.empty());
  CHECK_FALSE(dimension_audit({5}).hypothesis_violations.empty());
}
