#include "cbgon/error.hpp"
#include "cbgon/generators.hpp"
#include "cbgon/polynomial.hpp"
#include "helpers.hpp"

#include <doctest.h>

using namespace cbgon;

namespace {

Vector vec(Field f, std::vector<long long> v) {
  Vector out;
  for (long long x : v) out.emplace_back(f, x);
  return out;
}

}  // namespace

TEST_CASE("monomial basis") {
  const auto b1 = monomial_basis(2, 1);
  REQUIRE(b1.size() == 3);
  CHECK(b1[0].to_string() == "x0");
  CHECK(b1[2].to_string() == "x2");
  CHECK(monomial_basis(2, 2).size() == 6);
  const auto b = monomial_basis(3, 4);
  CHECK(b.size() == 35);
  CHECK(b.size() > 2 * 3 - 1);
  CHECK(monomial_basis(2, 0).size() == 1);
  for (std::size_t n = 1; n <= 6; ++n) {
    for (unsigned d = 0; d <= 12; ++d) {
      const auto basis = monomial_basis(n, d);
      REQUIRE(basis.size() == oracle::exponents(n, d).size());
      REQUIRE(basis.size() == binomial(n + d, n));
      for (std::size_t i = 1; i < basis.size(); ++i) REQUIRE(basis[i - 1] > basis[i]);
    }
  }
}

TEST_CASE("parse examples") {
  const Field q = Field::rational();
  const Form f = parse_form("x0^2 + 2*x1*x2", 2, q);
  CHECK(f.degree() == 2);
  CHECK(f.terms().size() == 2);
  CHECK(f.coefficient(Monomial({0, 1, 1})) == Scalar(q, 2));
  try {
    parse_form("x0 + x1^2", 2, q);
    FAIL("expected NotHomogeneous");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotHomogeneous);
  }
  const Form m = parse_form("x0*x1*x2*x3", 3, q);
  CHECK(m.degree() == 4);
  CHECK(m.terms().size() == 1);
}

TEST_CASE("parse errors and accepted syntax") {
  const Field f = Field::prime(7);
  auto code = [&](const char* text, std::size_t n) {
    try {
      parse_form(text, n, f);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::InvalidArgument;
  };
  CHECK(code("x0 +", 2) == ErrorCode::SyntaxError);
  CHECK(code("x0 * * x1", 2) == ErrorCode::SyntaxError);
  CHECK(code("x3", 2) == ErrorCode::WrongVariable);
  CHECK(code("y0", 2) == ErrorCode::SyntaxError);
  CHECK(parse_form("3/2*x0 - x1", 1, f).coefficient(Monomial({1, 0})) == Scalar(f, 5));
  CHECK(parse_form("-x0", 1, f).coefficient(Monomial({1, 0})) == Scalar(f, 6));
  CHECK(parse_form("x0 - x0", 1, f).is_zero());
  CHECK(parse_form("x0^2*x1 + x0*x1*x0", 1, f).coefficient(Monomial({2, 1})) == Scalar(f, 2));
}

TEST_CASE("evaluation examples") {
  const Field q = Field::rational();
  CHECK(parse_form("x0", 2, q).evaluate(vec(q, {1, 0, 0})).is_one());
  CHECK(parse_form("x0*x1 - x2^2", 2, q).evaluate(vec(q, {1, 1, 1})).is_zero());
  const Field f5 = Field::prime(5);
  const Form g = parse_form("x0^2 + x1^2", 2, f5);
  // Direct substitution: 1 + 4 = 5 = 0 mod 5.
  CHECK(g.evaluate(vec(f5, {1, 2, 0})).residue() == (1 + 4) % 5);
  // Scaling the point by t scales the value by t^d.
  const Scalar t(q, 3);
  const Form h = parse_form("x0^3 - 2*x1*x2^2 + x0*x1*x2", 2, q);
  const Vector v = vec(q, {2, -1, 5}), tv = vec(q, {6, -3, 15});
  CHECK(h.evaluate(tv) == t.pow(3) * h.evaluate(v));
}

TEST_CASE("partial derivative examples") {
  const Field q = Field::rational();
  CHECK(partial_derivative(parse_form("x0^2", 2, q), 0) == parse_form("2*x0", 2, q));
  CHECK(partial_derivative(parse_form("x0^2", 2, q), 1).is_zero());
  CHECK(partial_derivative(parse_form("x0*x1*x2", 2, q), 1) == parse_form("x0*x2", 2, q));
  CHECK(partial_derivative(parse_form("x0^2", 2, q), 1).degree() == 1);
}

TEST_CASE("Euler relation on random forms") {
  Rng rng(3);
  int checked = 0;
  for (const Field f : {Field::prime(7), Field::prime(101), Field::rational()}) {
    for (int i = 0; i < 400; ++i) {
      const unsigned d = 1 + static_cast<unsigned>(rng.below(5));
      if (!f.is_rational() && d % f.characteristic() == 0) continue;
      const std::size_t n = 1 + rng.below(4);
      const Form g = random_form(f, n, d, rng);
      const Vector x = rng.vector(f, n + 1);
      Scalar lhs(f);
      for (std::size_t j = 0; j <= n; ++j) lhs += x[j] * partial_derivative(g, j).evaluate(x);
      REQUIRE(lhs == Scalar(f, d) * g.evaluate(x));
      ++checked;
    }
  }
  CHECK(checked >= 1000);
}

TEST_CASE("print then parse is the identity") {
  Rng rng(4);
  for (int i = 0; i < 1000; ++i) {
    const Field f = i % 3 == 0 ? Field::rational() : Field::prime(i % 2 ? 7 : 65521);
    const std::size_t n = 1 + rng.below(4);
    const unsigned d = static_cast<unsigned>(rng.below(5));
    const Form g = random_form(f, n, d, rng);
    if (g.is_zero()) continue;
    REQUIRE(parse_form(g.to_string(), n, f) == g);
  }
  const Field q = Field::rational();
  Form r(q, 2, 2);
  r.add_term(Monomial({1, 1, 0}), Scalar(q, -3, 4));
  r.add_term(Monomial({0, 0, 2}), Scalar(q, 5, 2));
  CHECK(parse_form(r.to_string(), 2, q) == r);
}

TEST_CASE("evaluation is multiplicative") {
  Rng rng(5);
  for (int i = 0; i < 1000; ++i) {
    const Field f = i % 2 ? Field::prime(101) : Field::rational();
    const std::size_t n = 1 + rng.below(3);
    const Form a = random_form(f, n, static_cast<unsigned>(rng.below(4)), rng);
    const Form b = random_form(f, n, static_cast<unsigned>(rng.below(4)), rng);
    const Vector x = rng.vector(f, n + 1);
    REQUIRE((a * b).evaluate(x) == a.evaluate(x) * b.evaluate(x));
  }
}

TEST_CASE("forms reject incompatible operations") {
  const Field f = Field::prime(7);
  CHECK_THROWS_AS(parse_form("x0", 1, f) + parse_form("x0^2", 1, f), Error);
  CHECK_THROWS_AS(parse_form("x0", 1, f) + parse_form("x0", 2, f), Error);
  Form g(f, 1, 2);
  CHECK_THROWS_AS(g.add_term(Monomial({1, 0}), Scalar(f, 1)), Error);
  CHECK_THROWS_AS(g.add_term(Monomial({1, 0, 1}), Scalar(f, 1)), Error);
}
