#pragma once

#include "cbgon/field.hpp"

#include <compare>
#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cbgon {

/// Exponent vector over variables x0..xn.
class Monomial {
 public:
  explicit Monomial(std::vector<unsigned> exponents);

  std::size_t num_vars() const noexcept { return exponents_.size(); }
  unsigned degree() const noexcept { return degree_; }
  unsigned exponent(std::size_t i) const { return exponents_.at(i); }
  const std::vector<unsigned>& exponents() const noexcept { return exponents_; }

  Monomial operator*(const Monomial& other) const;

  /// Graded lexicographic order with x0 > x1 > ... > xn.
  friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) = default;

  std::string to_string() const;

 private:
  std::vector<unsigned> exponents_;
  unsigned degree_ = 0;
};

/// C(n, k) as a 64-bit count; throws on overflow.
unsigned long long binomial(unsigned long long n, unsigned long long k);

/// All degree-d monomials in n+1 variables, largest first in graded lex order
/// (x0^d, x0^(d-1) x1, ...). Length C(n+d, n).
std::vector<Monomial> monomial_basis(std::size_t n, unsigned d);

/// Homogeneous polynomial of fixed degree in x0..xn.
class Form {
 public:
  using Terms = std::map<Monomial, Scalar, std::greater<>>;

  Form(Field field, std::size_t n, unsigned degree);

  static Form linear(Field field, std::span<const Scalar> coefficients);
  static Form monomial(Field field, const Monomial& m, const Scalar& coefficient);

  Field field() const noexcept { return field_; }
  std::size_t ambient_dim() const noexcept { return n_; }
  unsigned degree() const noexcept { return degree_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  Scalar coefficient(const Monomial& m) const;

  /// Adds c*m; throws NotHomogeneous if deg m differs from the form's degree.
  void add_term(const Monomial& m, const Scalar& c);

  Scalar evaluate(std::span<const Scalar> point) const;
  Form partial(std::size_t variable) const;
  /// Sum_i v_i * df/dx_i evaluated at the point.
  Scalar directional_derivative(std::span<const Scalar> point,
                                std::span<const Scalar> direction) const;
  /// Linear forms only: coefficient of each variable.
  std::vector<Scalar> linear_coefficients() const;

  Form& operator+=(const Form& other);
  Form& operator-=(const Form& other);
  Form operator*(const Form& other) const;
  Form scaled(const Scalar& c) const;
  friend Form operator+(Form a, const Form& b) { return a += b; }
  friend Form operator-(Form a, const Form& b) { return a -= b; }

  friend bool operator==(const Form&, const Form&) = default;

  /// Printed in the same grammar parse_form accepts.
  std::string to_string() const;

 private:
  void require_compatible(const Form& other) const;

  Field field_;
  std::size_t n_;
  unsigned degree_;
  Terms terms_;
};

/// Grammar (whitespace ignored between tokens):
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := coeff ('*' factor)* | factor ('*' factor)*
///   factor := 'x' INDEX ('^' EXP)?
///   coeff  := INTEGER | INTEGER '/' INTEGER
Form parse_form(std::string_view text, std::size_t n, Field field);

inline Scalar eval_form(const Form& f, std::span<const Scalar> point) { return f.evaluate(point); }
inline Form partial_derivative(const Form& f, std::size_t i) { return f.partial(i); }

}  // namespace cbgon
