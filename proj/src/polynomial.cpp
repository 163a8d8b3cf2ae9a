#include "cbgon/polynomial.hpp"

#include "cbgon/error.hpp"

#include <cctype>
#include <limits>
#include <numeric>

namespace cbgon {

Monomial::Monomial(std::vector<unsigned> exponents)
    : exponents_(std::move(exponents)),
      degree_(std::accumulate(exponents_.begin(), exponents_.end(), 0U)) {}

Monomial Monomial::operator*(const Monomial& other) const {
  if (num_vars() != other.num_vars()) {
    throw Error(ErrorCode::InvalidArgument, "monomials in different rings");
  }
  std::vector<unsigned> e(exponents_);
  for (std::size_t i = 0; i < e.size(); ++i) e[i] += other.exponents_[i];
  return Monomial(std::move(e));
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
  if (auto c = a.degree_ <=> b.degree_; c != 0) return c;
  return a.exponents_ <=> b.exponents_;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    if (exponents_[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i);
    if (exponents_[i] > 1) out += '^' + std::to_string(exponents_[i]);
  }
  return out.empty() ? "1" : out;
}

unsigned long long binomial(unsigned long long n, unsigned long long k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned long long result = 1;
  for (unsigned long long i = 1; i <= k; ++i) {
    const unsigned long long num = n - k + i;
    const unsigned long long g = std::gcd(result, i);
    const unsigned long long r = result / g;
    const unsigned long long d = i / g;
    if (r > std::numeric_limits<unsigned long long>::max() / num) {
      throw Error(ErrorCode::BudgetExceeded, "binomial coefficient overflows 64 bits");
    }
    result = r * (num / d);  // d divides num after removing g
  }
  return result;
}

namespace {

void fill_basis(std::vector<unsigned>& e, std::size_t var, unsigned remaining,
                std::vector<Monomial>& out) {
  if (var + 1 == e.size()) {
    e[var] = remaining;
    out.emplace_back(e);
    return;
  }
  for (unsigned k = remaining + 1; k-- > 0;) {
    e[var] = k;
    fill_basis(e, var + 1, remaining - k, out);
  }
  e[var] = 0;
}

}  // namespace

std::vector<Monomial> monomial_basis(std::size_t n, unsigned d) {
  std::vector<Monomial> out;
  out.reserve(binomial(n + d, n));
  std::vector<unsigned> e(n + 1, 0);
  fill_basis(e, 0, d, out);
  return out;
}

Form::Form(Field field, std::size_t n, unsigned degree) : field_(field), n_(n), degree_(degree) {}

Form Form::linear(Field field, std::span<const Scalar> coefficients) {
  if (coefficients.empty()) throw Error(ErrorCode::InvalidArgument, "linear form with no variables");
  Form f(field, coefficients.size() - 1, 1);
  for (std::size_t i = 0; i < coefficients.size(); ++i) {
    std::vector<unsigned> e(coefficients.size(), 0);
    e[i] = 1;
    f.add_term(Monomial(std::move(e)), coefficients[i]);
  }
  return f;
}

Form Form::monomial(Field field, const Monomial& m, const Scalar& coefficient) {
  Form f(field, m.num_vars() - 1, m.degree());
  f.add_term(m, coefficient);
  return f;
}

Scalar Form::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar(field_) : it->second;
}

void Form::add_term(const Monomial& m, const Scalar& c) {
  if (m.num_vars() != n_ + 1) {
    throw Error(ErrorCode::WrongVariable, "monomial " + m.to_string() + " has wrong variable count");
  }
  if (m.degree() != degree_) {
    throw Error(ErrorCode::NotHomogeneous, "term " + m.to_string() + " has degree " +
                                               std::to_string(m.degree()) + ", form has degree " +
                                               std::to_string(degree_));
  }
  if (c.field() != field_) throw Error(ErrorCode::FieldMismatch, "coefficient from another field");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Scalar Form::evaluate(std::span<const Scalar> point) const {
  if (point.size() != n_ + 1) {
    throw Error(ErrorCode::InvalidArgument, "point has " + std::to_string(point.size()) +
                                                " coordinates, expected " + std::to_string(n_ + 1));
  }
  for (const auto& x : point) {
    if (x.field() != field_) throw Error(ErrorCode::FieldMismatch, "point and form over different fields");
  }
  // powers[i][e] = x_i^e
  std::vector<std::vector<Scalar>> powers(n_ + 1);
  for (std::size_t i = 0; i <= n_; ++i) {
    powers[i].reserve(degree_ + 1);
    powers[i].emplace_back(field_, 1);
    for (unsigned e = 1; e <= degree_; ++e) powers[i].push_back(powers[i].back() * point[i]);
  }
  Scalar sum(field_);
  for (const auto& [m, c] : terms_) {
    Scalar t = c;
    for (std::size_t i = 0; i <= n_; ++i) {
      if (m.exponent(i) != 0) t *= powers[i][m.exponent(i)];
    }
    sum += t;
  }
  return sum;
}

Form Form::partial(std::size_t variable) const {
  if (variable > n_) {
    throw Error(ErrorCode::WrongVariable, "variable x" + std::to_string(variable) + " out of range");
  }
  Form out(field_, n_, degree_ == 0 ? 0 : degree_ - 1);
  for (const auto& [m, c] : terms_) {
    const unsigned e = m.exponent(variable);
    if (e == 0) continue;
    std::vector<unsigned> exps = m.exponents();
    exps[variable] -= 1;
    out.add_term(Monomial(std::move(exps)), c * Scalar(field_, static_cast<long long>(e)));
  }
  return out;
}

Scalar Form::directional_derivative(std::span<const Scalar> point,
                                    std::span<const Scalar> direction) const {
  if (direction.size() != n_ + 1) throw Error(ErrorCode::InvalidArgument, "direction length mismatch");
  Scalar sum(field_);
  for (std::size_t i = 0; i <= n_; ++i) {
    if (direction[i].is_zero()) continue;
    sum += direction[i] * partial(i).evaluate(point);
  }
  return sum;
}

std::vector<Scalar> Form::linear_coefficients() const {
  if (degree_ != 1) throw Error(ErrorCode::InvalidArgument, "not a linear form");
  std::vector<Scalar> out(n_ + 1, Scalar(field_));
  for (const auto& [m, c] : terms_) {
    for (std::size_t i = 0; i <= n_; ++i) {
      if (m.exponent(i) == 1) out[i] = c;
    }
  }
  return out;
}

void Form::require_compatible(const Form& other) const {
  if (field_ != other.field_) throw Error(ErrorCode::FieldMismatch, "forms over different fields");
  if (n_ != other.n_) throw Error(ErrorCode::InvalidArgument, "forms in different ambient spaces");
}

Form& Form::operator+=(const Form& other) {
  require_compatible(other);
  if (other.is_zero()) return *this;
  if (is_zero()) degree_ = other.degree_;
  for (const auto& [m, c] : other.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& other) {
  require_compatible(other);
  if (other.is_zero()) return *this;
  if (is_zero()) degree_ = other.degree_;
  for (const auto& [m, c] : other.terms_) add_term(m, -c);
  return *this;
}

Form Form::operator*(const Form& other) const {
  require_compatible(other);
  Form out(field_, n_, degree_ + other.degree_);
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

Form Form::scaled(const Scalar& c) const {
  Form out(field_, n_, degree_);
  for (const auto& [m, coeff] : terms_) out.add_term(m, coeff * c);
  return out;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    std::string coeff = c.to_string();
    bool negative = false;
    if (!coeff.empty() && coeff[0] == '-') {
      negative = true;
      coeff.erase(0, 1);
    }
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (m.degree() == 0) {
      out += coeff;
    } else if (coeff == "1") {
      out += m.to_string();
    } else {
      out += coeff + '*' + m.to_string();
    }
  }
  return out;
}

namespace {

class FormParser {
 public:
  FormParser(std::string_view text, std::size_t n, Field field)
      : text_(text), n_(n), field_(field) {}

  Form parse() {
    skip_space();
    if (at_end()) fail("empty expression");
    std::vector<std::pair<Monomial, Scalar>> terms;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
    }
    while (true) {
      auto term = parse_term();
      if (negative) term.second = -term.second;
      terms.push_back(std::move(term));
      skip_space();
      if (at_end()) break;
      if (peek() != '+' && peek() != '-') fail("expected '+' or '-'");
      negative = peek() == '-';
      ++pos_;
    }
    const unsigned degree = terms.front().first.degree();
    Form f(field_, n_, degree);
    for (const auto& [m, c] : terms) {
      if (m.degree() != degree) {
        throw Error(ErrorCode::NotHomogeneous, "mixed degrees " + std::to_string(degree) + " and " +
                                                   std::to_string(m.degree()) + " in '" +
                                                   std::string(text_) + "'");
      }
      f.add_term(m, c);
    }
    return f;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::SyntaxError,
                why + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
  }

  std::string digits() {
    std::string out;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) out += text_[pos_++];
    if (out.empty()) fail("expected digits");
    return out;
  }

  std::pair<Monomial, Scalar> parse_term() {
    skip_space();
    if (at_end()) fail("expected a term");
    std::vector<unsigned> exps(n_ + 1, 0);
    Scalar coeff(field_, 1);
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      std::string num = digits();
      std::string den = "1";
      skip_space();
      if (!at_end() && peek() == '/') {
        ++pos_;
        skip_space();
        den = digits();
      }
      if (mpz_class(den) == 0) fail("zero denominator");
      coeff = Scalar(field_, mpq_class(mpz_class(num), mpz_class(den)));
      skip_space();
      if (at_end() || peek() != '*') return {Monomial(std::move(exps)), coeff};
      ++pos_;
    }
    while (true) {
      skip_space();
      if (at_end() || peek() != 'x') fail("expected a variable x<index>");
      ++pos_;
      const std::string index = digits();
      if (index.size() > 6 || std::stoul(index) > n_) {
        throw Error(ErrorCode::WrongVariable,
                    "variable x" + index + " exceeds x" + std::to_string(n_));
      }
      unsigned power = 1;
      skip_space();
      if (!at_end() && peek() == '^') {
        ++pos_;
        skip_space();
        const std::string e = digits();
        if (e.size() > 4) fail("exponent too large");
        power = static_cast<unsigned>(std::stoul(e));
      }
      exps[std::stoul(index)] += power;
      skip_space();
      if (at_end() || peek() != '*') break;
      ++pos_;
    }
    return {Monomial(std::move(exps)), coeff};
  }

  std::string_view text_;
  std::size_t n_;
  Field field_;
  std::size_t pos_ = 0;
};

}  // namespace

Form parse_form(std::string_view text, std::size_t n, Field field) {
  return FormParser(text, n, field).parse();
}

}  // namespace cbgon
