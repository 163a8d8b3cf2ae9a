#include "cbgon/field.hpp"

#include "cbgon/error.hpp"

#include <cctype>

namespace cbgon {

namespace {

constexpr std::uint64_t kMaxPrime = std::uint64_t{1} << 31;

std::uint32_t reduce(long long value, std::uint32_t p) {
  long long r = value % static_cast<long long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t reduce(const mpz_class& value, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

namespace detail {

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) noexcept {
  // Extended Euclid on signed 64-bit values; p < 2^31 keeps everything in range.
  std::int64_t r0 = p, r1 = a, s0 = 0, s1 = 1;
  while (r1 != 0) {
    std::int64_t q = r0 / r1;
    std::int64_t t = r0 - q * r1;
    r0 = r1;
    r1 = t;
    t = s0 - q * s1;
    s0 = s1;
    s1 = t;
  }
  if (s0 < 0) s0 += p;
  return static_cast<std::uint32_t>(s0);
}

}  // namespace detail

using detail::inverse_mod;

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (std::uint64_t d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return false;
  }
  return true;
}

Field Field::prime(std::uint64_t p) {
  if (p >= kMaxPrime || !is_prime(p)) {
    throw Error(ErrorCode::NotPrime,
                "field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }
  return Field(static_cast<std::uint32_t>(p));
}

std::string Field::name() const {
  return is_rational() ? std::string("QQ") : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(Field field) : field_(field) {
  if (field_.is_rational()) {
    value_ = mpq_class(0);
  } else {
    value_ = std::uint32_t{0};
  }
}

Scalar::Scalar(Field field, long long value) : field_(field) {
  if (field_.is_rational()) {
    value_ = mpq_class(mpz_class(std::to_string(value)));
  } else {
    value_ = reduce(value, field_.characteristic());
  }
}

Scalar::Scalar(Field field, long long numerator, long long denominator)
    : Scalar(field, mpq_class(mpz_class(std::to_string(numerator)),
                              mpz_class(std::to_string(denominator)))) {
  if (denominator == 0) {
    throw Error(ErrorCode::ZeroInverse, "zero denominator");
  }
}

Scalar::Scalar(Field field, const mpq_class& value) : field_(field) {
  if (value.get_den() == 0) {
    throw Error(ErrorCode::ZeroInverse, "zero denominator");
  }
  if (field_.is_rational()) {
    mpq_class v = value;
    v.canonicalize();
    value_ = v;
    return;
  }
  const std::uint32_t p = field_.characteristic();
  const std::uint32_t den = reduce(value.get_den(), p);
  if (den == 0) {
    throw Error(ErrorCode::ZeroInverse,
                "denominator " + value.get_den().get_str() + " vanishes in " + field_.name());
  }
  const std::uint64_t num = reduce(value.get_num(), p);
  value_ = static_cast<std::uint32_t>(num * inverse_mod(den, p) % p);
}

Scalar Scalar::parse(Field field, std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  auto valid_integer = [](std::string_view t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    }
    return true;
  };
  const auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' || den[0] == '+') {
    throw Error(ErrorCode::SyntaxError, "malformed scalar '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.erase(0, 1);
  return Scalar(field, mpq_class(mpz_class(num), mpz_class(den)));
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return std::get<mpq_class>(value_) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) {
    throw Error(ErrorCode::FieldMismatch, "residue() requested on a rational scalar");
  }
  return std::get<std::uint32_t>(value_);
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) {
    throw Error(ErrorCode::FieldMismatch, "rational() requested on a prime-field scalar");
  }
  return std::get<mpq_class>(value_);
}

void Scalar::require_same_field(const Scalar& other) const {
  if (field_ != other.field_) {
    throw Error(ErrorCode::FieldMismatch,
                "cannot combine " + field_.name() + " and " + other.field_.name());
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) {
    throw Error(ErrorCode::ZeroInverse, "inverse of zero");
  }
  Scalar out(field_);
  if (field_.is_rational()) {
    out.value_ = mpq_class(1) / std::get<mpq_class>(value_);
  } else {
    out.value_ = inverse_mod(std::get<std::uint32_t>(value_), field_.characteristic());
  }
  return out;
}

Scalar Scalar::pow(unsigned exponent) const {
  Scalar result(field_, 1);
  Scalar base = *this;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  require_same_field(other);
  if (auto* r = std::get_if<std::uint32_t>(&value_)) {
    const std::uint64_t s = std::uint64_t{*r} + std::get<std::uint32_t>(other.value_);
    *r = static_cast<std::uint32_t>(s % field_.characteristic());
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) {
  require_same_field(other);
  if (auto* r = std::get_if<std::uint32_t>(&value_)) {
    const std::uint32_t p = field_.characteristic();
    const std::uint64_t s = std::uint64_t{*r} + p - std::get<std::uint32_t>(other.value_);
    *r = static_cast<std::uint32_t>(s % p);
  } else {
    std::get<mpq_class>(value_) -= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& other) {
  require_same_field(other);
  if (auto* r = std::get_if<std::uint32_t>(&value_)) {
    const std::uint64_t s = std::uint64_t{*r} * std::get<std::uint32_t>(other.value_);
    *r = static_cast<std::uint32_t>(s % field_.characteristic());
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) {
  require_same_field(other);
  return *this *= other.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out(field_);
  return out -= *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::strong_ordering operator<=>(const Scalar& a, const Scalar& b) {
  a.require_same_field(b);
  if (const auto* r = std::get_if<std::uint32_t>(&a.value_)) {
    return *r <=> std::get<std::uint32_t>(b.value_);
  }
  const int c = cmp(std::get<mpq_class>(a.value_), std::get<mpq_class>(b.value_));
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<std::uint32_t>(&value_)) return std::to_string(*r);
  return std::get<mpq_class>(value_).get_str();
}

}  // namespace cbgon
