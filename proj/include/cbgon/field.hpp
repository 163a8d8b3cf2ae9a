#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace cbgon {

/// Either a prime field F_p (p < 2^31) or the rationals.
class Field {
 public:
  Field() = default;  // rationals

  static Field rational() { return Field{}; }
  /// Throws NotPrime unless 2 <= p < 2^31 and p is prime.
  static Field prime(std::uint64_t p);

  bool is_rational() const noexcept { return p_ == 0; }
  std::uint32_t characteristic() const noexcept { return p_; }
  std::string name() const;

  friend bool operator==(Field, Field) = default;

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

namespace detail {
/// a^-1 mod p for 0 < a < p.
std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) noexcept;
}  // namespace detail

/// Exact element of a Field. F_p values are stored as residues in [0, p),
/// rationals as canonical mpq values.
class Scalar {
 public:
  explicit Scalar(Field field = Field::rational());
  Scalar(Field field, long long value);
  Scalar(Field field, long long numerator, long long denominator);
  Scalar(Field field, const mpq_class& value);

  /// Accepts "a", "-a" or "a/b" with arbitrary-size integers.
  static Scalar parse(Field field, std::string_view text);

  Field field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// F_p only.
  std::uint32_t residue() const;
  /// Rationals only.
  const mpq_class& rational() const;

  Scalar inverse() const;
  Scalar pow(unsigned exponent) const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  Scalar operator-() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order used for canonical sorting: residues numerically,
  /// rationals by value.
  friend std::strong_ordering operator<=>(const Scalar& a, const Scalar& b);

  std::string to_string() const;

 private:
  void require_same_field(const Scalar& other) const;

  Field field_;
  std::variant<std::uint32_t, mpq_class> value_;
};

}  // namespace cbgon
