// Exact arithmetic over Q and the quadratic field Q(sqrt5).
#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace polyforge {

/// Raised on division by zero in any exact field.
class DivisionByZero : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Raised when a textual number cannot be parsed.
class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator (zero is 0/1).
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Parses "p" or "p/q" (optional leading sign, decimal digits).
  static Rational parse(std::string_view text);

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] Rational inverse() const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] std::size_t hash() const;

  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.value_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class value_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Element a + b*sqrt5 of Q(sqrt5). Representation is unique, so equality is
/// componentwise; ordering follows the real embedding with sqrt5 > 0.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(long a) : a_(a) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  QuadExt(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

  static QuadExt sqrt5() { return {Rational(0), Rational(1)}; }
  /// (1 + sqrt5) / 2
  static QuadExt phi() { return {Rational(1, 2), Rational(1, 2)}; }
  /// 1 / phi = (-1 + sqrt5) / 2
  static QuadExt phi_inverse() { return {Rational(-1, 2), Rational(1, 2)}; }

  /// Accepts "a", "b*sqrt5", "sqrt5", "a+b*sqrt5", "a-b*sqrt5" with
  /// rationals written as "p" or "p/q".
  static QuadExt parse(std::string_view text);

  [[nodiscard]] const Rational& rational_part() const { return a_; }
  [[nodiscard]] const Rational& sqrt5_part() const { return b_; }

  [[nodiscard]] bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  [[nodiscard]] bool is_rational() const { return b_.is_zero(); }
  /// Sign of the real number a + b*sqrt5, decided exactly.
  [[nodiscard]] int sign() const;
  /// a - b*sqrt5
  [[nodiscard]] QuadExt conjugate() const { return {a_, -b_}; }
  /// Field norm a^2 - 5b^2 (product with the conjugate).
  [[nodiscard]] Rational field_norm() const { return a_ * a_ - Rational(5) * b_ * b_; }
  [[nodiscard]] QuadExt inverse() const;

  /// Display only; never used for decisions.
  [[nodiscard]] double to_double() const;
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] std::size_t hash() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(const QuadExt& x) { return {-x.a_, -x.b_}; }

  friend bool operator==(const QuadExt& x, const QuadExt& y) = default;
  friend std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y);

 private:
  Rational a_;
  Rational b_;
};

std::ostream& operator<<(std::ostream& os, const QuadExt& q);

/// Structural (componentwise, lexicographic) order. Cheaper than the numeric
/// order; used for keyed containers where only a fixed total order matters.
struct StructuralLess {
  bool operator()(const QuadExt& x, const QuadExt& y) const {
    if (auto c = x.rational_part() <=> y.rational_part(); c != 0) return c < 0;
    return x.sqrt5_part() < y.sqrt5_part();
  }
};

std::strong_ordering compare(const QuadExt& x, const QuadExt& y);

}  // namespace polyforge

template <>
struct std::hash<polyforge::Rational> {
  std::size_t operator()(const polyforge::Rational& r) const { return r.hash(); }
};

template <>
struct std::hash<polyforge::QuadExt> {
  std::size_t operator()(const polyforge::QuadExt& q) const { return q.hash(); }
};
