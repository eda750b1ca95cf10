// Exact quaternions over Q(sqrt5) and octonions over Q.
#pragma once

#include <array>
#include <compare>
#include <string>

#include "polyforge/exactnum.hpp"

namespace polyforge {

/// w + x i + y j + z k
struct Quaternion {
  QuadExt w, x, y, z;

  static Quaternion one() { return {QuadExt(1), QuadExt(0), QuadExt(0), QuadExt(0)}; }
  static Quaternion i() { return {QuadExt(0), QuadExt(1), QuadExt(0), QuadExt(0)}; }
  static Quaternion j() { return {QuadExt(0), QuadExt(0), QuadExt(1), QuadExt(0)}; }
  static Quaternion k() { return {QuadExt(0), QuadExt(0), QuadExt(0), QuadExt(1)}; }

  [[nodiscard]] bool is_zero() const {
    return w.is_zero() && x.is_zero() && y.is_zero() && z.is_zero();
  }
  [[nodiscard]] std::array<QuadExt, 4> components() const { return {w, x, y, z}; }
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Quaternion&, const Quaternion&) = default;
};

Quaternion operator+(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a, const Quaternion& b);
Quaternion operator-(const Quaternion& a);
Quaternion operator*(const QuadExt& s, const Quaternion& a);
/// Hamilton product
Quaternion operator*(const Quaternion& a, const Quaternion& b);

Quaternion qmul(const Quaternion& a, const Quaternion& b);
Quaternion qconj(const Quaternion& a);
/// w^2 + x^2 + y^2 + z^2
QuadExt qnorm(const Quaternion& a);
/// Throws DivisionByZero on 0.
Quaternion qinv(const Quaternion& a);

/// Componentwise structural order; a fixed total order for containers.
struct QuaternionLess {
  bool operator()(const Quaternion& a, const Quaternion& b) const;
};

/// Numeric lexicographic order on (w, x, y, z); the canonical output order.
bool numeric_less(const Quaternion& a, const Quaternion& b);

// ---------------------------------------------------------------------------

/// c0 + c1 e1 + ... + c7 e7
struct Octonion {
  std::array<Rational, 8> c{};

  static Octonion unit(int index);  // e_index, e_0 = 1
  [[nodiscard]] bool is_zero() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Octonion&, const Octonion&) = default;
};

Octonion operator+(const Octonion& a, const Octonion& b);
Octonion operator-(const Octonion& a, const Octonion& b);
Octonion operator*(const Rational& s, const Octonion& a);

/// e_i e_j = sign * e_index, with index 0 meaning the real unit.
struct SignedUnit {
  int sign = 1;
  int index = 0;

  [[nodiscard]] std::string to_string() const;  // "+e4", "-1"
  friend bool operator==(const SignedUnit&, const SignedUnit&) = default;
};

/// Products of the basis units e_0..e_7.
class OctonionTable {
 public:
  [[nodiscard]] SignedUnit lookup(int i, int j) const { return table_[i][j]; }

 private:
  friend OctonionTable build_octonion_table();
  std::array<std::array<SignedUnit, 8>, 8> table_{};
};

/// The pinned table: e1e2 = e4, e2e3 = e5, e3e1 = e6, e1(e2e3) = e7, completed
/// along the Fano lines (1,2,4) (2,3,5) (3,1,6) (1,5,7) (2,6,7) (3,4,7) (5,4,6).
/// Throws std::logic_error if the table fails its own invariants.
OctonionTable build_octonion_table();

/// Shared, checked once.
const OctonionTable& octonion_table();

Octonion omul(const Octonion& a, const Octonion& b);
Octonion oconj(const Octonion& a);
/// Sum of squared components.
Rational onorm(const Octonion& a);
/// Throws DivisionByZero on 0.
Octonion oinv(const Octonion& a);
/// (ab)c - a(bc)
Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c);

Octonion operator*(const Octonion& a, const Octonion& b);

}  // namespace polyforge
