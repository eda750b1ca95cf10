#include "polyforge/algebras.hpp"

#include <sstream>
#include <stdexcept>

namespace polyforge {

Quaternion operator+(const Quaternion& a, const Quaternion& b) {
  return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
}

Quaternion operator-(const Quaternion& a, const Quaternion& b) {
  return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
}

Quaternion operator-(const Quaternion& a) { return {-a.w, -a.x, -a.y, -a.z}; }

Quaternion operator*(const QuadExt& s, const Quaternion& a) {
  return {s * a.w, s * a.x, s * a.y, s * a.z};
}

Quaternion operator*(const Quaternion& a, const Quaternion& b) {
  return {
      a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
      a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
      a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
      a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w,
  };
}

Quaternion qmul(const Quaternion& a, const Quaternion& b) { return a * b; }

Quaternion qconj(const Quaternion& a) { return {a.w, -a.x, -a.y, -a.z}; }

QuadExt qnorm(const Quaternion& a) { return a.w * a.w + a.x * a.x + a.y * a.y + a.z * a.z; }

Quaternion qinv(const Quaternion& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero quaternion");
  return qnorm(a).inverse() * qconj(a);
}

std::string Quaternion::to_string() const {
  std::ostringstream os;
  os << '(' << w << ", " << x << ", " << y << ", " << z << ')';
  return os.str();
}

bool QuaternionLess::operator()(const Quaternion& a, const Quaternion& b) const {
  StructuralLess less;
  const auto ca = a.components();
  const auto cb = b.components();
  for (std::size_t t = 0; t < 4; ++t) {
    if (less(ca[t], cb[t])) return true;
    if (less(cb[t], ca[t])) return false;
  }
  return false;
}

bool numeric_less(const Quaternion& a, const Quaternion& b) {
  const auto ca = a.components();
  const auto cb = b.components();
  return std::lexicographical_compare(ca.begin(), ca.end(), cb.begin(), cb.end());
}

// ---------------------------------------------------------------------------

Octonion Octonion::unit(int index) {
  if (index < 0 || index > 7) throw std::out_of_range("octonion unit index");
  Octonion o;
  o.c[static_cast<std::size_t>(index)] = Rational(1);
  return o;
}

bool Octonion::is_zero() const {
  for (const auto& x : c) {
    if (!x.is_zero()) return false;
  }
  return true;
}

std::string Octonion::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t t = 0; t < 8; ++t) os << (t ? ", " : "") << c[t];
  os << ')';
  return os.str();
}

Octonion operator+(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (std::size_t t = 0; t < 8; ++t) r.c[t] = a.c[t] + b.c[t];
  return r;
}

Octonion operator-(const Octonion& a, const Octonion& b) {
  Octonion r;
  for (std::size_t t = 0; t < 8; ++t) r.c[t] = a.c[t] - b.c[t];
  return r;
}

Octonion operator*(const Rational& s, const Octonion& a) {
  Octonion r;
  for (std::size_t t = 0; t < 8; ++t) r.c[t] = s * a.c[t];
  return r;
}

std::string SignedUnit::to_string() const {
  std::string out = sign > 0 ? "+" : "-";
  out += index == 0 ? "1" : "e" + std::to_string(index);
  return out;
}

namespace {

// Oriented Fano lines: (a, b, c) means e_a e_b = e_c.
constexpr std::array<std::array<int, 3>, 7> kFanoLines = {{
    {1, 2, 4}, {2, 3, 5}, {3, 1, 6}, {1, 5, 7}, {2, 6, 7}, {3, 4, 7}, {5, 4, 6},
}};

Octonion raw_mul(const OctonionTable& table, const Octonion& a, const Octonion& b) {
  Octonion r;
  for (int i = 0; i < 8; ++i) {
    if (a.c[static_cast<std::size_t>(i)].is_zero()) continue;
    for (int j = 0; j < 8; ++j) {
      if (b.c[static_cast<std::size_t>(j)].is_zero()) continue;
      const SignedUnit u = table.lookup(i, j);
      Rational p = a.c[static_cast<std::size_t>(i)] * b.c[static_cast<std::size_t>(j)];
      auto& slot = r.c[static_cast<std::size_t>(u.index)];
      if (u.sign > 0) {
        slot += p;
      } else {
        slot -= p;
      }
    }
  }
  return r;
}

void check_table(const OctonionTable& t) {
  auto fail = [](const std::string& what) {
    throw std::logic_error("octonion table invariant violated: " + what);
  };
  for (int i = 0; i < 8; ++i) {
    if (t.lookup(0, i) != SignedUnit{1, i} || t.lookup(i, 0) != SignedUnit{1, i}) fail("unit");
  }
  for (int i = 1; i < 8; ++i) {
    if (t.lookup(i, i) != SignedUnit{-1, 0}) fail("e_i^2 = -1");
    for (int j = 1; j < 8; ++j) {
      if (i == j) continue;
      const auto a = t.lookup(i, j);
      const auto b = t.lookup(j, i);
      if (a.index != b.index || a.sign != -b.sign || a.index == 0) fail("anticommutation");
    }
  }
  if (t.lookup(1, 2) != SignedUnit{1, 4} || t.lookup(2, 3) != SignedUnit{1, 5} ||
      t.lookup(3, 1) != SignedUnit{1, 6}) {
    fail("defining products");
  }
  const auto e1 = Octonion::unit(1);
  const auto e23 = raw_mul(t, Octonion::unit(2), Octonion::unit(3));
  if (raw_mul(t, e1, e23) != Octonion::unit(7)) fail("e1(e2e3) = e7");
  // N(xy) = N(x)N(y) is biquadratic in (x, y); its values on x, y in
  // {e_a + e_b : a <= b} determine every coefficient.
  for (int a = 0; a < 8; ++a) {
    for (int b = a; b < 8; ++b) {
      for (int c = 0; c < 8; ++c) {
        for (int d = c; d < 8; ++d) {
          const Octonion x = Octonion::unit(a) + Octonion::unit(b);
          const Octonion y = Octonion::unit(c) + Octonion::unit(d);
          if (onorm(raw_mul(t, x, y)) != onorm(x) * onorm(y)) fail("norm multiplicativity");
        }
      }
    }
  }
}

}  // namespace

OctonionTable build_octonion_table() {
  OctonionTable t;
  for (int i = 0; i < 8; ++i) {
    t.table_[0][static_cast<std::size_t>(i)] = {1, i};
    t.table_[static_cast<std::size_t>(i)][0] = {1, i};
  }
  for (int i = 1; i < 8; ++i) t.table_[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = {-1, 0};
  for (const auto& line : kFanoLines) {
    for (int r = 0; r < 3; ++r) {
      const auto a = static_cast<std::size_t>(line[static_cast<std::size_t>(r)]);
      const auto b = static_cast<std::size_t>(line[static_cast<std::size_t>((r + 1) % 3)]);
      const int c = line[static_cast<std::size_t>((r + 2) % 3)];
      t.table_[a][b] = {1, c};
      t.table_[b][a] = {-1, c};
    }
  }
  check_table(t);
  return t;
}

const OctonionTable& octonion_table() {
  static const OctonionTable table = build_octonion_table();
  return table;
}

Octonion omul(const Octonion& a, const Octonion& b) { return raw_mul(octonion_table(), a, b); }

Octonion operator*(const Octonion& a, const Octonion& b) { return omul(a, b); }

Octonion oconj(const Octonion& a) {
  Octonion r = a;
  for (std::size_t t = 1; t < 8; ++t) r.c[t] = -r.c[t];
  return r;
}

Rational onorm(const Octonion& a) {
  Rational n;
  for (const auto& x : a.c) n += x * x;
  return n;
}

Octonion oinv(const Octonion& a) {
  if (a.is_zero()) throw DivisionByZero("inverse of zero octonion");
  return onorm(a).inverse() * oconj(a);
}

Octonion associator(const Octonion& a, const Octonion& b, const Octonion& c) {
  return omul(omul(a, b), c) - omul(a, omul(b, c));
}

}  // namespace polyforge
