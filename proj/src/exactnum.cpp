#include "polyforge/exactnum.hpp"

#include <cctype>
#include <functional>
#include <ostream>
#include <sstream>

namespace polyforge {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

mpz_class parse_integer(std::string_view s) {
  if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
  if (s.front() == '+') s.remove_prefix(1);
  return mpz_class(std::string(s), 10);
}

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational::Rational(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rational Rational::parse(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(mpq_class(parse_integer(text)));
  mpz_class num = parse_integer(trim(text.substr(0, slash)));
  std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw ParseError("denominator must be unsigned: '" + std::string(text) + "'");
  }
  mpz_class den = parse_integer(den_text);
  if (den == 0) throw DivisionByZero("rational with zero denominator");
  return Rational(mpq_class(num, den));
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero rational");
  return Rational(mpq_class(1 / value_));
}

std::string Rational::to_string() const { return value_.get_str(10); }

std::size_t Rational::hash() const {
  std::hash<std::string> h;
  return mix(h(value_.get_num().get_str(16)), h(value_.get_den().get_str(16)));
}

Rational& Rational::operator+=(const Rational& o) {
  value_ += o.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  value_ -= o.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  value_ *= o.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= o.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

// ---------------------------------------------------------------------------

QuadExt QuadExt::parse(std::string_view text) {
  text = trim(text);
  if (text.empty()) throw ParseError("empty Q(sqrt5) literal");

  constexpr std::string_view kRoot = "sqrt5";
  const auto root = text.find(kRoot);
  if (root == std::string_view::npos) return QuadExt(Rational::parse(text));
  if (trim(text.substr(root + kRoot.size())).size() != 0) {
    throw ParseError("trailing characters after sqrt5 in '" + std::string(text) + "'");
  }

  // Split "<a><sign><b>*sqrt5" at the sign that starts the irrational term.
  std::string_view head = trim(text.substr(0, root));
  if (!head.empty() && head.back() == '*') head = trim(head.substr(0, head.size() - 1));
  std::size_t split = std::string_view::npos;
  for (std::size_t i = head.size(); i-- > 1;) {
    if ((head[i] == '+' || head[i] == '-') && head[i - 1] != '+' && head[i - 1] != '-') {
      split = i;
      break;
    }
  }
  std::string_view a_text;
  std::string_view b_text = head;
  if (split != std::string_view::npos) {
    a_text = trim(head.substr(0, split));
    b_text = trim(head.substr(split));
  }
  // A leading operator may be followed by a signed coefficient, e.g. "1+-2*sqrt5".
  bool negate = false;
  if (b_text.size() >= 2 && (b_text[0] == '+' || b_text[0] == '-') &&
      (b_text[1] == '+' || b_text[1] == '-')) {
    negate = b_text[0] == '-';
    b_text.remove_prefix(1);
  }
  Rational b;
  if (b_text.empty() || b_text == "+") {
    b = Rational(1);
  } else if (b_text == "-") {
    b = Rational(-1);
  } else {
    b = Rational::parse(b_text);
  }
  if (negate) b = -b;
  Rational a = a_text.empty() ? Rational(0) : Rational::parse(a_text);
  return {a, b};
}

int QuadExt::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0 || sa == sb) return sb;
  // Opposite signs: the larger of a^2 and 5b^2 wins (never equal, sqrt5 is irrational).
  return (a_ * a_ > Rational(5) * b_ * b_) ? sa : sb;
}

QuadExt QuadExt::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(sqrt5)");
  const Rational n = field_norm();
  return {a_ / n, -b_ / n};
}

double QuadExt::to_double() const {
  static const double kRoot5 = 2.2360679774997896964;
  return a_.to_double() + b_.to_double() * kRoot5;
}

std::string QuadExt::to_string() const {
  if (b_.is_zero()) return a_.to_string();
  std::ostringstream os;
  if (a_.is_zero()) {
    os << b_ << "*sqrt5";
  } else if (b_.sign() > 0) {
    os << a_ << '+' << b_ << "*sqrt5";
  } else {
    os << a_ << '-' << (-b_) << "*sqrt5";
  }
  return os.str();
}

std::size_t QuadExt::hash() const { return mix(a_.hash(), b_.hash()); }

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  a_ += o.a_;
  b_ += o.b_;
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  a_ -= o.a_;
  b_ -= o.b_;
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  Rational a = a_ * o.a_ + Rational(5) * b_ * o.b_;
  Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = std::move(a);
  b_ = std::move(b);
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

std::strong_ordering operator<=>(const QuadExt& x, const QuadExt& y) {
  const int s = (x - y).sign();
  return s < 0 ? std::strong_ordering::less
               : (s > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::strong_ordering compare(const QuadExt& x, const QuadExt& y) { return x <=> y; }

std::ostream& operator<<(std::ostream& os, const QuadExt& q) { return os << q.to_string(); }

}  // namespace polyforge
