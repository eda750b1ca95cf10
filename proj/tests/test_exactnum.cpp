#include <doctest.h>

#include <random>
#include <unordered_set>

#include "oracles.hpp"
#include "polyforge/exactnum.hpp"

using namespace polyforge;

TEST_SUITE("exactnum") {

TEST_CASE("addition and multiplication in Q(sqrt5)") {
  CHECK(QuadExt(1) + QuadExt::sqrt5() == QuadExt(1, 1));
  const QuadExt x(Rational(3, 4), Rational(-2));
  CHECK(x + QuadExt(0) == x);
  CHECK(x * QuadExt(1) == x);
  CHECK(QuadExt::phi() + QuadExt::phi_inverse() == QuadExt::sqrt5());
  CHECK(QuadExt::sqrt5() * QuadExt::sqrt5() == QuadExt(5));
  CHECK(QuadExt::phi() * QuadExt::phi() == QuadExt::phi() + QuadExt(1));
}

TEST_CASE("inverses") {
  CHECK(QuadExt(2).inverse() == QuadExt(Rational(1, 2)));
  CHECK(QuadExt::phi().inverse() == QuadExt::phi() - QuadExt(1));
  CHECK(QuadExt::phi().inverse() == QuadExt::phi_inverse());
  CHECK(QuadExt::sqrt5().inverse() == QuadExt(Rational(0), Rational(1, 5)));
  CHECK_THROWS_AS((void)QuadExt(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS((void)Rational(0).inverse(), DivisionByZero);
  CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
  CHECK_THROWS_AS(QuadExt(1) / QuadExt(0), DivisionByZero);
}

TEST_CASE("exact comparison") {
  CHECK(compare(QuadExt::sqrt5(), QuadExt(2)) == std::strong_ordering::greater);
  const QuadExt x(Rational(7, 3), Rational(-1, 9));
  CHECK(compare(x, x) == std::strong_ordering::equal);

  // phi - 8/5 = (-11 + 5 sqrt5)/10; positive because (5 sqrt5)^2 = 125 > 121 = 11^2.
  const QuadExt diff = QuadExt::phi() - QuadExt(Rational(8, 5));
  CHECK(diff == QuadExt(Rational(-11, 10), Rational(1, 2)));
  CHECK(125 > 121);
  CHECK(compare(QuadExt::phi(), QuadExt(Rational(8, 5))) == std::strong_ordering::greater);
  // One step tighter: 1.618 < phi < 1.6181.
  CHECK(QuadExt::phi() > QuadExt(Rational(1618, 1000)));
  CHECK(QuadExt::phi() < QuadExt(Rational(16181, 10000)));
}

TEST_CASE("sign agrees with floating point away from zero") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    const QuadExt x = oracle::random_quad(rng);
    const double d = x.to_double();
    if (d > 1e-9) CHECK(x.sign() == 1);
    if (d < -1e-9) CHECK(x.sign() == -1);
    if (x.is_zero()) CHECK(x.sign() == 0);
  }
}

TEST_CASE("field axioms on random elements") {
  std::mt19937_64 rng(20240);
  for (int t = 0; t < 300; ++t) {
    const QuadExt a = oracle::random_quad(rng);
    const QuadExt b = oracle::random_quad(rng);
    const QuadExt c = oracle::random_quad(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == QuadExt(0));
    if (!a.is_zero()) CHECK(a * a.inverse() == QuadExt(1));
    // Galois conjugation is a ring homomorphism and N(x) = x * conj(x).
    CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
    CHECK((a + b).conjugate() == a.conjugate() + b.conjugate());
    CHECK(QuadExt(a.field_norm()) == a * a.conjugate());
    CHECK((a * b).field_norm() == a.field_norm() * b.field_norm());
  }
}

TEST_CASE("ordering is total and compatible with the field operations") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 300; ++t) {
    const QuadExt a = oracle::random_quad(rng);
    const QuadExt b = oracle::random_quad(rng);
    const QuadExt c = oracle::random_quad(rng);
    const int lt = a < b, eq = a == b, gt = a > b;
    CHECK(lt + eq + gt == 1);
    if (a < b) {
      CHECK(a + c < b + c);
      if (c > QuadExt(0)) CHECK(a * c < b * c);
    }
    if (a < b && b < c) CHECK(a < c);
  }
}

TEST_CASE("text round trip") {
  CHECK(QuadExt::parse("1/2+1/2*sqrt5") == QuadExt::phi());
  CHECK(QuadExt::parse("-1/2+1/2*sqrt5") == QuadExt::phi_inverse());
  CHECK(QuadExt::parse("sqrt5") == QuadExt::sqrt5());
  CHECK(QuadExt::parse("-sqrt5") == -QuadExt::sqrt5());
  CHECK(QuadExt::parse("3") == QuadExt(3));
  CHECK(QuadExt::parse("2-3*sqrt5") == QuadExt(2, -3));
  CHECK(QuadExt(2, -3).to_string() == "2-3*sqrt5");
  CHECK(QuadExt(0, Rational(1, 5)).to_string() == "1/5*sqrt5");
  CHECK(QuadExt(Rational(-4, 6)).to_string() == "-2/3");
  CHECK(Rational::parse("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(Rational::parse("1/0"), DivisionByZero);
  CHECK_THROWS_AS(Rational::parse("x"), ParseError);
  CHECK_THROWS_AS(Rational::parse("1/-2"), ParseError);
  CHECK_THROWS_AS(QuadExt::parse(""), ParseError);
  CHECK_THROWS_AS(QuadExt::parse("1+2*sqrt7"), ParseError);

  std::mt19937_64 rng(99);
  for (int t = 0; t < 200; ++t) {
    const QuadExt x = oracle::random_quad(rng);
    CHECK(QuadExt::parse(x.to_string()) == x);
  }
}

TEST_CASE("hash is consistent with equality") {
  std::unordered_set<QuadExt> s;
  s.insert(QuadExt(Rational(2, 4), Rational(1, 2)));
  s.insert(QuadExt::phi());
  CHECK(s.size() == 1);
  CHECK(std::hash<Rational>{}(Rational(2, 4)) == std::hash<Rational>{}(Rational(1, 2)));
}

}
