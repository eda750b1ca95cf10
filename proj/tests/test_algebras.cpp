#include <doctest.h>

#include <random>
#include <set>

#include "oracles.hpp"
#include "polyforge/algebras.hpp"

using namespace polyforge;

namespace {

Octonion e(int i) { return Octonion::unit(i); }

Octonion signed_unit(SignedUnit u) { return Rational(u.sign) * e(u.index); }

Quaternion basis(int i) {
  switch (i) {
    case 0: return Quaternion::one();
    case 1: return Quaternion::i();
    case 2: return Quaternion::j();
    default: return Quaternion::k();
  }
}

}  // namespace

TEST_SUITE("algebras") {

TEST_CASE("quaternion products") {
  CHECK(Quaternion::i() * Quaternion::j() == Quaternion::k());
  CHECK(Quaternion::j() * Quaternion::i() == -Quaternion::k());
  CHECK(Quaternion::j() * Quaternion::k() == Quaternion::i());
  CHECK(Quaternion::k() * Quaternion::i() == Quaternion::j());
  CHECK(Quaternion::i() * Quaternion::i() == -Quaternion::one());
  const Quaternion a{QuadExt(2), QuadExt::phi(), QuadExt(-1), QuadExt(Rational(1, 3))};
  CHECK(a * Quaternion::one() == a);
  CHECK(qmul(Quaternion::one(), a) == a);
  const QuadExt h(Rational(1, 2));
  CHECK(qnorm({h, h, h, h}) == QuadExt(1));
  CHECK(qinv(Quaternion::i()) == -Quaternion::i());
  const Quaternion b{QuadExt(1), QuadExt(2), QuadExt(0), QuadExt(0)};
  CHECK(b * qinv(b) == Quaternion::one());
  CHECK(qconj(b) == Quaternion{QuadExt(1), QuadExt(-2), QuadExt(0), QuadExt(0)});
  CHECK_THROWS_AS(qinv(Quaternion{}), DivisionByZero);
}

TEST_CASE("quaternion basis is associative") {
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) CHECK((basis(a) * basis(b)) * basis(c) == basis(a) * (basis(b) * basis(c)));
}

TEST_CASE("quaternion division algebra laws") {
  std::mt19937_64 rng(314);
  for (int t = 0; t < 500; ++t) {
    const Quaternion a = oracle::random_quaternion(rng);
    const Quaternion b = oracle::random_quaternion(rng);
    REQUIRE(qnorm(a * b) == qnorm(a) * qnorm(b));
    CHECK(qconj(a * b) == qconj(b) * qconj(a));
  }
  for (int t = 0; t < 200; ++t) {
    const Quaternion a = oracle::random_quaternion(rng);
    if (a.is_zero()) continue;
    CHECK(a * qinv(a) == Quaternion::one());
    CHECK(qinv(a) * a == Quaternion::one());
  }
}

TEST_CASE("octonion table") {
  const auto& t = octonion_table();
  CHECK(t.lookup(1, 2) == SignedUnit{1, 4});
  CHECK(t.lookup(2, 1) == SignedUnit{-1, 4});
  CHECK(t.lookup(3, 3) == SignedUnit{-1, 0});
  CHECK(t.lookup(2, 3) == SignedUnit{1, 5});
  CHECK(t.lookup(3, 1) == SignedUnit{1, 6});
  CHECK(t.lookup(0, 5) == SignedUnit{1, 5});
  CHECK(t.lookup(1, 2).to_string() == "+e4");
  CHECK(t.lookup(3, 3).to_string() == "-1");
  for (int i = 1; i < 8; ++i) {
    CHECK(t.lookup(i, i) == SignedUnit{-1, 0});
    for (int j = 1; j < 8; ++j) {
      if (i == j) continue;
      const SignedUnit ij = t.lookup(i, j), ji = t.lookup(j, i);
      CHECK(ij.index == ji.index);
      CHECK(ij.sign == -ji.sign);
      CHECK(ij.index != 0);
    }
  }
  // Each row is a signed permutation of the basis.
  for (int i = 0; i < 8; ++i) {
    std::set<int> row;
    for (int j = 0; j < 8; ++j) row.insert(t.lookup(i, j).index);
    CHECK(row.size() == 8);
  }
}

TEST_CASE("octonion products") {
  CHECK(e(2) * e(3) == e(5));
  CHECK(e(1) * (e(2) * e(3)) == e(7));
  CHECK((e(1) * e(2)) * e(3) == Rational(-1) * e(7));
  CHECK(associator(e(1), e(2), e(3)) == Rational(-2) * e(7));
  CHECK(onorm(e(0) + e(1)) == Rational(2));
  CHECK(oinv(e(7)) == Rational(-1) * e(7));
  std::mt19937_64 rng(8);
  const Octonion a = oracle::random_octonion(rng), b = oracle::random_octonion(rng);
  CHECK(a * e(0) == a);
  CHECK(e(0) * a == a);
  CHECK(oconj(oconj(a)) == a);
  CHECK(associator(a, b, e(0)).is_zero());
  CHECK_THROWS_AS(oinv(Octonion{}), DivisionByZero);
}

TEST_CASE("octonion table agrees with omul on basis pairs") {
  for (int i = 0; i < 8; ++i)
    for (int j = 0; j < 8; ++j) CHECK(e(i) * e(j) == signed_unit(octonion_table().lookup(i, j)));
}

TEST_CASE("octonion division algebra laws") {
  std::mt19937_64 rng(2718);
  for (int t = 0; t < 500; ++t) {
    const Octonion a = oracle::random_octonion(rng);
    const Octonion b = oracle::random_octonion(rng);
    REQUIRE(onorm(a * b) == onorm(a) * onorm(b));
    CHECK(oconj(a * b) == oconj(b) * oconj(a));
  }
  for (int t = 0; t < 200; ++t) {
    const Octonion a = oracle::random_octonion(rng);
    if (a.is_zero()) continue;
    CHECK(a * oinv(a) == e(0));
    CHECK(oinv(a) * a == e(0));
  }
}

TEST_CASE("octonions are alternative but not associative") {
  int nonzero = 0;
  for (int a = 0; a < 8; ++a) {
    for (int b = 0; b < 8; ++b) {
      CHECK(associator(e(a), e(a), e(b)).is_zero());
      CHECK(associator(e(a), e(b), e(b)).is_zero());
      for (int c = 0; c < 8; ++c) nonzero += associator(e(a), e(b), e(c)).is_zero() ? 0 : 1;
    }
  }
  CHECK(nonzero > 0);
  std::mt19937_64 rng(1);
  for (int t = 0; t < 50; ++t) {
    const Octonion x = oracle::random_octonion(rng), y = oracle::random_octonion(rng);
    CHECK(associator(x, x, y).is_zero());
    CHECK(associator(x, y, y).is_zero());
  }
}

}
