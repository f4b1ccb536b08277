#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "summa/errors.hpp"
#include "summa/padic.hpp"

using namespace summa;

namespace {

// Independent extended-Euclid oracle over machine integers.
long egcd(long a, long b, long& x, long& y) {
  if (b == 0) {
    x = 1;
    y = 0;
    return a;
  }
  long x1, y1;
  long g = egcd(b, a % b, x1, y1);
  x = y1;
  y = x1 - (a / b) * y1;
  return g;
}

long inv_mod(long a, long m) {
  long x, y;
  a %= m;
  if (a < 0) a += m;
  long g = egcd(a, m, x, y);
  REQUIRE(g == 1);
  return ((x % m) + m) % m;
}

long pow_long(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

std::mt19937_64 rng(777);

Rational random_rat(long p) {
  std::uniform_int_distribution<long> num(-400, 400);
  std::uniform_int_distribution<long> den(1, 60);
  Rational r(num(rng), den(rng));
  (void)p;
  return r;
}

}  // namespace

TEST_CASE("primality by trial division") {
  CHECK(is_prime_small(2));
  CHECK(is_prime_small(3));
  CHECK(is_prime_small(7));
  CHECK(is_prime_small(999983));
  CHECK_FALSE(is_prime_small(1));
  CHECK_FALSE(is_prime_small(9));
  CHECK_FALSE(is_prime_small(1000000));
  CHECK_THROWS_AS(PAdicValue::embed(Rational{1}, 4, 3), NotPrime);
}

TEST_CASE("embedding 7/9 at p=7: valuation 1, unit = 9^{-1} mod 7^4") {
  PAdicValue v = PAdicValue::embed(Rational(7, 9), 7, 4);
  CHECK(v.valuation() == 1);
  long want = inv_mod(9, pow_long(7, 4));
  CHECK(v.unit() == BigInt{want});
}

TEST_CASE("embedding zero gives the exact zero sentinel") {
  PAdicValue z = PAdicValue::embed(Rational{0}, 5, 8);
  CHECK(z.is_zero());
  CHECK(z.is_exact_zero());
  CHECK(z.norm() == Rational{0});
}

TEST_CASE("embedding -4/3 at p=7, k=3") {
  PAdicValue v = PAdicValue::embed(Rational(-4, 3), 7, 3);
  CHECK(v.valuation() == 0);
  // modular-inverse oracle: -4 * 3^{-1} mod 343
  long want = ((-4 * inv_mod(3, 343)) % 343 + 343) % 343;
  CHECK(v.unit() == BigInt{want});
  // and 3 * unit = -4 mod 343
  CHECK((3 * want) % 343 == 343 - 4);
}

TEST_CASE("norms") {
  CHECK(PAdicValue::embed(Rational(7, 9), 7, 6).norm() == Rational(1, 7));
  CHECK(PAdicValue::embed(Rational{120}, 3, 6).norm() == Rational(1, 3));
  CHECK(PAdicValue::embed(Rational{120}, 5, 6).norm() == Rational(1, 5));
  CHECK(PAdicValue::embed(Rational(1, 49), 7, 6).norm() == Rational{49});
}

TEST_CASE("ultrametric inequality with equality when norms differ") {
  const long p = 7;
  for (int i = 0; i < 500; ++i) {
    Rational a = random_rat(p);
    Rational b = random_rat(p);
    if (a.is_zero() || b.is_zero() || (a + b).is_zero()) continue;
    PAdicValue x = PAdicValue::embed(a, p, 12);
    PAdicValue y = PAdicValue::embed(b, p, 12);
    Rational ns = (x + y).norm();
    Rational nx = x.norm();
    Rational ny = y.norm();
    Rational mx = nx > ny ? nx : ny;
    CHECK(ns <= mx);
    if (nx != ny) CHECK(ns == mx);
  }
}

TEST_CASE("embedding is a ring homomorphism to stated precision") {
  const long p = 5;
  for (int i = 0; i < 500; ++i) {
    Rational a = random_rat(p);
    Rational b = random_rat(p);
    if (a.is_zero() || b.is_zero()) continue;
    PAdicValue x = PAdicValue::embed(a, p, 10);
    PAdicValue y = PAdicValue::embed(b, p, 10);
    CHECK(PAdicValue::congruent(x * y, PAdicValue::embed(a * b, p, 10)));
    CHECK(PAdicValue::congruent(x + y, PAdicValue::embed(a + b, p, 10)));
  }
}

TEST_CASE("precision tracks the worst operand after alignment") {
  PAdicValue a = PAdicValue::embed(Rational{1}, 3, 8);
  PAdicValue b = PAdicValue::embed(Rational{9}, 3, 4);  // valuation 2, known mod 3^6
  PAdicValue s = a + b;
  CHECK(s.valuation() == 0);
  CHECK(s.valuation() + s.precision() <= 6);
  CHECK(s.congruent_to(Rational{10}));
}

TEST_CASE("full cancellation leaves a bounded zero") {
  PAdicValue a = PAdicValue::embed(Rational{7}, 7, 5);
  PAdicValue b = PAdicValue::embed(Rational{-7}, 7, 5);
  PAdicValue z = a + b;
  CHECK(z.is_zero());
  CHECK_FALSE(z.is_exact_zero());
  CHECK(z.valuation() >= 6);  // 0 mod 7^6
}

TEST_CASE("division") {
  PAdicValue a = PAdicValue::embed(Rational{10}, 5, 8);
  PAdicValue b = PAdicValue::embed(Rational{4}, 5, 8);
  CHECK((a / b).congruent_to(Rational(5, 2)));
  CHECK_THROWS_AS(a / PAdicValue::zero(5, 8), DivisionByZero);
}

TEST_CASE("congruent_to matches rational re-embedding") {
  PAdicValue v = PAdicValue::embed(Rational(-4, 3), 7, 12);
  CHECK(v.congruent_to(Rational(-4, 3)));
  CHECK_FALSE(v.congruent_to(Rational(4, 3)));
}
