#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "summa/approx_real.hpp"
#include "summa/errors.hpp"

using namespace summa;

namespace {

std::mt19937_64 rng(31337);

Rational random_rat() {
  std::uniform_int_distribution<long> num(-5000, 5000);
  std::uniform_int_distribution<long> den(1, 999);
  return Rational(num(rng), den(rng));
}

}  // namespace

TEST_CASE("conversion and doubles") {
  ApproxReal x = ApproxReal::from_rational(Rational(4, 3), 128);
  CHECK(std::fabs(x.to_double() - 4.0 / 3.0) < 1e-15);
  CHECK(x.err() < 1e-35);
  CHECK(x.center_distance(Rational(4, 3)) < 1e-35);
}

TEST_CASE("error bounds are sound: recomputing at twice the bits stays inside") {
  for (int i = 0; i < 400; ++i) {
    Rational a = random_rat();
    Rational b = random_rat();
    if (b.is_zero()) continue;
    ApproxReal x64 = ApproxReal::from_rational(a, 64);
    ApproxReal y64 = ApproxReal::from_rational(b, 64);
    ApproxReal r64 = (x64 * y64 + x64) / y64;
    ApproxReal x128 = ApproxReal::from_rational(a, 160);
    ApproxReal y128 = ApproxReal::from_rational(b, 160);
    ApproxReal r128 = (x128 * y128 + x128) / y128;
    double gap = std::fabs(r64.to_double() - r128.to_double());
    CHECK(gap <= r64.err() + r128.err() + 1e-300);
  }
}

TEST_CASE("soundness through exp and sqrt chains") {
  for (int i = 0; i < 100; ++i) {
    Rational a = Rational(std::uniform_int_distribution<long>(-30, 30)(rng), 7);
    auto chain = [&](int prec) {
      ApproxReal x = ApproxReal::from_rational(a, prec);
      ApproxReal e = ApproxReal::exp(x);
      return ApproxReal::sqrt(e * e + ApproxReal(1, prec));
    };
    ApproxReal lo = chain(64);
    ApproxReal hi = chain(160);
    double gap = std::fabs(lo.to_double() - hi.to_double());
    CHECK(gap <= lo.err() + hi.err() + 1e-300);
  }
}

TEST_CASE("pi and ln2 digits") {
  // 3.14159265358979323846..., 0.69314718055994530941...
  ApproxReal pi = ApproxReal::pi(128);
  CHECK(std::fabs(pi.to_double() - 3.14159265358979324) < 1e-15);
  CHECK(pi.err() < 1e-30);
  ApproxReal l2 = ApproxReal::ln2(128);
  CHECK(std::fabs(l2.to_double() - 0.693147180559945309) < 1e-15);
  CHECK(l2.err() < 1e-30);
}

TEST_CASE("exp against known values with certified bounds") {
  ApproxReal one(1, 128);
  ApproxReal e1 = ApproxReal::exp(one);
  CHECK(std::fabs(e1.to_double() - 2.718281828459045235) < 1e-14);
  CHECK(e1.err() < 1e-25);
  ApproxReal em3 = ApproxReal::exp(ApproxReal(-3, 128));
  CHECK(std::fabs(em3.to_double() - 0.049787068367863943) < 1e-15);
  // exp(-20): far below double epsilon scale but fine for the bigfloat
  ApproxReal em20 = ApproxReal::exp(ApproxReal(-20, 128));
  CHECK(std::fabs(em20.to_double() - 2.061153622438558e-9) < 1e-21);
}

TEST_CASE("sqrt") {
  ApproxReal two(2, 128);
  ApproxReal r = ApproxReal::sqrt(two);
  CHECK(std::fabs(r.to_double() - 1.4142135623730950488) < 1e-15);
  ApproxReal sq = r * r;
  CHECK(sq.center_distance(Rational{2}) <= sq.err() + 1e-30);
  CHECK_THROWS_AS(ApproxReal::sqrt(ApproxReal(-1, 64)), Error);
}

TEST_CASE("exp is multiplicative within bounds") {
  for (int i = 0; i < 50; ++i) {
    Rational a = Rational(std::uniform_int_distribution<long>(-40, 40)(rng), 8);
    Rational b = Rational(std::uniform_int_distribution<long>(-40, 40)(rng), 8);
    ApproxReal ea = ApproxReal::exp(ApproxReal::from_rational(a, 128));
    ApproxReal eb = ApproxReal::exp(ApproxReal::from_rational(b, 128));
    ApproxReal eab = ApproxReal::exp(ApproxReal::from_rational(a + b, 128));
    ApproxReal diff = ea * eb - eab;
    CHECK(std::fabs(diff.to_double()) <= 4.0 * (ea * eb).err() + 4.0 * eab.err() + 1e-300);
  }
}

TEST_CASE("regularity-style zero detection") {
  ApproxReal tiny = ApproxReal::from_rational(Rational(1, 1000000), 128);
  CHECK(tiny.definitely_nonzero());
  ApproxReal zero(0, 128);
  CHECK_FALSE(zero.definitely_nonzero());
  ApproxReal fuzzy = zero;
  fuzzy.add_error(1.0);
  CHECK_FALSE(fuzzy.definitely_nonzero());
  CHECK_THROWS_AS(tiny / zero, Error);
}

TEST_CASE("ldexp2 scales value and error") {
  ApproxReal x = ApproxReal::from_rational(Rational(3, 4), 96);
  x.add_error(1e-10);
  ApproxReal y = x.ldexp2(10);
  CHECK(std::fabs(y.to_double() - 768.0) < 1e-6);
  CHECK(y.err() >= 1e-10 * 1024.0);
}
