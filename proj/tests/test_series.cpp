#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <thread>

#include "summa/approx_real.hpp"
#include "summa/errors.hpp"
#include "summa/series.hpp"

using namespace summa;

namespace {

std::mt19937_64 rng(4242);

Rational rrat(long n = 6, long d = 4) {
  std::uniform_int_distribution<long> num(-n, n);
  std::uniform_int_distribution<long> den(1, d);
  return Rational(num(rng), den(rng));
}

Series geometric(const Rational& ratio) {
  return expand_rational(RationalFunction(Polynomial({Rational{1}}),
                                          Polynomial({Rational{1}, -ratio})));
}

Series t_series() {
  std::vector<Polynomial> rec{Polynomial({Rational{-1}, Rational{1}}),
                              Polynomial({Rational{0}, Rational{-2}}),
                              Polynomial({Rational{2}, Rational{1}})};
  return holonomic_series(rec, {Rational{1}, Rational{-2}}, "T");
}

}  // namespace

TEST_CASE("coefficient examples") {
  Series g2 = geometric(Rational{-2});  // 1/(1+2s) = 1 - 2 + 4 - 8 ...
  CHECK(g2.coefficient(3) == Rational{-8});
  CHECK(g2.coefficient(0) == Rational{1});

  Series any = geometric(Rational(1, 3));
  CHECK(shift(any).coefficient(0) == Rational{0});

  Series sqrt79 = binomial_power(polynomial_series(Polynomial({Rational{1}, Rational(7, 9)})),
                                 Rational(1, 2));
  CHECK(sqrt79.coefficient(0) == Rational{1});
  CHECK(sqrt79.coefficient(1) == Rational(7, 18));
  CHECK(sqrt79.coefficient(2) == Rational(-49, 648));
  CHECK(sqrt79.coefficient(3) == Rational(343, 11664));
}

TEST_CASE("coefficient index guards") {
  Series x = geometric(Rational(1, 2));
  CHECK_THROWS_AS(x.coefficient(-1), Error);
  CHECK_THROWS_AS(x.coefficient(SeriesImpl::kHardCap + 1), BudgetExceeded);
}

TEST_CASE("shift and left_shift are inverse") {
  Series ones = partial_sums(constant_series(Rational{1}));  // 1,1,1,...
  Series sh = shift(ones);
  CHECK(sh.coefficient(0) == Rational{0});
  CHECK(sh.coefficient(1) == Rational{1});
  Series back = left_shift(sh);
  for (long n = 0; n <= 32; ++n) CHECK(back.coefficient(n) == ones.coefficient(n));
  // left_shift drops a0
  Series ls = left_shift(ones);
  for (long n = 0; n <= 16; ++n) CHECK(ls.coefficient(n) == ones.coefficient(n + 1));
}

TEST_CASE("scalars commute with the shift operator") {
  for (int i = 0; i < 100; ++i) {
    Rational a = rrat();
    Series x = geometric(rrat(2, 3));
    Series lhs = shift(linear_combine(a, x, Rational{0}, zero_series()));
    Series rhs = linear_combine(a, shift(x), Rational{0}, zero_series());
    for (long n = 0; n <= 12; ++n) CHECK(lhs.coefficient(n) == rhs.coefficient(n));
  }
}

TEST_CASE("linear combinations") {
  Series x = geometric(Rational(2, 3));
  Series z = linear_combine(Rational{1}, x, Rational{-1}, x);
  for (long n = 0; n <= 20; ++n) CHECK(z.coefficient(n).is_zero());
  Series e0 = polynomial_series(Polynomial({Rational{1}}));
  Series e1 = polynomial_series(Polynomial::monomial(Rational{1}, 1));
  Series c = linear_combine(Rational{2}, e0, Rational{3}, e1);
  CHECK(c.coefficient(0) == Rational{2});
  CHECK(c.coefficient(1) == Rational{3});
  CHECK(c.coefficient(2) == Rational{0});
}

TEST_CASE("cauchy product: the inverse square root squares to alternating units") {
  Series invsqrt = binomial_power(polynomial_series(Polynomial({Rational{1}, Rational{1}})),
                                  Rational(-1, 2));
  CHECK(invsqrt.coefficient(1) == Rational(-1, 2));
  CHECK(invsqrt.coefficient(2) == Rational(3, 8));
  CHECK(invsqrt.coefficient(3) == Rational(-5, 16));
  CHECK(invsqrt.coefficient(4) == Rational(35, 128));
  Series sq = cauchy_product(invsqrt, invsqrt);
  for (long n = 0; n <= 64; ++n)
    CHECK(sq.coefficient(n) == ((n % 2 == 0) ? Rational{1} : Rational{-1}));
}

TEST_CASE("cauchy product identities") {
  Series x = geometric(Rational(1, 2));
  Series one = constant_series(Rational{1});
  Series xi = cauchy_product(x, one);
  for (long n = 0; n <= 16; ++n) CHECK(xi.coefficient(n) == x.coefficient(n));

  // (1 - s) * Sigma = 1
  Series sigma = partial_sums(constant_series(Rational{1}));
  Series d = cauchy_product(polynomial_series(Polynomial({Rational{1}, Rational{-1}})),
                            partial_sums(constant_series(Rational{1})));
  (void)sigma;
  CHECK(d.coefficient(0) == Rational{1});
  for (long n = 1; n <= 16; ++n) CHECK(d.coefficient(n).is_zero());
}

TEST_CASE("partial sums and differences are mutually inverse") {
  Series alt = geometric(Rational{-1});
  Series ps = partial_sums(alt);
  CHECK(ps.coefficient(0) == Rational{1});
  CHECK(ps.coefficient(1) == Rational{0});
  CHECK(ps.coefficient(2) == Rational{1});
  CHECK(ps.coefficient(3) == Rational{0});

  // partial sums of the all-ones series count 1, 2, 3, ...
  Series all_ones = partial_sums(constant_series(Rational{1}));
  Series counting = partial_sums(all_ones);
  CHECK(counting.coefficient(0) == Rational{1});
  CHECK(counting.coefficient(1) == Rational{2});
  CHECK(counting.coefficient(2) == Rational{3});

  for (int i = 0; i < 50; ++i) {
    Series x = geometric(rrat(2, 3));
    Series roundtrip = difference(partial_sums(x));
    for (long n = 0; n <= 24; ++n) CHECK(roundtrip.coefficient(n) == x.coefficient(n));
  }
}

TEST_CASE("expand_rational examples") {
  Series z16 = expand_rational(RationalFunction(
      Polynomial({Rational{1}}),
      Polynomial({Rational{1}, Rational{0}, Rational{0}, Rational{0}, Rational{16}})));
  long expect_idx[] = {0, 4, 8};
  Rational expect_val[] = {Rational{1}, Rational{-16}, Rational{256}};
  for (int i = 0; i < 3; ++i) CHECK(z16.coefficient(expect_idx[i]) == expect_val[i]);
  for (long n : {1, 2, 3, 5, 6, 7}) CHECK(z16.coefficient(n).is_zero());

  Series reduced = expand_rational(RationalFunction(Polynomial({Rational{1}, Rational{-1}}),
                                                    Polynomial({Rational{1}, Rational{-1}})));
  CHECK(reduced.coefficient(0) == Rational{1});
  CHECK(reduced.coefficient(1).is_zero());

  Series g2 = expand_rational(RationalFunction(Polynomial({Rational{1}}),
                                               Polynomial({Rational{1}, Rational{-2}})));
  CHECK(g2.coefficient(0) == Rational{1});
  CHECK(g2.coefficient(1) == Rational{2});
  CHECK(g2.coefficient(2) == Rational{4});
  CHECK(g2.coefficient(3) == Rational{8});
}

TEST_CASE("expand_rational round trip: Q * expand(P/Q) = P") {
  for (int i = 0; i < 100; ++i) {
    Polynomial p({rrat(), rrat(), rrat()});
    Polynomial q({Rational{1}, rrat(), rrat()});
    RationalFunction rf(p, q);
    if (rf.is_polynomial()) continue;
    Series x = expand_rational(rf);
    Series back = cauchy_product(polynomial_series(rf.den()), x);
    long bound = rf.num().degree() + rf.den().degree() + 24;
    for (long n = 0; n <= bound; ++n) CHECK(back.coefficient(n) == rf.num().coeff(n));
  }
}

TEST_CASE("binomial power edge cases") {
  Series x = geometric(Rational(1, 2));
  CHECK_THROWS_AS(binomial_power(shift(x), Rational(1, 2)), ConstantTermNotOne);
  Series trivial = binomial_power(x, Rational{0});
  CHECK(trivial.coefficient(0) == Rational{1});
  for (long n = 1; n <= 12; ++n) CHECK(trivial.coefficient(n).is_zero());
}

TEST_CASE("binomial power of a general base agrees with the simple recurrence") {
  // base with two nonzero higher coefficients exercises the general path
  Series base = polynomial_series(Polynomial({Rational{1}, Rational(1, 2), Rational(1, 3)}));
  Series y = binomial_power(base, Rational(1, 2));
  Series sq = cauchy_product(y, y);
  for (long n = 0; n <= 32; ++n) CHECK(sq.coefficient(n) == base.coefficient(n));
}

TEST_CASE("gap series") {
  // C = sum over n>=1 of (-1)^n / n at exponent n^2
  Series c = gap_series([](long k) { return (k + 1) * (k + 1); },
                        [](long k) {
                          Rational t{1, k + 1};
                          return (k % 2 == 0) ? -t : t;
                        });
  CHECK(c.coefficient(9) == Rational(-1, 3));
  CHECK(c.coefficient(5).is_zero());
  CHECK(c.coefficient(1) == Rational{-1});
  CHECK(c.coefficient(4) == Rational(1, 2));
  CHECK(c.sparse());
  auto supp = c.support_up_to(30);
  CHECK(supp == std::vector<long>{1, 4, 9, 16, 25});

  CHECK_THROWS_AS(
      gap_series([](long) { return 5L; }, [](long) { return Rational{1}; }).coefficient(6),
      NonMonotoneExponents);
}

TEST_CASE("sparse linear combinations keep the union support") {
  Series a = gap_series([](long k) { return 3 * k + 1; }, [](long k) { return Rational(k + 1); });
  Series b = gap_series([](long k) { return 4 * k + 2; }, [](long k) { return Rational(1, k + 1); });
  Series c = linear_combine(Rational{2}, a, Rational{-1}, b);
  CHECK(c.sparse());
  auto supp = c.support_up_to(12);
  CHECK(supp == std::vector<long>{1, 2, 4, 6, 7, 10});
  for (long n = 0; n <= 20; ++n)
    CHECK(c.coefficient(n) == Rational{2} * a.coefficient(n) - b.coefficient(n));
}

TEST_CASE("sparse and dense evaluation agree in products") {
  Series a = gap_series([](long k) { return k * k + 1; },
                        [](long k) { return Rational(k + 1, 2); });
  Series b = gap_series([](long k) { return 2 * k + 1; },
                        [](long k) { return Rational(1, k + 1); });
  Series sparse_prod = cauchy_product(a, b);
  CHECK(sparse_prod.sparse());
  for (long n = 0; n <= 40; ++n) {
    Rational dense{0};
    for (long k = 0; k <= n; ++k) dense += a.coefficient(k) * b.coefficient(n - k);
    CHECK(sparse_prod.coefficient(n) == dense);
  }
}

TEST_CASE("holonomic T series") {
  Series t = t_series();
  const char* expected[] = {"1", "-2", "1/2", "1/3", "5/24", "7/60", "37/720", "17/2520",
                            "-887/40320"};
  for (int n = 0; n <= 8; ++n) CHECK(t.coefficient(n) == Rational::parse(expected[n]));

  // S(z) = 1 + z + T(-z) = 2 + 3z + z^2/2 - z^3/3 + ...
  Series s = linear_combine(Rational{1},
                            polynomial_series(Polynomial({Rational{1}, Rational{1}})),
                            Rational{1}, scale_argument(t, Rational{-1}));
  CHECK(s.coefficient(0) == Rational{2});
  CHECK(s.coefficient(1) == Rational{3});
  CHECK(s.coefficient(2) == Rational(1, 2));
  CHECK(s.coefficient(3) == Rational(-1, 3));

  CHECK_THROWS_AS(
      holonomic_series({Polynomial({Rational{1}}), Polynomial({Rational{0}})}, {Rational{1}})
          .coefficient(4),
      RecurrenceSingular);
}

TEST_CASE("numeric differentiation oracle confirms the T recurrence") {
  // Forward differences of f(z) = (1-z)exp(-z/(1-z)) at 352-bit precision:
  // t_n ~ Delta_h^n f(0) / (n! h^n), h = 2^-30.
  const int prec = 352;
  const long hexp = 30;
  Series t = t_series();
  std::vector<ApproxReal> f;
  for (long k = 0; k <= 8; ++k) {
    Rational z{BigInt{k}, BigInt::pow2(hexp)};
    Rational ratio = z / (Rational{1} - z);
    ApproxReal e = ApproxReal::exp(ApproxReal::from_rational(-ratio, prec));
    f.push_back(ApproxReal::from_rational(Rational{1} - z, prec) * e);
  }
  Rational fact{1};
  for (long n = 0; n <= 8; ++n) {
    if (n > 0) fact *= Rational{n};
    // forward difference Delta^n f(0)
    ApproxReal delta(0, prec);
    for (long k = 0; k <= n; ++k) {
      Rational c{BigInt::binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k))};
      if ((n - k) % 2 == 1) c = -c;
      delta += ApproxReal::from_rational(c, prec) * f[static_cast<std::size_t>(k)];
    }
    ApproxReal deriv = delta.ldexp2(hexp * n);  // / h^n
    ApproxReal tn = deriv * ApproxReal::from_rational(fact.inverse(), prec);
    CHECK(tn.center_distance(t.coefficient(n)) < 1e-4);
  }
}

TEST_CASE("streams agree with coefficients") {
  std::vector<Series> pool{
      polynomial_series(Polynomial({Rational(3, 2), Rational{-1}, Rational(5, 7)})),
      binomial_power(polynomial_series(Polynomial({Rational{1}, Rational(7, 9)})),
                     Rational(1, 2)),
      binomial_power(polynomial_series(Polynomial({Rational{1}, Rational{1}})), Rational(-1, 2)),
      t_series(),
      scale_argument(t_series(), Rational{-1}),
      linear_combine(Rational{1}, polynomial_series(Polynomial({Rational{1}, Rational{1}})),
                     Rational{1}, scale_argument(t_series(), Rational{-1})),
      shift_n(t_series(), 3),
  };
  for (const auto& x : pool) {
    auto stream = x.stream();
    REQUIRE(stream != nullptr);
    BigInt den{1};
    for (long n = 0; n <= 120; ++n) {
      auto term = stream->next();
      den *= term.den_scale;
      CHECK(Rational(term.numer, den) == x.coefficient(n));
    }
  }
}

TEST_CASE("memo is safe under concurrent readers") {
  Series t = t_series();
  std::vector<std::thread> workers;
  std::atomic<bool> ok{true};
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&t, &ok] {
      for (long n = 0; n <= 300; ++n) {
        if (t.coefficient(n) != t.coefficient(n)) ok = false;
      }
    });
  }
  for (auto& th : workers) th.join();
  CHECK(ok.load());
  CHECK(t.coefficient(8) == Rational::parse("-887/40320"));
}

TEST_CASE("formal inverse") {
  Series s = linear_combine(Rational{1},
                            polynomial_series(Polynomial({Rational{1}, Rational{1}})),
                            Rational{1}, scale_argument(t_series(), Rational{-1}));
  Series x = formal_inverse(s);
  CHECK(x.coefficient(0) == Rational(1, 2));
  CHECK(x.coefficient(1) == Rational(-3, 4));
  CHECK(x.coefficient(2) == Rational{1});
  CHECK(x.coefficient(3) == Rational(-59, 48));
  CHECK(x.coefficient(4) == Rational(17, 12));
  Series check = cauchy_product(s, x);
  CHECK(check.coefficient(0) == Rational{1});
  for (long n = 1; n <= 40; ++n) CHECK(check.coefficient(n).is_zero());
  CHECK_THROWS_AS(formal_inverse(shift(s)), DenominatorVanishesAtZero);
}
