#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "summa/errors.hpp"
#include "summa/polynomial.hpp"

using namespace summa;

namespace {

std::mt19937_64 rng(99);

Polynomial random_poly(long max_deg) {
  std::uniform_int_distribution<long> deg(0, max_deg);
  std::uniform_int_distribution<long> coeff(-6, 6);
  std::vector<Rational> c;
  long d = deg(rng);
  for (long i = 0; i <= d; ++i) c.push_back(Rational(coeff(rng), 1 + (i % 3)));
  return Polynomial(std::move(c));
}

}  // namespace

TEST_CASE("degree bookkeeping") {
  Polynomial z;
  CHECK(z.is_zero());
  CHECK(z.degree() == Polynomial::kDegreeNegInf);
  Polynomial p({Rational{1}, Rational{0}, Rational{0}});
  CHECK(p.degree() == 0);
  Polynomial m = Polynomial::monomial(Rational{2}, 3);
  CHECK(m.degree() == 3);
  CHECK(m.coeff(3) == Rational{2});
  CHECK(m.coeff(1) == Rational{0});
}

TEST_CASE("divmod identity") {
  for (int i = 0; i < 300; ++i) {
    Polynomial a = random_poly(6);
    Polynomial b = random_poly(3);
    if (b.is_zero()) continue;
    auto [q, r] = Polynomial::divmod(a, b);
    CHECK(q * b + r == a);
    CHECK((r.is_zero() || r.degree() < b.degree()));
  }
}

TEST_CASE("gcd divides and is monic") {
  for (int i = 0; i < 200; ++i) {
    Polynomial a = random_poly(4);
    Polynomial b = random_poly(4);
    Polynomial g = Polynomial::gcd(a, b);
    if (g.is_zero()) {
      CHECK(a.is_zero());
      CHECK(b.is_zero());
      continue;
    }
    CHECK(g.leading() == Rational{1});
    CHECK(Polynomial::divmod(a, g).second.is_zero());
    CHECK(Polynomial::divmod(b, g).second.is_zero());
  }
}

TEST_CASE("gcd of common factor") {
  Polynomial f({Rational{1}, Rational{1}});          // 1 + s
  Polynomial g({Rational{1}, Rational{-2}});         // 1 - 2s
  Polynomial a = f * g;
  Polynomial b = f * Polynomial({Rational{3}, Rational{1}});
  Polynomial gg = Polynomial::gcd(a, b);
  CHECK(gg == f.monic());
}

TEST_CASE("Sturm root counting in open intervals") {
  // (s - 1/2)(s + 2): one root in (-1, 1)
  Polynomial p = Polynomial({Rational(-1, 2), Rational{1}}) * Polynomial({Rational{2}, Rational{1}});
  CHECK(p.real_roots_in_open(Rational{-1}, Rational{1}) == 1);
  CHECK(p.real_roots_in_open(Rational{0}, Rational{1}) == 1);
  CHECK(p.real_roots_in_open(Rational(1, 2), Rational{1}) == 0);

  // 1 + 16 s^4: no real roots at all
  Polynomial z16({Rational{1}, Rational{0}, Rational{0}, Rational{0}, Rational{16}});
  CHECK(z16.real_roots_in_open(Rational{-1}, Rational{1}) == 0);

  // 1 - s: root exactly at 1 is not in the open interval
  Polynomial one_minus({Rational{1}, Rational{-1}});
  CHECK(one_minus.real_roots_in_open(Rational{0}, Rational{1}) == 0);
  CHECK(one_minus.real_roots_in_open(Rational{0}, Rational{2}) == 1);

  // repeated roots count once: (s - 1/3)^2
  Polynomial rep = Polynomial({Rational(-1, 3), Rational{1}}) *
                   Polynomial({Rational(-1, 3), Rational{1}});
  CHECK(rep.real_roots_in_open(Rational{0}, Rational{1}) == 1);
}

TEST_CASE("rational function canonical form") {
  // (1 - s)/(1 - s) reduces to 1
  RationalFunction r(Polynomial({Rational{1}, Rational{-1}}),
                     Polynomial({Rational{1}, Rational{-1}}));
  CHECK(r.is_polynomial());
  CHECK(r.num() == Polynomial({Rational{1}}));

  // denominator normalized to Q(0) = 1
  RationalFunction g(Polynomial({Rational{2}}), Polynomial({Rational{2}, Rational{4}}));
  CHECK(g.den().coeff(0) == Rational{1});
  CHECK(g.den().coeff(1) == Rational{2});
  CHECK(g.num().coeff(0) == Rational{1});

  CHECK_THROWS_AS(RationalFunction(Polynomial({Rational{1}}),
                                   Polynomial({Rational{0}, Rational{1}})),
                  DenominatorVanishesAtZero);
}

TEST_CASE("rational function arithmetic and eval") {
  RationalFunction a(Polynomial({Rational{1}}), Polynomial({Rational{1}, Rational{1}}));
  RationalFunction b(Polynomial({Rational{1}}), Polynomial({Rational{1}, Rational{-1}}));
  RationalFunction s = a + b;  // 2/(1-s^2)
  CHECK(s.eval(Rational(1, 2)) == Rational(8, 3));
  RationalFunction p = a * b;  // 1/(1-s^2)
  CHECK(p.eval(Rational(1, 2)) == Rational(4, 3));
  CHECK_THROWS_AS(b.eval(Rational{1}), DivisionByZero);
  CHECK(a.inverse().eval(Rational{3}) == Rational{4});
}

TEST_CASE("scale argument") {
  Polynomial p({Rational{1}, Rational{2}, Rational{3}});
  Polynomial q = p.scale_argument(Rational{-1});
  CHECK(q.coeff(0) == Rational{1});
  CHECK(q.coeff(1) == Rational{-2});
  CHECK(q.coeff(2) == Rational{3});
}

TEST_CASE("printing") {
  Polynomial p({Rational{1}, Rational{-2}, Rational(1, 2)});
  CHECK(p.to_string() == "1 - 2*s + 1/2*s^2");
  CHECK(Polynomial{}.to_string() == "0");
  Polynomial m({Rational{0}, Rational{1}});
  CHECK(m.to_string() == "s");
}
