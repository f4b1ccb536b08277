#include "summa/fixtures.hpp"

#include <algorithm>
#include <mutex>

#include "summa/errors.hpp"
#include "summa/lang.hpp"
#include "summa/padic.hpp"
#include "summa/polynomial.hpp"

namespace summa {

namespace {

// ceil(log2(m)) for m >= 2.
long ceil_log2(long m) {
  long bits = 0;
  long v = m - 1;
  while (v > 0) {
    ++bits;
    v >>= 1;
  }
  return bits;
}

// The sparse exponent set L = union over i of {m * 2^(2^i) : 0 <= m <= 2^(2^i)},
// enumerated in increasing order.
const std::vector<long>& l_set_prefix(std::size_t count) {
  static std::mutex mu;
  static std::vector<long> cache;
  std::lock_guard<std::mutex> lk(mu);
  if (cache.size() > count) return cache;
  long v = 1L << 12;
  const long cap = 1L << 40;
  while (true) {
    std::vector<long> out;
    for (int i = 0;; ++i) {
      long shift = 1L << i;
      if (shift >= 62) break;
      long g = 1L << shift;
      long m_max = std::min(g, v / g);
      for (long m = 0; m <= m_max; ++m) out.push_back(m * g);
      if (g >= v) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    if (out.size() > count || v >= cap) {
      cache = std::move(out);
      return cache;
    }
    v *= 4;
  }
}

long l_set(long k) {
  const auto& prefix = l_set_prefix(static_cast<std::size_t>(k) + 2);
  if (static_cast<std::size_t>(k) >= prefix.size())
    throw BudgetExceeded("L-set index " + std::to_string(k));
  return prefix[static_cast<std::size_t>(k)];
}

// Minimal positive r with r = -1 mod p_self and r = 1 mod p_other.
long crt_residue(long p_self, long p_other) {
  long mod = p_self * p_other;
  for (long r = 1; r < mod; ++r) {
    if (r % p_self == p_self - 1 && r % p_other == 1) return r;
  }
  throw Error("no CRT residue (moduli not coprime?)");
}

Series from_expr(const std::string& text) { return lang::lower_text(text); }

Series make_xa(long a) {
  if (a < 3) throw Error("Xa requires a >= 3");
  Rational c{2 * a + 1, a * a};
  return binomial_power(polynomial_series(Polynomial({Rational{1}, c})), Rational(1, 2));
}

Series make_crt_y(long p1, long p2) {
  if (!is_prime_small(p1) || !is_prime_small(p2) || p1 == p2 || p1 == 2 || p2 == 2)
    throw Error("crt-Y requires two distinct odd primes");
  long r1 = crt_residue(p1, p2);
  long r2 = crt_residue(p2, p1);
  Series y1 =
      binomial_power(polynomial_series(Polynomial({Rational{1}, Rational{r1 * r1 - 1}})),
                     Rational(1, 2));
  Series y2 =
      binomial_power(polynomial_series(Polynomial({Rational{1}, Rational{r2 * r2 - 1}})),
                     Rational(1, 2));
  return linear_combine(Rational{1}, y1, Rational{1}, y2);
}

Series make_ratnottel_t() {
  // (m+2) t_{m+2} - 2m t_{m+1} + (m-1) t_m = 0, t_0 = 1, t_1 = -2.
  std::vector<Polynomial> rec{Polynomial({Rational{-1}, Rational{1}}),
                              Polynomial({Rational{0}, Rational{-2}}),
                              Polynomial({Rational{2}, Rational{1}})};
  return holonomic_series(rec, {Rational{1}, Rational{-2}}, "ratnottel-T");
}

Series make_ratnottel_s() {
  Series t = make_ratnottel_t();
  Series flipped = scale_argument(t, Rational{-1});
  return linear_combine(Rational{1},
                        polynomial_series(Polynomial({Rational{1}, Rational{1}})), Rational{1},
                        flipped);
}

std::vector<FixtureEntry> build_catalog() {
  std::vector<FixtureEntry> cat;
  auto expr_fixture = [&cat](std::string name, std::string expr, std::string note) {
    FixtureEntry e;
    e.name = std::move(name);
    e.note = std::move(note);
    e.expr = expr;
    e.make = [expr](const std::vector<long>&) { return from_expr(expr); };
    cat.push_back(std::move(e));
  };

  expr_fixture("G-1", "1/(1+s)",
               "alternating units 1 - 1 + 1 - 1 + ...; telescopes to 1/2 over Q but escapes Z");
  expr_fixture("one-one", "1/(1+s)",
               "alias of G-1: the bounded oscillating series with Abel/Cesaro value 1/2");
  expr_fixture("G-2", "1/(1+2*s)",
               "geometric ratio -2: integral-Borel sums to 1/3, not Abel summable");
  expr_fixture("G2", "1/(1-2*s)",
               "geometric ratio 2: telescopes to -1, exponential growth defeats M");
  expr_fixture("Z16", "1/(1+16*s^4)",
               "lacunary signs with complex poles at modulus 1/2: Euler-rational 1/17, Borel "
               "refuses");
  expr_fixture("sqrt79", "sqrt(1+(7/9)*s)",
               "binomial square root of 16/9: classical sum 4/3, 7-adic sum -4/3");
  expr_fixture("sigma", "1/(1-s)",
               "the all-ones series of partial sums; summable by nothing");
  expr_fixture("inv-sqrt", "pow(1+s, -1/2)",
               "conditionally convergent central-binomial series; its square is 1 - 1 + 1 - ...");

  {
    FixtureEntry e;
    e.name = "Xa";
    e.arity = 1;
    e.note = "sqrt(1 + (2a+1)/a^2 s): classical sum (a+1)/a, p-adic sum -(a+1)/a for p | 2a+1";
    e.make = [](const std::vector<long>& a) { return make_xa(a.at(0)); };
    cat.push_back(std::move(e));
  }
  {
    FixtureEntry e;
    e.name = "crt-Y";
    e.arity = 2;
    e.note =
        "sum of two binomial square roots with CRT-matched radicands: distinct p-adic sums at "
        "each prime";
    e.make = [](const std::vector<long>& a) { return make_crt_y(a.at(0), a.at(1)); };
    cat.push_back(std::move(e));
  }
  {
    FixtureEntry e;
    e.name = "conv-not-tel";
    e.note = "sum over n of (-1)^n/n at exponents n^2: convergent but no polynomial telescopes it";
    e.make = [](const std::vector<long>&) {
      return gap_series([](long k) { return (k + 1) * (k + 1); },
                        [](long k) {
                          Rational t{1, k + 1};
                          return (k % 2 == 0) ? -t : t;
                        },
                        "conv-not-tel");
    };
    cat.push_back(std::move(e));
  }
  {
    FixtureEntry e;
    e.name = "multnottel-X";
    e.note =
        "signed reciprocal ceil-log2 terms on the doubly exponential gap set L; the Cauchy "
        "square has unbounded coefficients on the gaps";
    e.make = [](const std::vector<long>&) {
      return gap_series([](long k) { return l_set(k + 1); },
                        [](long k) {
                          Rational t{1, ceil_log2(k + 3)};
                          return (k % 2 == 0) ? -t : t;
                        },
                        "multnottel-X");
    };
    cat.push_back(std::move(e));
  }
  {
    FixtureEntry e;
    e.name = "ratnottel-T";
    e.note = "Taylor coefficients of (1-z)exp(-z/(1-z)) from its first-order recurrence";
    e.make = [](const std::vector<long>&) { return make_ratnottel_t(); };
    cat.push_back(std::move(e));
  }
  {
    FixtureEntry e;
    e.name = "ratnottel-S";
    e.note = "2 + 3z + z^2/2 - z^3/3 + ...: absolutely convergent at 1 with essential "
             "singularity at -1";
    e.make = [](const std::vector<long>&) { return make_ratnottel_s(); };
    cat.push_back(std::move(e));
  }
  {
    FixtureEntry e;
    e.name = "ratnottel-X";
    e.note = "reciprocal of ratnottel-S: rationally summable over the absolute base, not "
             "telescopable (infinitely many poles in the disc)";
    e.ratio_hint = std::make_pair(std::string("1"), std::string("fixture(ratnottel-S)"));
    e.make = [](const std::vector<long>&) { return formal_inverse(make_ratnottel_s()); };
    cat.push_back(std::move(e));
  }
  return cat;
}

}  // namespace

const std::vector<FixtureEntry>& fixture_catalog() {
  static const std::vector<FixtureEntry> cat = build_catalog();
  return cat;
}

const FixtureEntry* find_fixture(const std::string& bare_name) {
  for (const auto& e : fixture_catalog())
    if (e.name == bare_name) return &e;
  return nullptr;
}

Series fixture(const std::string& name_and_args) {
  std::string name = name_and_args;
  std::vector<long> args;
  auto paren = name_and_args.find('(');
  if (paren != std::string::npos) {
    if (name_and_args.back() != ')') throw UnknownFixture(name_and_args);
    name = name_and_args.substr(0, paren);
    std::string body = name_and_args.substr(paren + 1, name_and_args.size() - paren - 2);
    std::size_t pos = 0;
    while (pos < body.size()) {
      auto comma = body.find(',', pos);
      std::string piece =
          body.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
      args.push_back(std::stol(piece));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  const FixtureEntry* e = find_fixture(name);
  if (e == nullptr) throw UnknownFixture(name_and_args);
  if (static_cast<int>(args.size()) != e->arity) throw UnknownFixture(name_and_args + " (arity)");
  return e->make(args);
}

}  // namespace summa
