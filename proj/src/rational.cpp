#include "summa/rational.hpp"

#include <cctype>
#include <ostream>

#include "summa/errors.hpp"

namespace summa {

Rational::Rational(long num, long den) {
  if (den == 0) throw DivisionByZero();
  mpq_init(q_);
  mpq_set_si(q_, num, 1);
  mpq_t d;
  mpq_init(d);
  mpq_set_si(d, den, 1);
  mpq_div(q_, q_, d);
  mpq_clear(d);
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den.is_zero()) throw DivisionByZero();
  mpq_init(q_);
  mpz_set(mpq_numref(q_), num.raw());
  mpz_set(mpq_denref(q_), den.raw());
  if (mpz_sgn(mpq_denref(q_)) < 0) {
    mpz_neg(mpq_numref(q_), mpq_numref(q_));
    mpz_neg(mpq_denref(q_), mpq_denref(q_));
  }
  mpq_canonicalize(q_);
}

Rational::Rational(const BigInt& v) {
  mpq_init(q_);
  mpq_set_z(q_, v.raw());
}

Rational Rational::parse(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  if (s.empty()) throw Error("empty rational literal");

  auto slash = s.find('/');
  if (slash != std::string::npos) {
    BigInt n(s.substr(0, slash));
    BigInt d(s.substr(slash + 1));
    return Rational(n, d);
  }

  // Decimal / scientific form: [-]digits[.digits][e[+-]digits]
  long exp10 = 0;
  auto epos = s.find_first_of("eE");
  if (epos != std::string::npos) {
    exp10 = std::stol(s.substr(epos + 1));
    s = s.substr(0, epos);
  }
  auto dot = s.find('.');
  if (dot != std::string::npos) {
    exp10 -= static_cast<long>(s.size() - dot - 1);
    s.erase(dot, 1);
  }
  if (s.empty() || s == "-" || s == "+") throw Error("malformed rational literal: " + text);
  BigInt mant(s);
  BigInt p10 = BigInt::pow(BigInt{10}, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  if (exp10 >= 0) return Rational(mant * p10, BigInt{1});
  return Rational(mant, p10);
}

Rational Rational::from_double(double v) {
  Rational r;
  mpq_set_d(r.q_, v);
  return r;
}

BigInt Rational::num() const {
  BigInt r;
  mpz_set(r.raw(), mpq_numref(q_));
  return r;
}

BigInt Rational::den() const {
  BigInt r;
  mpz_set(r.raw(), mpq_denref(q_));
  return r;
}

Rational operator+(const Rational& a, const Rational& b) {
  Rational r;
  mpq_add(r.q_, a.q_, b.q_);
  return r;
}

Rational operator-(const Rational& a, const Rational& b) {
  Rational r;
  mpq_sub(r.q_, a.q_, b.q_);
  return r;
}

Rational operator*(const Rational& a, const Rational& b) {
  Rational r;
  mpq_mul(r.q_, a.q_, b.q_);
  return r;
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.is_zero()) throw DivisionByZero();
  Rational r;
  mpq_div(r.q_, a.q_, b.q_);
  return r;
}

Rational& Rational::operator/=(const Rational& b) {
  if (b.is_zero()) throw DivisionByZero();
  mpq_div(q_, q_, b.q_);
  return *this;
}

Rational Rational::operator-() const {
  Rational r;
  mpq_neg(r.q_, q_);
  return r;
}

Rational Rational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Rational r;
  mpq_inv(r.q_, q_);
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational{1};
  const Rational base = e < 0 ? inverse() : *this;
  unsigned long n = static_cast<unsigned long>(e < 0 ? -e : e);
  Rational r;
  mpz_pow_ui(mpq_numref(r.q_), mpq_numref(base.q_), n);
  mpz_pow_ui(mpq_denref(r.q_), mpq_denref(base.q_), n);
  return r;
}

Rational Rational::abs() const {
  Rational r;
  mpq_abs(r.q_, q_);
  return r;
}

bool Rational::is_integer() const { return mpz_cmp_si(mpq_denref(q_), 1) == 0; }

std::string Rational::to_string() const {
  BigInt n = num();
  if (is_integer()) return n.to_string();
  return n.to_string() + "/" + den().to_string();
}

std::string Rational::to_decimal_string(int digits) const {
  BigInt scale = BigInt::pow(BigInt{10}, static_cast<unsigned long>(digits));
  BigInt scaled_num = num() * scale;
  BigInt d = den();
  auto [q, r] = BigInt::divmod(scaled_num, d);
  // round half away from zero
  BigInt twice = (r.abs() * BigInt{2});
  if (twice >= d) q += (q.sign() < 0 || scaled_num.sign() < 0) ? BigInt{-1} : BigInt{1};
  std::string body = q.abs().to_string();
  if (static_cast<int>(body.size()) <= digits) body.insert(0, digits + 1 - body.size(), '0');
  body.insert(body.size() - digits, ".");
  if (sign() < 0) body.insert(0, "-");
  return body;
}

std::ostream& operator<<(std::ostream& os, const Rational& v) { return os << v.to_string(); }

}  // namespace summa
