#ifndef SUMMA_RATIONAL_HPP
#define SUMMA_RATIONAL_HPP

#include <gmp.h>

#include <iosfwd>
#include <string>
#include <utility>

#include "summa/bigint.hpp"

namespace summa {

/// Exact rational number, always stored reduced with positive denominator.
/// Arithmetic never rounds.
class Rational {
 public:
  Rational() { mpq_init(q_); }
  Rational(long v) {  // NOLINT: implicit by design
    mpq_init(q_);
    mpq_set_si(q_, v, 1);
  }
  Rational(int v) : Rational(static_cast<long>(v)) {}
  Rational(long num, long den);
  Rational(const BigInt& num, const BigInt& den);
  explicit Rational(const BigInt& v);

  Rational(const Rational& o) {
    mpq_init(q_);
    mpq_set(q_, o.q_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(q_);
    mpq_swap(q_, o.q_);
  }
  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(q_, o.q_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(q_, o.q_);
    return *this;
  }
  ~Rational() { mpq_clear(q_); }

  /// Parses "p/q", integers, and decimal/scientific forms ("0.25", "1e-9").
  static Rational parse(const std::string& text);
  /// Exact conversion of a finite double (doubles are dyadic rationals).
  static Rational from_double(double v);

  BigInt num() const;
  BigInt den() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);
  Rational operator-() const;

  Rational& operator+=(const Rational& b) {
    mpq_add(q_, q_, b.q_);
    return *this;
  }
  Rational& operator-=(const Rational& b) {
    mpq_sub(q_, q_, b.q_);
    return *this;
  }
  Rational& operator*=(const Rational& b) {
    mpq_mul(q_, q_, b.q_);
    return *this;
  }
  Rational& operator/=(const Rational& b);

  Rational inverse() const;
  /// Integer power; negative exponents require a nonzero value.
  Rational pow(long e) const;
  Rational abs() const;

  int sign() const { return mpq_sgn(q_); }
  bool is_zero() const { return mpq_sgn(q_) == 0; }
  bool is_integer() const;
  bool is_one() const { return mpq_cmp_si(q_, 1, 1) == 0; }

  double to_double() const { return mpq_get_d(q_); }
  std::string to_string() const;  // "p/q" or "p" when integral
  /// Decimal rendering with the given number of fractional digits.
  std::string to_decimal_string(int digits) const;

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.q_, b.q_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) < 0; }
  friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) <= 0; }
  friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) > 0; }
  friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.q_, b.q_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const Rational& v);

  const mpq_t& raw() const { return q_; }

 private:
  mpq_t q_;
};

}  // namespace summa

#endif
