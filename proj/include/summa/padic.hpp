#ifndef SUMMA_PADIC_HPP
#define SUMMA_PADIC_HPP

#include <iosfwd>
#include <string>

#include "summa/bigint.hpp"
#include "summa/rational.hpp"

namespace summa {

/// Deterministic primality test by trial division (valid for p < 10^12).
bool is_prime_small(long p);

/// p-adic valuation of a nonzero rational.
long padic_valuation(const Rational& r, long p);

/// A p-adic number known to finite precision: value = unit * p^valuation,
/// with unit in [1, p^precision) coprime to p. The value is determined
/// modulo p^(valuation + precision). Zero is a distinguished sentinel with
/// infinite valuation; a cancellation that exhausts all known digits yields
/// a zero sentinel whose valuation records the surviving lower bound.
class PAdicValue {
 public:
  static constexpr long kInfValuation = 1L << 60;

  static PAdicValue zero(long p, int precision);
  static PAdicValue embed(const Rational& r, long p, int precision);

  long prime() const { return prime_; }
  long valuation() const { return valuation_; }
  const BigInt& unit() const { return unit_; }
  int precision() const { return precision_; }
  bool is_zero() const { return zero_; }
  /// True for the exact zero sentinel (infinite valuation).
  bool is_exact_zero() const { return zero_ && valuation_ >= kInfValuation; }

  /// |x|_p = p^(-valuation) as an exact rational; 0 for the zero sentinel.
  Rational norm() const;

  friend PAdicValue operator+(const PAdicValue& a, const PAdicValue& b);
  friend PAdicValue operator-(const PAdicValue& a, const PAdicValue& b);
  friend PAdicValue operator*(const PAdicValue& a, const PAdicValue& b);
  friend PAdicValue operator/(const PAdicValue& a, const PAdicValue& b);
  PAdicValue operator-() const;

  /// True when a and b agree modulo p^min(known precision).
  static bool congruent(const PAdicValue& a, const PAdicValue& b);
  /// True when this value is congruent to the rational r at this value's precision.
  bool congruent_to(const Rational& r) const;

  std::string to_string() const;
  friend std::ostream& operator<<(std::ostream& os, const PAdicValue& v);

 private:
  PAdicValue() = default;
  void normalize();

  long prime_ = 2;
  long valuation_ = kInfValuation;
  BigInt unit_{0};
  int precision_ = 1;
  bool zero_ = true;
};

}  // namespace summa

#endif
