#ifndef SUMMA_BIGINT_HPP
#define SUMMA_BIGINT_HPP

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>

namespace summa {

/// Arbitrary-precision signed integer. Value semantics over GMP's mpz layer.
class BigInt {
 public:
  BigInt() { mpz_init(z_); }
  BigInt(long v) { mpz_init_set_si(z_, v); }  // NOLINT: implicit by design
  BigInt(int v) : BigInt(static_cast<long>(v)) {}
  explicit BigInt(const std::string& decimal);

  BigInt(const BigInt& o) { mpz_init_set(z_, o.z_); }
  BigInt(BigInt&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  BigInt& operator=(const BigInt& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  BigInt& operator=(BigInt&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~BigInt() { mpz_clear(z_); }

  static BigInt pow2(unsigned long k);
  static BigInt pow(const BigInt& base, unsigned long e);
  static BigInt factorial(unsigned long n);
  static BigInt binomial(unsigned long n, unsigned long k);

  friend BigInt operator+(const BigInt& a, const BigInt& b);
  friend BigInt operator-(const BigInt& a, const BigInt& b);
  friend BigInt operator*(const BigInt& a, const BigInt& b);
  BigInt operator-() const;

  BigInt& operator+=(const BigInt& b) {
    mpz_add(z_, z_, b.z_);
    return *this;
  }
  BigInt& operator-=(const BigInt& b) {
    mpz_sub(z_, z_, b.z_);
    return *this;
  }
  BigInt& operator*=(const BigInt& b) {
    mpz_mul(z_, z_, b.z_);
    return *this;
  }
  BigInt& operator*=(long b) {
    mpz_mul_si(z_, z_, b);
    return *this;
  }
  BigInt& operator<<=(unsigned long k) {
    mpz_mul_2exp(z_, z_, k);
    return *this;
  }

  /// Truncated division (rounds toward zero, like C++ integer division).
  friend BigInt operator/(const BigInt& a, const BigInt& b);
  friend BigInt operator%(const BigInt& a, const BigInt& b);
  static std::pair<BigInt, BigInt> divmod(const BigInt& a, const BigInt& b);
  /// Exact division; b must divide a.
  static BigInt divexact(const BigInt& a, const BigInt& b);
  static BigInt gcd(const BigInt& a, const BigInt& b);
  static BigInt lcm(const BigInt& a, const BigInt& b);
  /// Nonnegative remainder mod m (m > 0).
  static BigInt mod_floor(const BigInt& a, const BigInt& m);
  /// Inverse of a mod m; requires gcd(a, m) = 1.
  static BigInt mod_inverse(const BigInt& a, const BigInt& m);

  BigInt abs() const;
  int sign() const { return mpz_sgn(z_); }
  bool is_zero() const { return mpz_sgn(z_) == 0; }
  bool is_one() const { return mpz_cmp_si(z_, 1) == 0; }
  bool odd() const { return mpz_odd_p(z_) != 0; }
  bool divisible_by(const BigInt& b) const { return mpz_divisible_p(z_, b.z_) != 0; }

  std::size_t bit_length() const { return is_zero() ? 0 : mpz_sizeinbase(z_, 2); }
  unsigned long trailing_zero_bits() const;

  bool fits_long() const { return mpz_fits_slong_p(z_) != 0; }
  long to_long() const;  // throws if out of range
  double to_double() const { return mpz_get_d(z_); }

  /// Top `bits` bits as (mantissa, exponent) with value ~= mantissa * 2^exponent.
  /// Mantissa is truncated toward zero; |error| < 2^exponent.
  std::pair<BigInt, long> top_bits(unsigned bits) const;

  std::string to_string() const;

  friend bool operator==(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) == 0; }
  friend bool operator!=(const BigInt& a, const BigInt& b) { return !(a == b); }
  friend bool operator<(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) < 0; }
  friend bool operator<=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) <= 0; }
  friend bool operator>(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) > 0; }
  friend bool operator>=(const BigInt& a, const BigInt& b) { return mpz_cmp(a.z_, b.z_) >= 0; }

  friend std::ostream& operator<<(std::ostream& os, const BigInt& v);

  const mpz_t& raw() const { return z_; }
  mpz_t& raw() { return z_; }

 private:
  mpz_t z_;
};

}  // namespace summa

#endif
