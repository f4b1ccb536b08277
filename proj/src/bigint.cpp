#include "summa/bigint.hpp"

#include <ostream>
#include <stdexcept>
#include <vector>

#include "summa/errors.hpp"

namespace summa {

BigInt::BigInt(const std::string& decimal) {
  if (mpz_init_set_str(z_, decimal.c_str(), 10) != 0) {
    mpz_clear(z_);
    throw Error("malformed integer literal: " + decimal);
  }
}

BigInt BigInt::pow2(unsigned long k) {
  BigInt r{1};
  mpz_mul_2exp(r.z_, r.z_, k);
  return r;
}

BigInt BigInt::pow(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.z_, base.z_, e);
  return r;
}

BigInt BigInt::factorial(unsigned long n) {
  BigInt r;
  mpz_fac_ui(r.z_, n);
  return r;
}

BigInt BigInt::binomial(unsigned long n, unsigned long k) {
  BigInt r;
  mpz_bin_uiui(r.z_, n, k);
  return r;
}

BigInt operator+(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_add(r.z_, a.z_, b.z_);
  return r;
}

BigInt operator-(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_sub(r.z_, a.z_, b.z_);
  return r;
}

BigInt operator*(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_mul(r.z_, a.z_, b.z_);
  return r;
}

BigInt BigInt::operator-() const {
  BigInt r;
  mpz_neg(r.z_, z_);
  return r;
}

BigInt operator/(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DivisionByZero();
  BigInt r;
  mpz_tdiv_q(r.z_, a.z_, b.z_);
  return r;
}

BigInt operator%(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DivisionByZero();
  BigInt r;
  mpz_tdiv_r(r.z_, a.z_, b.z_);
  return r;
}

std::pair<BigInt, BigInt> BigInt::divmod(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DivisionByZero();
  BigInt q, r;
  mpz_tdiv_qr(q.z_, r.z_, a.z_, b.z_);
  return {std::move(q), std::move(r)};
}

BigInt BigInt::divexact(const BigInt& a, const BigInt& b) {
  if (b.is_zero()) throw DivisionByZero();
  BigInt r;
  mpz_divexact(r.z_, a.z_, b.z_);
  return r;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_gcd(r.z_, a.z_, b.z_);
  return r;
}

BigInt BigInt::lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.z_, a.z_, b.z_);
  return r;
}

BigInt BigInt::mod_floor(const BigInt& a, const BigInt& m) {
  if (m.sign() <= 0) throw Error("mod_floor requires positive modulus");
  BigInt r;
  mpz_mod(r.z_, a.z_, m.z_);
  return r;
}

BigInt BigInt::mod_inverse(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (mpz_invert(r.z_, a.z_, m.z_) == 0) {
    throw Error("no modular inverse: gcd != 1");
  }
  return r;
}

BigInt BigInt::abs() const {
  BigInt r;
  mpz_abs(r.z_, z_);
  return r;
}

unsigned long BigInt::trailing_zero_bits() const {
  if (is_zero()) return 0;
  return mpz_scan1(z_, 0);
}

long BigInt::to_long() const {
  if (!fits_long()) throw Error("BigInt does not fit in long: " + to_string());
  return mpz_get_si(z_);
}

std::pair<BigInt, long> BigInt::top_bits(unsigned bits) const {
  if (is_zero()) return {BigInt{0}, 0};
  std::size_t len = bit_length();
  BigInt m;
  if (len <= bits) {
    mpz_set(m.z_, z_);
    return {std::move(m), 0};
  }
  unsigned long drop = static_cast<unsigned long>(len - bits);
  mpz_tdiv_q_2exp(m.z_, z_, drop);
  return {std::move(m), static_cast<long>(drop)};
}

std::string BigInt::to_string() const {
  std::vector<char> buf(mpz_sizeinbase(z_, 10) + 2);
  mpz_get_str(buf.data(), 10, z_);
  return std::string(buf.data());
}

std::ostream& operator<<(std::ostream& os, const BigInt& v) { return os << v.to_string(); }

}  // namespace summa
