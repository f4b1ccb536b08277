#ifndef SUMMA_APPROX_REAL_HPP
#define SUMMA_APPROX_REAL_HPP

#include <iosfwd>
#include <string>

#include "summa/bigint.hpp"
#include "summa/rational.hpp"

namespace summa {

/// Nonnegative magnitude m * 2^e with m in [1, 2) (or exactly zero), used for
/// error bounds whose scale can leave the double exponent range.
struct Mag {
  double m = 0.0;
  long e = 0;

  static Mag zero() { return {}; }
  static Mag of(double v);
  static Mag pow2(long e) { return {1.0, e}; }
  bool is_zero() const { return m == 0.0; }
  Mag plus(const Mag& o) const;
  Mag times(const Mag& o) const;
  Mag ldexp2(long k) const { return is_zero() ? Mag{} : Mag{m, e + k}; }
  /// Upper bound as a double; saturates at the double range.
  double to_double() const;
  bool less_than(const Mag& o) const;
};

/// Binary floating-point number at a configurable mantissa width, carrying a
/// conservative absolute error bound. Every operation rounds the stored value
/// to the working precision and widens the bound outward, so the true real
/// always lies within [center - err, center + err].
class ApproxReal {
 public:
  static constexpr int kDefaultPrec = 128;

  ApproxReal() = default;
  explicit ApproxReal(long v, int prec = kDefaultPrec);

  static ApproxReal from_rational(const Rational& r, int prec = kDefaultPrec);
  /// num/den without any reduction (den != 0); exact up to one ulp.
  static ApproxReal from_quotient(const BigInt& num, const BigInt& den, int prec = kDefaultPrec);
  static ApproxReal from_mantissa(BigInt mant, long exp2, Mag err, int prec);
  /// ln 2 and pi to `prec` bits (cached per precision).
  static ApproxReal ln2(int prec = kDefaultPrec);
  static ApproxReal pi(int prec = kDefaultPrec);

  int prec() const { return prec_; }
  double err() const { return err_.to_double(); }
  const Mag& err_mag() const { return err_; }
  bool is_zero_center() const { return mant_.is_zero(); }

  double to_double() const;
  /// Upper bound on |value|; respectively lower bound (clamped at 0).
  double abs_upper() const;
  double abs_lower() const;

  friend ApproxReal operator+(const ApproxReal& a, const ApproxReal& b);
  friend ApproxReal operator-(const ApproxReal& a, const ApproxReal& b);
  friend ApproxReal operator*(const ApproxReal& a, const ApproxReal& b);
  friend ApproxReal operator/(const ApproxReal& a, const ApproxReal& b);
  ApproxReal operator-() const;
  ApproxReal abs() const;

  ApproxReal& operator+=(const ApproxReal& b) { return *this = *this + b; }
  ApproxReal& operator-=(const ApproxReal& b) { return *this = *this - b; }
  ApproxReal& operator*=(const ApproxReal& b) { return *this = *this * b; }

  /// Multiplication by 2^k (exact apart from error-bound scaling).
  ApproxReal ldexp2(long k) const;
  ApproxReal& add_error(double extra);
  ApproxReal& add_error_mag(const Mag& extra);

  static ApproxReal exp(const ApproxReal& x);
  static ApproxReal sqrt(const ApproxReal& x);

  /// Signed distance of the center from an exact rational.
  double center_distance(const Rational& r) const;
  /// True when the whole interval is strictly on one side of zero.
  bool definitely_nonzero() const;
  int center_sign() const { return mant_.sign(); }

  /// Top bit position of |center| (value < 2^top); kIntMin when zero.
  long top_exponent() const;

  std::string to_string(int digits = 12) const;
  friend std::ostream& operator<<(std::ostream& os, const ApproxReal& v);

 private:
  void normalize();

  BigInt mant_{0};
  long exp2_ = 0;
  Mag err_;
  int prec_ = kDefaultPrec;
};

}  // namespace summa

#endif
