#include "summa/approx_real.hpp"

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>

#include "summa/errors.hpp"

namespace summa {

Mag Mag::of(double v) {
  if (v <= 0.0) return Mag{};
  if (!std::isfinite(v)) return Mag{1.0, 1 << 29};
  int e = 0;
  double m = std::frexp(v, &e);  // m in [0.5, 1)
  return Mag{m * 2.0, e - 1};
}

Mag Mag::plus(const Mag& o) const {
  if (is_zero()) return o;
  if (o.is_zero()) return *this;
  const Mag& big = e >= o.e ? *this : o;
  const Mag& small = e >= o.e ? o : *this;
  long diff = big.e - small.e;
  double add = diff > 80 ? 0.0 : std::ldexp(small.m, static_cast<int>(-diff));
  Mag out = Mag::of((big.m + add) * (1.0 + 4e-16) + (diff > 80 ? 1e-15 * big.m : 0.0));
  out.e += big.e;
  return out;
}

Mag Mag::times(const Mag& o) const {
  if (is_zero() || o.is_zero()) return Mag{};
  Mag out = Mag::of(m * o.m * (1.0 + 4e-16));
  out.e += e + o.e;
  return out;
}

double Mag::to_double() const {
  if (is_zero()) return 0.0;
  if (e > 1020) return HUGE_VAL;
  if (e < -1020) return std::ldexp(1.0, -1020);  // reporting floor, still an upper bound scale
  return std::ldexp(m, static_cast<int>(e)) * (1.0 + 4e-16);
}

bool Mag::less_than(const Mag& o) const {
  if (is_zero()) return !o.is_zero();
  if (o.is_zero()) return false;
  if (e != o.e) return e < o.e;
  return m < o.m;
}

namespace {

double safe_ldexp_center(double x, long k) {
  if (x == 0.0) return 0.0;
  if (k > 1020) return x > 0 ? HUGE_VAL : -HUGE_VAL;
  if (k < -1060) return 0.0;
  return std::ldexp(x, static_cast<int>(k));
}

}  // namespace

ApproxReal::ApproxReal(long v, int prec) : mant_(v), exp2_(0), err_(), prec_(prec) {
  normalize();
}

ApproxReal ApproxReal::from_mantissa(BigInt mant, long exp2, Mag err, int prec) {
  ApproxReal r;
  r.mant_ = std::move(mant);
  r.exp2_ = exp2;
  r.err_ = err;
  r.prec_ = prec;
  r.normalize();
  return r;
}

ApproxReal ApproxReal::from_rational(const Rational& r, int prec) {
  return from_quotient(r.num(), r.den(), prec);
}

ApproxReal ApproxReal::from_quotient(const BigInt& num_in, const BigInt& den_in, int prec) {
  if (num_in.is_zero()) {
    ApproxReal z;
    z.prec_ = prec;
    return z;
  }
  BigInt num = num_in;
  BigInt den = den_in;
  if (den.sign() < 0) {
    num = -num;
    den = -den;
  }
  long nb = static_cast<long>(num.bit_length());
  long db = static_cast<long>(den.bit_length());
  // Shift numerator so the quotient carries prec + 2 significant bits.
  long shift = prec + 2 - (nb - db);
  BigInt scaled = num;
  long exp2 = 0;
  if (shift > 0) {
    scaled <<= static_cast<unsigned long>(shift);
    exp2 = -shift;
  } else if (shift < 0) {
    den <<= static_cast<unsigned long>(-shift);
    exp2 = -shift;
  }
  BigInt q = scaled / den;
  ApproxReal out;
  out.mant_ = q;
  out.exp2_ = exp2;
  out.err_ = Mag::pow2(exp2);  // truncation: at most one ulp of the quotient
  out.prec_ = prec;
  out.normalize();
  return out;
}

void ApproxReal::normalize() {
  if (mant_.is_zero()) {
    exp2_ = 0;
    return;
  }
  long bits = static_cast<long>(mant_.bit_length());
  long drop = bits - prec_;
  if (drop <= 0) return;
  // Round-to-nearest on the dropped bits.
  BigInt half = BigInt::pow2(static_cast<unsigned long>(drop - 1));
  BigInt add = mant_.sign() > 0 ? half : -half;
  BigInt shifted = (mant_ + add) / BigInt::pow2(static_cast<unsigned long>(drop));
  mant_ = shifted;
  exp2_ += drop;
  err_ = err_.plus(Mag::pow2(exp2_));
}

long ApproxReal::top_exponent() const {
  if (mant_.is_zero()) return -(1L << 40);
  return exp2_ + static_cast<long>(mant_.bit_length());
}

double ApproxReal::to_double() const {
  return safe_ldexp_center(mant_.to_double(), exp2_);
}

double ApproxReal::abs_upper() const {
  return std::fabs(to_double()) * (1.0 + 4e-16) + err_.to_double();
}

double ApproxReal::abs_lower() const {
  if (mant_.is_zero()) return 0.0;
  // |center| >= 2^(top-1); compare against the error bound in Mag space.
  long top = top_exponent();
  Mag center_lo = Mag::pow2(top - 1);
  if (!err_.less_than(center_lo)) return 0.0;
  double v = std::fabs(to_double()) * (1.0 - 4e-16) - err_.to_double();
  return v > 0.0 ? v : 0.0;
}

bool ApproxReal::definitely_nonzero() const {
  if (mant_.is_zero()) return false;
  return err_.less_than(Mag::pow2(top_exponent() - 1));
}

ApproxReal operator+(const ApproxReal& a, const ApproxReal& b) {
  ApproxReal r;
  r.prec_ = std::max(a.prec_, b.prec_);
  r.err_ = a.err_.plus(b.err_);
  if (a.mant_.is_zero()) {
    r.mant_ = b.mant_;
    r.exp2_ = b.exp2_;
    r.normalize();
    return r;
  }
  if (b.mant_.is_zero()) {
    r.mant_ = a.mant_;
    r.exp2_ = a.exp2_;
    r.normalize();
    return r;
  }
  long top_a = a.exp2_ + static_cast<long>(a.mant_.bit_length());
  long top_b = b.exp2_ + static_cast<long>(b.mant_.bit_length());
  long span = r.prec_ + 64;
  // A much smaller operand cannot affect bits above the rounding noise; fold
  // it into the error bound instead of aligning giant shifts.
  if (top_b < top_a - span) {
    r.mant_ = a.mant_;
    r.exp2_ = a.exp2_;
    r.err_ = r.err_.plus(Mag::pow2(top_b + 1));
    r.normalize();
    return r;
  }
  if (top_a < top_b - span) {
    r.mant_ = b.mant_;
    r.exp2_ = b.exp2_;
    r.err_ = r.err_.plus(Mag::pow2(top_a + 1));
    r.normalize();
    return r;
  }
  long lo = std::min(a.exp2_, b.exp2_);
  BigInt sa = a.mant_;
  sa <<= static_cast<unsigned long>(a.exp2_ - lo);
  BigInt sb = b.mant_;
  sb <<= static_cast<unsigned long>(b.exp2_ - lo);
  r.mant_ = sa + sb;
  r.exp2_ = lo;
  r.normalize();
  return r;
}

ApproxReal operator-(const ApproxReal& a, const ApproxReal& b) { return a + (-b); }

ApproxReal ApproxReal::operator-() const {
  ApproxReal r = *this;
  r.mant_ = -r.mant_;
  return r;
}

ApproxReal ApproxReal::abs() const {
  ApproxReal r = *this;
  r.mant_ = r.mant_.abs();
  return r;
}

ApproxReal operator*(const ApproxReal& a, const ApproxReal& b) {
  ApproxReal r;
  r.prec_ = std::max(a.prec_, b.prec_);
  r.mant_ = a.mant_ * b.mant_;
  r.exp2_ = a.exp2_ + b.exp2_;
  // |a| err_b + |b| err_a + err_a err_b, all in Mag space.
  Mag ma = a.mant_.is_zero() ? Mag::zero() : Mag::pow2(a.top_exponent());
  Mag mb = b.mant_.is_zero() ? Mag::zero() : Mag::pow2(b.top_exponent());
  r.err_ = ma.times(b.err_).plus(mb.times(a.err_)).plus(a.err_.times(b.err_));
  r.normalize();
  return r;
}

ApproxReal operator/(const ApproxReal& a, const ApproxReal& b) {
  if (!b.definitely_nonzero()) throw Error("division by an approx value not bounded away from 0");
  ApproxReal r;
  r.prec_ = std::max(a.prec_, b.prec_);
  // 1/|b| <= 2^(1 - (top_b - 1)) since |b| >= 2^(top_b - 1) - err >= 2^(top_b - 2).
  long top_b = b.top_exponent();
  Mag inv_b = Mag::pow2(2 - top_b);
  if (a.mant_.is_zero()) {
    r.err_ = a.err_.times(inv_b);
    return r;
  }
  long nb = static_cast<long>(a.mant_.bit_length());
  long db = static_cast<long>(b.mant_.bit_length());
  long shift = r.prec_ + 2 - (nb - db);
  if (shift < 0) shift = 0;
  BigInt scaled = a.mant_;
  scaled <<= static_cast<unsigned long>(shift);
  BigInt q = scaled / b.mant_;
  r.mant_ = q;
  r.exp2_ = a.exp2_ - b.exp2_ - shift;
  // err <= (err_a + |a/b| err_b) / |b| + ulp
  Mag quotient = Mag::pow2(a.top_exponent() - top_b + 2);
  r.err_ = a.err_.times(inv_b)
               .plus(quotient.times(b.err_).times(inv_b))
               .plus(Mag::pow2(r.exp2_ + 1));
  r.normalize();
  return r;
}

ApproxReal ApproxReal::ldexp2(long k) const {
  ApproxReal r = *this;
  r.exp2_ += k;
  r.err_ = r.err_.ldexp2(k);
  return r;
}

ApproxReal& ApproxReal::add_error(double extra) {
  err_ = err_.plus(Mag::of(extra));
  return *this;
}

ApproxReal& ApproxReal::add_error_mag(const Mag& extra) {
  err_ = err_.plus(extra);
  return *this;
}

namespace {

// atan(1/m) as an exact rational partial sum plus a tail bound.
std::pair<Rational, Rational> atan_inv(long m, int bits) {
  Rational sum{0};
  Rational mm{m};
  Rational m2 = (mm * mm).inverse();
  Rational power = mm.inverse();  // 1/m^(2k+1)
  Rational tol = Rational(1, 2).pow(bits);
  long k = 0;
  while (true) {
    Rational term = power / Rational{2 * k + 1};
    if (k % 2 == 0)
      sum += term;
    else
      sum -= term;
    power *= m2;
    Rational next = power / Rational{2 * k + 3};
    if (next < tol) return {sum, next};
    ++k;
  }
}

std::mutex g_const_mu;
std::map<int, ApproxReal> g_pi;
std::map<int, ApproxReal> g_ln2;

}  // namespace

ApproxReal ApproxReal::pi(int prec) {
  std::lock_guard<std::mutex> lk(g_const_mu);
  auto it = g_pi.find(prec);
  if (it != g_pi.end()) return it->second;
  auto [a5, t5] = atan_inv(5, prec + 12);
  auto [a239, t239] = atan_inv(239, prec + 12);
  Rational machin = Rational{16} * a5 - Rational{4} * a239;
  Rational tail = Rational{16} * t5 + Rational{4} * t239;
  ApproxReal out = from_rational(machin, prec);
  out.add_error(tail.to_double() * (1.0 + 1e-12));
  g_pi.emplace(prec, out);
  return out;
}

ApproxReal ApproxReal::ln2(int prec) {
  std::lock_guard<std::mutex> lk(g_const_mu);
  auto it = g_ln2.find(prec);
  if (it != g_ln2.end()) return it->second;
  // ln 2 = 2 atanh(1/3) = 2 sum 1/((2k+1) 3^(2k+1))
  Rational sum{0};
  Rational ninth{1, 9};
  Rational power{1, 3};
  Rational tol = Rational(1, 2).pow(prec + 12);
  long k = 0;
  while (true) {
    sum += power / Rational{2 * k + 1};
    power *= ninth;
    Rational next = power / Rational{2 * k + 3};
    if (next < tol) {
      ApproxReal out = from_rational(Rational{2} * sum, prec);
      out.add_error(3.0 * next.to_double() + 1e-300);
      g_ln2.emplace(prec, out);
      return out;
    }
    ++k;
  }
}

ApproxReal ApproxReal::exp(const ApproxReal& x) {
  int prec = x.prec_;
  double xd = x.to_double();
  if (std::fabs(xd) > 1.0e6) throw Error("exp argument out of range");
  ApproxReal l2 = ln2(prec + 8);
  long k = std::lround(xd / 0.6931471805599453);
  ApproxReal r = x - l2 * ApproxReal(k, prec + 8);
  // |r| <= ~0.5; Taylor series with tail bound.
  ApproxReal sum(1, prec + 8);
  ApproxReal term(1, prec + 8);
  Mag tol = Mag::pow2(-(prec + 8));
  int j = 1;
  double rmag = r.abs_upper();
  while (true) {
    term = term * r;
    term = term / ApproxReal(j, prec + 8);
    sum += term;
    Mag tmag = Mag::of(term.abs_upper());
    if (tmag.less_than(tol) && j > 2 * rmag + 2) {
      sum.add_error_mag(tmag.times(Mag::of(2.0)));
      break;
    }
    if (j > 4 * prec + 64) throw Error("exp series failed to converge");
    ++j;
  }
  ApproxReal out = sum.ldexp2(k);
  out.prec_ = prec;
  out.normalize();
  return out;
}

ApproxReal ApproxReal::sqrt(const ApproxReal& x) {
  if (x.center_sign() < 0) {
    if (x.definitely_nonzero()) throw Error("sqrt of negative value");
    ApproxReal z;
    z.prec_ = x.prec_;
    z.err_ = Mag::of(std::sqrt(x.err_.to_double()));
    return z;
  }
  if (x.mant_.is_zero()) {
    ApproxReal z;
    z.prec_ = x.prec_;
    z.err_ = Mag::of(std::sqrt(x.err_.to_double()));
    return z;
  }
  ApproxReal r;
  r.prec_ = x.prec_;
  // Pad mantissa to >= 2*prec+2 bits at an even exponent, then integer sqrt.
  BigInt m = x.mant_;
  long e = x.exp2_;
  long bits = static_cast<long>(m.bit_length());
  long want = 2L * x.prec_ + 4;
  long pad = want - bits;
  if (pad < 0) pad = 0;
  if ((e - pad) % 2 != 0) ++pad;
  m <<= static_cast<unsigned long>(pad);
  e -= pad;
  BigInt root;
  mpz_sqrt(root.raw(), m.raw());
  r.mant_ = root;
  r.exp2_ = e / 2;
  // err(sqrt) <= err_x / (2 sqrt(x)) + ulp; sqrt(x) >= 2^((top-2)/2)
  long top = x.top_exponent();
  Mag inv_sqrt = Mag::pow2(1 - (top - 2) / 2);
  r.err_ = x.err_.times(inv_sqrt).plus(Mag::pow2(r.exp2_ + 1));
  r.normalize();
  return r;
}

double ApproxReal::center_distance(const Rational& r) const {
  ApproxReal rr = from_rational(r, prec_ + 16);
  ApproxReal d = *this - rr;
  return std::fabs(d.to_double());
}

std::string ApproxReal::to_string(int digits) const {
  std::ostringstream os;
  os.precision(digits);
  os << to_double() << " (+-" << err_.to_double() << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const ApproxReal& v) { return os << v.to_string(); }

}  // namespace summa
