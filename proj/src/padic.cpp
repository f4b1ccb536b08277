#include "summa/padic.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include "summa/errors.hpp"

namespace summa {

bool is_prime_small(long p) {
  if (p < 2) return false;
  if (p < 4) return true;
  if (p % 2 == 0) return false;
  for (long d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

namespace {

// Returns v_p(z) and divides z by p^v in place.
long remove_factor(BigInt& z, long p) {
  BigInt f{p};
  BigInt out;
  unsigned long v = mpz_remove(out.raw(), z.raw(), f.raw());
  z = out;
  return static_cast<long>(v);
}

}  // namespace

long padic_valuation(const Rational& r, long p) {
  if (r.is_zero()) return PAdicValue::kInfValuation;
  BigInt n = r.num();
  BigInt d = r.den();
  long vn = remove_factor(n, p);
  long vd = remove_factor(d, p);
  return vn - vd;
}

PAdicValue PAdicValue::zero(long p, int precision) {
  if (!is_prime_small(p)) throw NotPrime(p);
  PAdicValue x;
  x.prime_ = p;
  x.precision_ = std::max(precision, 1);
  return x;
}

PAdicValue PAdicValue::embed(const Rational& r, long p, int precision) {
  if (!is_prime_small(p)) throw NotPrime(p);
  if (precision < 1) throw Error("p-adic precision must be positive");
  if (r.is_zero()) return zero(p, precision);

  BigInt n = r.num();
  BigInt d = r.den();
  long vn = remove_factor(n, p);
  long vd = remove_factor(d, p);

  PAdicValue x;
  x.prime_ = p;
  x.precision_ = precision;
  x.valuation_ = vn - vd;
  x.zero_ = false;
  BigInt pk = BigInt::pow(BigInt{p}, static_cast<unsigned long>(precision));
  x.unit_ = BigInt::mod_floor(n * BigInt::mod_inverse(d, pk), pk);
  x.normalize();
  return x;
}

void PAdicValue::normalize() {
  if (zero_) return;
  BigInt pb{prime_};
  long shift = 0;
  while (precision_ > 0 && !unit_.is_zero() && unit_.divisible_by(pb)) {
    unit_ = BigInt::divexact(unit_, pb);
    ++shift;
    --precision_;
  }
  valuation_ += shift;
  if (unit_.is_zero() || precision_ <= 0) {
    // All known digits cancelled: only a lower bound on the valuation survives.
    zero_ = true;
    unit_ = BigInt{0};
    precision_ = std::max(precision_, 1);
    return;
  }
  BigInt pk = BigInt::pow(pb, static_cast<unsigned long>(precision_));
  unit_ = BigInt::mod_floor(unit_, pk);
  if (unit_.is_zero()) {
    zero_ = true;
    precision_ = 1;
  }
}

Rational PAdicValue::norm() const {
  if (is_exact_zero()) return Rational{0};
  if (zero_) return Rational{0};  // bounded-zero: norm at most p^-valuation; report 0 likewise
  Rational base{prime_};
  return base.pow(-valuation_);
}

PAdicValue operator+(const PAdicValue& a, const PAdicValue& b) {
  if (a.prime_ != b.prime_) throw Error("p-adic primes differ");
  if (a.zero_ && b.zero_) {
    PAdicValue r = a;
    r.valuation_ = std::min(a.valuation_, b.valuation_);
    r.precision_ = std::min(a.precision_, b.precision_);
    return r;
  }
  if (a.zero_ || b.zero_) {
    const PAdicValue& z = a.zero_ ? a : b;
    const PAdicValue& x = a.zero_ ? b : a;
    if (z.is_exact_zero()) return x;
    PAdicValue r = x;
    // z is 0 mod p^z.valuation_; digits of x beyond that are unknown.
    long known = z.valuation_ - x.valuation_;
    if (known <= 0) {
      PAdicValue out = PAdicValue::zero(a.prime_, 1);
      out.valuation_ = std::min(x.valuation_, z.valuation_);
      return out;
    }
    r.precision_ = std::min<long>(r.precision_, known);
    r.normalize();
    return r;
  }

  long v = std::min(a.valuation_, b.valuation_);
  long da = a.valuation_ - v;
  long db = b.valuation_ - v;
  // Known modulo p^(v + prec) with prec = min of operand precisions after alignment.
  long prec = std::min<long>(a.precision_ + da, b.precision_ + db);
  BigInt p{a.prime_};
  PAdicValue r;
  r.prime_ = a.prime_;
  r.valuation_ = v;
  r.precision_ = static_cast<int>(prec);
  r.zero_ = false;
  BigInt pk = BigInt::pow(p, static_cast<unsigned long>(prec));
  BigInt ua = BigInt::mod_floor(a.unit_ * BigInt::pow(p, static_cast<unsigned long>(da)), pk);
  BigInt ub = BigInt::mod_floor(b.unit_ * BigInt::pow(p, static_cast<unsigned long>(db)), pk);
  r.unit_ = BigInt::mod_floor(ua + ub, pk);
  if (r.unit_.is_zero()) {
    r.zero_ = true;
    r.valuation_ = v + prec;  // value is 0 mod p^(v+prec)
    r.unit_ = BigInt{0};
    r.precision_ = 1;
    return r;
  }
  r.normalize();
  return r;
}

PAdicValue PAdicValue::operator-() const {
  if (zero_) return *this;
  PAdicValue r = *this;
  BigInt pk = BigInt::pow(BigInt{prime_}, static_cast<unsigned long>(precision_));
  r.unit_ = BigInt::mod_floor(-unit_, pk);
  return r;
}

PAdicValue operator-(const PAdicValue& a, const PAdicValue& b) { return a + (-b); }

PAdicValue operator*(const PAdicValue& a, const PAdicValue& b) {
  if (a.prime_ != b.prime_) throw Error("p-adic primes differ");
  if (a.zero_ || b.zero_) {
    PAdicValue r = PAdicValue::zero(a.prime_, std::min(a.precision_, b.precision_));
    if (a.is_exact_zero() || b.is_exact_zero()) return r;
    r.valuation_ = std::min(PAdicValue::kInfValuation, a.valuation_ + b.valuation_);
    return r;
  }
  PAdicValue r;
  r.prime_ = a.prime_;
  r.zero_ = false;
  r.valuation_ = a.valuation_ + b.valuation_;
  r.precision_ = std::min(a.precision_, b.precision_);
  BigInt pk = BigInt::pow(BigInt{a.prime_}, static_cast<unsigned long>(r.precision_));
  r.unit_ = BigInt::mod_floor(a.unit_ * b.unit_, pk);
  r.normalize();
  return r;
}

PAdicValue operator/(const PAdicValue& a, const PAdicValue& b) {
  if (a.prime_ != b.prime_) throw Error("p-adic primes differ");
  if (b.zero_) throw DivisionByZero();
  if (a.zero_) {
    PAdicValue r = a;
    if (!a.is_exact_zero()) r.valuation_ = a.valuation_ - b.valuation_;
    r.precision_ = std::min(a.precision_, b.precision_);
    return r;
  }
  PAdicValue r;
  r.prime_ = a.prime_;
  r.zero_ = false;
  r.valuation_ = a.valuation_ - b.valuation_;
  r.precision_ = std::min(a.precision_, b.precision_);
  BigInt pk = BigInt::pow(BigInt{a.prime_}, static_cast<unsigned long>(r.precision_));
  r.unit_ = BigInt::mod_floor(a.unit_ * BigInt::mod_inverse(b.unit_, pk), pk);
  r.normalize();
  return r;
}

bool PAdicValue::congruent(const PAdicValue& a, const PAdicValue& b) {
  if (a.prime_ != b.prime_) return false;
  PAdicValue d = a - b;
  if (d.zero_) return true;
  // Difference has digits below both known precisions: not congruent.
  long known = std::min(a.valuation_ + a.precision_, b.valuation_ + b.precision_);
  return d.valuation_ >= known;
}

bool PAdicValue::congruent_to(const Rational& r) const {
  PAdicValue e = PAdicValue::embed(r, prime_, precision_ + 4);
  return congruent(*this, e);
}

std::string PAdicValue::to_string() const {
  std::ostringstream os;
  if (is_exact_zero()) {
    os << "0 (exact, " << prime_ << "-adic)";
    return os.str();
  }
  if (zero_) {
    os << "0 mod " << prime_ << "^" << valuation_;
    return os.str();
  }
  os << unit_ << " * " << prime_ << "^" << valuation_ << " (mod " << prime_ << "^"
     << (valuation_ + precision_) << ")";
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const PAdicValue& v) { return os << v.to_string(); }

}  // namespace summa
