#include "summa/polynomial.hpp"

#include <ostream>
#include <sstream>

#include "summa/errors.hpp"

namespace summa {

Polynomial Polynomial::monomial(const Rational& r, unsigned long k) {
  std::vector<Rational> c(k + 1, Rational{0});
  c[k] = r;
  return Polynomial(std::move(c));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational{0});
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()), Rational{0});
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
  return Polynomial(std::move(c));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return Polynomial{};
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1, Rational{0});
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator-() const {
  std::vector<Rational> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(-x);
  return Polynomial(std::move(c));
}

Polynomial Polynomial::scaled(const Rational& r) const {
  if (r.is_zero()) return Polynomial{};
  std::vector<Rational> c;
  c.reserve(c_.size());
  for (const auto& x : c_) c.push_back(x * r);
  return Polynomial(std::move(c));
}

std::pair<Polynomial, Polynomial> Polynomial::divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DivisionByZero();
  Polynomial r = a;
  std::vector<Rational> q(a.c_.size() > b.c_.size() ? a.c_.size() - b.c_.size() + 1 : 1,
                          Rational{0});
  Rational lead = b.leading();
  while (!r.is_zero() && r.degree() >= b.degree()) {
    long shift = r.degree() - b.degree();
    Rational factor = r.leading() / lead;
    q[shift] = factor;
    r = r - (b * monomial(factor, static_cast<unsigned long>(shift)));
  }
  return {Polynomial(std::move(q)), std::move(r)};
}

Polynomial Polynomial::gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    auto [q, r] = divmod(x, y);
    x = y;
    y = r;
  }
  if (x.is_zero()) return x;
  return x.monic();
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return Polynomial{};
  std::vector<Rational> d(c_.size() - 1, Rational{0});
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * Rational{static_cast<long>(i)};
  return Polynomial(std::move(d));
}

Rational Polynomial::eval(const Rational& x) const {
  Rational acc{0};
  for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
  return acc;
}

Polynomial Polynomial::scale_argument(const Rational& r) const {
  std::vector<Rational> c = c_;
  Rational p{1};
  for (std::size_t i = 0; i < c.size(); ++i) {
    c[i] = c[i] * p;
    p *= r;
  }
  return Polynomial(std::move(c));
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(leading().inverse());
}

namespace {

long sign_variations(const std::vector<Polynomial>& chain, const Rational& x) {
  long variations = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = p.eval(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++variations;
    last = s;
  }
  return variations;
}

}  // namespace

long Polynomial::real_roots_in_open(const Rational& a, const Rational& b) const {
  if (is_zero() || degree() == 0) return 0;
  // Sturm chain on the square-free part counts distinct roots in (a, b].
  Polynomial p = *this;
  Polynomial g = gcd(p, p.derivative());
  if (g.degree() > 0) p = divmod(p, g).first;
  std::vector<Polynomial> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    auto [q, r] = divmod(chain[chain.size() - 2], chain.back());
    chain.push_back(-r);
  }
  chain.pop_back();
  long count = sign_variations(chain, a) - sign_variations(chain, b);
  // (a, b] -> (a, b): drop a root exactly at b.
  if (p.eval(b).is_zero()) --count;
  return count;
}

std::string Polynomial::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i].is_zero()) continue;
    Rational a = c_[i];
    if (first) {
      if (a.sign() < 0) os << "-";
      first = false;
    } else {
      os << (a.sign() < 0 ? " - " : " + ");
    }
    Rational mag = a.abs();
    bool unit = mag.is_one() && i > 0;
    if (!unit) os << mag.to_string();
    if (i >= 1) {
      if (!unit) os << "*";
      os << var;
      if (i >= 2) os << "^" << i;
    }
  }
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Polynomial& p) { return os << p.to_string(); }

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) throw DivisionByZero();
  if (num.is_zero()) {
    num_ = Polynomial{};
    if (den.coeff(0).is_zero()) throw DenominatorVanishesAtZero();
    den_ = Polynomial({Rational{1}});
    return;
  }
  Polynomial g = Polynomial::gcd(num, den);
  if (g.degree() > 0) {
    num = Polynomial::divmod(num, g).first;
    den = Polynomial::divmod(den, g).first;
  }
  Rational d0 = den.coeff(0);
  if (d0.is_zero()) throw DenominatorVanishesAtZero();
  Rational inv = d0.inverse();
  num_ = num.scaled(inv);
  den_ = den.scaled(inv);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction RationalFunction::inverse() const {
  return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::scale_argument(const Rational& r) const {
  return RationalFunction(num_.scale_argument(r), den_.scale_argument(r));
}

Rational RationalFunction::eval(const Rational& x) const {
  Rational d = den_.eval(x);
  if (d.is_zero()) throw DivisionByZero();
  return num_.eval(x) / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
  if (is_polynomial() && den_.coeff(0).is_one()) return num_.to_string(var);
  return "(" + num_.to_string(var) + ") / (" + den_.to_string(var) + ")";
}

}  // namespace summa
