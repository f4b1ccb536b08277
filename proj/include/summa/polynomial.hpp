#ifndef SUMMA_POLYNOMIAL_HPP
#define SUMMA_POLYNOMIAL_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "summa/rational.hpp"

namespace summa {

/// Dense univariate polynomial over Q in the series variable. Trailing zero
/// coefficients are trimmed; the zero polynomial has degree kDegreeNegInf.
class Polynomial {
 public:
  static constexpr long kDegreeNegInf = -1;

  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
  Polynomial(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }
  static Polynomial constant(const Rational& r) { return Polynomial({r}); }
  static Polynomial monomial(const Rational& r, unsigned long k);

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && c_[0].is_one(); }
  Rational coeff(long i) const {
    return (i >= 0 && i < static_cast<long>(c_.size())) ? c_[i] : Rational{0};
  }
  const std::vector<Rational>& coeffs() const { return c_; }
  Rational leading() const { return c_.empty() ? Rational{0} : c_.back(); }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  Polynomial operator-() const;
  Polynomial scaled(const Rational& r) const;

  /// Quotient and remainder; b must be nonzero.
  static std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
  /// Monic gcd via the Euclidean algorithm.
  static Polynomial gcd(const Polynomial& a, const Polynomial& b);

  Polynomial derivative() const;
  Rational eval(const Rational& x) const;
  Rational eval_one() const { return eval(Rational{1}); }
  /// Substitute sigma -> r*sigma.
  Polynomial scale_argument(const Rational& r) const;

  Polynomial monic() const;
  /// Number of distinct real roots in the open interval (a, b).
  long real_roots_in_open(const Rational& a, const Rational& b) const;

  std::string to_string(const std::string& var = "s") const;
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }
  friend std::ostream& operator<<(std::ostream& os, const Polynomial& p);

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

/// Reduced ratio of polynomials P/Q with Q(0) = 1 (canonical) and gcd(P,Q) = 1.
class RationalFunction {
 public:
  RationalFunction() : num_(Polynomial({Rational{0}})), den_(Polynomial({Rational{1}})) {}
  /// Reduces and normalizes; throws DenominatorVanishesAtZero when the reduced
  /// denominator vanishes at 0 (not expandable as a power series).
  RationalFunction(Polynomial num, Polynomial den);

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }
  bool is_polynomial() const { return den_.degree() == 0; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  RationalFunction inverse() const;  // requires num(0) != 0
  RationalFunction scale_argument(const Rational& r) const;

  /// Evaluate at a rational point; throws DivisionByZero on a pole.
  Rational eval(const Rational& x) const;

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

  std::string to_string(const std::string& var = "s") const;

 private:
  Polynomial num_, den_;
};

}  // namespace summa

#endif
