#ifndef SUMMA_SERIES_HPP
#define SUMMA_SERIES_HPP

#include <deque>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "summa/polynomial.hpp"
#include "summa/rational.hpp"

namespace summa {

class Series;

/// Exact term stream over a running common denominator: after the n-th call
/// to next(), den has been multiplied by the returned den_scale and the term
/// is numer / den. Lets consumers accumulate exact partial sums by integer
/// shift-and-add instead of rational reduction.
class CoeffStream {
 public:
  virtual ~CoeffStream() = default;
  struct Term {
    BigInt numer;
    BigInt den_scale;  // >= 1
  };
  virtual Term next() = 0;
};

class SeriesImpl {
 public:
  static constexpr long kHardCap = 1L << 20;

  virtual ~SeriesImpl() = default;

  /// Exact n-th coefficient, memoized; fills the cache in index order.
  const Rational& coefficient(long n) const;

  virtual bool sparse() const { return false; }
  /// Sorted exponents of (potentially) nonzero terms up to and including n.
  /// Only meaningful for sparse series; dense series return an empty vector.
  virtual std::vector<long> support_up_to(long /*n*/) const { return {}; }

  /// Optional exact streaming access; null when not supported.
  virtual std::unique_ptr<CoeffStream> stream() const { return nullptr; }

  virtual const RationalFunction* rational_form() const { return nullptr; }
  virtual const std::vector<Series>* product_factors() const { return nullptr; }
  struct BinomialForm {
    const SeriesImpl* base;
    Rational exponent;
  };
  virtual std::optional<BinomialForm> binomial_form() const { return std::nullopt; }

  virtual std::string describe() const { return "series"; }

 protected:
  /// Compute the n-th coefficient; lower-index coefficients are available in
  /// `prefix` (the memo filled so far, size == n).
  virtual Rational compute(long n, const std::deque<Rational>& prefix) const = 0;

 private:
  mutable std::mutex mu_;
  mutable std::deque<Rational> memo_;  // deque: stable references across appends
};

/// Formal power series over Q: an immutable, shareable handle.
class Series {
 public:
  Series() = default;
  explicit Series(std::shared_ptr<const SeriesImpl> impl) : impl_(std::move(impl)) {}

  const Rational& coefficient(long n) const;
  Rational operator[](long n) const { return coefficient(n); }

  bool sparse() const { return impl_->sparse(); }
  std::vector<long> support_up_to(long n) const { return impl_->support_up_to(n); }
  std::unique_ptr<CoeffStream> stream() const { return impl_->stream(); }

  const RationalFunction* rational_form() const { return impl_->rational_form(); }
  const std::vector<Series>* product_factors() const { return impl_->product_factors(); }
  std::optional<SeriesImpl::BinomialForm> binomial_form() const { return impl_->binomial_form(); }

  std::string describe() const { return impl_->describe(); }
  const SeriesImpl* impl() const { return impl_.get(); }

 private:
  std::shared_ptr<const SeriesImpl> impl_;
};

// Constructors.
Series zero_series();
Series constant_series(const Rational& r);
Series polynomial_series(const Polynomial& p);
Series expand_rational(const RationalFunction& r);
Series series_from_function(std::function<Rational(long)> fn, std::string label = "opaque");
/// base must have constant term 1.
Series binomial_power(const Series& base, const Rational& exponent);
/// terms(n) lands at exponent e(n); e must be strictly increasing, nonnegative.
Series gap_series(std::function<long(long)> exponents, std::function<Rational(long)> terms,
                  std::string label = "gap");
/// P-finite recurrence sum_j coeffs[j](n) * x_{n+j} = 0 (j = 0..s), with the
/// given initial values x_0..x_{s-1}.
Series holonomic_series(std::vector<Polynomial> recurrence, std::vector<Rational> initial,
                        std::string label = "holonomic");

// Operator algebra.
Series shift(const Series& x);                // sigma * X
Series shift_n(const Series& x, long k);      // sigma^k * X
Series left_shift(const Series& x);           // drop coefficient 0
Series linear_combine(const Rational& a, const Series& x, const Rational& b, const Series& y);
Series cauchy_product(const Series& x, const Series& y);
Series partial_sums(const Series& x);         // Sigma X = X / (1 - sigma)
Series difference(const Series& x);           // (1 - sigma) X
Series scale_argument(const Series& x, const Rational& c);  // sigma -> c*sigma
/// Formal inverse 1/X; requires X(0) != 0.
Series formal_inverse(const Series& x);

}  // namespace summa

#endif
