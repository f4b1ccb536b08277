#include "summa/series.hpp"

#include <algorithm>
#include <deque>
#include <utility>

#include "summa/errors.hpp"

namespace summa {

const Rational& SeriesImpl::coefficient(long n) const {
  if (n < 0) throw Error("negative coefficient index");
  if (n > kHardCap) throw BudgetExceeded("coefficient index " + std::to_string(n));
  std::lock_guard<std::mutex> lk(mu_);
  while (static_cast<long>(memo_.size()) <= n) {
    long k = static_cast<long>(memo_.size());
    memo_.push_back(compute(k, memo_));
  }
  return memo_[static_cast<std::size_t>(n)];
}

const Rational& Series::coefficient(long n) const { return impl_->coefficient(n); }

// --- concrete impls ---------------------------------------------------------

namespace {

class PolynomialImpl final : public SeriesImpl {
 public:
  explicit PolynomialImpl(Polynomial p)
      : poly_(std::move(p)), form_(poly_, Polynomial({Rational{1}})) {}

  const RationalFunction* rational_form() const override { return &form_; }

  std::unique_ptr<CoeffStream> stream() const override {
    struct S : CoeffStream {
      const PolynomialImpl* self;
      long n = 0;
      BigInt den{1};
      explicit S(const PolynomialImpl* s) : self(s) {
        for (const auto& c : s->poly_.coeffs()) den = BigInt::lcm(den, c.den());
      }
      Term next() override {
        Term t{BigInt{0}, BigInt{1}};
        if (n == 0) t.den_scale = den;
        Rational c = self->poly_.coeff(n);
        if (!c.is_zero()) t.numer = c.num() * BigInt::divexact(den, c.den());
        ++n;
        return t;
      }
    };
    return std::make_unique<S>(this);
  }

  std::string describe() const override { return poly_.to_string(); }

 protected:
  Rational compute(long n, const std::deque<Rational>&) const override { return poly_.coeff(n); }

 private:
  Polynomial poly_;
  RationalFunction form_;
};

class RationalCFImpl final : public SeriesImpl {
 public:
  explicit RationalCFImpl(RationalFunction r) : form_(std::move(r)) {}

  const RationalFunction* rational_form() const override { return &form_; }
  std::string describe() const override { return form_.to_string(); }

 protected:
  Rational compute(long n, const std::deque<Rational>& prefix) const override {
    // q0 = 1 canonical: x_n = p_n - sum_{k>=1} q_k x_{n-k}
    Rational acc = form_.num().coeff(n);
    long dq = form_.den().degree();
    for (long k = 1; k <= std::min(n, dq); ++k)
      acc -= form_.den().coeff(k) * prefix[static_cast<std::size_t>(n - k)];
    return acc;
  }

 private:
  RationalFunction form_;
};

class FunctionImpl final : public SeriesImpl {
 public:
  FunctionImpl(std::function<Rational(long)> fn, std::string label)
      : fn_(std::move(fn)), label_(std::move(label)) {}
  std::string describe() const override { return label_; }

 protected:
  Rational compute(long n, const std::deque<Rational>&) const override { return fn_(n); }

 private:
  std::function<Rational(long)> fn_;
  std::string label_;
};

class LinearCombineImpl final : public SeriesImpl {
 public:
  LinearCombineImpl(Rational a, Series x, Rational b, Series y)
      : a_(std::move(a)), x_(std::move(x)), b_(std::move(b)), y_(std::move(y)) {
    const RationalFunction* rx = x_.rational_form();
    const RationalFunction* ry = y_.rational_form();
    if (rx && ry) {
      RationalFunction fa(rx->num().scaled(a_), rx->den());
      RationalFunction fb(ry->num().scaled(b_), ry->den());
      form_.emplace(fa + fb);
    }
  }

  const RationalFunction* rational_form() const override { return form_ ? &*form_ : nullptr; }

  bool sparse() const override { return x_.sparse() && y_.sparse(); }
  std::vector<long> support_up_to(long n) const override {
    if (!sparse()) return {};
    auto sx = x_.support_up_to(n);
    auto sy = y_.support_up_to(n);
    std::vector<long> out;
    std::set_union(sx.begin(), sx.end(), sy.begin(), sy.end(), std::back_inserter(out));
    return out;
  }

  std::unique_ptr<CoeffStream> stream() const override {
    auto su = x_.stream();
    auto sv = y_.stream();
    if (!su || !sv) return nullptr;
    struct S : CoeffStream {
      std::unique_ptr<CoeffStream> sx, sy;
      BigInt dx{1}, dy{1};
      BigInt na, da, nb, db;
      bool first = true;
      Term next() override {
        auto tx = sx->next();
        auto ty = sy->next();
        dx *= tx.den_scale;
        dy *= ty.den_scale;
        Term out;
        out.den_scale = tx.den_scale * ty.den_scale;
        if (first) {
          out.den_scale *= da * db;
          first = false;
        }
        out.numer = na * db * tx.numer * dy + nb * da * ty.numer * dx;
        return out;
      }
    };
    auto s = std::make_unique<S>();
    s->sx = std::move(su);
    s->sy = std::move(sv);
    s->na = a_.num();
    s->da = a_.den();
    s->nb = b_.num();
    s->db = b_.den();
    return s;
  }

  std::string describe() const override {
    if (form_) return form_->to_string();
    return a_.to_string() + "*(" + x_.describe() + ") + " + b_.to_string() + "*(" + y_.describe() +
           ")";
  }

 protected:
  Rational compute(long n, const std::deque<Rational>&) const override {
    return a_ * x_.coefficient(n) + b_ * y_.coefficient(n);
  }

 private:
  Rational a_;
  Series x_;
  Rational b_;
  Series y_;
  std::optional<RationalFunction> form_;
};

class ShiftImpl final : public SeriesImpl {
 public:
  ShiftImpl(Series x, long k) : x_(std::move(x)), k_(k) {
    const RationalFunction* rx = x_.rational_form();
    if (rx) {
      Polynomial num = rx->num() * Polynomial::monomial(Rational{1}, static_cast<unsigned long>(k_));
      form_.emplace(num, rx->den());
    }
  }

  const RationalFunction* rational_form() const override { return form_ ? &*form_ : nullptr; }
  bool sparse() const override { return x_.sparse(); }
  std::vector<long> support_up_to(long n) const override {
    if (!sparse()) return {};
    std::vector<long> out;
    if (n < k_) return out;
    for (long e : x_.support_up_to(n - k_)) out.push_back(e + k_);
    return out;
  }

  std::unique_ptr<CoeffStream> stream() const override {
    auto su = x_.stream();
    if (!su) return nullptr;
    struct S : CoeffStream {
      std::unique_ptr<CoeffStream> sx;
      long zeros;
      long emitted = 0;
      Term next() override {
        if (emitted < zeros) {
          ++emitted;
          return {BigInt{0}, BigInt{1}};
        }
        return sx->next();
      }
    };
    auto s = std::make_unique<S>();
    s->sx = std::move(su);
    s->zeros = k_;
    return s;
  }

  std::string describe() const override {
    return "s^" + std::to_string(k_) + "*(" + x_.describe() + ")";
  }

 protected:
  Rational compute(long n, const std::deque<Rational>&) const override {
    return n < k_ ? Rational{0} : x_.coefficient(n - k_);
  }

 private:
  Series x_;
  long k_;
  std::optional<RationalFunction> form_;
};

class LeftShiftImpl final : public SeriesImpl {
 public:
  explicit LeftShiftImpl(Series x) : x_(std::move(x)) {
    const RationalFunction* rx = x_.rational_form();
    if (rx) {
      Rational x0 = rx->num().coeff(0);  // Q(0) = 1 canonical
      Polynomial shifted = rx->num() - rx->den().scaled(x0);
      // shifted(0) = 0; divide by sigma.
      std::vector<Rational> c(shifted.coeffs().begin() + (shifted.is_zero() ? 0 : 1),
                              shifted.coeffs().end());
      form_.emplace(Polynomial(std::move(c)), rx->den());
    }
  }

  const RationalFunction* rational_form() const override { return form_ ? &*form_ : nullptr; }
  bool sparse() const override { return x_.sparse(); }
  std::vector<long> support_up_to(long n) const override {
    if (!sparse()) return {};
    std::vector<long> out;
    for (long e : x_.support_up_to(n + 1))
      if (e >= 1) out.push_back(e - 1);
    return out;
  }

  std::string describe() const override { return "leftshift(" + x_.describe() + ")"; }

 protected:
  Rational compute(long n, const std::deque<Rational>&) const override {
    return x_.coefficient(n + 1);
  }

 private:
  Series x_;
  std::optional<RationalFunction> form_;
};

class ProductImpl final : public SeriesImpl {
 public:
  ProductImpl(Series x, Series y) : x_(std::move(x)), y_(std::move(y)) {
    const RationalFunction* rx = x_.rational_form();
    const RationalFunction* ry = y_.rational_form();
    if (rx && ry) form_.emplace(*rx * *ry);
    auto append = [this](const Series& s) {
      if (const auto* fs = s.product_factors()) {
        factors_.insert(factors_.end(), fs->begin(), fs->end());
      } else {
        factors_.push_back(s);
      }
    };
    append(x_);
    append(y_);
    // A product stays sparse when each side is sparse or finitely supported
    // (and at least one side is genuinely sparse).
    sparse_ = (x_.sparse() || is_poly(x_)) && (y_.sparse() || is_poly(y_)) &&
              (x_.sparse() || y_.sparse());
  }

  const RationalFunction* rational_form() const override { return form_ ? &*form_ : nullptr; }
  const std::vector<Series>* product_factors() const override { return &factors_; }

  bool sparse() const override { return sparse_; }
  std::vector<long> support_up_to(long n) const override {
    if (!sparse_) return {};
    auto sx = side_support(x_, n);
    auto sy = side_support(y_, n);
    std::vector<long> out;
    for (long a : sx)
      for (long b : sy)
        if (a + b <= n) out.push_back(a + b);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  std::string describe() const override {
    return "(" + x_.describe() + ")*(" + y_.describe() + ")";
  }

 protected:
  Rational compute(long n, const std::deque<Rational>&) const override {
    // Finitely supported or sparse factors convolve over their support only.
    if (x_.sparse() || is_poly(x_)) {
      Rational acc{0};
      for (long e : side_support(x_, n)) acc += x_.coefficient(e) * y_.coefficient(n - e);
      return acc;
    }
    if (y_.sparse() || is_poly(y_)) {
      Rational acc{0};
      for (long e : side_support(y_, n)) acc += y_.coefficient(e) * x_.coefficient(n - e);
      return acc;
    }
    Rational acc{0};
    for (long k = 0; k <= n; ++k) acc += x_.coefficient(k) * y_.coefficient(n - k);
    return acc;
  }

 private:
  static bool is_poly(const Series& s) {
    const RationalFunction* r = s.rational_form();
    return r != nullptr && r->is_polynomial();
  }
  static std::vector<long> side_support(const Series& s, long n) {
    if (s.sparse()) return s.support_up_to(n);
    std::vector<long> out;
    const Polynomial& p = s.rational_form()->num();
    for (long i = 0; i <= std::min(n, p.degree()); ++i)
      if (!p.coeff(i).is_zero()) out.push_back(i);
    return out;
  }

  Series x_, y_;
  std::optional<RationalFunction> form_;
  std::vector<Series> factors_;
  bool sparse_ = false;
};

class PartialSumsImpl final : public SeriesImpl {
 public:
  explicit PartialSumsImpl(Series x) : x_(std::move(x)) {
    const RationalFunction* rx = x_.rational_form();
    if (rx) form_.emplace(rx->num(), rx->den() * Polynomial({Rational{1}, Rational{-1}}));
  }
  const RationalFunction* rational_form() const override { return form_ ? &*form_ : nullptr; }
  std::string describe() const override { return "Sigma(" + x_.describe() + ")"; }

 protected:
  Rational compute(long n, const std::deque<Rational>& prefix) const override {
    if (n == 0) return x_.coefficient(0);
    return prefix[static_cast<std::size_t>(n - 1)] + x_.coefficient(n);
  }

 private:
  Series x_;
  std::optional<RationalFunction> form_;
};

class DifferenceImpl final : public SeriesImpl {
 public:
  explicit DifferenceImpl(Series x) : x_(std::move(x)) {
    const RationalFunction* rx = x_.rational_form();
    if (rx)
      form_.emplace(rx->num() * Polynomial({Rational{1}, Rational{-1}}), rx->den());
  }
  const RationalFunction* rational_form() const override { return form_ ? &*form_ : nullptr; }
  std::string describe() const override { return "Delta(" + x_.describe() + ")"; }

 protected:
  Rational compute(long n, const std::deque<Rational>&) const override {
    if (n == 0) return x_.coefficient(0);
    return x_.coefficient(n) - x_.coefficient(n - 1);
  }

 private:
  Series x_;
  std::optional<RationalFunction> form_;
};

class ScaleArgImpl final : public SeriesImpl {
 public:
  ScaleArgImpl(Series x, Rational c) : x_(std::move(x)), c_(std::move(c)) {
    const RationalFunction* rx = x_.rational_form();
    if (rx) form_.emplace(rx->scale_argument(c_));
  }
  const RationalFunction* rational_form() const override { return form_ ? &*form_ : nullptr; }
  bool sparse() const override { return x_.sparse(); }
  std::vector<long> support_up_to(long n) const override { return x_.support_up_to(n); }

  std::unique_ptr<CoeffStream> stream() const override {
    auto su = x_.stream();
    if (!su) return nullptr;
    struct S : CoeffStream {
      std::unique_ptr<CoeffStream> sx;
      BigInt cn, cd;
      BigInt pw{1};
      bool first = true;
      Term next() override {
        auto t = sx->next();
        Term out;
        out.den_scale = t.den_scale;
        if (first) {
          first = false;
        } else {
          pw *= cn;
          out.den_scale = out.den_scale * cd;
        }
        out.numer = t.numer * pw;
        return out;
      }
    };
    auto s = std::make_unique<S>();
    s->sx = std::move(su);
    s->cn = c_.num();
    s->cd = c_.den();
    return s;
  }

  std::string describe() const override {
    return "(" + x_.describe() + ")[s -> " + c_.to_string() + "*s]";
  }

 protected:
  Rational compute(long n, const std::deque<Rational>&) const override {
    return x_.coefficient(n) * c_.pow(n);
  }

 private:
  Series x_;
  Rational c_;
  std::optional<RationalFunction> form_;
};

class GapImpl final : public SeriesImpl {
 public:
  GapImpl(std::function<long(long)> exponents, std::function<Rational(long)> terms,
          std::string label)
      : exp_(std::move(exponents)), terms_(std::move(terms)), label_(std::move(label)) {}

  bool sparse() const override { return true; }

  std::vector<long> support_up_to(long n) const override {
    std::lock_guard<std::mutex> lk(gap_mu_);
    extend_locked(n);
    std::vector<long> out;
    for (long e : exps_)
      if (e <= n) out.push_back(e);
    return out;
  }

  std::string describe() const override { return label_; }

 protected:
  Rational compute(long n, const std::deque<Rational>&) const override {
    std::lock_guard<std::mutex> lk(gap_mu_);
    extend_locked(n);
    auto it = std::lower_bound(exps_.begin(), exps_.end(), n);
    if (it == exps_.end() || *it != n) return Rational{0};
    long k = static_cast<long>(it - exps_.begin());
    return terms_(k);
  }

 private:
  void extend_locked(long n) const {
    while (exps_.empty() || exps_.back() < n) {
      long k = static_cast<long>(exps_.size());
      long e = exp_(k);
      if (e < 0 || (!exps_.empty() && e <= exps_.back())) throw NonMonotoneExponents();
      exps_.push_back(e);
    }
  }

  std::function<long(long)> exp_;
  std::function<Rational(long)> terms_;
  std::string label_;
  mutable std::mutex gap_mu_;
  mutable std::vector<long> exps_;
};

// base = 1 + c*s^m with a closed one-term recurrence on block coefficients.
class BinomialSimpleImpl final : public SeriesImpl {
 public:
  BinomialSimpleImpl(Series base, Rational c, long m, Rational exponent)
      : base_(std::move(base)), c_(std::move(c)), m_(m), alpha_(std::move(exponent)) {}

  std::optional<BinomialForm> binomial_form() const override {
    return BinomialForm{base_.impl(), alpha_};
  }

  std::unique_ptr<CoeffStream> stream() const override {
    struct S : CoeffStream {
      BigInt w{1};
      BigInt p, q, cn, cd;
      long m = 1;
      long n = 0;
      long k = 0;
      Term next() override {
        Term out{BigInt{0}, BigInt{1}};
        if (n % m == 0) {
          if (n == 0) {
            out.numer = BigInt{1};
          } else {
            // z_{k+1} = z_k * c * (p - q k) / (q (k+1))
            w = w * cn * (p - q * BigInt{k});
            out.den_scale = cd * q * BigInt{k + 1};
            ++k;
            out.numer = w;
          }
        }
        ++n;
        return out;
      }
    };
    auto s = std::make_unique<S>();
    s->p = alpha_.num();
    s->q = alpha_.den();
    s->cn = c_.num();
    s->cd = c_.den();
    s->m = m_;
    return s;
  }

  std::string describe() const override {
    return "pow(" + base_.describe() + ", " + alpha_.to_string() + ")";
  }

 protected:
  Rational compute(long n, const std::deque<Rational>& prefix) const override {
    if (n == 0) return Rational{1};
    if (n % m_ != 0) return Rational{0};
    long k = n / m_;
    // binom(alpha, k) c^k from binom(alpha, k-1) c^(k-1)
    const Rational& prev = prefix[static_cast<std::size_t>(n - m_)];
    Rational factor = c_ * (alpha_ - Rational{k - 1}) / Rational{k};
    return prev * factor;
  }

 private:
  Series base_;
  Rational c_;
  long m_;
  Rational alpha_;
};

class BinomialGeneralImpl final : public SeriesImpl {
 public:
  BinomialGeneralImpl(Series base, Rational exponent)
      : base_(std::move(base)), alpha_(std::move(exponent)) {}

  std::optional<BinomialForm> binomial_form() const override {
    return BinomialForm{base_.impl(), alpha_};
  }

  std::string describe() const override {
    return "pow(" + base_.describe() + ", " + alpha_.to_string() + ")";
  }

 protected:
  Rational compute(long n, const std::deque<Rational>& prefix) const override {
    if (n == 0) return Rational{1};
    // (B Y')_n-1 = alpha (B' Y)_n-1 with b_0 = 1:
    // n y_n = alpha sum_{i=1..n} i b_i y_{n-i} - sum_{i=1..n-1} b_i (n-i) y_{n-i}
    Rational acc{0};
    for (long i = 1; i <= n; ++i) {
      Rational bi = base_.coefficient(i);
      if (bi.is_zero()) continue;
      Rational yi = (i == n) ? Rational{1} : prefix[static_cast<std::size_t>(n - i)];
      acc += bi * yi * (alpha_ * Rational{i} - Rational{n - i});
    }
    return acc / Rational{n};
  }

 private:
  Series base_;
  Rational alpha_;
};

class HolonomicImpl final : public SeriesImpl {
 public:
  HolonomicImpl(std::vector<Polynomial> rec, std::vector<Rational> initial, std::string label)
      : rec_(std::move(rec)), initial_(std::move(initial)), label_(std::move(label)) {
    if (rec_.size() < 2) throw Error("holonomic recurrence needs order >= 1");
    if (initial_.size() + 1 != rec_.size())
      throw Error("holonomic initial values must match recurrence order");
    // Integerize the recurrence coefficients once.
    BigInt lcm{1};
    for (const auto& p : rec_)
      for (const auto& c : p.coeffs()) lcm = BigInt::lcm(lcm, c.den());
    Rational scale{lcm};
    for (auto& p : rec_) p = p.scaled(scale);
  }

  std::unique_ptr<CoeffStream> stream() const override;

  std::string describe() const override { return label_; }

 protected:
  Rational compute(long n, const std::deque<Rational>& prefix) const override {
    long s = static_cast<long>(rec_.size()) - 1;
    if (n < s) return initial_[static_cast<std::size_t>(n)];
    long m = n - s;  // recurrence index
    Rational lead = rec_[static_cast<std::size_t>(s)].eval(Rational{m});
    if (lead.is_zero()) throw RecurrenceSingular(m);
    Rational acc{0};
    for (long j = 0; j < s; ++j)
      acc -= rec_[static_cast<std::size_t>(j)].eval(Rational{m}) *
             prefix[static_cast<std::size_t>(m + j)];
    return acc / lead;
  }

 private:
  friend class HolonomicStream;
  std::vector<Polynomial> rec_;
  std::vector<Rational> initial_;
  std::string label_;
};

class HolonomicStream final : public CoeffStream {
 public:
  explicit HolonomicStream(const HolonomicImpl* impl) : impl_(impl) {
    s_ = static_cast<long>(impl_->rec_.size()) - 1;
    BigInt lcm{1};
    for (const auto& r : impl_->initial_) lcm = BigInt::lcm(lcm, r.den());
    d0_ = lcm;
    for (const auto& r : impl_->initial_)
      window_.push_back(r.num() * BigInt::divexact(lcm, r.den()));
  }

  Term next() override {
    Term out;
    if (n_ < s_) {
      out.den_scale = (n_ == 0) ? d0_ : BigInt{1};
      out.numer = window_[static_cast<std::size_t>(n_)];
      ++n_;
      return out;
    }
    long m = n_ - s_;
    Rational mr{m};
    BigInt lead = impl_->rec_[static_cast<std::size_t>(s_)].eval(mr).num();
    if (lead.is_zero()) throw RecurrenceSingular(m);
    BigInt acc{0};
    for (long j = 0; j < s_; ++j) {
      BigInt cj = impl_->rec_[static_cast<std::size_t>(j)].eval(mr).num();
      acc -= cj * window_[static_cast<std::size_t>(j)];
    }
    // New denominator D_n = D_{n-1} * |lead|; numerators of the window scale too.
    BigInt scale = lead.abs();
    if (lead.sign() < 0) acc = -acc;
    for (auto& w : window_) w *= scale;
    window_.push_back(acc);
    window_.erase(window_.begin());
    out.den_scale = scale;
    out.numer = acc;
    ++n_;
    return out;
  }

 private:
  const HolonomicImpl* impl_;
  long s_ = 1;
  long n_ = 0;
  BigInt d0_{1};
  std::vector<BigInt> window_;
};

std::unique_ptr<CoeffStream> HolonomicImpl::stream() const {
  return std::make_unique<HolonomicStream>(this);
}

class InverseImpl final : public SeriesImpl {
 public:
  explicit InverseImpl(Series x) : x_(std::move(x)) {
    if (x_.coefficient(0).is_zero()) throw DenominatorVanishesAtZero();
    if (const RationalFunction* rx = x_.rational_form()) form_.emplace(rx->inverse());
  }
  const RationalFunction* rational_form() const override { return form_ ? &*form_ : nullptr; }
  std::string describe() const override { return "1/(" + x_.describe() + ")"; }

 protected:
  Rational compute(long n, const std::deque<Rational>& prefix) const override {
    if (n == 0) return x_.coefficient(0).inverse();
    Rational acc{0};
    for (long k = 1; k <= n; ++k)
      acc += x_.coefficient(k) * prefix[static_cast<std::size_t>(n - k)];
    return -acc / x_.coefficient(0);
  }

 private:
  Series x_;
  std::optional<RationalFunction> form_;
};

}  // namespace

// --- factory functions ------------------------------------------------------

Series zero_series() { return polynomial_series(Polynomial{}); }

Series constant_series(const Rational& r) { return polynomial_series(Polynomial({r})); }

Series polynomial_series(const Polynomial& p) {
  return Series(std::make_shared<PolynomialImpl>(p));
}

Series expand_rational(const RationalFunction& r) {
  if (r.is_polynomial()) return polynomial_series(r.num());
  return Series(std::make_shared<RationalCFImpl>(r));
}

Series series_from_function(std::function<Rational(long)> fn, std::string label) {
  return Series(std::make_shared<FunctionImpl>(std::move(fn), std::move(label)));
}

Series binomial_power(const Series& base, const Rational& exponent) {
  if (!base.coefficient(0).is_one()) throw ConstantTermNotOne();
  // Detect base = 1 + c*s^m.
  const RationalFunction* rf = base.rational_form();
  if (rf && rf->is_polynomial()) {
    const Polynomial& p = rf->num();
    long nonzero = 0;
    long m = 0;
    for (long i = 1; i <= p.degree(); ++i) {
      if (!p.coeff(i).is_zero()) {
        ++nonzero;
        m = i;
      }
    }
    if (nonzero == 1)
      return Series(std::make_shared<BinomialSimpleImpl>(base, p.coeff(m), m, exponent));
    if (nonzero == 0) return constant_series(Rational{1});
  }
  return Series(std::make_shared<BinomialGeneralImpl>(base, exponent));
}

Series gap_series(std::function<long(long)> exponents, std::function<Rational(long)> terms,
                  std::string label) {
  return Series(std::make_shared<GapImpl>(std::move(exponents), std::move(terms), std::move(label)));
}

Series holonomic_series(std::vector<Polynomial> recurrence, std::vector<Rational> initial,
                        std::string label) {
  return Series(
      std::make_shared<HolonomicImpl>(std::move(recurrence), std::move(initial), std::move(label)));
}

Series shift(const Series& x) { return shift_n(x, 1); }

Series shift_n(const Series& x, long k) {
  if (k == 0) return x;
  return Series(std::make_shared<ShiftImpl>(x, k));
}

Series left_shift(const Series& x) { return Series(std::make_shared<LeftShiftImpl>(x)); }

Series linear_combine(const Rational& a, const Series& x, const Rational& b, const Series& y) {
  return Series(std::make_shared<LinearCombineImpl>(a, x, b, y));
}

Series cauchy_product(const Series& x, const Series& y) {
  return Series(std::make_shared<ProductImpl>(x, y));
}

Series partial_sums(const Series& x) { return Series(std::make_shared<PartialSumsImpl>(x)); }

Series difference(const Series& x) { return Series(std::make_shared<DifferenceImpl>(x)); }

Series scale_argument(const Series& x, const Rational& c) {
  return Series(std::make_shared<ScaleArgImpl>(x, c));
}

Series formal_inverse(const Series& x) { return Series(std::make_shared<InverseImpl>(x)); }

}  // namespace summa
