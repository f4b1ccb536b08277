#include "summa/summers.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <vector>

#include "summa/errors.hpp"
#include "summa/numeric_util.hpp"

namespace summa {

namespace {

// --- exact partial-sum engine ------------------------------------------------

// Accumulates exact partial sums of x (or |x|), preferring the integer stream
// when the series provides one; reports each partial sum at working precision.
class ExactAccumulator {
 public:
  ExactAccumulator(const Series& x, bool absolute, int prec)
      : x_(x), absolute_(absolute), prec_(prec), stream_(x.stream()) {}

  ApproxReal step() {
    double mag = 0.0;
    ApproxReal out;
    if (stream_) {
      auto t = stream_->next();
      if (absolute_ && t.numer.sign() < 0) t.numer = -t.numer;
      if (!t.den_scale.is_one()) {
        den_ *= t.den_scale;
        num_ *= t.den_scale;
      }
      mag = std::fabs(quotient_double(t.numer, den_));
      num_ += t.numer;
      out = ApproxReal::from_quotient(num_, den_, prec_);
    } else {
      Rational c = x_.coefficient(n_);
      if (absolute_) c = c.abs();
      mag = std::fabs(quotient_double(c.num(), c.den()));
      sum_ += c;
      out = ApproxReal::from_rational(sum_, prec_);
    }
    last_term_mag_ = mag;
    ++n_;
    return out;
  }

  double last_term_mag() const { return last_term_mag_; }
  long index() const { return n_ - 1; }
  /// Exact current partial sum (reduces the streamed pair on demand).
  Rational exact() const {
    if (stream_) return Rational(num_, den_);
    return sum_;
  }

 private:
  Series x_;
  bool absolute_;
  int prec_;
  std::unique_ptr<CoeffStream> stream_;
  BigInt num_{0};
  BigInt den_{1};
  Rational sum_{0};
  double last_term_mag_ = 0.0;
  long n_ = 0;
};

// --- support analysis ---------------------------------------------------------

struct SupportInfo {
  enum Decision { FinitePolyExact, FiniteDetected, InfiniteProven, Unknown };
  Decision decision = Unknown;
  long last_nonzero = -1;
  Rational total;  // sum of all coefficients when finite
};

SupportInfo analyze_support(const Series& x, const SummerConfig& cfg) {
  SupportInfo info;
  if (const RationalFunction* r = x.rational_form()) {
    if (r->is_polynomial()) {
      // Canonical form has Q = 1.
      info.decision = SupportInfo::FinitePolyExact;
      info.last_nonzero = r->num().degree();
      info.total = r->num().eval_one();
      return info;
    }
    info.decision = SupportInfo::InfiniteProven;
    return info;
  }
  // The trailing-zero window for finite-support detection is independent of
  // the (possibly very wide) stabilization window.
  long window = std::min<long>(cfg.window, 64);
  long scan = std::max<long>(cfg.scan, 4L * window + 32);
  if (x.sparse()) {
    // Between support points a gap series is locally zero, so an index window
    // proves nothing; demand a zero stretch of geometric size (probe beyond
    // twice the last nonzero exponent) before declaring finite support.
    long probe_cap = std::max<long>(4 * scan, 8192);
    long probe = std::min<long>(probe_cap, std::max<long>(4 * scan, 2048));
    for (int iter = 0; iter < 8; ++iter) {
      auto supp = x.support_up_to(probe);
      long last = -1;
      Rational total{0};
      for (long e : supp) {
        const Rational& c = x.coefficient(e);
        if (!c.is_zero()) {
          last = e;
          total += c;
        }
      }
      long need = 2 * std::max<long>(last, 0) + window;
      if (need <= probe) {
        info.decision = SupportInfo::FiniteDetected;
        info.last_nonzero = last;
        info.total = total;
        return info;
      }
      if (need > probe_cap) break;
      probe = need;
    }
    info.decision = SupportInfo::Unknown;
    return info;
  }
  long last = -1;
  Rational total{0};
  for (long n = 0; n <= scan; ++n) {
    const Rational& c = x.coefficient(n);
    if (!c.is_zero()) {
      last = n;
      total += c;
    }
  }
  if (last + window <= scan) {
    info.decision = SupportInfo::FiniteDetected;
    info.last_nonzero = last;
    info.total = total;
    return info;
  }
  info.decision = SupportInfo::Unknown;
  return info;
}

// --- divergence proofs ---------------------------------------------------------

struct DivergenceProof {
  bool fired = false;
  std::string kind;
  json witness = json::object();
};

// For series with a rational closed form: a real pole strictly inside the unit
// interval, or sustained geometric growth of the coefficients, certifies that
// the terms do not tend to zero (radius of convergence < 1).
DivergenceProof divergence_proof(const Series& x, const SummerConfig& cfg) {
  DivergenceProof proof;
  const RationalFunction* r = x.rational_form();
  if (!r || r->is_polynomial()) return proof;
  long roots = r->den().real_roots_in_open(Rational{-1}, Rational{1});
  if (roots > 0) {
    proof.fired = true;
    proof.kind = "real-pole-in-unit-interval";
    proof.witness = {{"denominator", r->den().to_string()}, {"roots_in_(-1,1)", roots}};
    return proof;
  }
  // Sustained growth of windowed coefficient maxima.
  const long block = 16;
  const long blocks = std::min<long>(16, std::max<long>(6, cfg.scan / block));
  std::vector<double> maxima;
  for (long b = 0; b < blocks; ++b) {
    double m = 0.0;
    for (long n = b * block; n < (b + 1) * block; ++n) {
      const Rational& c = x.coefficient(n);
      m = std::max(m, std::fabs(quotient_double(c.num(), c.den())));
    }
    maxima.push_back(m);
  }
  int rising = 0;
  for (std::size_t i = 1; i < maxima.size(); ++i) {
    if (maxima[i] > 2.0 * maxima[i - 1] && maxima[i] > 0) ++rising;
  }
  if (rising >= static_cast<int>(maxima.size()) - 2 && maxima.back() > 1e6 * maxima.front()) {
    proof.fired = true;
    proof.kind = "sustained-coefficient-growth";
    proof.witness = {{"block", block},
                     {"first_block_max", maxima.front()},
                     {"last_block_max", maxima.back()}};
  }
  return proof;
}

json finite_witness(const SupportInfo& s) {
  return json{{"finite_support", true},
              {"last_nonzero", s.last_nonzero},
              {"exact", s.decision == SupportInfo::FinitePolyExact}};
}

}  // namespace

// --- Add -----------------------------------------------------------------------

SummationOutcome sum_add(const Series& x, const SummerConfig& cfg) {
  SupportInfo s = analyze_support(x, cfg);
  switch (s.decision) {
    case SupportInfo::FinitePolyExact:
    case SupportInfo::FiniteDetected:
      return SummationOutcome::summed(s.total, "add", json::object(), finite_witness(s));
    case SupportInfo::InfiniteProven:
      return SummationOutcome::not_in_domain("infinite support (closed form)", "add",
                                             json::object(),
                                             {{"closed_form", x.describe()}});
    default:
      return SummationOutcome::inconclusive({cfg.scan, "no trailing zero window found"}, "add");
  }
}

// --- classical -------------------------------------------------------------------

namespace {

SummationOutcome classical_impl(const Series& x, const SummerConfig& cfg, const char* method,
                                bool absolute_gate) {
  json params{{"tolerance", cfg.tolerance.to_string()},
              {"window", cfg.window},
              {"n_max", cfg.n_max}};
  SupportInfo s = analyze_support(x, cfg);
  if (s.decision == SupportInfo::FinitePolyExact || s.decision == SupportInfo::FiniteDetected)
    return SummationOutcome::summed(s.total, method, params, finite_witness(s));
  DivergenceProof div = divergence_proof(x, cfg);
  if (div.fired)
    return SummationOutcome::not_in_domain("terms do not tend to 0 (" + div.kind + ")", method,
                                           params, div.witness);

  json abs_witness = json::object();
  if (absolute_gate) {
    AbsoluteDetection det = detect_absolute(x, cfg);
    if (!det.detected)
      return SummationOutcome::inconclusive({cfg.n_max, "absolute convergence not detected"},
                                            method, params, det.witness);
    abs_witness = det.witness;
  }

  double tol = cfg.tolerance.to_double();
  StabWindow win(cfg.window);
  long min_steps = 2L * cfg.window + 4;
  auto success = [&](long n, double spread) {
    ApproxReal value = win.mean(cfg.mantissa_bits);
    value.add_error(spread);
    json witness{{"n", n}, {"window", cfg.window}, {"spread", spread}};
    if (absolute_gate) witness["absolute_detection"] = abs_witness;
    return SummationOutcome::summed(value, method, params, witness);
  };

  if (x.sparse()) {
    // Partial sums only move at support points; the window runs over those.
    Rational sum{0};
    auto positions = x.support_up_to(cfg.n_max);
    long steps = 0;
    for (long e : positions) {
      sum += x.coefficient(e);
      win.push(ApproxReal::from_rational(sum, cfg.mantissa_bits));
      ++steps;
      if (steps >= min_steps && win.full()) {
        double spread = win.spread();
        if (spread <= tol) return success(e, spread);
      }
    }
    return SummationOutcome::inconclusive(
        {cfg.n_max, "partial sums over the support did not stabilize"}, method, params);
  }

  ExactAccumulator acc(x, false, cfg.mantissa_bits);
  for (long n = 0; n < cfg.n_max; ++n) {
    win.push(acc.step());
    if (n >= min_steps && win.full()) {
      double spread = win.spread();
      if (spread <= tol) return success(n, spread);
    }
  }
  return SummationOutcome::inconclusive({cfg.n_max, "partial sums did not stabilize"}, method,
                                        params);
}

}  // namespace

SummationOutcome sum_classical(const Series& x, const SummerConfig& cfg) {
  return classical_impl(x, cfg, "classical", false);
}

SummationOutcome sum_absolute(const Series& x, const SummerConfig& cfg) {
  return classical_impl(x, cfg, "absolute", true);
}

AbsoluteDetection detect_absolute(const Series& x, const SummerConfig& cfg) {
  AbsoluteDetection det;
  SupportInfo s = analyze_support(x, cfg);
  if (s.decision == SupportInfo::FinitePolyExact || s.decision == SupportInfo::FiniteDetected) {
    det.detected = true;
    det.witness = finite_witness(s);
    return det;
  }
  double tol = cfg.abs_tol().to_double();
  StabWindow win(cfg.window);
  long min_steps = 2L * cfg.window + 4;
  if (x.sparse()) {
    Rational sum{0};
    long steps = 0;
    for (long e : x.support_up_to(cfg.n_max)) {
      sum += x.coefficient(e).abs();
      win.push(ApproxReal::from_rational(sum, cfg.mantissa_bits));
      ++steps;
      if (steps >= min_steps && win.full() && win.spread() <= tol) {
        det.detected = true;
        det.witness = {{"n", e}, {"abs_tolerance", cfg.abs_tol().to_string()},
                       {"spread", win.spread()}};
        return det;
      }
    }
    det.witness = {{"n", cfg.n_max}, {"detail", "partial sums of |x_n| did not stabilize"}};
    return det;
  }
  ExactAccumulator acc(x, true, cfg.mantissa_bits);
  for (long n = 0; n < cfg.n_max; ++n) {
    win.push(acc.step());
    if (n >= min_steps && win.full()) {
      double spread = win.spread();
      if (spread <= tol) {
        det.detected = true;
        det.witness = {{"n", n}, {"abs_tolerance", cfg.abs_tol().to_string()}, {"spread", spread}};
        return det;
      }
    }
  }
  det.witness = {{"n", cfg.n_max}, {"detail", "partial sums of |x_n| did not stabilize"}};
  return det;
}

std::optional<Rational> detect_geometric(const Series& x, const SummerConfig& cfg) {
  static const std::pair<long, long> grid[] = {{1, 2}, {2, 3}, {3, 4}, {7, 8}, {15, 16}};
  long scan = std::min<long>(cfg.scan, 1024);
  for (auto [p, q] : grid) {
    Rational r{p, q};
    // C fitted at the window start, then verified on the whole scan.
    Rational c{0};
    Rational rp{1};
    for (long n = 0; n <= std::min<long>(cfg.window, scan); ++n) {
      Rational bound = x.coefficient(n).abs() / rp;
      if (bound > c) c = bound;
      rp *= r;
    }
    if (c.is_zero()) c = Rational{1};
    bool ok = true;
    rp = Rational{1};
    for (long n = 0; n <= scan; ++n) {
      if (x.coefficient(n).abs() > c * rp) {
        ok = false;
        break;
      }
      rp *= r;
    }
    if (ok) return r;
  }
  return std::nullopt;
}

GrowthFit fit_growth(const Series& x, const SummerConfig& cfg) {
  static const std::pair<long, long> grid[] = {{1, 2},  {2, 3}, {3, 4}, {7, 8}, {1, 1},
                                               {5, 4},  {3, 2}, {2, 1}, {3, 1}, {4, 1},
                                               {8, 1},  {16, 1}};
  long scan = std::min<long>(cfg.scan, 1024);
  for (auto [p, q] : grid) {
    Rational g{p, q};
    Rational c{0};
    Rational c_head{0};  // max over the first half of the scan
    Rational gp{1};
    bool overflow = false;
    for (long n = 0; n <= scan; ++n) {
      Rational bound = x.coefficient(n).abs() / gp;
      if (bound > c) c = bound;
      if (n <= scan / 2 && bound > c_head) c_head = bound;
      gp *= g;
      if (gp.num().bit_length() > 8192 || gp.den().bit_length() > 8192 ||
          c.num().bit_length() > 8192) {
        overflow = true;
        break;
      }
    }
    if (overflow) continue;
    // The majorant must not keep growing across the scan; otherwise the rate
    // is too small to extrapolate from.
    if (c > Rational{2} * c_head) continue;
    if (c.is_zero()) c = Rational{1};
    return {c, g};
  }
  // Fall back to the largest grid rate with C fitted on the scan head.
  Rational c{1};
  Rational g{16};
  Rational gp{1};
  for (long n = 0; n <= std::min<long>(scan, 64); ++n) {
    Rational bound = x.coefficient(n).abs() / gp;
    if (bound > c) c = bound;
    gp *= g;
  }
  return {c, g};
}

// --- Cesaro-Holder ---------------------------------------------------------------

SummationOutcome sum_cesaro_holder(const Series& x, long k, const SummerConfig& cfg) {
  if (k < 0) throw Error("Cesaro-Holder order must be >= 0");
  json params{{"k", k}, {"tolerance", cfg.tolerance.to_string()}};
  SupportInfo s = analyze_support(x, cfg);
  if (s.decision == SupportInfo::FinitePolyExact || s.decision == SupportInfo::FiniteDetected)
    return SummationOutcome::summed(s.total, "cesaro", params, finite_witness(s));

  double tol = cfg.tolerance.to_double();
  StabWindow win(2 * cfg.ladder_window);
  long last_n = 0;
  auto weight = [&](long nn, long n) {
    // k! * binom(N - n + k, k) = prod_{i=1..k} (N - n + i); the leading k!
    // of the displayed formula cancels against it.
    BigInt w{1};
    for (long i = 1; i <= k; ++i) w *= BigInt{nn - n + i};
    return w;
  };
  auto evaluate = [&](long nn) {
    BigInt int_acc{0};     // fast path: integer coefficients
    Rational frac_acc{0};  // general path
    auto accumulate = [&](long n, const Rational& c) {
      if (c.is_zero()) return;
      BigInt w = weight(nn, n);
      if (c.is_integer()) {
        int_acc += w * c.num();
      } else {
        frac_acc += Rational(w) * c;
      }
    };
    if (x.sparse()) {
      for (long e : x.support_up_to(nn)) accumulate(e, x.coefficient(e));
    } else {
      for (long n = 0; n <= nn; ++n) accumulate(n, x.coefficient(n));
    }
    Rational acc = frac_acc + Rational(int_acc);
    return acc / Rational(BigInt::pow(BigInt{nn}, static_cast<unsigned long>(k)));
  };
  for (long nn = 4; nn <= cfg.n_max; nn *= 2) {
    last_n = nn;
    // Both parities of N: an even-only ladder can alias a period-2 oscillation.
    win.push(ApproxReal::from_rational(evaluate(nn), cfg.mantissa_bits));
    win.push(ApproxReal::from_rational(evaluate(nn + 1), cfg.mantissa_bits));
    if (win.full()) {
      double spread = win.spread();
      if (spread <= tol) {
        ApproxReal v = win.mean(cfg.mantissa_bits);
        v.add_error(spread);
        return SummationOutcome::summed(
            v, "cesaro", params,
            {{"k", k}, {"N", nn}, {"ladder_window", cfg.ladder_window}, {"spread", spread}});
      }
    }
  }
  return SummationOutcome::inconclusive({last_n, "Cesaro ladder did not stabilize"}, "cesaro",
                                        params);
}

SummationOutcome sum_cesaro_scan(const Series& x, long k_max, const SummerConfig& cfg) {
  for (long k = 0; k <= k_max; ++k) {
    SummationOutcome o = sum_cesaro_holder(x, k, cfg);
    if (o.summed()) {
      o.witness["k_scan"] = {{"k_max", k_max}, {"least_k", k}};
      return o;
    }
  }
  return SummationOutcome::inconclusive({k_max, "no order k <= k_max stabilized"}, "cesaro",
                                        {{"k", "scan"}, {"k_max", k_max}});
}

// --- Abel ------------------------------------------------------------------------

SummationOutcome sum_abel(const Series& x, const SummerConfig& cfg) {
  json params{{"depth", cfg.abel_depth}, {"tolerance", cfg.tolerance.to_string()}};
  SupportInfo s = analyze_support(x, cfg);
  if (s.decision == SupportInfo::FinitePolyExact || s.decision == SupportInfo::FiniteDetected)
    return SummationOutcome::summed(s.total, "abel", params, finite_witness(s));
  DivergenceProof div = divergence_proof(x, cfg);
  if (div.fired)
    return SummationOutcome::not_in_domain(
        "power series diverges on (0,1) (" + div.kind + ")", "abel", params, div.witness);

  GrowthFit fit = fit_growth(x, cfg);
  double g = fit.rate.to_double();
  double big_c = std::max(1.0, quotient_double(fit.big_c.num(), fit.big_c.den()));
  const RationalFunction* rf = x.rational_form();
  bool exact_eval = rf != nullptr && fit.rate <= Rational{1};

  double tol = cfg.tolerance.to_double();
  // Extrapolation amplifies the per-point error allowance by roughly two
  // orders of magnitude; keep truncated tails far under the tolerance.
  double tail_tol = tol / 1024.0;
  int prec = cfg.mantissa_bits + 64;

  std::vector<std::vector<ApproxReal>> tableau;  // rows of Richardson extrapolants
  StabWindow diag(cfg.ladder_window);
  long evaluated = 0;
  for (int j = 1; j <= cfg.abel_depth; ++j) {
    Rational rho{BigInt::pow2(static_cast<unsigned long>(j)) - BigInt{1},
                 BigInt::pow2(static_cast<unsigned long>(j))};
    ApproxReal fj;
    if (exact_eval) {
      fj = ApproxReal::from_rational(rf->eval(rho), prec);
    } else {
      double q = g * rho.to_double();
      if (q >= 0.999) break;  // tail not boundable at this depth
      double nd = (std::log(big_c) + std::log(1.0 / (1.0 - q)) + std::log(1.0 / tail_tol)) /
                  -std::log(q);
      long n_terms = static_cast<long>(nd) + cfg.window + 2;
      if (n_terms > cfg.n_max) break;
      Rational sum{0};
      Rational rp{1};
      for (long n = 0; n <= n_terms; ++n) {
        sum += x.coefficient(n) * rp;
        rp *= rho;
      }
      fj = ApproxReal::from_rational(sum, prec);
      fj.add_error(tail_tol);
    }
    evaluated = j;
    // Richardson on h = 1 - rho = 2^-j: R[j][m] = R[j][m-1] + (R[j][m-1]-R[j-1][m-1])/(2^m-1)
    std::vector<ApproxReal> row{fj};
    for (std::size_t m = 1; m <= tableau.size(); ++m) {
      const ApproxReal& up = tableau[tableau.size() - 1][m - 1];
      ApproxReal delta = row[m - 1] - up;
      ApproxReal denom = ApproxReal::from_rational(
          Rational(BigInt::pow2(static_cast<unsigned long>(m)) - BigInt{1}, BigInt{1}), prec);
      row.push_back(row[m - 1] + delta / denom);
    }
    tableau.push_back(row);
    diag.push(row.back());
    if (diag.full()) {
      double spread = diag.spread();
      if (spread <= tol) {
        ApproxReal v = diag.mean(cfg.mantissa_bits);
        v.add_error(spread);
        return SummationOutcome::summed(v, "abel", params,
                                        {{"depth", evaluated},
                                         {"exact_evaluation", exact_eval},
                                         {"spread", spread},
                                         {"growth", {{"C", fit.big_c.to_string()},
                                                     {"rate", fit.rate.to_string()}}}});
      }
    }
  }
  return SummationOutcome::inconclusive({evaluated, "Abel extrapolants did not stabilize"}, "abel",
                                        params);
}

// --- Borel -----------------------------------------------------------------------

namespace {

// Truncation order M with C (gT)^M / M! below bound; -1 when beyond cap.
long borel_truncation(double big_c, double g, double t, double bound, long cap) {
  double gt = std::max(1.0, g * t);
  double log_term = std::log(big_c);
  long m = 0;
  while (m < cap) {
    ++m;
    log_term += std::log(gt) - std::log(static_cast<double>(m));
    if (m >= 2.0 * gt && log_term < std::log(bound)) return m;
  }
  return -1;
}

ApproxReal approx_of(double v, int prec) {
  return ApproxReal::from_rational(Rational::from_double(v), prec);
}

// e^-t * sum c_n t^n evaluated by Horner at working precision.
ApproxReal borel_integrand(const std::vector<ApproxReal>& coeffs, const ApproxReal& t) {
  ApproxReal acc(0, t.prec());
  for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * t + coeffs[i];
  return ApproxReal::exp(-t) * acc;
}

// Adaptive Simpson with the classical S2-S error model; adds its own error
// estimate to *model_err.
ApproxReal adaptive_simpson(const std::function<ApproxReal(const ApproxReal&)>& f, double a,
                            double b, double tol, int prec, int max_depth, double* model_err) {
  struct Node {
    double a, b, tol;
    int depth;
  };
  auto eval = [&](double t) { return f(approx_of(t, prec)); };
  ApproxReal result(0, prec);
  std::vector<Node> stack{{a, b, tol, max_depth}};
  const ApproxReal four(4, prec);
  while (!stack.empty()) {
    Node nd = stack.back();
    stack.pop_back();
    double h = nd.b - nd.a;
    double c = 0.5 * (nd.a + nd.b);
    ApproxReal fa = eval(nd.a), fb = eval(nd.b), fc = eval(c);
    ApproxReal whole = (fa + fb + fc * four) * approx_of(h / 6.0, prec);
    ApproxReal fca = eval(0.5 * (nd.a + c)), fcb = eval(0.5 * (c + nd.b));
    ApproxReal left = (fa + fc + fca * four) * approx_of(h / 12.0, prec);
    ApproxReal right = (fc + fb + fcb * four) * approx_of(h / 12.0, prec);
    ApproxReal both = left + right;
    double err_est = std::fabs((both - whole).to_double()) / 15.0;
    if (err_est <= nd.tol || nd.depth <= 0) {
      result += both;
      *model_err += err_est;
    } else {
      stack.push_back({nd.a, c, nd.tol / 2.0, nd.depth - 1});
      stack.push_back({c, nd.b, nd.tol / 2.0, nd.depth - 1});
    }
  }
  return result;
}

}  // namespace

SummationOutcome sum_borel_integral(const Series& x, const SummerConfig& cfg) {
  json params{{"t0", cfg.quad_t0}, {"t_max", cfg.quad_t_max},
              {"tolerance", cfg.tolerance.to_string()}};
  SupportInfo s = analyze_support(x, cfg);
  if (s.decision == SupportInfo::FinitePolyExact || s.decision == SupportInfo::FiniteDetected)
    return SummationOutcome::summed(s.total, "borel-int", params, finite_witness(s));

  GrowthFit fit = fit_growth(x, cfg);
  double g = std::max(0.25, fit.rate.to_double());
  double big_c = std::max(1.0, quotient_double(fit.big_c.num(), fit.big_c.den()));
  double tol = cfg.tolerance.to_double();
  double tail_tol = tol / 8.0;

  double model_err = 0.0;
  double prev_t = 0.0;
  double prev_v = -1.0, prev_v2 = -1.0;
  ApproxReal total;
  long m_used = 0;
  std::vector<ApproxReal> coeffs;
  Rational nfact{1};
  for (double t = cfg.quad_t0; t <= cfg.quad_t_max * 1.0000001; t *= 1.25) {
    int prec = cfg.mantissa_bits + static_cast<int>(1.5 * g * t) + 32;
    long m = borel_truncation(big_c, g, t, tail_tol * std::exp(-t) / t, cfg.n_max);
    if (m < 0) {
      if (prev_t == 0.0)
        throw QuadratureFailure("Borel truncation order exceeds budget at t0");
      break;
    }
    if (m > m_used || !coeffs.empty()) {
      coeffs.clear();
      nfact = Rational{1};
      for (long n = 0; n <= m; ++n) {
        if (n > 0) nfact *= Rational{n};
        coeffs.push_back(ApproxReal::from_rational(x.coefficient(n) / nfact, prec));
      }
      m_used = m;
    }
    auto f = [&](const ApproxReal& tt) { return borel_integrand(coeffs, tt); };
    total = total + adaptive_simpson(f, prev_t, t, tail_tol / 4.0, prec, 24, &model_err);
    total.add_error(tail_tol / 4.0);

    double v = f(approx_of(t, prec)).abs_upper();
    if (prev_v >= 0.0 && prev_v2 >= 0.0 && v > prev_v && prev_v > prev_v2 && v > 1e-12) {
      return SummationOutcome::inconclusive(
          {m, "integrand grows along the t-grid (Borel integral appears divergent)"},
          "borel-int", params,
          {{"t", t}, {"integrand", v}, {"previous", prev_v}});
    }
    if (prev_v > 0.0 && v < prev_v) {
      double alpha = std::log(prev_v / v) / (t - prev_t);
      double tail = v / std::max(alpha, 1e-9);
      if (alpha > 0.05 && tail <= tail_tol) {
        ApproxReal value = total;
        value.add_error(tail + model_err + tail_tol);
        return SummationOutcome::summed(value, "borel-int", params,
                                        {{"T", t},
                                         {"truncation_order", m},
                                         {"decay_rate", alpha},
                                         {"tail_bound", tail},
                                         {"quadrature_error", model_err},
                                         {"growth", {{"C", fit.big_c.to_string()},
                                                     {"rate", fit.rate.to_string()}}}});
      }
    }
    prev_v2 = prev_v;
    prev_v = v;
    prev_t = t;
  }
  return SummationOutcome::inconclusive({m_used, "Borel integral tail not bounded at budget"},
                                        "borel-int", params);
}

SummationOutcome sum_borel_exponential(const Series& x, const SummerConfig& cfg) {
  json params{{"t0", cfg.quad_t0}, {"t_max", cfg.quad_t_max},
              {"tolerance", cfg.tolerance.to_string()}};
  SupportInfo s = analyze_support(x, cfg);
  if (s.decision == SupportInfo::FinitePolyExact || s.decision == SupportInfo::FiniteDetected)
    return SummationOutcome::summed(s.total, "borel-exp", params, finite_witness(s));

  Series sums = partial_sums(x);
  GrowthFit fit = fit_growth(sums, cfg);
  double g = std::max(0.25, fit.rate.to_double());
  double big_c = std::max(1.0, quotient_double(fit.big_c.num(), fit.big_c.den()));
  double tol = cfg.tolerance.to_double();
  double tail_tol = tol / 8.0;

  StabWindow win(cfg.ladder_window);
  double prev_v = -1.0, prev_v2 = -1.0;
  long m_used = 0;
  for (double t = cfg.quad_t0; t <= cfg.quad_t_max * 1.0000001; t *= 1.25) {
    int prec = cfg.mantissa_bits + static_cast<int>(1.5 * g * t) + 32;
    long m = borel_truncation(big_c, g, t, tail_tol, cfg.n_max);
    if (m < 0) {
      if (m_used == 0) throw QuadratureFailure("Borel truncation order exceeds budget at t0");
      break;
    }
    m_used = m;
    ApproxReal tt = approx_of(t, prec);
    ApproxReal acc(0, prec);
    Rational nfact{1};
    std::vector<ApproxReal> coeffs;
    for (long n = 0; n <= m; ++n) {
      if (n > 0) nfact *= Rational{n};
      coeffs.push_back(ApproxReal::from_rational(sums.coefficient(n) / nfact, prec));
    }
    for (std::size_t i = coeffs.size(); i-- > 0;) acc = acc * tt + coeffs[i];
    ApproxReal e = ApproxReal::exp(-tt) * acc;
    e.add_error(tail_tol);
    double v = e.abs_upper();
    if (prev_v >= 0.0 && prev_v2 >= 0.0 && v > 2.0 * prev_v && prev_v > 2.0 * prev_v2 &&
        v > 1e6) {
      return SummationOutcome::inconclusive(
          {m, "exponential Borel values grow along the t-grid"}, "borel-exp", params,
          {{"t", t}, {"value", v}});
    }
    prev_v2 = prev_v;
    prev_v = v;
    win.push(e);
    if (win.full()) {
      double spread = win.spread();
      if (spread <= tol) {
        ApproxReal value = win.mean(cfg.mantissa_bits);
        value.add_error(spread);
        return SummationOutcome::summed(value, "borel-exp", params,
                                        {{"T", t},
                                         {"truncation_order", m},
                                         {"ladder_window", cfg.ladder_window},
                                         {"spread", spread}});
      }
    }
  }
  return SummationOutcome::inconclusive({m_used, "exponential Borel ladder did not stabilize"},
                                        "borel-exp", params);
}

SummationOutcome sum_borel(const Series& x, const SummerConfig& cfg) {
  json params{{"shift_max", cfg.borel_shift_max}};
  SummationOutcome last;
  for (long shift = 0; shift <= cfg.borel_shift_max; ++shift) {
    Series shifted = shift == 0 ? x : shift_n(x, shift);
    SummationOutcome o = sum_borel_exponential(shifted, cfg);
    if (o.summed()) {
      o.method = "borel";
      o.params["shift"] = shift;
      // Cross-check the shift relation S'_b(sigma^(N-1) X) = S_b(sigma^N X).
      if (shift >= 1) {
        SummationOutcome integral =
            sum_borel_integral(shift == 1 ? x : shift_n(x, shift - 1), cfg);
        if (integral.summed()) {
          double diff = scalar_distance(o.scalar(), integral.scalar());
          o.witness["shift_relation"] = {{"checked", true}, {"difference", diff}};
        } else {
          o.witness["shift_relation"] = {{"checked", false}};
        }
      }
      return o;
    }
    last = o;
  }
  if (last.verdict == Verdict::Inconclusive) {
    last.method = "borel";
    last.budget.detail += " (all shifts up to cap)";
    return last;
  }
  return SummationOutcome::inconclusive({cfg.borel_shift_max, "no shift produced a Borel value"},
                                        "borel", params);
}

// --- Euler on rational closed forms ------------------------------------------------

SummationOutcome sum_euler_rational(const Series& x, const SummerConfig& cfg) {
  (void)cfg;
  const RationalFunction* r = x.rational_form();
  if (!r) throw NoClosedForm();
  json params{{"closed_form", r->to_string()}};
  Rational q1 = r->den().eval_one();
  long interior = r->den().real_roots_in_open(Rational{0}, Rational{1});
  if (q1.is_zero() || interior > 0) {
    return SummationOutcome::not_in_domain(
        "denominator vanishes on [0,1]", "euler-rational", params,
        {{"denominator", r->den().to_string()},
         {"roots_in_(0,1)", interior},
         {"root_at_1", q1.is_zero()}});
  }
  Rational value = r->num().eval_one() / q1;
  return SummationOutcome::summed(value, "euler-rational", params,
                                  {{"sturm_roots_in_(0,1)", interior},
                                   {"P(1)", r->num().eval_one().to_string()},
                                   {"Q(1)", q1.to_string()}});
}

// --- p-adic -------------------------------------------------------------------------

SummationOutcome sum_padic(const Series& x, long p, const SummerConfig& cfg) {
  if (!is_prime_small(p)) throw NotPrime(p);
  json params{{"p", p}, {"precision", cfg.padic_prec}};

  // For sparse series the term sequence runs over the support.
  std::vector<long> positions;
  if (x.sparse()) {
    positions = x.support_up_to(std::min<long>(SeriesImpl::kHardCap, cfg.n_max));
    if (static_cast<long>(positions.size()) > cfg.padic_scan)
      positions.resize(static_cast<std::size_t>(cfg.padic_scan));
  } else {
    for (long n = 0; n < cfg.padic_scan; ++n) positions.push_back(n);
  }

  std::vector<long> vals;
  vals.reserve(positions.size());
  for (long n : positions) {
    const Rational& c = x.coefficient(n);
    vals.push_back(c.is_zero() ? PAdicValue::kInfValuation : padic_valuation(c, p));
  }
  long count = static_cast<long>(vals.size());
  if (count < 8)
    return SummationOutcome::inconclusive({count, "too few terms scanned"}, "padic", params);

  auto min_over = [&](long lo, long hi) {
    long m = PAdicValue::kInfValuation;
    for (long i = lo; i < hi; ++i) m = std::min(m, vals[static_cast<std::size_t>(i)]);
    return m;
  };
  long early = min_over(0, count / 4 + 1);
  long late = min_over((3 * count) / 4, count);
  if (late <= early && late < PAdicValue::kInfValuation) {
    return SummationOutcome::not_in_domain(
        "terms do not tend to 0 p-adically (bounded valuation over the scan)", "padic", params,
        {{"p", p}, {"early_min_valuation", early}, {"late_min_valuation", late}});
  }

  // Fit v_n >= slope*n - c on the scanned tail and project beyond the scan.
  double slope = 1e18;
  for (long i = count / 4; i < count; ++i) {
    if (vals[static_cast<std::size_t>(i)] >= PAdicValue::kInfValuation) continue;
    long n = positions[static_cast<std::size_t>(i)];
    if (n == 0) continue;
    slope = std::min(slope, (static_cast<double>(vals[static_cast<std::size_t>(i)]) + 2.0) /
                                static_cast<double>(n));
  }
  if (slope <= 0.0 || slope > 1e17)
    slope = 1.0;  // all-infinite tail: effectively finite support

  long target = cfg.padic_prec;
  // All terms beyond the scan must have valuation >= target.
  long last_pos = positions.back();
  if (slope * static_cast<double>(last_pos + 1) - 2.0 < static_cast<double>(target)) {
    return SummationOutcome::inconclusive(
        {count, "valuation growth too slow to certify the requested precision"}, "padic", params);
  }
  // Terms up to the scan end with v_n < target all contribute; beyond, they are 0 mod p^target.
  Rational sum{0};
  for (std::size_t i = 0; i < positions.size(); ++i) sum += x.coefficient(positions[i]);

  PAdicValue value = [&]() {
    if (sum.is_zero()) return PAdicValue::zero(p, static_cast<int>(target));
    long v = padic_valuation(sum, p);
    long prec = target - v;
    if (prec < 1) return PAdicValue::zero(p, 1);
    return PAdicValue::embed(sum, p, static_cast<int>(prec));
  }();
  return SummationOutcome::summed(value, "padic", params,
                                  {{"p", p},
                                   {"scanned", count},
                                   {"slope", slope},
                                   {"modulus_exponent", target}});
}

// --- method registry ------------------------------------------------------------------

MethodSpec MethodSpec::parse(const std::string& text) {
  MethodSpec spec;
  auto colon = text.find(':');
  spec.name = text.substr(0, colon);
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      auto comma = rest.find(',', pos);
      std::string kv = rest.substr(pos, comma == std::string::npos ? std::string::npos
                                                                   : comma - pos);
      auto eq = kv.find('=');
      if (eq == std::string::npos) throw Error("malformed method parameter: " + kv);
      std::string key = kv.substr(0, eq);
      long val = std::stol(kv.substr(eq + 1));
      if (key == "k" && spec.name == "padic")
        spec.prec = static_cast<int>(val);
      else if (key == "k")
        spec.k = val;
      else if (key == "p")
        spec.p = val;
      else if (key == "prec")
        spec.prec = static_cast<int>(val);
      else
        throw Error("unknown method parameter: " + key);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return spec;
}

std::string MethodSpec::id() const {
  if (name == "cesaro" || name == "cesaro-scan") return name + ":k=" + std::to_string(k);
  if (name == "padic")
    return name + ":p=" + std::to_string(p) + ",k=" + std::to_string(prec);
  return name;
}

Summer make_summer(const MethodSpec& spec, const SummerConfig& cfg) {
  Summer s;
  s.id = spec.id();
  if (spec.name == "add") {
    s.codomain = Codomain::rationals();
    s.exact = true;
    s.run = [cfg](const Series& x) { return sum_add(x, cfg); };
  } else if (spec.name == "classical") {
    s.codomain = Codomain::reals();
    s.run = [cfg](const Series& x) { return sum_classical(x, cfg); };
  } else if (spec.name == "absolute") {
    s.codomain = Codomain::reals();
    s.run = [cfg](const Series& x) { return sum_absolute(x, cfg); };
  } else if (spec.name == "cesaro") {
    s.codomain = Codomain::reals();
    long k = spec.k;
    s.run = [cfg, k](const Series& x) { return sum_cesaro_holder(x, k, cfg); };
  } else if (spec.name == "cesaro-scan") {
    s.codomain = Codomain::reals();
    long k_max = spec.k;
    s.run = [cfg, k_max](const Series& x) { return sum_cesaro_scan(x, k_max, cfg); };
  } else if (spec.name == "abel") {
    s.codomain = Codomain::reals();
    s.run = [cfg](const Series& x) { return sum_abel(x, cfg); };
  } else if (spec.name == "borel") {
    s.codomain = Codomain::reals();
    s.run = [cfg](const Series& x) { return sum_borel(x, cfg); };
  } else if (spec.name == "borel-exp") {
    s.codomain = Codomain::reals();
    s.run = [cfg](const Series& x) { return sum_borel_exponential(x, cfg); };
  } else if (spec.name == "borel-int") {
    s.codomain = Codomain::reals();
    s.run = [cfg](const Series& x) { return sum_borel_integral(x, cfg); };
  } else if (spec.name == "euler-rational") {
    s.codomain = Codomain::rationals();
    s.exact = true;
    s.run = [cfg](const Series& x) { return sum_euler_rational(x, cfg); };
  } else if (spec.name == "padic") {
    s.codomain = Codomain::padics(spec.p);
    s.exact = true;
    long p = spec.p;
    SummerConfig c2 = cfg;
    if (spec.prec > 0) c2.padic_prec = spec.prec;
    s.run = [c2, p](const Series& x) { return sum_padic(x, p, c2); };
  } else {
    throw UnknownBase(spec.name);
  }
  return s;
}

Summer make_summer(const std::string& spec, const SummerConfig& cfg) {
  return make_summer(MethodSpec::parse(spec), cfg);
}

}  // namespace summa
