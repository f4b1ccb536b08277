#ifndef SUMMA_SUMMERS_HPP
#define SUMMA_SUMMERS_HPP

#include <functional>
#include <optional>
#include <string>

#include "summa/outcome.hpp"
#include "summa/series.hpp"

namespace summa {

/// Finite-sum evaluation Add(A) = A(1) on detected finitely supported series.
SummationOutcome sum_add(const Series& x, const SummerConfig& cfg = {});

/// Classical limit of exact partial sums with windowed stabilization.
SummationOutcome sum_classical(const Series& x, const SummerConfig& cfg = {});

/// Classical summation gated on the absolute-convergence detector.
SummationOutcome sum_absolute(const Series& x, const SummerConfig& cfg = {});

struct AbsoluteDetection {
  bool detected = false;
  json witness = json::object();
};
/// Semi-decision: partial sums of |x_n| pass the stabilization test.
AbsoluteDetection detect_absolute(const Series& x, const SummerConfig& cfg = {});

/// Least grid rate r with |x_n| <= C r^n on the scan; nullopt when none fits.
std::optional<Rational> detect_geometric(const Series& x, const SummerConfig& cfg = {});

/// Coefficient majorant |x_n| <= C g^n fitted on the scan (g may exceed 1).
struct GrowthFit {
  Rational big_c;
  Rational rate;
};
GrowthFit fit_growth(const Series& x, const SummerConfig& cfg = {});

/// Cesaro-Holder of order k, evaluated exactly on a geometric N-ladder.
SummationOutcome sum_cesaro_holder(const Series& x, long k, const SummerConfig& cfg = {});
/// Scan mode: least k <= k_max with a Summed verdict.
SummationOutcome sum_cesaro_scan(const Series& x, long k_max, const SummerConfig& cfg = {});

/// Abel limit along rho_j = 1 - 2^-j with Richardson extrapolation.
SummationOutcome sum_abel(const Series& x, const SummerConfig& cfg = {});

SummationOutcome sum_borel_exponential(const Series& x, const SummerConfig& cfg = {});
SummationOutcome sum_borel_integral(const Series& x, const SummerConfig& cfg = {});
/// Shift-stabilized Borel summation: first Summed among sigma^N X, N = 0..shift cap.
SummationOutcome sum_borel(const Series& x, const SummerConfig& cfg = {});

/// Euler summation restricted to rational closed forms: P(1)/Q(1) when Q has
/// no root in [0,1] (decided exactly by Sturm sequences).
SummationOutcome sum_euler_rational(const Series& x, const SummerConfig& cfg = {});

/// p-adic limit of partial sums.
SummationOutcome sum_padic(const Series& x, long p, const SummerConfig& cfg = {});

/// Parsed method selector, e.g. "cesaro:k=2", "padic:p=7,k=12".
struct MethodSpec {
  std::string name;
  long k = 1;         // cesaro order
  long p = 7;         // padic prime
  int prec = 0;       // padic precision override
  static MethodSpec parse(const std::string& text);
  std::string id() const;
};

/// A ready-to-run summer with its codomain.
struct Summer {
  std::string id;
  Codomain codomain;
  bool exact = false;
  std::function<SummationOutcome(const Series&)> run;
};

Summer make_summer(const MethodSpec& spec, const SummerConfig& cfg);
Summer make_summer(const std::string& spec, const SummerConfig& cfg);

}  // namespace summa

#endif
