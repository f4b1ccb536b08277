#ifndef SUMMA_EXTENSIONS_HPP
#define SUMMA_EXTENSIONS_HPP

#include <optional>
#include <string>
#include <vector>

#include "summa/outcome.hpp"
#include "summa/polynomial.hpp"
#include "summa/series.hpp"
#include "summa/summers.hpp"

namespace summa {

/// Witness for a telescoped value: F*X = A with base(F) = f regular and
/// base(A) = fx, so the value is fx / f.
struct TelescopeCertificate {
  Polynomial f_poly;
  std::string rule;  // which candidate rule produced F
  Scalar f;
  Scalar fx;
  Scalar value;
  std::string base_id;
  json to_json() const;
};

/// Telescopic extension of a base summer over the given codomain.
SummationOutcome telescope_sum(const Series& x, const Summer& base, const SummerConfig& cfg,
                               const Codomain& codomain);
SummationOutcome telescope_sum(const Series& x, const std::string& base_id,
                               const SummerConfig& cfg, const Codomain& codomain);

/// Attempt one explicit witness polynomial; nullopt when F does not witness.
std::optional<TelescopeCertificate> telescope_with(const Polynomial& f, const Series& x,
                                                   const Summer& base, const Codomain& codomain);

/// The built-in candidate pool in documented order (identity, closed-form
/// denominator, fitted recurrence, tail reconstruction).
std::vector<std::pair<Polynomial, std::string>> telescope_candidates(const Series& x,
                                                                     const Summer& base,
                                                                     const SummerConfig& cfg);

/// Norlund mean: limit of (P * Sigma X)_n / (Sigma P)_n under the Lambda
/// summer's window test, with the desk-scale companion identity check.
SummationOutcome norlund_mean(const Series& x, const Series& p, const std::string& lambda_id,
                              const SummerConfig& cfg);

/// A formal sum of formal products.
struct ProductExpression {
  std::vector<std::vector<Series>> terms;

  long grade() const;
  Series expand() const;
  static ProductExpression single(Series x) { return {{{std::move(x)}}}; }
};

/// Multiplicative extension: sum of products of base values, defined when
/// every factor is base-summable.
SummationOutcome mult_extension_sum(const ProductExpression& expr, const Summer& base,
                                    const SummerConfig& cfg);

/// Least grade k <= k_max not excluded by the coefficient-growth necessary
/// condition (members of M_{k+1} have coefficients O(n^k)).
long grade_lower_bound(const Series& x, long k_max, const SummerConfig& cfg);

/// Rational extension witness A = B*X with base(B) regular.
struct RationalWitness {
  Series a, b;
  Scalar sum_a, sum_b;
  Scalar value;
  long verified_up_to = 0;
  json to_json() const;
};

SummationOutcome rational_extension_sum(const Series& x, const Series& a, const Series& b,
                                        const Summer& base, const SummerConfig& cfg);
/// Decomposition from the closed form (A = P, B = Q) when X is rational.
SummationOutcome rational_extension_sum(const Series& x, const Summer& base,
                                        const SummerConfig& cfg);

/// Pairwise agreement + multiplicativity report over a method list and corpus.
struct ConsistencyReport {
  json data;
  std::string text;
};
ConsistencyReport consistency_report(const std::vector<Summer>& methods,
                                     const std::vector<std::pair<std::string, Series>>& corpus,
                                     const SummerConfig& cfg);

}  // namespace summa

#endif
