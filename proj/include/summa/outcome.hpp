#ifndef SUMMA_OUTCOME_HPP
#define SUMMA_OUTCOME_HPP

#include <optional>
#include <string>
#include <variant>

#include <json.hpp>

#include "summa/approx_real.hpp"
#include "summa/padic.hpp"
#include "summa/rational.hpp"

namespace summa {

using json = nlohmann::json;

inline constexpr const char* kReportSchema = "summa-report/1";

enum class Verdict { Summed, NotInDomain, Inconclusive };

std::string to_string(Verdict v);

/// Codomain of a summation: Q, Z (Q plus a final integrality check), the
/// approximate reals, or Q_p.
struct Codomain {
  enum Kind { Q, Z, R, Qp } kind = Q;
  long p = 0;  // for Qp

  static Codomain rationals() { return {Q, 0}; }
  static Codomain integers() { return {Z, 0}; }
  static Codomain reals() { return {R, 0}; }
  static Codomain padics(long p) { return {Qp, p}; }
  std::string name() const;
};

/// A codomain scalar.
using Scalar = std::variant<Rational, ApproxReal, PAdicValue>;

/// Regularity predicate: non-zerodivisor in the codomain. All supported
/// codomains are domains, so this is "nonzero" (for ApproxReal: bounded away
/// from zero); integrality over Z is checked at use sites.
bool is_regular(const Scalar& x, const Codomain& e);

Scalar scalar_neg(const Scalar& x);
Scalar scalar_add(const Scalar& a, const Scalar& b);
Scalar scalar_mul(const Scalar& a, const Scalar& b);
Scalar scalar_div(const Scalar& a, const Scalar& b);
/// Coerce to ApproxReal (for tolerance comparisons); p-adics are rejected.
ApproxReal scalar_approx(const Scalar& x, int prec = ApproxReal::kDefaultPrec);
/// |a - b| as a double, when both live in an archimedean codomain.
double scalar_distance(const Scalar& a, const Scalar& b);
std::string scalar_to_string(const Scalar& x);
json scalar_to_json(const Scalar& x);

struct BudgetReport {
  long scanned = 0;
  std::string detail;
};

/// Three-way verdict with an auditable certificate.
struct SummationOutcome {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<Scalar> value;  // present iff Summed
  std::string reason;           // NotInDomain reason
  BudgetReport budget;          // Inconclusive report
  std::string method;
  json params = json::object();
  json witness = json::object();

  bool summed() const { return verdict == Verdict::Summed; }
  const Scalar& scalar() const { return *value; }

  static SummationOutcome summed(Scalar v, std::string method, json params = json::object(),
                                 json witness = json::object());
  static SummationOutcome not_in_domain(std::string reason, std::string method,
                                        json params = json::object(),
                                        json witness = json::object());
  static SummationOutcome inconclusive(BudgetReport report, std::string method,
                                       json params = json::object(),
                                       json witness = json::object());

  json to_json() const;
};

/// Budgets and tolerances shared by the summers.
struct SummerConfig {
  Rational tolerance = Rational(1, 1000000000);  // 1e-9
  Rational abs_tolerance;   // 0 => tolerance; gate for the absolute-convergence detector
  int window = 16;          // consecutive partial sums for stabilization
  int ladder_window = 5;    // geometric-ladder entries for stabilization
  long n_max = 100000;
  long scan = 512;          // coefficient scan for detectors and fits
  int mantissa_bits = ApproxReal::kDefaultPrec;
  double quad_t0 = 2.0;     // Borel t-ladder start
  double quad_t_max = 64.0; // Borel t-ladder cap
  long borel_shift_max = 8;
  int abel_depth = 40;
  int padic_prec = 12;
  long padic_scan = 96;
  long max_degree = 8;      // telescoping annihilator cap
  long verify_n = 256;      // decomposition verification range

  Rational abs_tol() const { return abs_tolerance.is_zero() ? tolerance : abs_tolerance; }
  json to_json() const;
};

}  // namespace summa

#endif
