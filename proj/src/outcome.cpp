#include "summa/outcome.hpp"

#include <cmath>

#include "summa/errors.hpp"

namespace summa {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Summed:
      return "Summed";
    case Verdict::NotInDomain:
      return "NotInDomain";
    case Verdict::Inconclusive:
      return "Inconclusive";
  }
  return "?";
}

std::string Codomain::name() const {
  switch (kind) {
    case Q:
      return "Q";
    case Z:
      return "Z";
    case R:
      return "R";
    case Qp:
      return "Q_" + std::to_string(p);
  }
  return "?";
}

bool is_regular(const Scalar& x, const Codomain& e) {
  switch (e.kind) {
    case Codomain::Q:
    case Codomain::Z:
      if (const auto* r = std::get_if<Rational>(&x)) return !r->is_zero();
      if (const auto* a = std::get_if<ApproxReal>(&x)) return a->definitely_nonzero();
      return false;
    case Codomain::R:
      if (const auto* r = std::get_if<Rational>(&x)) return !r->is_zero();
      if (const auto* a = std::get_if<ApproxReal>(&x)) return a->definitely_nonzero();
      return false;
    case Codomain::Qp:
      if (const auto* p = std::get_if<PAdicValue>(&x)) return !p->is_zero();
      if (const auto* r = std::get_if<Rational>(&x)) return !r->is_zero();
      return false;
  }
  return false;
}

namespace {

template <typename F, typename G, typename H>
Scalar zip(const Scalar& a, const Scalar& b, F fr, G fa, H fp) {
  if (std::holds_alternative<Rational>(a) && std::holds_alternative<Rational>(b))
    return fr(std::get<Rational>(a), std::get<Rational>(b));
  if (std::holds_alternative<PAdicValue>(a) || std::holds_alternative<PAdicValue>(b)) {
    const auto* pa = std::get_if<PAdicValue>(&a);
    const auto* pb = std::get_if<PAdicValue>(&b);
    if (pa && pb) return fp(*pa, *pb);
    if (pa) return fp(*pa, PAdicValue::embed(std::get<Rational>(b), pa->prime(), pa->precision()));
    return fp(PAdicValue::embed(std::get<Rational>(a), pb->prime(), pb->precision()), *pb);
  }
  return fa(scalar_approx(a), scalar_approx(b));
}

}  // namespace

Scalar scalar_neg(const Scalar& x) {
  if (const auto* r = std::get_if<Rational>(&x)) return -*r;
  if (const auto* a = std::get_if<ApproxReal>(&x)) return -*a;
  return -std::get<PAdicValue>(x);
}

Scalar scalar_add(const Scalar& a, const Scalar& b) {
  return zip(
      a, b, [](const Rational& x, const Rational& y) -> Scalar { return x + y; },
      [](const ApproxReal& x, const ApproxReal& y) -> Scalar { return x + y; },
      [](const PAdicValue& x, const PAdicValue& y) -> Scalar { return x + y; });
}

Scalar scalar_mul(const Scalar& a, const Scalar& b) {
  return zip(
      a, b, [](const Rational& x, const Rational& y) -> Scalar { return x * y; },
      [](const ApproxReal& x, const ApproxReal& y) -> Scalar { return x * y; },
      [](const PAdicValue& x, const PAdicValue& y) -> Scalar { return x * y; });
}

Scalar scalar_div(const Scalar& a, const Scalar& b) {
  return zip(
      a, b, [](const Rational& x, const Rational& y) -> Scalar { return x / y; },
      [](const ApproxReal& x, const ApproxReal& y) -> Scalar { return x / y; },
      [](const PAdicValue& x, const PAdicValue& y) -> Scalar { return x / y; });
}

ApproxReal scalar_approx(const Scalar& x, int prec) {
  if (const auto* r = std::get_if<Rational>(&x)) return ApproxReal::from_rational(*r, prec);
  if (const auto* a = std::get_if<ApproxReal>(&x)) return *a;
  throw Error("p-adic value has no archimedean approximation");
}

double scalar_distance(const Scalar& a, const Scalar& b) {
  ApproxReal d = scalar_approx(a) - scalar_approx(b);
  return std::fabs(d.to_double());
}

std::string scalar_to_string(const Scalar& x) {
  if (const auto* r = std::get_if<Rational>(&x)) return r->to_string();
  if (const auto* a = std::get_if<ApproxReal>(&x)) return a->to_string();
  return std::get<PAdicValue>(x).to_string();
}

json scalar_to_json(const Scalar& x) {
  if (const auto* r = std::get_if<Rational>(&x)) return json{{"exact", r->to_string()}};
  if (const auto* a = std::get_if<ApproxReal>(&x))
    return json{{"approx", a->to_double()}, {"error_bound", a->err()}};
  const auto& p = std::get<PAdicValue>(x);
  json j{{"padic", {{"p", p.prime()},
                    {"valuation", p.is_exact_zero() ? json(nullptr) : json(p.valuation())},
                    {"unit", p.unit().to_string()},
                    {"precision", p.precision()}}}};
  return j;
}

SummationOutcome SummationOutcome::summed(Scalar v, std::string method, json params,
                                          json witness) {
  SummationOutcome o;
  o.verdict = Verdict::Summed;
  o.value = std::move(v);
  o.method = std::move(method);
  o.params = std::move(params);
  o.witness = std::move(witness);
  return o;
}

SummationOutcome SummationOutcome::not_in_domain(std::string reason, std::string method,
                                                 json params, json witness) {
  SummationOutcome o;
  o.verdict = Verdict::NotInDomain;
  o.reason = std::move(reason);
  o.method = std::move(method);
  o.params = std::move(params);
  o.witness = std::move(witness);
  return o;
}

SummationOutcome SummationOutcome::inconclusive(BudgetReport report, std::string method,
                                                json params, json witness) {
  SummationOutcome o;
  o.verdict = Verdict::Inconclusive;
  o.budget = std::move(report);
  o.method = std::move(method);
  o.params = std::move(params);
  o.witness = std::move(witness);
  return o;
}

json SummationOutcome::to_json() const {
  json j;
  j["schema"] = kReportSchema;
  j["method"] = method;
  j["params"] = params;
  j["verdict"] = to_string(verdict);
  if (value) j["value"] = scalar_to_json(*value);
  if (!reason.empty()) j["reason"] = reason;
  if (verdict == Verdict::Inconclusive)
    j["budget"] = {{"scanned", budget.scanned}, {"detail", budget.detail}};
  j["witness"] = witness;
  return j;
}

json SummerConfig::to_json() const {
  return json{{"tolerance", tolerance.to_string()},
              {"abs_tolerance", abs_tol().to_string()},
              {"window", window},
              {"ladder_window", ladder_window},
              {"n_max", n_max},
              {"scan", scan},
              {"mantissa_bits", mantissa_bits},
              {"quad_t0", quad_t0},
              {"quad_t_max", quad_t_max},
              {"borel_shift_max", borel_shift_max},
              {"abel_depth", abel_depth},
              {"padic_prec", padic_prec},
              {"max_degree", max_degree},
              {"verify_n", verify_n}};
}

}  // namespace summa
