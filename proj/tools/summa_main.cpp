// summa: exact-arithmetic summation of divergent formal series.
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "summa/acceptance.hpp"
#include "summa/errors.hpp"
#include "summa/extensions.hpp"
#include "summa/fixtures.hpp"
#include "summa/lang.hpp"
#include "summa/summers.hpp"

namespace {

using namespace summa;

struct CommonOpts {
  std::string tolerance;
  std::string abs_tolerance;
  long n_max = -1;
  int window = -1;
  int ladder_window = -1;
  long max_degree = -1;
  long verify_n = -1;
  int mantissa = -1;
  int padic_prec = -1;
  std::string config_file;
  bool as_json = false;
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--tol", o.tolerance, "stabilization tolerance (rational or decimal)");
  cmd->add_option("--abs-tol", o.abs_tolerance, "absolute-convergence detector tolerance");
  cmd->add_option("--n-max", o.n_max, "partial-sum budget");
  cmd->add_option("--window", o.window, "stabilization window");
  cmd->add_option("--ladder-window", o.ladder_window, "ladder stabilization window");
  cmd->add_option("--max-degree", o.max_degree, "telescoping annihilator degree cap");
  cmd->add_option("--verify-n", o.verify_n, "decomposition verification range");
  cmd->add_option("--mantissa-bits", o.mantissa, "working mantissa bits");
  cmd->add_option("--padic-prec", o.padic_prec, "p-adic precision (digits of p)");
  cmd->add_option("--config", o.config_file, "key=value config file (flags override)");
  cmd->add_flag("--json", o.as_json, "emit the JSON report");
}

void apply_kv(SummerConfig& cfg, const std::string& key, const std::string& value) {
  if (key == "tolerance")
    cfg.tolerance = Rational::parse(value);
  else if (key == "abs-tolerance")
    cfg.abs_tolerance = Rational::parse(value);
  else if (key == "n-max")
    cfg.n_max = std::stol(value);
  else if (key == "window")
    cfg.window = std::stoi(value);
  else if (key == "ladder-window")
    cfg.ladder_window = std::stoi(value);
  else if (key == "scan")
    cfg.scan = std::stol(value);
  else if (key == "max-degree")
    cfg.max_degree = std::stol(value);
  else if (key == "verify-n")
    cfg.verify_n = std::stol(value);
  else if (key == "mantissa-bits")
    cfg.mantissa_bits = std::stoi(value);
  else if (key == "padic-prec")
    cfg.padic_prec = std::stoi(value);
  else if (key == "abel-depth")
    cfg.abel_depth = std::stoi(value);
  else if (key == "quad-t-max")
    cfg.quad_t_max = std::stod(value);
  else
    throw Error("unknown config key: " + key);
}

SummerConfig build_config(const CommonOpts& o) {
  SummerConfig cfg;
  if (!o.config_file.empty()) {
    std::ifstream in(o.config_file);
    if (!in) throw Error("cannot open config file: " + o.config_file);
    std::string line;
    while (std::getline(in, line)) {
      auto hash = line.find('#');
      if (hash != std::string::npos) line = line.substr(0, hash);
      auto eq = line.find('=');
      if (eq == std::string::npos) continue;
      auto trim = [](std::string s) {
        s.erase(0, s.find_first_not_of(" \t"));
        auto last = s.find_last_not_of(" \t");
        s.erase(last == std::string::npos ? 0 : last + 1);
        return s;
      };
      apply_kv(cfg, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
    }
  }
  if (!o.tolerance.empty()) cfg.tolerance = Rational::parse(o.tolerance);
  if (!o.abs_tolerance.empty()) cfg.abs_tolerance = Rational::parse(o.abs_tolerance);
  if (o.n_max > 0) cfg.n_max = o.n_max;
  if (o.window > 0) cfg.window = o.window;
  if (o.ladder_window > 0) cfg.ladder_window = o.ladder_window;
  if (o.max_degree > 0) cfg.max_degree = o.max_degree;
  if (o.verify_n > 0) cfg.verify_n = o.verify_n;
  if (o.mantissa > 0) cfg.mantissa_bits = o.mantissa;
  if (o.padic_prec > 0) cfg.padic_prec = o.padic_prec;
  return cfg;
}

Codomain parse_codomain(const std::string& s) {
  if (s == "Q") return Codomain::rationals();
  if (s == "Z") return Codomain::integers();
  if (s == "R") return Codomain::reals();
  if (s.rfind("padic:", 0) == 0) return Codomain::padics(std::stol(s.substr(6)));
  throw Error("unknown codomain: " + s + " (expected Q, Z, R, padic:p)");
}

int exit_code_for(const std::vector<SummationOutcome>& outcomes) {
  bool any_nid = false, any_inc = false;
  for (const auto& o : outcomes) {
    if (o.verdict == Verdict::NotInDomain) any_nid = true;
    if (o.verdict == Verdict::Inconclusive) any_inc = true;
  }
  if (any_nid) return 3;
  if (any_inc) return 2;
  return 0;
}

void print_outcome_text(const SummationOutcome& o) {
  std::cout << o.method << ": " << to_string(o.verdict);
  if (o.summed()) {
    const Scalar& v = o.scalar();
    if (const auto* r = std::get_if<Rational>(&v)) {
      std::cout << " " << r->to_string() << " (exact)";
    } else if (const auto* a = std::get_if<ApproxReal>(&v)) {
      std::cout << " " << a->to_string();
    } else {
      std::cout << " " << std::get<PAdicValue>(v).to_string();
    }
  }
  if (!o.reason.empty()) std::cout << "  [" << o.reason << "]";
  if (o.verdict == Verdict::Inconclusive) std::cout << "  [" << o.budget.detail << "]";
  if (o.witness.contains("F"))
    std::cout << "  F = " << o.witness["F"].get<std::string>() << " (" +
                     o.witness["rule"].get<std::string>() + ")";
  std::cout << "\n";
}

int report(const std::string& command, const json& request,
           const std::vector<SummationOutcome>& outcomes, bool as_json) {
  if (as_json) {
    json j{{"schema", kReportSchema}, {"command", command}, {"request", request}};
    j["results"] = json::array();
    for (const auto& o : outcomes) j["results"].push_back(o.to_json());
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& o : outcomes) print_outcome_text(o);
  }
  return exit_code_for(outcomes);
}

ProductExpression product_expression_of(const lang::ExprPtr& e) {
  ProductExpression out;
  std::function<void(const lang::ExprPtr&, bool)> terms = [&](const lang::ExprPtr& t, bool neg) {
    if (t->kind == lang::Expr::Add) {
      terms(t->lhs, neg);
      terms(t->rhs, neg);
      return;
    }
    if (t->kind == lang::Expr::Sub) {
      terms(t->lhs, neg);
      terms(t->rhs, !neg);
      return;
    }
    std::vector<Series> factors;
    std::function<void(const lang::ExprPtr&)> collect = [&](const lang::ExprPtr& f) {
      if (f->kind == lang::Expr::Mul) {
        collect(f->lhs);
        collect(f->rhs);
        return;
      }
      if (f->kind == lang::Expr::IntPow && f->ipow >= 1) {
        for (long i = 0; i < f->ipow; ++i) collect(f->lhs);
        return;
      }
      factors.push_back(lang::lower(f));
    };
    collect(t);
    if (neg) factors.push_back(constant_series(Rational{-1}));
    out.terms.push_back(std::move(factors));
  };
  terms(e, false);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"summa: machine-checked summation of divergent formal series"};
  app.require_subcommand(1);

  // --- sum ---
  auto* sum_cmd = app.add_subcommand("sum", "run one or more summation methods");
  CommonOpts sum_opts;
  std::vector<std::string> methods;
  std::string sum_expr;
  sum_cmd->add_option("--method,-m", methods, "method spec (e.g. borel, cesaro:k=2, padic:p=7,k=12)")
      ->required();
  sum_cmd->add_option("expr", sum_expr, "series expression")->required();
  add_common(sum_cmd, sum_opts);

  // --- telescope ---
  auto* tel_cmd = app.add_subcommand("telescope", "telescopic extension over a base summer");
  CommonOpts tel_opts;
  std::string tel_base = "add", tel_codomain = "Q", tel_expr;
  tel_cmd->add_option("--base", tel_base, "base summer id");
  tel_cmd->add_option("--codomain", tel_codomain, "codomain: Q, Z, R, padic:p");
  tel_cmd->add_option("expr", tel_expr, "series expression")->required();
  add_common(tel_cmd, tel_opts);

  // --- mult ---
  auto* mult_cmd = app.add_subcommand("mult", "multiplicative extension over a base summer");
  CommonOpts mult_opts;
  std::string mult_base = "classical", mult_expr;
  mult_cmd->add_option("--base", mult_base, "base summer id");
  mult_cmd->add_option("expr", mult_expr, "sum-of-products expression")->required();
  add_common(mult_cmd, mult_opts);

  // --- rational ---
  auto* rat_cmd = app.add_subcommand("rational", "rational extension over a base summer");
  CommonOpts rat_opts;
  std::string rat_base = "absolute", rat_expr, rat_num, rat_den;
  rat_cmd->add_option("--base", rat_base, "base summer id");
  rat_cmd->add_option("--num", rat_num, "decomposition numerator A (expression)");
  rat_cmd->add_option("--den", rat_den, "decomposition denominator B (expression)");
  rat_cmd->add_option("expr", rat_expr, "series expression")->required();
  add_common(rat_cmd, rat_opts);

  // --- norlund ---
  auto* nor_cmd = app.add_subcommand("norlund", "Norlund mean against a weight series");
  CommonOpts nor_opts;
  std::string nor_weights = "1+s", nor_lambda = "classical", nor_expr;
  nor_cmd->add_option("--weights,-p", nor_weights, "weight series P (expression)");
  nor_cmd->add_option("--lambda", nor_lambda, "limit functional (classical)");
  nor_cmd->add_option("expr", nor_expr, "series expression")->required();
  add_common(nor_cmd, nor_opts);

  // --- compare ---
  auto* cmp_cmd = app.add_subcommand("compare", "consistency report over methods and fixtures");
  CommonOpts cmp_opts;
  std::vector<std::string> cmp_methods;
  std::vector<std::string> cmp_fixtures;
  cmp_cmd->add_option("--method,-m", cmp_methods, "method specs")->required();
  cmp_cmd->add_option("--fixtures,-f", cmp_fixtures, "fixture names or expressions")->required();
  add_common(cmp_cmd, cmp_opts);

  // --- coeffs ---
  auto* coe_cmd = app.add_subcommand("coeffs", "dump exact coefficients");
  CommonOpts coe_opts;
  long coe_n = 8;
  std::string coe_expr;
  coe_cmd->add_option("-n", coe_n, "number of coefficients");
  coe_cmd->add_option("expr", coe_expr, "series expression")->required();
  add_common(coe_cmd, coe_opts);

  // --- fixtures ---
  auto* fix_cmd = app.add_subcommand("fixtures", "fixture catalog and acceptance runs");
  CommonOpts fix_opts;
  std::string fix_action = "list";
  fix_cmd->add_option("action", fix_action, "list | run-all");
  add_common(fix_cmd, fix_opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (sum_cmd->parsed()) {
      SummerConfig cfg = build_config(sum_opts);
      Series x = lang::lower_text(sum_expr);
      std::vector<SummationOutcome> outcomes;
      for (const auto& m : methods) outcomes.push_back(make_summer(m, cfg).run(x));
      return report("sum", {{"expr", sum_expr}, {"methods", methods}}, outcomes, sum_opts.as_json);
    }
    if (tel_cmd->parsed()) {
      SummerConfig cfg = build_config(tel_opts);
      Series x = lang::lower_text(tel_expr);
      SummationOutcome o =
          telescope_sum(x, make_summer(tel_base, cfg), cfg, parse_codomain(tel_codomain));
      return report("telescope",
                    {{"expr", tel_expr}, {"base", tel_base}, {"codomain", tel_codomain}}, {o},
                    tel_opts.as_json);
    }
    if (mult_cmd->parsed()) {
      SummerConfig cfg = build_config(mult_opts);
      ProductExpression expr = product_expression_of(lang::parse(mult_expr));
      SummationOutcome o = mult_extension_sum(expr, make_summer(mult_base, cfg), cfg);
      return report("mult", {{"expr", mult_expr}, {"base", mult_base}}, {o}, mult_opts.as_json);
    }
    if (rat_cmd->parsed()) {
      SummerConfig cfg = build_config(rat_opts);
      Series x = lang::lower_text(rat_expr);
      Summer base = make_summer(rat_base, cfg);
      SummationOutcome o = [&]() {
        if (!rat_num.empty() && !rat_den.empty())
          return rational_extension_sum(x, lang::lower_text(rat_num), lang::lower_text(rat_den),
                                        base, cfg);
        // Fixture-provided decomposition hints, else the closed form.
        lang::ExprPtr parsed = lang::parse(rat_expr);
        if (parsed->kind == lang::Expr::Fixture) {
          std::string bare = parsed->name.substr(0, parsed->name.find('('));
          if (const FixtureEntry* e = find_fixture(bare); e && e->ratio_hint) {
            return rational_extension_sum(x, lang::lower_text(e->ratio_hint->first),
                                          lang::lower_text(e->ratio_hint->second), base, cfg);
          }
        }
        return rational_extension_sum(x, base, cfg);
      }();
      return report("rational", {{"expr", rat_expr}, {"base", rat_base}}, {o}, rat_opts.as_json);
    }
    if (nor_cmd->parsed()) {
      SummerConfig cfg = build_config(nor_opts);
      SummationOutcome o =
          norlund_mean(lang::lower_text(nor_expr), lang::lower_text(nor_weights), nor_lambda, cfg);
      return report("norlund", {{"expr", nor_expr}, {"weights", nor_weights}}, {o},
                    nor_opts.as_json);
    }
    if (cmp_cmd->parsed()) {
      SummerConfig cfg = build_config(cmp_opts);
      std::vector<Summer> summers;
      for (const auto& m : cmp_methods) summers.push_back(make_summer(m, cfg));
      std::vector<std::pair<std::string, Series>> corpus;
      for (const auto& f : cmp_fixtures) {
        std::string bare = f.substr(0, f.find('('));
        bool is_fixture = find_fixture(bare) != nullptr;
        corpus.emplace_back(f, lang::lower_text(is_fixture ? "fixture(" + f + ")" : f));
      }
      ConsistencyReport rep = consistency_report(summers, corpus, cfg);
      if (cmp_opts.as_json)
        std::cout << rep.data.dump(2) << "\n";
      else
        std::cout << rep.text;
      return 0;
    }
    if (coe_cmd->parsed()) {
      Series x = lang::lower_text(coe_expr);
      if (coe_opts.as_json) {
        json j{{"schema", kReportSchema}, {"command", "coeffs"}, {"expr", coe_expr}};
        j["coefficients"] = json::array();
        for (long n = 0; n < coe_n; ++n) j["coefficients"].push_back(x.coefficient(n).to_string());
        std::cout << j.dump(2) << "\n";
      } else {
        for (long n = 0; n < coe_n; ++n)
          std::cout << n << ": " << x.coefficient(n).to_string() << "\n";
      }
      return 0;
    }
    if (fix_cmd->parsed()) {
      if (fix_action == "list") {
        if (fix_opts.as_json) {
          json j = json::array();
          for (const auto& e : fixture_catalog())
            j.push_back({{"name", e.name}, {"arity", e.arity}, {"note", e.note},
                         {"expr", e.expr}});
          std::cout << j.dump(2) << "\n";
        } else {
          for (const auto& e : fixture_catalog()) {
            std::cout << e.name;
            if (e.arity > 0) std::cout << "(" << e.arity << " args)";
            std::cout << " -- " << e.note << "\n";
          }
        }
        return 0;
      }
      if (fix_action == "run-all") {
        auto rows = accept::run_all();
        bool all = true;
        if (fix_opts.as_json) {
          json j = json::array();
          for (const auto& r : rows) {
            j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass},
                         {"seconds", r.seconds}, {"detail", r.detail}});
            all = all && r.pass;
          }
          std::cout << j.dump(2) << "\n";
        } else {
          for (const auto& r : rows) {
            std::cout << accept::format_row(r) << "\n";
            all = all && r.pass;
          }
        }
        return all ? 0 : 1;
      }
      std::cerr << "unknown fixtures action: " << fix_action << "\n";
      return 1;
    }
  } catch (const summa::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
