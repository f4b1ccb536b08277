#ifndef SUMMA_LANG_HPP
#define SUMMA_LANG_HPP

#include <memory>
#include <string>

#include "summa/rational.hpp"
#include "summa/series.hpp"

namespace summa::lang {

/// Abstract syntax for the series expression language.
struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum Kind { Literal, Sigma, Add, Sub, Mul, Div, IntPow, Pow, Sqrt, Geom, Fixture };
  Kind kind;
  Rational value;    // Literal value, Pow exponent, Geom ratio
  long ipow = 0;     // IntPow exponent
  std::string name;  // Fixture name (possibly with arguments)
  ExprPtr lhs, rhs;
  std::size_t pos = 0;  // source position for diagnostics
};

ExprPtr parse(const std::string& text);
std::string print(const ExprPtr& e);
bool equal(const ExprPtr& a, const ExprPtr& b);

/// Lower an AST to a Series; rational closed forms are tagged structurally.
Series lower(const ExprPtr& e);
Series lower_text(const std::string& text);

}  // namespace summa::lang

#endif
