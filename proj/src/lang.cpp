#include "summa/lang.hpp"

#include <cctype>
#include <sstream>
#include <vector>

#include "summa/errors.hpp"
#include "summa/fixtures.hpp"
#include "summa/polynomial.hpp"

namespace summa::lang {

namespace {

struct Token {
  enum Kind { Num, Ident, Op, End } kind;
  std::string text;
  std::size_t pos;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }

  const Token& peek() const { return tok_; }
  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

  struct State {
    std::size_t i;
    Token tok;
  };
  State state() const { return {i_, tok_}; }
  void restore(const State& st) {
    i_ = st.i;
    tok_ = st.tok;
  }

 private:
  void advance() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    tok_.pos = i_;
    if (i_ >= s_.size()) {
      tok_ = {Token::End, "", i_};
      return;
    }
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i_;
      while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
      tok_ = {Token::Num, s_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i_;
      while (j < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[j])) || s_[j] == '_'))
        ++j;
      tok_ = {Token::Ident, s_.substr(i_, j - i_), i_};
      i_ = j;
      return;
    }
    tok_ = {Token::Op, std::string(1, c), i_};
    ++i_;
  }

  const std::string& s_;
  std::size_t i_ = 0;
  Token tok_;
};

ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }

ExprPtr literal(Rational r, std::size_t pos) {
  Expr e;
  e.kind = Expr::Literal;
  e.value = std::move(r);
  e.pos = pos;
  return make(std::move(e));
}

class Parser {
 public:
  explicit Parser(const std::string& s) : text_(s), lex_(s) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (lex_.peek().kind != Token::End) throw SyntaxError(lex_.peek().pos, "end of input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& expected) {
    throw SyntaxError(lex_.peek().pos, expected);
  }

  bool eat_op(const char* op) {
    if (lex_.peek().kind == Token::Op && lex_.peek().text == op) {
      lex_.take();
      return true;
    }
    return false;
  }

  void expect_op(const char* op) {
    if (!eat_op(op)) fail(std::string("'") + op + "'");
  }

  long integer() {
    bool neg = eat_op("-");
    if (lex_.peek().kind != Token::Num) fail("integer");
    Token t = lex_.take();
    long v = std::stol(t.text);
    return neg ? -v : v;
  }

  Rational rational_literal() {
    bool neg = eat_op("-");
    if (lex_.peek().kind != Token::Num) fail("rational");
    Token t = lex_.take();
    BigInt num(t.text);
    BigInt den{1};
    if (lex_.peek().kind == Token::Op && lex_.peek().text == "/") {
      lex_.take();
      if (lex_.peek().kind != Token::Num) fail("denominator");
      den = BigInt(lex_.take().text);
    }
    Rational r(num, den);
    return neg ? -r : r;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    while (true) {
      std::size_t pos = lex_.peek().pos;
      if (eat_op("+")) {
        Expr n;
        n.kind = Expr::Add;
        n.lhs = e;
        n.rhs = term();
        n.pos = pos;
        e = make(std::move(n));
      } else if (eat_op("-")) {
        Expr n;
        n.kind = Expr::Sub;
        n.lhs = e;
        n.rhs = term();
        n.pos = pos;
        e = make(std::move(n));
      } else {
        return e;
      }
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    while (true) {
      std::size_t pos = lex_.peek().pos;
      if (eat_op("*")) {
        Expr n;
        n.kind = Expr::Mul;
        n.lhs = e;
        n.rhs = factor();
        n.pos = pos;
        e = make(std::move(n));
      } else if (eat_op("/")) {
        Expr n;
        n.kind = Expr::Div;
        n.lhs = e;
        n.rhs = factor();
        n.pos = pos;
        e = make(std::move(n));
      } else {
        return e;
      }
    }
  }

  ExprPtr factor() {
    std::size_t pos = lex_.peek().pos;
    if (eat_op("-")) {
      ExprPtr inner = factor();
      if (inner->kind == Expr::Literal) return literal(-inner->value, pos);
      Expr n;
      n.kind = Expr::Mul;
      n.lhs = literal(Rational{-1}, pos);
      n.rhs = inner;
      n.pos = pos;
      return make(std::move(n));
    }
    ExprPtr base = atom();
    if (lex_.peek().kind == Token::Op && lex_.peek().text == "^") {
      lex_.take();
      Expr n;
      n.kind = Expr::IntPow;
      n.lhs = base;
      n.ipow = integer();
      n.pos = pos;
      return make(std::move(n));
    }
    return base;
  }

  ExprPtr atom() {
    const Token& t = lex_.peek();
    std::size_t pos = t.pos;
    if (t.kind == Token::Num) {
      // Greedy rational literal: "3/4" is one atom when followed by an integer.
      Token num = lex_.take();
      BigInt n(num.text);
      if (lex_.peek().kind == Token::Op && lex_.peek().text == "/") {
        // lookahead: only consume the '/' for a numeric denominator
        auto save = lex_.state();
        lex_.take();
        if (lex_.peek().kind == Token::Num) {
          BigInt d(lex_.take().text);
          return literal(Rational(n, d), pos);
        }
        lex_.restore(save);
      }
      return literal(Rational(n), pos);
    }
    if (t.kind == Token::Ident) {
      Token id = lex_.take();
      if (id.text == "s") {
        Expr e;
        e.kind = Expr::Sigma;
        e.pos = pos;
        return make(std::move(e));
      }
      if (id.text == "sqrt") {
        expect_op("(");
        Expr e;
        e.kind = Expr::Sqrt;
        e.lhs = expr();
        e.pos = pos;
        expect_op(")");
        return make(std::move(e));
      }
      if (id.text == "pow") {
        expect_op("(");
        Expr e;
        e.kind = Expr::Pow;
        e.lhs = expr();
        expect_op(",");
        e.value = rational_literal();
        e.pos = pos;
        expect_op(")");
        return make(std::move(e));
      }
      if (id.text == "geom") {
        expect_op("(");
        Expr e;
        e.kind = Expr::Geom;
        e.value = rational_literal();
        e.pos = pos;
        expect_op(")");
        return make(std::move(e));
      }
      if (id.text == "fixture") {
        expect_op("(");
        // Fixture names are raw text up to the matching ')'.
        std::string name;
        int depth = 1;
        while (true) {
          if (lex_.peek().kind == Token::End) fail("')'");
          Token tk = lex_.take();
          if (tk.kind == Token::Op && tk.text == "(") ++depth;
          if (tk.kind == Token::Op && tk.text == ")") {
            if (--depth == 0) break;
          }
          name += tk.text;
        }
        Expr e;
        e.kind = Expr::Fixture;
        e.name = name;
        e.pos = pos;
        return make(std::move(e));
      }
      fail("atom (unknown identifier '" + id.text + "')");
    }
    if (t.kind == Token::Op && t.text == "(") {
      lex_.take();
      ExprPtr e = expr();
      expect_op(")");
      return e;
    }
    fail("atom");
  }

  const std::string& text_;
  Lexer lex_;
};

int precedence(Expr::Kind k) {
  switch (k) {
    case Expr::Add:
    case Expr::Sub:
      return 1;
    case Expr::Mul:
    case Expr::Div:
      return 2;
    case Expr::IntPow:
      return 3;
    default:
      return 4;
  }
}

std::string print_node(const ExprPtr& e);

std::string wrap(const ExprPtr& e, int min_prec, bool first_operand) {
  std::string s = print_node(e);
  bool need = precedence(e->kind) < min_prec || (!first_operand && !s.empty() && s[0] == '-');
  return need ? "(" + s + ")" : s;
}

std::string print_node(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Literal:
      return e->value.to_string();
    case Expr::Sigma:
      return "s";
    case Expr::Add:
      return wrap(e->lhs, 1, true) + " + " + wrap(e->rhs, 2, false);
    case Expr::Sub:
      return wrap(e->lhs, 1, true) + " - " + wrap(e->rhs, 2, false);
    case Expr::Mul:
      return wrap(e->lhs, 2, true) + "*" + wrap(e->rhs, 3, false);
    case Expr::Div:
      return wrap(e->lhs, 2, true) + "/" + wrap(e->rhs, 3, false);
    case Expr::IntPow:
      return wrap(e->lhs, 4, false) + "^" + std::to_string(e->ipow);
    case Expr::Pow:
      return "pow(" + print_node(e->lhs) + ", " + e->value.to_string() + ")";
    case Expr::Sqrt:
      return "sqrt(" + print_node(e->lhs) + ")";
    case Expr::Geom:
      return "geom(" + e->value.to_string() + ")";
    case Expr::Fixture:
      return "fixture(" + e->name + ")";
  }
  return "?";
}

}  // namespace

ExprPtr parse(const std::string& text) { return Parser(text).parse(); }

std::string print(const ExprPtr& e) { return print_node(e); }

bool equal(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Expr::Literal:
    case Expr::Geom:
      return a->value == b->value;
    case Expr::Sigma:
      return true;
    case Expr::Fixture:
      return a->name == b->name;
    case Expr::IntPow:
      return a->ipow == b->ipow && equal(a->lhs, b->lhs);
    case Expr::Pow:
      return a->value == b->value && equal(a->lhs, b->lhs);
    case Expr::Sqrt:
      return equal(a->lhs, b->lhs);
    default:
      return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
  }
}

namespace {

Series invert(const Series& y) {
  if (const RationalFunction* rf = y.rational_form()) {
    if (rf->num().coeff(0).is_zero()) throw DenominatorVanishesAtZero();
    return expand_rational(rf->inverse());
  }
  return formal_inverse(y);
}

Series int_pow(const Series& x, long k) {
  if (k == 0) return constant_series(Rational{1});
  Series base = k < 0 ? invert(x) : x;
  long e = k < 0 ? -k : k;
  Series acc = base;
  for (long i = 1; i < e; ++i) acc = cauchy_product(acc, base);
  return acc;
}

}  // namespace

Series lower(const ExprPtr& e) {
  switch (e->kind) {
    case Expr::Literal:
      return constant_series(e->value);
    case Expr::Sigma:
      return polynomial_series(Polynomial::monomial(Rational{1}, 1));
    case Expr::Add:
      return linear_combine(Rational{1}, lower(e->lhs), Rational{1}, lower(e->rhs));
    case Expr::Sub:
      return linear_combine(Rational{1}, lower(e->lhs), Rational{-1}, lower(e->rhs));
    case Expr::Mul:
      return cauchy_product(lower(e->lhs), lower(e->rhs));
    case Expr::Div:
      return cauchy_product(lower(e->lhs), invert(lower(e->rhs)));
    case Expr::IntPow:
      return int_pow(lower(e->lhs), e->ipow);
    case Expr::Pow: {
      if (e->value.is_integer()) return int_pow(lower(e->lhs), e->value.num().to_long());
      return binomial_power(lower(e->lhs), e->value);
    }
    case Expr::Sqrt:
      return binomial_power(lower(e->lhs), Rational(1, 2));
    case Expr::Geom: {
      Polynomial den({Rational{1}, -e->value});
      return expand_rational(RationalFunction(Polynomial({Rational{1}}), den));
    }
    case Expr::Fixture:
      return fixture(e->name);
  }
  throw Error("unreachable expression kind");
}

Series lower_text(const std::string& text) { return lower(parse(text)); }

}  // namespace summa::lang
