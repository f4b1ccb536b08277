#ifndef SUMMA_ERRORS_HPP
#define SUMMA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace summa {

/// Base class for all errors raised by the engine.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

class NotPrime : public Error {
 public:
  explicit NotPrime(long long p) : Error("not a prime: " + std::to_string(p)) {}
};

class BudgetExceeded : public Error {
 public:
  explicit BudgetExceeded(const std::string& what) : Error("budget exceeded: " + what) {}
};

class DenominatorVanishesAtZero : public Error {
 public:
  DenominatorVanishesAtZero() : Error("denominator vanishes at sigma = 0") {}
};

class ConstantTermNotOne : public Error {
 public:
  ConstantTermNotOne() : Error("base series must have constant term 1") {}
};

class NonMonotoneExponents : public Error {
 public:
  NonMonotoneExponents() : Error("gap series exponents must be strictly increasing") {}
};

class RecurrenceSingular : public Error {
 public:
  explicit RecurrenceSingular(long long n)
      : Error("leading recurrence coefficient vanishes at n = " + std::to_string(n)) {}
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t position, const std::string& expected)
      : Error("syntax error at position " + std::to_string(position) + ": expected " + expected),
        position_(position),
        expected_(expected) {}
  std::size_t position() const { return position_; }
  const std::string& expected() const { return expected_; }

 private:
  std::size_t position_;
  std::string expected_;
};

class UnknownFixture : public Error {
 public:
  explicit UnknownFixture(const std::string& name) : Error("unknown fixture: " + name) {}
};

class UnknownBase : public Error {
 public:
  explicit UnknownBase(const std::string& id) : Error("unknown base summer: " + id) {}
};

class NorlundDenominatorZero : public Error {
 public:
  explicit NorlundDenominatorZero(long long n)
      : Error("Norlund weight partial sum vanishes at n = " + std::to_string(n)) {}
};

class QuadratureFailure : public Error {
 public:
  explicit QuadratureFailure(const std::string& what) : Error("quadrature failure: " + what) {}
};

class NoClosedForm : public Error {
 public:
  NoClosedForm() : Error("input carries no rational closed form") {}
};

class NotRegularError : public Error {
 public:
  explicit NotRegularError(const std::string& value)
      : Error("denominator sum is not regular: " + value) {}
};

class DecompositionUnverified : public Error {
 public:
  explicit DecompositionUnverified(long long n)
      : Error("decomposition A = B*X fails at index " + std::to_string(n)) {}
};

}  // namespace summa

#endif
