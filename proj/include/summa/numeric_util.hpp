#ifndef SUMMA_NUMERIC_UTIL_HPP
#define SUMMA_NUMERIC_UTIL_HPP

#include <cmath>
#include <deque>

#include "summa/approx_real.hpp"
#include "summa/bigint.hpp"

namespace summa {

/// num/den as a double, safe for operands far beyond double range.
inline double quotient_double(const BigInt& num, const BigInt& den) {
  if (num.is_zero()) return 0.0;
  auto [mn, en] = num.top_bits(52);
  auto [md, ed] = den.top_bits(52);
  double q = mn.to_double() / md.to_double();
  long shift = en - ed;
  if (shift > 1500) return q > 0 ? HUGE_VAL : -HUGE_VAL;
  if (shift < -1500) return 0.0;
  return std::ldexp(q, static_cast<int>(shift));
}

/// Sliding window of approximate values with spread/mean statistics, used by
/// the stabilization tests.
class StabWindow {
 public:
  explicit StabWindow(int cap) : cap_(cap < 1 ? 1 : cap) {}

  void push(ApproxReal v) {
    q_.push_back(std::move(v));
    if (static_cast<int>(q_.size()) > cap_) q_.pop_front();
  }

  bool full() const { return static_cast<int>(q_.size()) >= cap_; }
  int capacity() const { return cap_; }

  /// max |v_i - mean| over the window plus the worst value error.
  double spread() const {
    if (q_.empty()) return HUGE_VAL;
    double sum = 0.0, err = 0.0;
    for (const auto& v : q_) {
      sum += v.to_double();
      err = std::max(err, v.err());
    }
    double mean = sum / static_cast<double>(q_.size());
    double dev = 0.0;
    for (const auto& v : q_) dev = std::max(dev, std::fabs(v.to_double() - mean));
    return dev + err;
  }

  ApproxReal mean(int prec) const {
    ApproxReal acc(0, prec);
    for (const auto& v : q_) acc += v;
    return acc * ApproxReal::from_rational(Rational(1, static_cast<long>(q_.size())), prec);
  }

 private:
  std::deque<ApproxReal> q_;
  int cap_;
};

}  // namespace summa

#endif
