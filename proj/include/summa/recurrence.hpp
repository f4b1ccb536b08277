#ifndef SUMMA_RECURRENCE_HPP
#define SUMMA_RECURRENCE_HPP

#include <optional>
#include <vector>

#include "summa/polynomial.hpp"
#include "summa/series.hpp"

namespace summa {

/// A fitted annihilator: F * X vanishes beyond `support_bound`, verified
/// exactly on indices (support_bound, verified_up_to].
struct RecurrenceFit {
  Polynomial annihilator;
  long support_bound = 0;
  long verified_up_to = 0;
};

/// Exact kernel of the homogeneous system rows * v = 0 (one kernel vector),
/// via fraction-free (Bareiss-style) elimination over Q. Returns nullopt when
/// the kernel is trivial.
std::optional<std::vector<Rational>> solve_kernel(const std::vector<std::vector<Rational>>& rows,
                                                  std::size_t cols);

/// Minimal-degree F (deg F <= max_degree, F != 0) with (F*X)_n = 0 for all
/// n in (deg F, scan]; requires scan >= 2*max_degree + guard.
std::optional<RecurrenceFit> fit_linear_recurrence(const Series& x, long max_degree, long scan,
                                                   long guard = 8);

/// Pade-style reconstruction: reduced P/Q with deg <= max_degree and
/// Q * X = P verified exactly on 0..scan.
std::optional<RationalFunction> rational_reconstruct(const Series& x, long max_degree, long scan);

}  // namespace summa

#endif
