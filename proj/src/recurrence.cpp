#include "summa/recurrence.hpp"

#include <algorithm>

#include "summa/errors.hpp"

namespace summa {

std::optional<std::vector<Rational>> solve_kernel(const std::vector<std::vector<Rational>>& rows,
                                                  std::size_t cols) {
  // Clear denominators row by row, then run fraction-free (Bareiss) elimination.
  std::vector<std::vector<BigInt>> m;
  m.reserve(rows.size());
  for (const auto& row : rows) {
    BigInt lcm{1};
    for (const auto& x : row) lcm = BigInt::lcm(lcm, x.den());
    std::vector<BigInt> r;
    r.reserve(cols);
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational& x = row[j];
      r.push_back(x.num() * BigInt::divexact(lcm, x.den()));
    }
    m.push_back(std::move(r));
  }

  std::size_t nrows = m.size();
  std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
  std::vector<bool> is_pivot_col(cols, false);
  BigInt prev{1};
  std::size_t prow = 0;
  for (std::size_t c = 0; c < cols && prow < nrows; ++c) {
    std::size_t sel = prow;
    while (sel < nrows && m[sel][c].is_zero()) ++sel;
    if (sel == nrows) continue;
    std::swap(m[sel], m[prow]);
    for (std::size_t i = prow + 1; i < nrows; ++i) {
      // Every lower row is rescaled, zero pivot entry or not, to keep the
      // fraction-free divisions exact.
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = BigInt::divexact(m[prow][c] * m[i][j] - m[i][c] * m[prow][j], prev);
      m[i][c] = BigInt{0};
    }
    prev = m[prow][c];
    pivots.emplace_back(prow, c);
    is_pivot_col[c] = true;
    ++prow;
  }

  long free_col = -1;
  for (std::size_t c = cols; c-- > 0;) {
    if (!is_pivot_col[c]) {
      free_col = static_cast<long>(c);
      break;
    }
  }
  if (free_col < 0) return std::nullopt;

  std::vector<Rational> v(cols, Rational{0});
  v[static_cast<std::size_t>(free_col)] = Rational{1};
  for (std::size_t k = pivots.size(); k-- > 0;) {
    auto [r, c] = pivots[k];
    Rational acc{0};
    for (std::size_t j = c + 1; j < cols; ++j) {
      if (m[r][j].is_zero() || v[j].is_zero()) continue;
      acc += Rational(m[r][j]) * v[j];
    }
    v[c] = -acc / Rational(m[r][c]);
  }
  return v;
}

namespace {

// Direct check that (F*X)_n == 0 for n in (lo, hi].
bool annihilates(const Polynomial& f, const Series& x, long lo, long hi) {
  for (long n = lo + 1; n <= hi; ++n) {
    Rational acc{0};
    for (long i = 0; i <= std::min<long>(f.degree(), n); ++i)
      acc += f.coeff(i) * x.coefficient(n - i);
    if (!acc.is_zero()) return false;
  }
  return true;
}

Polynomial normalize_annihilator(const Polynomial& f) {
  Rational f0 = f.coeff(0);
  if (!f0.is_zero()) return f.scaled(f0.inverse());
  return f.monic();
}

}  // namespace

std::optional<RecurrenceFit> fit_linear_recurrence(const Series& x, long max_degree, long scan,
                                                   long guard) {
  long d_cap = std::min(max_degree, (scan - guard) / 2);
  for (long d = 1; d <= d_cap; ++d) {
    std::vector<std::vector<Rational>> rows;
    for (long n = d + 1; n <= scan; ++n) {
      std::vector<Rational> row;
      row.reserve(static_cast<std::size_t>(d + 1));
      for (long i = 0; i <= d; ++i) row.push_back(x.coefficient(n - i));
      rows.push_back(std::move(row));
    }
    auto kernel = solve_kernel(rows, static_cast<std::size_t>(d + 1));
    if (!kernel) continue;
    Polynomial f(std::vector<Rational>(kernel->begin(), kernel->end()));
    if (f.is_zero()) continue;
    f = normalize_annihilator(f);
    if (!annihilates(f, x, d, scan)) continue;  // guards the elimination itself
    long support = -1;
    for (long n = 0; n <= d; ++n) {
      Rational acc{0};
      for (long i = 0; i <= std::min<long>(f.degree(), n); ++i)
        acc += f.coeff(i) * x.coefficient(n - i);
      if (!acc.is_zero()) support = n;
    }
    RecurrenceFit fit;
    fit.annihilator = f;
    fit.support_bound = std::max<long>(support, 0);
    fit.verified_up_to = scan;
    return fit;
  }
  return std::nullopt;
}

std::optional<RationalFunction> rational_reconstruct(const Series& x, long max_degree, long scan) {
  for (long d = 0; d <= max_degree; ++d) {
    if (scan < 2 * d + 2) break;
    std::vector<std::vector<Rational>> rows;
    for (long n = d + 1; n <= scan; ++n) {
      std::vector<Rational> row;
      row.reserve(static_cast<std::size_t>(d + 1));
      for (long i = 0; i <= d; ++i)
        row.push_back(n - i >= 0 ? x.coefficient(n - i) : Rational{0});
      rows.push_back(std::move(row));
    }
    auto kernel = solve_kernel(rows, static_cast<std::size_t>(d + 1));
    if (!kernel) continue;
    Polynomial q(std::vector<Rational>(kernel->begin(), kernel->end()));
    if (q.is_zero() || q.coeff(0).is_zero()) continue;
    // P = (Q * X) truncated to degree d; the kernel guarantees zero beyond d.
    std::vector<Rational> pc(static_cast<std::size_t>(d + 1), Rational{0});
    for (long n = 0; n <= d; ++n)
      for (long i = 0; i <= std::min<long>(q.degree(), n); ++i)
        pc[static_cast<std::size_t>(n)] += q.coeff(i) * x.coefficient(n - i);
    Polynomial p(std::move(pc));
    RationalFunction r(p, q);
    // Re-verify Q*X = P on the whole scanned range.
    bool ok = true;
    for (long n = 0; n <= scan && ok; ++n) {
      Rational acc{0};
      for (long i = 0; i <= std::min<long>(r.den().degree(), n); ++i)
        acc += r.den().coeff(i) * x.coefficient(n - i);
      if (acc != r.num().coeff(n)) ok = false;
    }
    if (!ok) continue;
    return r;
  }
  return std::nullopt;
}

}  // namespace summa
