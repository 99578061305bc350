#include "implication_filter.hpp"

#include <cmath>
#include <cstddef>

#include "entropic/rational.hpp"

namespace entropic::detail {

namespace {

constexpr double kEps = 1e-9;

// Exact check: solve sum_j y_j col_j = target over the chosen columns and test
// the signs. Free columns (from equality rows) may take any sign.
bool exact_combination(const std::vector<std::int64_t>& target,
                       const std::vector<const std::vector<std::int64_t>*>& cols,
                       const std::vector<char>& free_sign) {
  const std::size_t d = target.size();
  const std::size_t k = cols.size();
  std::vector<std::vector<Rational>> m(d, std::vector<Rational>(k + 1));
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < k; ++c) m[r][c] = Rational((*cols[c])[r]);
    m[r][k] = Rational(target[r]);
  }
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < d; ++c) {
    std::size_t p = row;
    while (p < d && m[p][c] == 0) ++p;
    if (p == d) continue;
    std::swap(m[p], m[row]);
    const Rational inv = 1 / m[row][c];
    for (std::size_t j = c; j <= k; ++j) m[row][j] *= inv;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == row || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t j = c; j <= k; ++j) m[r][j] -= f * m[row][j];
    }
    pivot_col.push_back(c);
    ++row;
  }
  for (std::size_t r = row; r < d; ++r) {
    if (m[r][k] != 0) return false;
  }
  // Non-pivot columns are set to zero.
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    if (!free_sign[pivot_col[r]] && sgn(m[r][k]) < 0) return false;
  }
  return true;
}

}  // namespace

bool certified_implied(const std::vector<std::int64_t>& target,
                       const std::vector<const std::vector<std::int64_t>*>& rows,
                       const std::vector<char>& equality) {
  const std::size_t d = target.size();
  // Columns: each row once (equalities twice, with both signs), then d artificials.
  std::vector<std::size_t> source;
  std::vector<double> sign;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    source.push_back(i);
    sign.push_back(1.0);
    if (equality[i]) {
      source.push_back(i);
      sign.push_back(-1.0);
    }
  }
  const std::size_t n = source.size();
  const std::size_t width = n + d + 1;  // last column is the right-hand side
  std::vector<double> t(d * width, 0.0);
  auto at = [&](std::size_t r, std::size_t c) -> double& { return t[r * width + c]; };
  for (std::size_t r = 0; r < d; ++r) {
    const double flip = target[r] < 0 ? -1.0 : 1.0;
    for (std::size_t c = 0; c < n; ++c) {
      at(r, c) = flip * sign[c] * static_cast<double>((*rows[source[c]])[r]);
    }
    at(r, n + r) = 1.0;
    at(r, width - 1) = flip * static_cast<double>(target[r]);
  }
  std::vector<std::size_t> basis(d);
  for (std::size_t r = 0; r < d; ++r) basis[r] = n + r;

  // Phase 1: minimize the sum of artificials; reduced costs of the originals
  // are minus their column sums over rows with an artificial basis.
  std::vector<double> cost(width, 0.0);
  for (std::size_t r = 0; r < d; ++r) {
    for (std::size_t c = 0; c < width; ++c) {
      if (c < n || c == width - 1) cost[c] -= at(r, c);
    }
  }
  const std::size_t max_iter = 50 * (d + 1) + n;
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    std::size_t enter = width;
    double best = -kEps;
    for (std::size_t c = 0; c < n + d; ++c) {
      if (cost[c] < best) {
        best = cost[c];
        enter = c;
      }
    }
    if (enter == width) break;
    std::size_t leave = d;
    double ratio = 0;
    for (std::size_t r = 0; r < d; ++r) {
      const double a = at(r, enter);
      if (a > kEps) {
        const double q = at(r, width - 1) / a;
        if (leave == d || q < ratio - kEps || (q < ratio + kEps && basis[r] < basis[leave])) {
          leave = r;
          ratio = q;
        }
      }
    }
    if (leave == d) return false;  // cannot happen in phase 1; be conservative
    const double p = at(leave, enter);
    for (std::size_t c = 0; c < width; ++c) at(leave, c) /= p;
    for (std::size_t r = 0; r < d; ++r) {
      if (r == leave) continue;
      const double f = at(r, enter);
      if (f == 0.0) continue;
      for (std::size_t c = 0; c < width; ++c) at(r, c) -= f * at(leave, c);
    }
    const double f = cost[enter];
    for (std::size_t c = 0; c < width; ++c) cost[c] -= f * at(leave, c);
    basis[leave] = enter;
  }
  if (-cost[width - 1] > 1e-7) return false;

  std::vector<const std::vector<std::int64_t>*> cols;
  std::vector<char> free_sign;
  std::vector<char> used(rows.size(), 0);
  for (std::size_t r = 0; r < d; ++r) {
    if (basis[r] >= n) continue;
    const std::size_t i = source[basis[r]];
    if (used[i]) continue;
    used[i] = 1;
    cols.push_back(rows[i]);
    free_sign.push_back(equality[i]);
  }
  return exact_combination(target, cols, free_sign);
}

}  // namespace entropic::detail
