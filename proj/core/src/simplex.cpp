#include "entropic/simplex.hpp"

#include <algorithm>
#include <optional>

#include "entropic/error.hpp"

namespace entropic {

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "?";
}

namespace {

// Standard form  min c^T z,  A z = b,  z >= 0,  b >= 0, with one artificial
// column per row appended after the structural columns.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t structural)
      : m_(rows),
        n_(structural),
        cells_(rows, std::vector<Rational>(structural + rows)),
        rhs_(rows),
        basis_(rows) {
    for (std::size_t i = 0; i < m_; ++i) {
      cells_[i][n_ + i] = 1;
      basis_[i] = n_ + i;
    }
  }

  Rational& at(std::size_t i, std::size_t j) { return cells_[i][j]; }
  Rational& rhs(std::size_t i) { return rhs_[i]; }
  std::size_t rows() const { return m_; }
  std::size_t structural() const { return n_; }
  std::size_t basic(std::size_t i) const { return basis_[i]; }
  bool is_artificial(std::size_t column) const { return column >= n_; }
  std::size_t pivots() const { return pivots_; }

  // y = c_B^T B^{-1}; B^{-1} sits in the artificial columns.
  std::vector<Rational> duals(const std::vector<Rational>& cost) const {
    std::vector<Rational> y(m_);
    for (std::size_t k = 0; k < m_; ++k) {
      const Rational& cb = cost[basis_[k]];
      if (cb == 0) continue;
      for (std::size_t i = 0; i < m_; ++i) {
        if (cells_[k][n_ + i] != 0) y[i] += cb * cells_[k][n_ + i];
      }
    }
    return y;
  }

  // Runs Bland's-rule simplex for `cost` (size n_ + m_). Artificial columns never
  // enter. Returns the unbounded entering column, or nullopt at optimality.
  std::optional<std::size_t> optimize(const std::vector<Rational>& cost) {
    const std::size_t width = n_ + m_;
    std::vector<Rational> reduced(width);
    for (std::size_t j = 0; j < width; ++j) reduced[j] = cost[j];
    for (std::size_t k = 0; k < m_; ++k) {
      const Rational& cb = cost[basis_[k]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < width; ++j) {
        if (cells_[k][j] != 0) reduced[j] -= cb * cells_[k][j];
      }
    }
    while (true) {
      std::size_t entering = width;
      for (std::size_t j = 0; j < n_; ++j) {
        if (sgn(reduced[j]) < 0) {
          entering = j;
          break;
        }
      }
      if (entering == width) return std::nullopt;

      std::size_t leaving = m_;
      Rational best_ratio;
      Rational ratio;
      for (std::size_t i = 0; i < m_; ++i) {
        if (sgn(cells_[i][entering]) <= 0) continue;
        ratio = rhs_[i] / cells_[i][entering];
        if (leaving == m_ || ratio < best_ratio ||
            (ratio == best_ratio && basis_[i] < basis_[leaving])) {
          leaving = i;
          best_ratio = ratio;
        }
      }
      if (leaving == m_) return entering;
      pivot(leaving, entering, &reduced);
    }
  }

  void pivot(std::size_t r, std::size_t q, std::vector<Rational>* reduced) {
    ++pivots_;
    const std::size_t width = n_ + m_;
    std::vector<Rational>& prow = cells_[r];
    const Rational inv = 1 / prow[q];
    std::vector<std::size_t> nz;
    for (std::size_t j = 0; j < width; ++j) {
      if (prow[j] != 0) {
        prow[j] *= inv;
        nz.push_back(j);
      }
    }
    rhs_[r] *= inv;
    Rational factor;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == r || cells_[i][q] == 0) continue;
      factor = cells_[i][q];
      std::vector<Rational>& row = cells_[i];
      for (std::size_t j : nz) row[j] -= factor * prow[j];
      rhs_[i] -= factor * rhs_[r];
    }
    if (reduced != nullptr && (*reduced)[q] != 0) {
      factor = (*reduced)[q];
      for (std::size_t j : nz) (*reduced)[j] -= factor * prow[j];
    }
    basis_[r] = q;
  }

  // After phase 1: move artificial basics out of the basis where possible.
  void drive_out_artificials() {
    for (std::size_t i = 0; i < m_; ++i) {
      if (!is_artificial(basis_[i])) continue;
      for (std::size_t j = 0; j < n_; ++j) {
        if (cells_[i][j] != 0) {
          pivot(i, j, nullptr);
          break;
        }
      }
    }
  }

 private:
  std::size_t m_;
  std::size_t n_;
  std::vector<std::vector<Rational>> cells_;
  std::vector<Rational> rhs_;
  std::vector<std::size_t> basis_;
  std::size_t pivots_ = 0;
};

}  // namespace

LinearProgram::LinearProgram(std::size_t variables) : nonnegative_(variables, false) {}

void LinearProgram::set_nonnegative(std::size_t variable, bool nonnegative) {
  if (variable >= nonnegative_.size()) throw DomainError("LP variable index out of range");
  nonnegative_[variable] = nonnegative;
}

std::size_t LinearProgram::add_row(SparseVector coefficients, RowSense sense, Rational rhs) {
  for (const auto& [j, v] : coefficients) {
    if (j >= nonnegative_.size()) throw DomainError("LP row mentions unknown variable");
  }
  rows_.push_back({std::move(coefficients), sense, std::move(rhs)});
  return rows_.size() - 1;
}

void LinearProgram::set_objective(SparseVector coefficients, Direction direction) {
  for (const auto& [j, v] : coefficients) {
    if (j >= nonnegative_.size()) throw DomainError("LP objective mentions unknown variable");
  }
  objective_ = std::move(coefficients);
  direction_ = direction;
}

std::vector<Rational> LinearProgram::min_objective() const {
  std::vector<Rational> c(nonnegative_.size());
  for (const auto& [j, v] : objective_) c[j] += v;
  if (direction_ == Direction::kMaximize) {
    for (auto& v : c) v = -v;
  }
  return c;
}

Rational LinearProgram::row_value(const Row& row, const std::vector<Rational>& x) const {
  Rational total;
  for (const auto& [j, v] : row.coefficients) total += v * x[j];
  return total;
}

LpSolution LinearProgram::solve() const {
  const std::size_t nvars = nonnegative_.size();
  const std::size_t m = rows_.size();
  const std::vector<Rational> c = min_objective();

  // Column layout: for each variable a "+" column, plus a "-" column when free;
  // then one slack column per inequality row.
  std::vector<std::size_t> plus_col(nvars), minus_col(nvars, SIZE_MAX);
  std::size_t ncols = 0;
  for (std::size_t j = 0; j < nvars; ++j) {
    plus_col[j] = ncols++;
    if (!nonnegative_[j]) minus_col[j] = ncols++;
  }
  std::vector<std::size_t> slack_col(m, SIZE_MAX);
  for (std::size_t i = 0; i < m; ++i) {
    if (rows_[i].sense != RowSense::kEqual) slack_col[i] = ncols++;
  }

  Tableau t(m, ncols);
  std::vector<int> flip(m, 1);
  for (std::size_t i = 0; i < m; ++i) {
    const Row& row = rows_[i];
    flip[i] = sgn(row.rhs) < 0 ? -1 : 1;
    for (const auto& [j, v] : row.coefficients) {
      t.at(i, plus_col[j]) += flip[i] * v;
      if (minus_col[j] != SIZE_MAX) t.at(i, minus_col[j]) -= flip[i] * v;
    }
    if (row.sense == RowSense::kGreaterEqual) t.at(i, slack_col[i]) = -flip[i];
    if (row.sense == RowSense::kLessEqual) t.at(i, slack_col[i]) = flip[i];
    t.rhs(i) = flip[i] * row.rhs;
  }

  LpSolution out;

  // Phase 1: minimize the sum of artificials.
  std::vector<Rational> phase1(ncols + m);
  for (std::size_t i = 0; i < m; ++i) phase1[ncols + i] = 1;
  t.optimize(phase1);
  Rational infeasibility;
  for (std::size_t i = 0; i < m; ++i) {
    if (t.is_artificial(t.basic(i))) infeasibility += t.rhs(i);
  }
  if (sgn(infeasibility) > 0) {
    std::vector<Rational> y = t.duals(phase1);
    out.status = LpStatus::kInfeasible;
    out.dual.resize(m);
    for (std::size_t i = 0; i < m; ++i) out.dual[i] = flip[i] * y[i];
    out.pivots = t.pivots();
    return out;
  }
  t.drive_out_artificials();

  // Phase 2.
  std::vector<Rational> cost(ncols + m);
  for (std::size_t j = 0; j < nvars; ++j) {
    cost[plus_col[j]] = c[j];
    if (minus_col[j] != SIZE_MAX) cost[minus_col[j]] = -c[j];
  }
  std::optional<std::size_t> unbounded = t.optimize(cost);

  std::vector<Rational> z(ncols + m);
  for (std::size_t i = 0; i < m; ++i) z[t.basic(i)] = t.rhs(i);
  auto to_x = [&](const std::vector<Rational>& zz) {
    std::vector<Rational> x(nvars);
    for (std::size_t j = 0; j < nvars; ++j) {
      x[j] = zz[plus_col[j]];
      if (minus_col[j] != SIZE_MAX) x[j] -= zz[minus_col[j]];
    }
    return x;
  };
  out.primal = to_x(z);
  out.pivots = t.pivots();

  if (unbounded) {
    std::vector<Rational> d(ncols + m);
    d[*unbounded] = 1;
    for (std::size_t i = 0; i < m; ++i) d[t.basic(i)] = -t.at(i, *unbounded);
    out.status = LpStatus::kUnbounded;
    out.ray = to_x(d);
    return out;
  }

  std::vector<Rational> y = t.duals(cost);
  out.status = LpStatus::kOptimal;
  out.dual.resize(m);
  for (std::size_t i = 0; i < m; ++i) out.dual[i] = flip[i] * y[i];
  for (std::size_t j = 0; j < nvars; ++j) out.optimum += c[j] * out.primal[j];
  if (direction_ == Direction::kMaximize) out.optimum = -out.optimum;
  return out;
}

bool LinearProgram::verify(const LpSolution& s) const {
  const std::size_t nvars = nonnegative_.size();
  const std::size_t m = rows_.size();
  const std::vector<Rational> c = min_objective();

  auto primal_feasible = [&](const std::vector<Rational>& x) {
    if (x.size() != nvars) return false;
    for (std::size_t j = 0; j < nvars; ++j) {
      if (nonnegative_[j] && sgn(x[j]) < 0) return false;
    }
    for (const Row& row : rows_) {
      const int cmp_rhs = cmp(row_value(row, x), row.rhs);
      if (row.sense == RowSense::kGreaterEqual && cmp_rhs < 0) return false;
      if (row.sense == RowSense::kLessEqual && cmp_rhs > 0) return false;
      if (row.sense == RowSense::kEqual && cmp_rhs != 0) return false;
    }
    return true;
  };
  auto sign_ok = [&](const std::vector<Rational>& y) {
    if (y.size() != m) return false;
    for (std::size_t i = 0; i < m; ++i) {
      if (rows_[i].sense == RowSense::kGreaterEqual && sgn(y[i]) < 0) return false;
      if (rows_[i].sense == RowSense::kLessEqual && sgn(y[i]) > 0) return false;
    }
    return true;
  };
  auto transpose_times = [&](const std::vector<Rational>& y) {
    std::vector<Rational> aty(nvars);
    for (std::size_t i = 0; i < m; ++i) {
      if (y[i] == 0) continue;
      for (const auto& [j, v] : rows_[i].coefficients) aty[j] += v * y[i];
    }
    return aty;
  };
  auto b_dot = [&](const std::vector<Rational>& y) {
    Rational total;
    for (std::size_t i = 0; i < m; ++i) total += rows_[i].rhs * y[i];
    return total;
  };

  switch (s.status) {
    case LpStatus::kOptimal: {
      if (!primal_feasible(s.primal) || !sign_ok(s.dual)) return false;
      Rational value;
      for (std::size_t j = 0; j < nvars; ++j) value += c[j] * s.primal[j];
      const std::vector<Rational> aty = transpose_times(s.dual);
      for (std::size_t j = 0; j < nvars; ++j) {
        if (nonnegative_[j] ? aty[j] > c[j] : aty[j] != c[j]) return false;
      }
      const Rational reported = direction_ == Direction::kMaximize ? -s.optimum : s.optimum;
      return value == reported && b_dot(s.dual) == reported;
    }
    case LpStatus::kInfeasible: {
      if (!sign_ok(s.dual)) return false;
      const std::vector<Rational> aty = transpose_times(s.dual);
      for (std::size_t j = 0; j < nvars; ++j) {
        if (nonnegative_[j] ? sgn(aty[j]) > 0 : sgn(aty[j]) != 0) return false;
      }
      return sgn(b_dot(s.dual)) > 0;
    }
    case LpStatus::kUnbounded: {
      if (!primal_feasible(s.primal) || s.ray.size() != nvars) return false;
      for (std::size_t j = 0; j < nvars; ++j) {
        if (nonnegative_[j] && sgn(s.ray[j]) < 0) return false;
      }
      for (const Row& row : rows_) {
        const int sign = sgn(row_value(row, s.ray));
        if (row.sense == RowSense::kGreaterEqual && sign < 0) return false;
        if (row.sense == RowSense::kLessEqual && sign > 0) return false;
        if (row.sense == RowSense::kEqual && sign != 0) return false;
      }
      Rational slope;
      for (std::size_t j = 0; j < nvars; ++j) slope += c[j] * s.ray[j];
      return sgn(slope) < 0;
    }
  }
  return false;
}

}  // namespace entropic
