#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "entropic/rational.hpp"

namespace entropic {

using SparseVector = std::vector<std::pair<std::size_t, Rational>>;

enum class RowSense { kGreaterEqual, kLessEqual, kEqual };
enum class Direction { kMinimize, kMaximize };
enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* to_string(LpStatus status);

// Result of an exact LP solve. Every status carries a certificate that
// LinearProgram::verify checks by direct substitution.
//
// Multipliers refer to the minimization form: for Direction::kMaximize the
// solver minimizes -c, so `dual` certifies min(-c) = -optimum.
//
//   kOptimal:    `primal` attains `optimum`; `dual` y has y_i >= 0 on >= rows,
//                y_i <= 0 on <= rows, A^T y = c on free variables,
//                A^T y <= c on nonnegative variables, and b^T y = optimum.
//   kInfeasible: `dual` is a Farkas vector: same sign pattern, A^T y = 0 on free
//                variables, A^T y <= 0 on nonnegative variables, b^T y > 0.
//   kUnbounded:  `primal` is feasible and `ray` is a recession direction that
//                strictly decreases the (minimization) objective.
struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  Rational optimum;
  std::vector<Rational> primal;
  std::vector<Rational> dual;
  std::vector<Rational> ray;
  std::size_t pivots = 0;
};

// min / max c^T x  s.t.  a_i^T x (>=|<=|==) b_i,  x_j >= 0 for flagged j, other x_j free.
// Solved with a two-phase dense tableau simplex in exact rational arithmetic
// using Bland's rule, so termination is guaranteed.
class LinearProgram {
 public:
  explicit LinearProgram(std::size_t variables);

  std::size_t variable_count() const { return nonnegative_.size(); }
  std::size_t row_count() const { return rows_.size(); }

  void set_nonnegative(std::size_t variable, bool nonnegative = true);
  std::size_t add_row(SparseVector coefficients, RowSense sense, Rational rhs);
  void set_objective(SparseVector coefficients, Direction direction = Direction::kMinimize);

  LpSolution solve() const;
  // Checks the certificate carried by `solution` against this program.
  bool verify(const LpSolution& solution) const;

 private:
  struct Row {
    SparseVector coefficients;
    RowSense sense;
    Rational rhs;
  };
  std::vector<bool> nonnegative_;
  std::vector<Row> rows_;
  SparseVector objective_;
  Direction direction_ = Direction::kMinimize;

  std::vector<Rational> min_objective() const;
  Rational row_value(const Row& row, const std::vector<Rational>& x) const;
};

}  // namespace entropic
