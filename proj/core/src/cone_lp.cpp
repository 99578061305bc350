#include "entropic/polyhedra.hpp"

#include "entropic/error.hpp"

namespace entropic {

Objective to_objective(const LinearInequality& row) {
  Objective out;
  for (const auto& [s, c] : row.terms()) out[s] = Rational(c);
  return out;
}

ConeLpResult lp_solve(const Objective& objective, const InequalitySystem& constraints,
                      Direction direction) {
  const auto& coords = constraints.coordinates();
  const auto& rows = constraints.rows();
  for (const auto& [s, c] : objective) {
    if (c != 0 && !constraints.has_coordinate(s)) {
      throw DomainError("objective mentions " + debug_string(s) + ", which is not a coordinate");
    }
  }

  // Dual feasibility: find y (y_i >= 0 on inequality rows) with
  // sum_i y_i a_i = c, where c is the objective of the minimization form.
  std::vector<SparseVector> columns(coords.size());
  LinearProgram lp(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_equality()) lp.set_nonnegative(i);
    for (const auto& [s, c] : rows[i].terms()) {
      columns[static_cast<std::size_t>(constraints.coordinate_index(s))].emplace_back(i, Rational(c));
    }
  }
  for (std::size_t k = 0; k < coords.size(); ++k) {
    Rational target;
    if (auto it = objective.find(coords[k]); it != objective.end()) target = it->second;
    if (direction == Direction::kMaximize) target = -target;
    lp.add_row(std::move(columns[k]), RowSense::kEqual, target);
  }
  const LpSolution dual = lp.solve();

  ConeLpResult out;
  if (dual.status == LpStatus::kOptimal) {
    out.status = LpStatus::kOptimal;
    out.optimum = 0;
    out.multipliers = dual.primal;
    return out;
  }
  // Farkas vector u over coordinates: a_i . u <= 0 on inequality rows, = 0 on
  // equality rows, c . u > 0. The ray is -u, scaled to coprime integers.
  out.status = LpStatus::kUnbounded;
  Integer common_den = 1;
  for (const auto& u : dual.dual) {
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), u.get_den().get_mpz_t());
  }
  Integer g = 0;
  std::vector<Integer> scaled;
  for (const auto& u : dual.dual) {
    Integer v = -u.get_num() * (common_den / u.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    scaled.push_back(std::move(v));
  }
  for (std::size_t k = 0; k < coords.size(); ++k) {
    if (scaled[k] != 0) out.ray[coords[k]] = Rational(scaled[k] / g);
  }
  return out;
}

bool is_implied(const LinearInequality& row, const InequalitySystem& constraints) {
  if (row.is_equality()) {
    return lp_solve(to_objective(row), constraints).status == LpStatus::kOptimal &&
           lp_solve(to_objective(row.negated()), constraints).status == LpStatus::kOptimal;
  }
  return lp_solve(to_objective(row), constraints).status == LpStatus::kOptimal;
}

std::optional<Derivation> derive(const LinearInequality& row,
                                 const InequalitySystem& constraints) {
  ConeLpResult r = lp_solve(to_objective(row), constraints);
  if (r.status != LpStatus::kOptimal) return std::nullopt;
  Derivation d;
  for (std::size_t i = 0; i < r.multipliers.size(); ++i) {
    if (r.multipliers[i] != 0) d.multipliers.emplace_back(i, r.multipliers[i]);
  }
  return d;
}

std::optional<Objective> recombine(const Derivation& derivation,
                                   const InequalitySystem& constraints) {
  Objective total;
  for (const auto& [i, m] : derivation.multipliers) {
    if (i >= constraints.size()) return std::nullopt;
    const LinearInequality& row = constraints.rows()[i];
    if (!row.is_equality() && sgn(m) < 0) return std::nullopt;
    for (const auto& [s, c] : row.terms()) total[s] += m * c;
  }
  std::erase_if(total, [](const auto& kv) { return kv.second == 0; });
  return total;
}

bool satisfies(const InequalitySystem& system, const std::function<Rational(Subset)>& point) {
  for (const auto& row : system.rows()) {
    const Rational v = row.evaluate<Rational>(point);
    if (row.is_equality() ? v != 0 : sgn(v) < 0) return false;
  }
  return true;
}

}  // namespace entropic
