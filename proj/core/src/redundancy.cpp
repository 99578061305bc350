#include "entropic/polyhedra.hpp"

#include <algorithm>

#include "entropic/parallel.hpp"

namespace entropic {

namespace {

InequalitySystem without_row(const InequalitySystem& system, std::size_t skip,
                             const std::vector<char>* removed = nullptr) {
  InequalitySystem out(system.n(), system.coordinates());
  for (std::size_t i = 0; i < system.size(); ++i) {
    if (i == skip || (removed != nullptr && (*removed)[i])) continue;
    out.add(system.rows()[i]);
  }
  return out;
}

InequalitySystem pairwise(const InequalitySystem& system) {
  // Rows are already normalized and unique; additionally drop inequalities that
  // are one direction of an equality present in the system.
  InequalitySystem out(system.n(), system.coordinates());
  for (const auto& row : system.rows()) {
    if (!row.is_equality()) {
      LinearInequality as_eq(to_objective(row), Sense::kEqual);
      if (system.contains(as_eq)) continue;
    }
    out.add(row);
  }
  return out;
}

}  // namespace

InequalitySystem remove_redundant(const InequalitySystem& system, Redundancy policy,
                                  int threads) {
  if (policy == Redundancy::kNone) return system;
  InequalitySystem base = pairwise(system);
  if (policy == Redundancy::kPairwise) return base;

  const std::size_t m = base.size();
  // Rows that survive against all others are facets of every subsystem too.
  std::vector<char> implied(m, 0);
  parallel_for(m, threads, [&](std::size_t i) {
    implied[i] = is_implied(base.rows()[i], without_row(base, i)) ? 1 : 0;
  });

  std::vector<char> removed(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    if (!implied[i]) continue;
    if (is_implied(base.rows()[i], without_row(base, i, &removed))) removed[i] = 1;
  }
  InequalitySystem out(base.n(), base.coordinates());
  for (std::size_t i = 0; i < m; ++i) {
    if (!removed[i]) out.add(base.rows()[i]);
  }
  return out;
}

std::optional<std::map<Subset, Rational, CanonicalLess>> irredundancy_witness(
    const InequalitySystem& system, std::size_t row) {
  const InequalitySystem others = without_row(system, row);
  const LinearInequality& target = system.rows().at(row);
  ConeLpResult r = lp_solve(to_objective(target), others, Direction::kMinimize);
  if (r.status == LpStatus::kUnbounded) return r.ray;
  if (target.is_equality()) {
    r = lp_solve(to_objective(target), others, Direction::kMaximize);
    if (r.status == LpStatus::kUnbounded) return r.ray;
  }
  return std::nullopt;
}

}  // namespace entropic
