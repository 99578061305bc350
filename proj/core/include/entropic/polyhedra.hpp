#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "entropic/inequality.hpp"
#include "entropic/simplex.hpp"

namespace entropic {

enum class Redundancy {
  kNone,
  // Drop duplicates and positive multiples of another row.
  kPairwise,
  // Drop every row implied by the remaining ones (LP-certified).
  kExact,
};

const char* to_string(Redundancy policy);
Redundancy parse_redundancy(std::string_view text);

// A row expressed as a combination of the rows of some input system.
// Multipliers on inequality rows are nonnegative; equality rows may carry any sign.
struct Derivation {
  std::vector<std::pair<std::size_t, Rational>> multipliers;
};

struct EliminationResult {
  InequalitySystem system;
  // derivations[k] reproduces system.rows()[k] from the input rows.
  std::vector<Derivation> derivations;
};

// One Fourier-Motzkin step. If an equality row mentions `coord`, the first such
// equality is used to substitute `coord` away; otherwise every (positive,
// negative) pair of inequality rows is combined. Throws DomainError if `coord`
// is not a coordinate of `system`.
EliminationResult fm_eliminate(const InequalitySystem& system, Subset coord);

struct ProjectStats {
  std::size_t eliminations = 0;
  std::size_t substitutions = 0;
  std::size_t derived_rows = 0;
  std::size_t peak_rows = 0;
  std::size_t chernikov_discards = 0;
  std::size_t lp_discards = 0;
};

struct ProjectOptions {
  Redundancy intermediate = Redundancy::kPairwise;
  Redundancy final_pass = Redundancy::kExact;
  // Ancestor-set bookkeeping (Kohler count bound + strict-superset rule).
  bool chernikov = true;
  // After a step that leaves more than this many rows, drop the rows implied by
  // the others (each removal certified in exact arithmetic). 0 disables it.
  // With intermediate = kExact this runs after every step.
  std::size_t prune_above = 150;
  // Maximum number of combined rows over the whole run; BudgetExhausted beyond it.
  std::size_t budget = 10'000'000;
  int threads = 1;
  // Called after each elimination with (coordinate, rows now in the system).
  std::function<void(Subset, std::size_t)> on_step;
  ProjectStats* stats = nullptr;
};

// Projects the solution set of `system` onto the coordinates in `keep` by
// eliminating all others. Elimination order: equality substitutions first, then
// at each step the coordinate with the fewest (#positive * #negative) rows,
// ties broken by canonical subset order. Output rows are sorted canonically
// and live over `keep` (in canonical order).
InequalitySystem project(const InequalitySystem& system, std::span<const Subset> keep,
                         const ProjectOptions& options = {});

// Threads only affects the exact policy.
InequalitySystem remove_redundant(const InequalitySystem& system, Redundancy policy,
                                  int threads = 1);

using Objective = std::map<Subset, Rational, CanonicalLess>;

// Result of optimizing a linear objective over a polyhedral cone. Because the
// feasible set is a cone, the optimum is either 0 or unbounded.
struct ConeLpResult {
  LpStatus status = LpStatus::kOptimal;
  Rational optimum;
  // kOptimal: nonnegative (free on equality rows) multipliers with
  //   sum_i multipliers[i] * row_i == objective  (minimize)  or  == -objective  (maximize).
  std::vector<Rational> multipliers;
  // kUnbounded: a point of the cone, scaled to coprime integers, on which the
  // objective is strictly negative (minimize) or strictly positive (maximize).
  std::map<Subset, Rational, CanonicalLess> ray;
};

// Exact LP over the cone cut out by `constraints`. Solved through the dual
// feasibility problem, so either certificate comes out of one simplex run.
ConeLpResult lp_solve(const Objective& objective, const InequalitySystem& constraints,
                      Direction direction = Direction::kMinimize);

// Objective form of a row.
Objective to_objective(const LinearInequality& row);

// True iff `row` (a >= 0 row) holds on every point of the cone.
bool is_implied(const LinearInequality& row, const InequalitySystem& constraints);

// Multipliers reproducing `row` from the rows of `constraints`, if it is implied.
std::optional<Derivation> derive(const LinearInequality& row, const InequalitySystem& constraints);

// sum_i multipliers_i * row_i, with the sign conventions of Derivation checked.
// Returns nullopt if a multiplier on an inequality row is negative.
std::optional<Objective> recombine(const Derivation& derivation,
                                   const InequalitySystem& constraints);

// True iff `point` satisfies every row exactly.
bool satisfies(const InequalitySystem& system,
               const std::function<Rational(Subset)>& point);

// LP witness that `system.rows()[row]` is irredundant: a point satisfying every
// other row and violating this one. nullopt if the row is implied by the others.
std::optional<std::map<Subset, Rational, CanonicalLess>> irredundancy_witness(
    const InequalitySystem& system, std::size_t row);

}  // namespace entropic
