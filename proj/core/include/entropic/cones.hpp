#pragma once

#include <map>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "entropic/inequality.hpp"
#include "entropic/polyhedra.hpp"
#include "entropic/scenario.hpp"
#include "entropic/set_function.hpp"

namespace entropic {

// I(A_S : A_T | A_R) = 0.
struct CIConstraint {
  Subset s;
  Subset t;
  Subset r;

  // Throws DomainError unless S, T are nonempty and S, T, R pairwise disjoint.
  static CIConstraint make(Subset s, Subset t, Subset r = Subset{});

  // Orders S and T canonically so symmetric duplicates compare equal.
  CIConstraint canonical() const;
  bool operator==(const CIConstraint&) const = default;
};

// f(R∪S) + f(R∪T) - f(R∪S∪T) - f(R) = 0
LinearInequality ci_equality(const CIConstraint& c);

// Every subset of [n] including the empty set, canonical order.
std::vector<Subset> cone_coordinates(int n);

// Elemental inequalities of the polymatroid cone Γ_n over all 2^n coordinates:
// n monotonicity rows f([n]) - f([n]\{i}) >= 0, C(n,2)·2^(n-2) submodularity rows
// f(R∪i) + f(R∪j) - f(R) - f(R∪ij) >= 0, and f(∅) = 0 (added last).
InequalitySystem elemental_system(int n, int max_n = kDefaultMaxGroundSet);

// Appends one equality per constraint. Throws DomainError for constraints
// outside the system's ground set.
InequalitySystem ci_face(InequalitySystem system, std::span<const CIConstraint> constraints);

// Partial-polymatroid conditions on a scenario, over its nonempty members:
// the elemental rows of 2^G for every generator G, with f(∅) = 0 substituted.
InequalitySystem local_basic_inequalities(const Scenario& scenario);

// Acyclic directed graph on vertices 1..n.
class BayesNet {
 public:
  // Throws DomainError for out-of-range vertices, self loops, or cycles.
  BayesNet(int n, std::vector<std::pair<int, int>> edges);

  int n() const { return n_; }
  const std::vector<std::pair<int, int>>& edges() const { return edges_; }
  Subset parents(int v) const;
  Subset children(int v) const;
  // Every vertex reachable from v by a directed path (v excluded).
  Subset descendants(int v) const;

 private:
  int n_;
  std::vector<std::pair<int, int>> edges_;
  std::vector<Subset> parents_;
  std::vector<Subset> children_;
};

// One constraint per vertex v: I(A_v : A_{V \ (de(v) ∪ {v} ∪ pa(v))} | A_{pa(v)}) = 0.
// Vacuous constraints (empty T) are dropped; symmetric duplicates are merged.
std::vector<CIConstraint> local_markov_constraints(const BayesNet& net);

// Facet description of the projection of Γ_n ∩ (CI face) onto the scenario's
// nonempty members.
InequalitySystem project_cone(int n, const Scenario& scenario,
                              std::span<const CIConstraint> constraints,
                              const ProjectOptions& options = {});

// Verdict of the Shannon-type prover.
struct ShannonVerdict {
  bool provable = false;
  // Γ_n ∩ CI face the candidate was checked against.
  InequalitySystem system;
  // provable: nonnegative multipliers on `system` rows recombining to the
  // candidate (for an equality candidate: to its >= direction; see
  // `reverse_certificate`).
  Derivation certificate;
  std::optional<Derivation> reverse_certificate;
  // not provable: a point of `system` where the candidate fails.
  std::map<Subset, Rational, CanonicalLess> counterexample;
};

// Throws DomainError if the candidate has a nonzero ∅ coefficient or mentions
// elements outside [n].
ShannonVerdict prove_shannon(const LinearInequality& candidate, int n,
                             std::span<const CIConstraint> constraints = {});

// Checks the verdict's certificate or counterexample by substitution.
bool verify_verdict(const ShannonVerdict& verdict, const LinearInequality& candidate);

// Can a partial vector on a scenario be extended to a point of Γ_n ∩ CI face?
struct ExtensionResult {
  bool feasible = false;
  // feasible: full rank vector agreeing with the input on the scenario.
  std::optional<RankVector> extension;
  // infeasible: a Shannon-type inequality over the scenario's coordinates
  // (nonnegative combination of elemental/CI rows) that the input violates.
  std::optional<LinearInequality> violated;
  Rational violation;  // value of `violated` at the input (< 0)
};

// `slack` relaxes every elemental row to a·x >= -slack and every CI row to
// |a·x| <= slack; use 0 for exact inputs.
ExtensionResult extend_partial(const PartialRankVector& partial,
                               std::span<const CIConstraint> constraints = {},
                               const Rational& slack = 0);

}  // namespace entropic
