#pragma once

#include <map>
#include <string>
#include <vector>

#include "entropic/labels.hpp"
#include "entropic/rational.hpp"
#include "entropic/scenario.hpp"

namespace entropic {

// Outcome indices, one per variable, in increasing variable order.
using Outcome = std::vector<int>;

// Exact finite-outcome distribution of the variables in `variables()`.
// Zero-probability outcomes are not stored.
class JointDistribution {
 public:
  // Throws DomainError unless: one alphabet size (>= 1) per variable, outcomes in
  // range, probabilities nonnegative, and |total - 1| <= mass_tolerance.
  JointDistribution(Subset variables, std::vector<int> alphabet_sizes,
                    std::map<Outcome, Rational> probabilities,
                    const Rational& mass_tolerance = 0);

  // Distribution of the empty variable set: one outcome with mass 1.
  static JointDistribution trivial();
  // Uniform over every outcome.
  static JointDistribution uniform(Subset variables, std::vector<int> alphabet_sizes);

  Subset variables() const { return variables_; }
  const std::vector<int>& alphabet_sizes() const { return sizes_; }
  // Alphabet size of ground-set element `element` (must be a variable).
  int alphabet_size(int element) const;
  const std::map<Outcome, Rational>& probabilities() const { return probabilities_; }
  Rational probability(const Outcome& outcome) const;
  // Product of the alphabet sizes.
  std::size_t outcome_count() const;

  // Sums out the variables not in `target`. Throws DomainError unless target ⊆ variables().
  JointDistribution marginalize(Subset target) const;

  bool operator==(const JointDistribution&) const = default;

 private:
  Subset variables_;
  std::vector<int> sizes_;
  std::map<Outcome, Rational> probabilities_;
};

// Product distribution of two distributions over disjoint variable sets.
JointDistribution product(const JointDistribution& a, const JointDistribution& b);

// Display names for variables and their outcomes; IO only.
struct VariableNames {
  Labels labels;
  // outcomes[i] names the outcomes of element i+1.
  std::vector<std::vector<std::string>> outcomes;
};

// One table per scenario member. Tables need not be compatible; see
// check_compatibility in entropy.hpp.
class MarginalModel {
 public:
  // Tables for exactly the generators; the other members are filled in by
  // marginalizing the first generator (canonical order) that contains them.
  static MarginalModel from_generators(Scenario scenario, std::vector<JointDistribution> tables);
  // A table for every member.
  static MarginalModel from_tables(Scenario scenario, std::map<Subset, JointDistribution, CanonicalLess> tables);

  const Scenario& scenario() const { return scenario_; }
  const JointDistribution& table(Subset member) const;
  const std::map<Subset, JointDistribution, CanonicalLess>& tables() const { return tables_; }
  // Alphabet size of each element 1..n as seen by the first table containing it.
  std::vector<int> alphabet_sizes() const;

 private:
  MarginalModel(Scenario scenario) : scenario_(std::move(scenario)) {}
  Scenario scenario_;
  std::map<Subset, JointDistribution, CanonicalLess> tables_;
};

}  // namespace entropic
