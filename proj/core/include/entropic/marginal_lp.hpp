#pragma once

#include <optional>
#include <vector>

#include "entropic/distribution.hpp"
#include "entropic/simplex.hpp"

namespace entropic {

inline constexpr std::size_t kDefaultJointOutcomeCap = 1'000'000;

// One Farkas multiplier per (generator, outcome) constraint of the marginal LP.
struct MarginalWeight {
  Subset member;
  Outcome outcome;
  Rational weight;
};

// Decides whether a global joint distribution over [n] reproduces every
// generator table, by exact LP over the joint outcome probabilities.
struct MarginalLpResult {
  bool noncontextual = false;
  // Present when non-contextual.
  std::optional<JointDistribution> joint;
  // Present when contextual: weights w with sum_S w(S, omega|S) <= 0 for every
  // joint outcome omega, and sum_S sum_o w(S, o) P_S(o) > 0.
  std::vector<MarginalWeight> certificate;
  std::size_t joint_outcomes = 0;
};

// Throws DomainError if the product of alphabet sizes exceeds `cap`.
MarginalLpResult marginal_lp(const MarginalModel& model,
                             std::size_t cap = kDefaultJointOutcomeCap);

// Re-checks a contextuality certificate against the model by enumerating joint outcomes.
bool verify_contextuality_certificate(const MarginalModel& model,
                                      const std::vector<MarginalWeight>& certificate);

}  // namespace entropic
