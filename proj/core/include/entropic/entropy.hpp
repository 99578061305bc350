#pragma once

#include <vector>

#include "entropic/distribution.hpp"
#include "entropic/set_function.hpp"

namespace entropic {

// Tolerance for entropy-valued comparisons, in bits.
inline constexpr long double kDefaultEntropyTolerance = 1e-9L;

// -sum p log2 p over the support, in bits.
long double shannon_entropy(const JointDistribution& dist);

// H(A_S) for every S ⊆ [n]. The distribution must be over exactly [n].
EntropyVector entropy_vector(const JointDistribution& dist, int threads = 1);

// I(A_S : A_T | A_R) = H(RS) + H(RT) - H(RST) - H(R). S, T, R must be pairwise
// disjoint subsets of the distribution's variables.
long double mutual_information(const JointDistribution& dist, Subset s, Subset t,
                               Subset r = Subset{});

struct CompatibilityViolation {
  Subset larger;
  Subset smaller;
  // max over outcomes of |marginal of larger - smaller|; 1 when alphabets disagree.
  Rational max_deviation;
};

struct CompatibilityReport {
  std::vector<CompatibilityViolation> violations;
  bool compatible() const { return violations.empty(); }
};

// Checks every pair T ⊊ S of members: marginalizing table S onto T must reproduce
// table T up to `tolerance` (0 means exact).
CompatibilityReport check_compatibility(const MarginalModel& model,
                                        const Rational& tolerance = 0);

// H of each member's table. Throws DomainError if the model is incompatible.
EntropyVector marginal_entropy_vector(const MarginalModel& model,
                                      const Rational& tolerance = 0);

}  // namespace entropic
