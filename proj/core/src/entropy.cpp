#include "entropic/entropy.hpp"

#include <cmath>

#include "entropic/error.hpp"
#include "entropic/parallel.hpp"

namespace entropic {

long double shannon_entropy(const JointDistribution& dist) {
  long double h = 0.0L;
  for (const auto& [outcome, p] : dist.probabilities()) {
    if (sgn(p) <= 0) continue;
    const long double q = to_long_double(p);
    h -= q * std::log2(q);
  }
  // Cancellation can leave -0.0 or a tiny negative value for point masses.
  return h < 0.0L ? 0.0L : h;
}

EntropyVector entropy_vector(const JointDistribution& dist, int threads) {
  const int n = dist.variables().max_element();
  if (dist.variables() != Subset::full(n)) {
    throw DomainError("entropy_vector needs a distribution over {1..n}");
  }
  Scenario full = full_scenario(n);
  std::vector<long double> values(full.size());
  parallel_for(full.size(), threads, [&](std::size_t i) {
    values[i] = i == 0 ? 0.0L : shannon_entropy(dist.marginalize(full.members()[i]));
  });
  return EntropyVector(std::move(full), std::move(values));
}

long double mutual_information(const JointDistribution& dist, Subset s, Subset t, Subset r) {
  if (!s.disjoint(t) || !s.disjoint(r) || !t.disjoint(r)) {
    throw DomainError("mutual information arguments must be pairwise disjoint");
  }
  if (!(s | t | r).is_subset_of(dist.variables())) {
    throw DomainError("mutual information arguments must be variables of the distribution");
  }
  auto h = [&](Subset x) { return shannon_entropy(dist.marginalize(x)); };
  return h(r | s) + h(r | t) - h(r | s | t) - h(r);
}

CompatibilityReport check_compatibility(const MarginalModel& model, const Rational& tolerance) {
  CompatibilityReport report;
  const auto& members = model.scenario().members();
  for (Subset larger : members) {
    const JointDistribution& big = model.table(larger);
    for (Subset smaller : members) {
      if (!smaller.is_proper_subset_of(larger)) continue;
      const JointDistribution& small = model.table(smaller);
      bool same_alphabets = true;
      for (int e : smaller.elements()) {
        if (big.alphabet_size(e) != small.alphabet_size(e)) same_alphabets = false;
      }
      if (!same_alphabets) {
        report.violations.push_back({larger, smaller, Rational(1)});
        continue;
      }
      const JointDistribution reduced = big.marginalize(smaller);
      Rational worst;
      for (const auto& [o, p] : reduced.probabilities()) {
        worst = std::max(worst, Rational(abs(p - small.probability(o))));
      }
      for (const auto& [o, p] : small.probabilities()) {
        worst = std::max(worst, Rational(abs(p - reduced.probability(o))));
      }
      if (worst > tolerance) report.violations.push_back({larger, smaller, worst});
    }
  }
  return report;
}

EntropyVector marginal_entropy_vector(const MarginalModel& model, const Rational& tolerance) {
  const CompatibilityReport report = check_compatibility(model, tolerance);
  if (!report.compatible()) {
    const auto& v = report.violations.front();
    throw DomainError("incompatible marginal model: table " + debug_string(v.larger) +
                      " does not marginalize to table " + debug_string(v.smaller) +
                      " (deviation " + to_string(v.max_deviation) + ")");
  }
  std::vector<long double> values;
  values.reserve(model.scenario().size());
  for (Subset s : model.scenario().members()) {
    values.push_back(s.empty() ? 0.0L : shannon_entropy(model.table(s)));
  }
  return EntropyVector(model.scenario(), std::move(values));
}

}  // namespace entropic
