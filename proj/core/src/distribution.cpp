#include "entropic/distribution.hpp"

#include <algorithm>

#include "entropic/error.hpp"

namespace entropic {

JointDistribution::JointDistribution(Subset variables, std::vector<int> alphabet_sizes,
                                     std::map<Outcome, Rational> probabilities,
                                     const Rational& mass_tolerance)
    : variables_(variables), sizes_(std::move(alphabet_sizes)) {
  const auto k = static_cast<std::size_t>(variables_.size());
  if (sizes_.size() != k) {
    throw DomainError("distribution over " + debug_string(variables_) + " needs " +
                      std::to_string(k) + " alphabet sizes");
  }
  for (int s : sizes_) {
    if (s < 1) throw DomainError("alphabet sizes must be positive");
  }
  Rational total;
  for (auto& [outcome, p] : probabilities) {
    p.canonicalize();
    if (outcome.size() != k) throw DomainError("outcome tuple has the wrong length");
    for (std::size_t i = 0; i < k; ++i) {
      if (outcome[i] < 0 || outcome[i] >= sizes_[i]) throw DomainError("outcome index out of range");
    }
    if (sgn(p) < 0) throw DomainError("negative probability");
    total += p;
    if (p != 0) probabilities_.emplace(outcome, p);
  }
  if (abs(total - 1) > mass_tolerance) {
    throw DomainError("probabilities sum to " + to_string(total) + ", not 1");
  }
}

JointDistribution JointDistribution::trivial() {
  return JointDistribution(Subset{}, {}, {{Outcome{}, Rational(1)}});
}

JointDistribution JointDistribution::uniform(Subset variables, std::vector<int> alphabet_sizes) {
  std::size_t count = 1;
  for (int s : alphabet_sizes) count *= static_cast<std::size_t>(std::max(s, 1));
  std::map<Outcome, Rational> table;
  Outcome o(alphabet_sizes.size(), 0);
  const Rational p(1, static_cast<unsigned long>(count));
  for (std::size_t idx = 0; idx < count; ++idx) {
    table.emplace(o, p);
    for (std::size_t i = o.size(); i-- > 0;) {
      if (++o[i] < alphabet_sizes[i]) break;
      o[i] = 0;
    }
  }
  return JointDistribution(variables, std::move(alphabet_sizes), std::move(table));
}

int JointDistribution::alphabet_size(int element) const {
  if (!variables_.contains(element)) {
    throw DomainError("element " + std::to_string(element) + " is not a variable of this table");
  }
  const auto pos = static_cast<std::size_t>((variables_ & Subset::full(element - 1)).size());
  return sizes_[pos];
}

Rational JointDistribution::probability(const Outcome& outcome) const {
  auto it = probabilities_.find(outcome);
  return it == probabilities_.end() ? Rational(0) : it->second;
}

std::size_t JointDistribution::outcome_count() const {
  std::size_t count = 1;
  for (int s : sizes_) count *= static_cast<std::size_t>(s);
  return count;
}

JointDistribution JointDistribution::marginalize(Subset target) const {
  if (!target.is_subset_of(variables_)) {
    throw DomainError("cannot marginalize " + debug_string(variables_) + " onto " +
                      debug_string(target));
  }
  const std::vector<int> all = variables_.elements();
  std::vector<std::size_t> keep_positions;
  std::vector<int> sizes;
  for (std::size_t i = 0; i < all.size(); ++i) {
    if (target.contains(all[i])) {
      keep_positions.push_back(i);
      sizes.push_back(sizes_[i]);
    }
  }
  std::map<Outcome, Rational> table;
  Outcome reduced(keep_positions.size());
  for (const auto& [outcome, p] : probabilities_) {
    for (std::size_t k = 0; k < keep_positions.size(); ++k) reduced[k] = outcome[keep_positions[k]];
    table[reduced] += p;
  }
  return JointDistribution(target, std::move(sizes), std::move(table));
}

JointDistribution product(const JointDistribution& a, const JointDistribution& b) {
  if (!a.variables().disjoint(b.variables())) {
    throw DomainError("product needs disjoint variable sets");
  }
  const Subset vars = a.variables() | b.variables();
  const std::vector<int> order = vars.elements();
  std::vector<int> sizes;
  std::vector<std::pair<bool, std::size_t>> source;  // (from a?, position)
  std::size_t ia = 0, ib = 0;
  for (int e : order) {
    if (a.variables().contains(e)) {
      sizes.push_back(a.alphabet_sizes()[ia]);
      source.emplace_back(true, ia++);
    } else {
      sizes.push_back(b.alphabet_sizes()[ib]);
      source.emplace_back(false, ib++);
    }
  }
  std::map<Outcome, Rational> table;
  Outcome o(order.size());
  for (const auto& [oa, pa] : a.probabilities()) {
    for (const auto& [ob, pb] : b.probabilities()) {
      for (std::size_t k = 0; k < order.size(); ++k) {
        o[k] = source[k].first ? oa[source[k].second] : ob[source[k].second];
      }
      table[o] += pa * pb;
    }
  }
  return JointDistribution(vars, std::move(sizes), std::move(table));
}

MarginalModel MarginalModel::from_generators(Scenario scenario,
                                             std::vector<JointDistribution> tables) {
  MarginalModel model(std::move(scenario));
  for (Subset g : model.scenario_.generators()) {
    auto it = std::find_if(tables.begin(), tables.end(),
                           [g](const JointDistribution& d) { return d.variables() == g; });
    if (it == tables.end()) throw DomainError("missing table for generator " + debug_string(g));
    model.tables_.emplace(g, *it);
  }
  for (const auto& d : tables) {
    if (!model.tables_.contains(d.variables())) {
      throw DomainError("table over " + debug_string(d.variables()) + " is not a generator");
    }
  }
  for (Subset s : model.scenario_.members()) {
    if (model.tables_.contains(s)) continue;
    for (Subset g : model.scenario_.generators()) {
      if (s.is_subset_of(g)) {
        model.tables_.emplace(s, model.tables_.at(g).marginalize(s));
        break;
      }
    }
  }
  return model;
}

MarginalModel MarginalModel::from_tables(Scenario scenario,
                                         std::map<Subset, JointDistribution, CanonicalLess> tables) {
  MarginalModel model(std::move(scenario));
  for (Subset s : model.scenario_.members()) {
    auto it = tables.find(s);
    if (it == tables.end()) throw DomainError("missing table for member " + debug_string(s));
    if (it->second.variables() != s) throw DomainError("table variables do not match its member");
  }
  if (tables.size() != model.scenario_.size()) throw DomainError("table for a non-member");
  model.tables_ = std::move(tables);
  return model;
}

const JointDistribution& MarginalModel::table(Subset member) const {
  auto it = tables_.find(member);
  if (it == tables_.end()) throw DomainError(debug_string(member) + " is not a scenario member");
  return it->second;
}

std::vector<int> MarginalModel::alphabet_sizes() const {
  std::vector<int> sizes(static_cast<std::size_t>(scenario_.n()), 1);
  std::vector<bool> seen(sizes.size(), false);
  for (const auto& [s, d] : tables_) {
    for (int e : s.elements()) {
      if (!seen[static_cast<std::size_t>(e - 1)]) {
        sizes[static_cast<std::size_t>(e - 1)] = d.alphabet_size(e);
        seen[static_cast<std::size_t>(e - 1)] = true;
      }
    }
  }
  return sizes;
}

}  // namespace entropic
