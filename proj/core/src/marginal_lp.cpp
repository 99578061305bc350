#include "entropic/marginal_lp.hpp"

#include "entropic/error.hpp"

namespace entropic {

namespace {

// Mixed-radix enumeration of outcomes for the given alphabet sizes.
std::vector<Outcome> enumerate_outcomes(const std::vector<int>& sizes) {
  std::size_t count = 1;
  for (int s : sizes) count *= static_cast<std::size_t>(s);
  std::vector<Outcome> out;
  out.reserve(count);
  Outcome o(sizes.size(), 0);
  for (std::size_t idx = 0; idx < count; ++idx) {
    out.push_back(o);
    for (std::size_t i = o.size(); i-- > 0;) {
      if (++o[i] < sizes[i]) break;
      o[i] = 0;
    }
  }
  return out;
}

Outcome restrict_outcome(const Outcome& joint, Subset member) {
  Outcome out;
  out.reserve(static_cast<std::size_t>(member.size()));
  for (int e : member.elements()) out.push_back(joint[static_cast<std::size_t>(e - 1)]);
  return out;
}

std::size_t checked_outcome_count(const std::vector<int>& sizes, std::size_t cap) {
  std::size_t count = 1;
  for (int s : sizes) {
    if (count > cap / static_cast<std::size_t>(s)) {
      throw DomainError("joint outcome space exceeds the cap of " + std::to_string(cap));
    }
    count *= static_cast<std::size_t>(s);
  }
  if (count > cap) throw DomainError("joint outcome space exceeds the cap of " + std::to_string(cap));
  return count;
}

}  // namespace

MarginalLpResult marginal_lp(const MarginalModel& model, std::size_t cap) {
  const std::vector<int> sizes = model.alphabet_sizes();
  MarginalLpResult result;
  result.joint_outcomes = checked_outcome_count(sizes, cap);
  const std::vector<Outcome> joints = enumerate_outcomes(sizes);

  struct RowKey {
    Subset member;
    Outcome outcome;
    Rational target;
  };
  std::vector<RowKey> keys;
  std::map<std::pair<std::uint32_t, Outcome>, std::size_t> row_of;
  keys.push_back({Subset{}, Outcome{}, Rational(1)});
  row_of[{0u, Outcome{}}] = 0;
  for (Subset g : model.scenario().generators()) {
    if (g.empty()) continue;
    const JointDistribution& table = model.table(g);
    for (const Outcome& o : enumerate_outcomes(table.alphabet_sizes())) {
      row_of[{g.bits(), o}] = keys.size();
      keys.push_back({g, o, table.probability(o)});
    }
  }

  std::vector<SparseVector> rows(keys.size());
  for (std::size_t w = 0; w < joints.size(); ++w) {
    rows[0].emplace_back(w, Rational(1));
    for (Subset g : model.scenario().generators()) {
      if (g.empty()) continue;
      rows[row_of.at({g.bits(), restrict_outcome(joints[w], g)})].emplace_back(w, Rational(1));
    }
  }
  LinearProgram lp(joints.size());
  for (std::size_t w = 0; w < joints.size(); ++w) lp.set_nonnegative(w);
  for (std::size_t r = 0; r < keys.size(); ++r) {
    lp.add_row(std::move(rows[r]), RowSense::kEqual, keys[r].target);
  }
  const LpSolution s = lp.solve();

  if (s.status == LpStatus::kInfeasible) {
    for (std::size_t r = 0; r < keys.size(); ++r) {
      if (s.dual[r] != 0) result.certificate.push_back({keys[r].member, keys[r].outcome, s.dual[r]});
    }
    return result;
  }
  std::map<Outcome, Rational> table;
  for (std::size_t w = 0; w < joints.size(); ++w) {
    if (s.primal[w] != 0) table.emplace(joints[w], s.primal[w]);
  }
  result.noncontextual = true;
  result.joint = JointDistribution(Subset::full(model.scenario().n()), sizes, std::move(table));
  return result;
}

bool verify_contextuality_certificate(const MarginalModel& model,
                                      const std::vector<MarginalWeight>& certificate) {
  const std::vector<int> sizes = model.alphabet_sizes();
  Rational value;
  for (const auto& w : certificate) {
    if (!model.scenario().contains(w.member)) return false;
    value += w.weight * model.table(w.member).probability(w.outcome);
  }
  if (sgn(value) <= 0) return false;
  for (const Outcome& joint : enumerate_outcomes(sizes)) {
    Rational total;
    for (const auto& w : certificate) {
      if (restrict_outcome(joint, w.member) == w.outcome) total += w.weight;
    }
    if (sgn(total) > 0) return false;
  }
  return true;
}

}  // namespace entropic
