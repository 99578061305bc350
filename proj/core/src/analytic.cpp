#include "entropic/analytic.hpp"

#include <cmath>
#include <map>
#include <stdexcept>
#include <type_traits>

#include "entropic/cones.hpp"
#include "entropic/error.hpp"

namespace entropic {

namespace {

int wrap(int i, int n) { return ((i - 1) % n + n) % n + 1; }

Subset edge(int i, int n) { return Subset::of({wrap(i, n), wrap(i + 1, n)}); }

}  // namespace

LinearInequality cycle_inequality(int n, int i) {
  if (n < 3) throw DomainError("cycle inequalities need n >= 3, got " + std::to_string(n));
  if (i < 1 || i > n) throw DomainError("cycle row index out of range");
  std::map<Subset, Rational, CanonicalLess> coeffs;
  for (int j = 1; j <= n; ++j) {
    coeffs[edge(j, n)] += j == i ? -1 : 1;
    if (j != i && j != wrap(i + 1, n)) coeffs[Subset::singleton(j)] -= 1;
  }
  return LinearInequality(coeffs, Sense::kGreaterEqual);
}

InequalitySystem cycle_inequalities(int n) {
  InequalitySystem system(n, cycle_scenario(n).nonempty_members());
  for (int i = 1; i <= n; ++i) system.add(cycle_inequality(n, i));
  return system;
}

namespace {

template <class T>
CycleVerdict cycle_verdict(const SetFunction<T>& v, T tolerance) {
  const int n = v.n();
  if (!(v.scenario() == cycle_scenario(n))) {
    throw DomainError("vector is not over the " + std::to_string(n) + "-cycle scenario");
  }
  const auto value = v.as_function();
  const InequalitySystem basic = local_basic_inequalities(v.scenario());
  for (const auto& row : basic.rows()) {
    if (row.template evaluate<T>(value) < -tolerance) {
      std::string text;
      for (const auto& [s, c] : row.terms()) text += " " + c.get_str() + "*f" + debug_string(s);
      throw DomainError("not a partial polymatroid; local basic row fails:" + text + " >= 0");
    }
  }
  CycleVerdict verdict;
  for (int i = 1; i <= n; ++i) {
    const T slack = cycle_inequality(n, i).template evaluate<T>(value);
    if constexpr (std::is_same_v<T, Rational>) verdict.slacks.push_back(to_long_double(slack));
    else verdict.slacks.push_back(slack);
    if (slack < -tolerance) {
      verdict.noncontextual = false;
      verdict.violated.push_back(i);
    }
  }
  return verdict;
}

}  // namespace

CycleVerdict check_cycle_contextuality(const PartialRankVector& v) {
  return cycle_verdict<Rational>(v, Rational(0));
}

CycleVerdict check_cycle_contextuality(const EntropyVector& v, long double tolerance) {
  return cycle_verdict<long double>(v, tolerance);
}

LinearInequality zhang_yeung() {
  const Subset w = Subset::singleton(1), x = Subset::singleton(2), y = Subset::singleton(3),
               z = Subset::singleton(4);
  return LinearInequality({{w | y | z, -4},
                           {x | y | z, -1},
                           {w | x, -1},
                           {w | y, 3},
                           {w | z, 3},
                           {x | y, 1},
                           {x | z, 1},
                           {y | z, 3},
                           {w, -1},
                           {y, -2},
                           {z, -2}});
}

PartialRankVector fzy_fixture() {
  PartialRankVector f{zy_scenario()};
  for (Subset s : f.scenario().nonempty_members()) {
    switch (s.size()) {
      case 1:
        f.set(s, 2);
        break;
      case 2:
        f.set(s, s == Subset::of({1, 2}) ? 4 : 3);
        break;
      default:
        f.set(s, 4);
    }
  }
  return f;
}

MarginalModel realize_zy_model() {
  const Rational sixteenth(1, 16);
  // Variables v1 (w or x), y, z each carry (alpha_v, beta) with a shared beta.
  auto shared_beta_table = [&](Subset vars) {
    std::map<Outcome, Rational> table;
    for (int bits = 0; bits < 16; ++bits) {
      const int beta = bits & 1;
      Outcome o;
      for (int k = 0; k < 3; ++k) o.push_back(2 * ((bits >> (k + 1)) & 1) + beta);
      table[o] = sixteenth;
    }
    return JointDistribution(vars, {4, 4, 4}, std::move(table));
  };
  const JointDistribution wyz = shared_beta_table(Subset::of({1, 3, 4}));
  const JointDistribution xyz = shared_beta_table(Subset::of({2, 3, 4}));
  const JointDistribution wx = JointDistribution::uniform(Subset::of({1, 2}), {4, 4});

  const Scenario scenario = zy_scenario();
  std::vector<JointDistribution> tables;
  for (Subset g : scenario.generators()) {
    if (g == wyz.variables()) tables.push_back(wyz);
    else if (g == xyz.variables()) tables.push_back(xyz);
    else tables.push_back(wx);
  }
  return MarginalModel::from_generators(scenario, std::move(tables));
}

RankVector submodular_extend(const PartialRankVector& v) {
  const Scenario& scenario = v.scenario();
  const auto& members = scenario.members();
  for (Subset s : members) {
    for (Subset t : members) {
      if (!canonical_less(s, t) || s.is_subset_of(t) || t.is_subset_of(s)) continue;
      if (!scenario.contains(s | t)) continue;
      if (v[s] + v[t] < v[s | t] + v[s & t]) {
        throw DomainError("not submodular: f" + debug_string(s) + " + f" + debug_string(t) +
                          " < f" + debug_string(s | t) + " + f" + debug_string(s & t));
      }
    }
  }

  const int n = v.n();
  RankVector out{full_scenario(n)};
  std::vector<bool> defined(std::size_t{1} << n, false);
  for (Subset s : members) {
    out.set(s, v[s]);
    defined[s.bits()] = true;
  }
  for (Subset target : all_subsets(n)) {
    if (defined[target.bits()]) continue;
    std::optional<Rational> best;
    for (Subset s : subsets_of(target)) {
      if (s == target) continue;
      // T ranges over proper subsets of V containing V \ S.
      const Subset rest = target - s;
      for (Subset extra : subsets_of(s)) {
        const Subset t = rest | extra;
        if (t == target) continue;
        const Rational candidate = out[s] + out[t] - out[s & t];
        if (!best || candidate < *best) best = candidate;
      }
    }
    out.set(target, best.value_or(Rational(0)));
    defined[target.bits()] = true;
  }
  return out;
}

ProcessBound process_bound(long double h1, long double hcond, int n) {
  if (h1 < 0 || hcond < 0) throw DomainError("entropies must be nonnegative");
  if (n < 2) throw DomainError("process bound needs n >= 2");
  ProcessBound result;
  result.raw = h1 - static_cast<long double>(n - 1) * hcond;
  result.bound = std::max(0.0L, result.raw);
  if (hcond > 0) result.horizon = static_cast<long long>(std::floor(h1 / hcond));
  return result;
}

long block_rank(Subset block, Subset s) { return block.disjoint(s) ? 0 : 1; }

std::vector<Subset> cycle_block_decomposition(const PartialRankVector& v) {
  const int n = v.n();
  if (!(v.scenario() == cycle_scenario(n))) {
    throw DomainError("vector is not over the " + std::to_string(n) + "-cycle scenario");
  }
  std::map<Subset, Integer, CanonicalLess> f;
  for (Subset s : v.scenario().nonempty_members()) {
    if (v[s].get_den() != 1) throw DomainError("block decomposition needs integer values");
    f[s] = v[s].get_num();
  }
  if (!check_cycle_contextuality(v).noncontextual) {
    throw DomainError("vector violates a cycle inequality");
  }

  std::vector<Subset> blocks;
  for (;;) {
    auto single = [&](int j) -> const Integer& { return f.at(Subset::singleton(wrap(j, n))); };
    auto pair = [&](int j) -> const Integer& { return f.at(edge(j, n)); };
    bool all_zero = true, some_zero = false;
    for (int j = 1; j <= n; ++j) {
      if (single(j) != 0) all_zero = false;
      else some_zero = true;
    }
    if (all_zero) break;

    // Rotation so that the chosen pivot sits at position n.
    int shift = 0;
    int length = 0;
    auto rs = [&](int k) -> const Integer& { return single(k + shift); };
    auto rp = [&](int k) -> const Integer& { return pair(k + shift); };
    std::vector<int> independent;
    for (int i = 1; i <= n; ++i) {
      if (pair(i) == single(i) + single(i + 1)) independent.push_back(i);
    }

    if (some_zero) {
      int pivot = 0;
      for (int j = 1; j <= n && pivot == 0; ++j) {
        if (single(j) == 0 && single(j + 1) != 0) pivot = j;
      }
      shift = pivot % n;
      for (int k = 1; k < n && length == 0; ++k) {
        if (rp(k) > rs(k + 1)) length = k;
      }
    } else if (independent.empty()) {
      length = n;
    } else if (independent.size() == 1) {
      shift = independent.front() % n;
      for (int k = 1; k < n && length == 0; ++k) {
        if (rp(k) > rs(k + 1)) length = k;
      }
    } else {
      shift = independent.front() % n;
      for (int k = 1; k < n && length == 0; ++k) {
        if (rp(k) == rs(k) + rs(k + 1)) length = k;
      }
    }
    if (length == 0) throw std::logic_error("cycle block peeling found no block");

    Subset block;
    for (int k = 1; k <= length; ++k) block = block.with(wrap(k + shift, n));
    for (auto& [s, value] : f) value -= block_rank(block, s);
    blocks.push_back(block);
  }
  for (const auto& [s, value] : f) {
    if (value != 0) throw std::logic_error("cycle block peeling left a remainder");
  }
  return blocks;
}

MarginalModel block_model(const Scenario& scenario, std::span<const Subset> blocks) {
  const int n = scenario.n();
  // position[b][i]: bit index of block b inside variable i's outcome.
  std::vector<int> count(static_cast<std::size_t>(n) + 1, 0);
  std::vector<std::vector<int>> position(blocks.size(), std::vector<int>(n + 1, -1));
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    for (int i : blocks[b].elements()) {
      if (i > n) throw DomainError("block outside the ground set");
      position[b][static_cast<std::size_t>(i)] = count[static_cast<std::size_t>(i)]++;
    }
  }
  std::vector<JointDistribution> tables;
  for (Subset g : scenario.generators()) {
    std::vector<std::size_t> touching;
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      if (!blocks[b].disjoint(g)) touching.push_back(b);
    }
    if (touching.size() > 20) throw DomainError("too many blocks meet one generator");
    const std::vector<int> vars = g.elements();
    std::vector<int> sizes;
    for (int i : vars) sizes.push_back(1 << count[static_cast<std::size_t>(i)]);
    const Rational p(1, std::size_t{1} << touching.size());
    std::map<Outcome, Rational> table;
    for (std::size_t bits = 0; bits < (std::size_t{1} << touching.size()); ++bits) {
      Outcome o(vars.size(), 0);
      for (std::size_t k = 0; k < touching.size(); ++k) {
        if (((bits >> k) & 1) == 0) continue;
        for (std::size_t a = 0; a < vars.size(); ++a) {
          const int pos = position[touching[k]][static_cast<std::size_t>(vars[a])];
          if (pos >= 0) o[a] |= 1 << pos;
        }
      }
      table[o] += p;
    }
    tables.emplace_back(g, std::move(sizes), std::move(table));
  }
  return MarginalModel::from_generators(scenario, std::move(tables));
}

}  // namespace entropic
