#include "entropic/cones.hpp"

#include <algorithm>

#include "entropic/error.hpp"

namespace entropic {

CIConstraint CIConstraint::make(Subset s, Subset t, Subset r) {
  if (s.empty() || t.empty()) throw DomainError("conditional independence needs nonempty S and T");
  if (!s.disjoint(t) || !s.disjoint(r) || !t.disjoint(r)) {
    throw DomainError("conditional independence sets must be pairwise disjoint: S=" +
                      debug_string(s) + " T=" + debug_string(t) + " R=" + debug_string(r));
  }
  return CIConstraint{s, t, r};
}

CIConstraint CIConstraint::canonical() const {
  return canonical_less(t, s) ? CIConstraint{t, s, r} : *this;
}

LinearInequality ci_equality(const CIConstraint& c) {
  std::map<Subset, Rational, CanonicalLess> coeffs;
  coeffs[c.r | c.s] += 1;
  coeffs[c.r | c.t] += 1;
  coeffs[c.r | c.s | c.t] -= 1;
  if (!c.r.empty()) coeffs[c.r] -= 1;
  return LinearInequality(coeffs, Sense::kEqual);
}

std::vector<Subset> cone_coordinates(int n) { return all_subsets(n); }

InequalitySystem elemental_system(int n, int max_n) {
  if (n < 1 || n > max_n || n > kMaxEncodableGroundSet) {
    throw DomainError("elemental system needs 1 <= n <= " + std::to_string(max_n) + ", got " +
                      std::to_string(n));
  }
  InequalitySystem system(n, cone_coordinates(n));
  const Subset top = Subset::full(n);
  for (int i = 1; i <= n; ++i) {
    system.add(LinearInequality({{top, 1}, {top.without(i), -1}}));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (Subset r : subsets_of(top.without(i).without(j))) {
        system.add(LinearInequality(
            {{r.with(i), 1}, {r.with(j), 1}, {r, -1}, {r.with(i).with(j), -1}}));
      }
    }
  }
  system.add(LinearInequality({{Subset{}, 1}}, Sense::kEqual));
  return system;
}

InequalitySystem ci_face(InequalitySystem system, std::span<const CIConstraint> constraints) {
  for (const CIConstraint& c : constraints) {
    const CIConstraint checked = CIConstraint::make(c.s, c.t, c.r);
    if (!(checked.s | checked.t | checked.r).within(system.n())) {
      throw DomainError("conditional independence constraint outside the ground set");
    }
    system.add(ci_equality(checked));
  }
  return system;
}

InequalitySystem local_basic_inequalities(const Scenario& scenario) {
  InequalitySystem system(scenario.n(), scenario.nonempty_members());
  auto add = [&](std::initializer_list<std::pair<Subset, long>> terms) {
    std::map<Subset, Rational, CanonicalLess> coeffs;
    for (const auto& [s, c] : terms) {
      if (!s.empty()) coeffs[s] += c;
    }
    system.add(LinearInequality(coeffs, Sense::kGreaterEqual));
  };
  for (Subset g : scenario.generators()) {
    if (g.empty()) continue;
    const std::vector<int> elems = g.elements();
    for (int i : elems) add({{g, 1}, {g.without(i), -1}});
    for (std::size_t a = 0; a < elems.size(); ++a) {
      for (std::size_t b = a + 1; b < elems.size(); ++b) {
        const int i = elems[a], j = elems[b];
        for (Subset r : subsets_of(g.without(i).without(j))) {
          add({{r.with(i), 1}, {r.with(j), 1}, {r, -1}, {r.with(i).with(j), -1}});
        }
      }
    }
  }
  return system;
}

BayesNet::BayesNet(int n, std::vector<std::pair<int, int>> edges)
    : n_(n),
      edges_(std::move(edges)),
      parents_(static_cast<std::size_t>(n) + 1),
      children_(static_cast<std::size_t>(n) + 1) {
  if (n < 1 || n > kDefaultMaxGroundSet) throw DomainError("Bayes net size out of range");
  for (const auto& [u, v] : edges_) {
    if (u < 1 || u > n || v < 1 || v > n) throw DomainError("Bayes net edge out of range");
    if (u == v) throw DomainError("Bayes net has a self loop at " + std::to_string(u));
    children_[static_cast<std::size_t>(u)] = children_[static_cast<std::size_t>(u)].with(v);
    parents_[static_cast<std::size_t>(v)] = parents_[static_cast<std::size_t>(v)].with(u);
  }
  for (int v = 1; v <= n; ++v) {
    if (descendants(v).contains(v)) {
      throw DomainError("Bayes net graph has a cycle through vertex " + std::to_string(v));
    }
  }
}

Subset BayesNet::parents(int v) const { return parents_.at(static_cast<std::size_t>(v)); }

Subset BayesNet::children(int v) const { return children_.at(static_cast<std::size_t>(v)); }

Subset BayesNet::descendants(int v) const {
  Subset reached;
  std::vector<int> frontier{v};
  while (!frontier.empty()) {
    const int u = frontier.back();
    frontier.pop_back();
    for (int w : children(u).elements()) {
      if (!reached.contains(w)) {
        reached = reached.with(w);
        frontier.push_back(w);
      }
    }
  }
  return reached;
}

std::vector<CIConstraint> local_markov_constraints(const BayesNet& net) {
  std::vector<CIConstraint> out;
  const Subset all = Subset::full(net.n());
  for (int v = 1; v <= net.n(); ++v) {
    const Subset pa = net.parents(v);
    const Subset rest = all - net.descendants(v) - Subset::singleton(v) - pa;
    if (rest.empty()) continue;
    const CIConstraint c = CIConstraint::make(Subset::singleton(v), rest, pa).canonical();
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
  }
  return out;
}

InequalitySystem project_cone(int n, const Scenario& scenario,
                              std::span<const CIConstraint> constraints,
                              const ProjectOptions& options) {
  if (scenario.n() != n) throw DomainError("scenario ground set does not match n");
  const InequalitySystem system = ci_face(elemental_system(n), constraints);
  const std::vector<Subset> keep = scenario.nonempty_members();
  return project(system, keep, options);
}

namespace {

void check_candidate(const LinearInequality& candidate, int n) {
  for (const auto& [s, c] : candidate.terms()) {
    if (s.empty()) throw DomainError("candidate has a nonzero coefficient on f(∅)");
    if (!s.within(n)) {
      throw DomainError("candidate mentions " + debug_string(s) + ", outside [" +
                        std::to_string(n) + "]");
    }
  }
}

std::optional<Derivation> as_derivation(const ConeLpResult& r) {
  if (r.status != LpStatus::kOptimal) return std::nullopt;
  Derivation d;
  for (std::size_t i = 0; i < r.multipliers.size(); ++i) {
    if (r.multipliers[i] != 0) d.multipliers.emplace_back(i, r.multipliers[i]);
  }
  return d;
}

}  // namespace

ShannonVerdict prove_shannon(const LinearInequality& candidate, int n,
                             std::span<const CIConstraint> constraints) {
  check_candidate(candidate, n);
  ShannonVerdict verdict;
  verdict.system = ci_face(elemental_system(n), constraints);

  const ConeLpResult forward = lp_solve(to_objective(candidate), verdict.system);
  if (forward.status != LpStatus::kOptimal) {
    verdict.counterexample = forward.ray;
    return verdict;
  }
  verdict.certificate = *as_derivation(forward);
  if (candidate.is_equality()) {
    const ConeLpResult backward = lp_solve(to_objective(candidate.negated()), verdict.system);
    if (backward.status != LpStatus::kOptimal) {
      verdict.counterexample = backward.ray;
      return verdict;
    }
    verdict.reverse_certificate = as_derivation(backward);
  }
  verdict.provable = true;
  return verdict;
}

bool verify_verdict(const ShannonVerdict& verdict, const LinearInequality& candidate) {
  if (verdict.provable) {
    auto forward = recombine(verdict.certificate, verdict.system);
    if (!forward || *forward != to_objective(candidate)) return false;
    if (candidate.is_equality()) {
      if (!verdict.reverse_certificate) return false;
      auto backward = recombine(*verdict.reverse_certificate, verdict.system);
      return backward && *backward == to_objective(candidate.negated());
    }
    return true;
  }
  auto point = [&](Subset s) {
    auto it = verdict.counterexample.find(s);
    return it == verdict.counterexample.end() ? Rational(0) : it->second;
  };
  if (!satisfies(verdict.system, point)) return false;
  const Rational value = candidate.evaluate<Rational>(point);
  return candidate.is_equality() ? value != 0 : sgn(value) < 0;
}

ExtensionResult extend_partial(const PartialRankVector& partial,
                               std::span<const CIConstraint> constraints, const Rational& slack) {
  const int n = partial.n();
  const Scenario& scenario = partial.scenario();
  std::vector<Subset> coords = all_subsets(n);
  coords.erase(coords.begin());  // f(∅) = 0 is substituted
  auto var = [&](Subset s) {
    return static_cast<std::size_t>(
        std::lower_bound(coords.begin(), coords.end(), s, CanonicalLess{}) - coords.begin());
  };
  auto sparse = [&](const LinearInequality& row) {
    SparseVector v;
    for (const auto& [s, c] : row.terms()) {
      if (!s.empty()) v.emplace_back(var(s), Rational(c));
    }
    return v;
  };

  LinearProgram lp(coords.size());
  const InequalitySystem gamma = elemental_system(n);
  for (const auto& row : gamma.rows()) {
    if (row.is_equality()) continue;
    lp.add_row(sparse(row), RowSense::kGreaterEqual, -slack);
  }
  for (const CIConstraint& c : constraints) {
    const CIConstraint checked = CIConstraint::make(c.s, c.t, c.r);
    if (!(checked.s | checked.t | checked.r).within(n)) {
      throw DomainError("conditional independence constraint outside the ground set");
    }
    const LinearInequality row = ci_equality(checked);
    if (slack == 0) {
      lp.add_row(sparse(row), RowSense::kEqual, 0);
    } else {
      lp.add_row(sparse(row), RowSense::kGreaterEqual, -slack);
      lp.add_row(sparse(row), RowSense::kLessEqual, slack);
    }
  }
  const std::size_t first_fix = lp.row_count();
  const std::vector<Subset> fixed = scenario.nonempty_members();
  for (Subset s : fixed) {
    lp.add_row({{var(s), Rational(1)}}, RowSense::kEqual, partial[s]);
  }

  const LpSolution solution = lp.solve();
  ExtensionResult result;
  if (solution.status != LpStatus::kInfeasible) {
    RankVector full{full_scenario(n)};
    for (std::size_t k = 0; k < coords.size(); ++k) full.set(coords[k], solution.primal[k]);
    // The fixing rows hold exactly; restore them verbatim.
    for (Subset s : fixed) full.set(s, partial[s]);
    result.feasible = true;
    result.extension = std::move(full);
    return result;
  }
  std::map<Subset, Rational, CanonicalLess> coeffs;
  for (std::size_t k = 0; k < fixed.size(); ++k) {
    const Rational& y = solution.dual[first_fix + k];
    if (y != 0) coeffs[fixed[k]] = -y;
  }
  result.violated = LinearInequality(coeffs, Sense::kGreaterEqual);
  result.violation = result.violated->evaluate<Rational>(partial.as_function());
  return result;
}

}  // namespace entropic
