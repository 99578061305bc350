#include "entropic/fixtures.hpp"

#include <charconv>

#include "entropic/error.hpp"

namespace entropic {

namespace {

JointDistribution correlated(int a, int b) {
  return JointDistribution(Subset::of({a, b}), {2, 2},
                           {{{0, 0}, Rational(1, 2)}, {{1, 1}, Rational(1, 2)}});
}

JointDistribution anticorrelated(int a, int b) {
  return JointDistribution(Subset::of({a, b}), {2, 2},
                           {{{0, 1}, Rational(1, 2)}, {{1, 0}, Rational(1, 2)}});
}

JointDistribution independent(int a, int b) {
  return JointDistribution::uniform(Subset::of({a, b}), {2, 2});
}

MarginalModel triangle(JointDistribution t13) {
  const Scenario c3 = cycle_scenario(3);
  std::vector<JointDistribution> tables;
  for (Subset g : c3.generators()) {
    if (g == Subset::of({1, 3})) tables.push_back(t13);
    else tables.push_back(correlated(g.elements()[0], g.elements()[1]));
  }
  return MarginalModel::from_generators(c3, std::move(tables));
}

}  // namespace

MarginalModel trianglebox_model() { return triangle(anticorrelated(1, 3)); }

MarginalModel triangle_puc_model() { return triangle(independent(1, 3)); }

MarginalModel correlated_triangle_model() { return triangle(correlated(1, 3)); }

MarginalModel cycle_model(int n) {
  const Scenario scenario = cycle_scenario(n);
  std::vector<JointDistribution> tables;
  for (Subset g : scenario.generators()) {
    const auto e = g.elements();
    if (g == Subset::of({1, n})) tables.push_back(independent(e[0], e[1]));
    else tables.push_back(correlated(e[0], e[1]));
  }
  return MarginalModel::from_generators(scenario, std::move(tables));
}

BayesNet common_ancestor_net() {
  return BayesNet(6, {{2, 1}, {2, 3}, {4, 3}, {4, 5}, {6, 5}, {6, 1}});
}

Subset common_ancestor_observed() { return Subset::of({1, 3, 5}); }

std::vector<CIConstraint> common_ancestor_pairwise_constraints() {
  auto s = [](int i) { return Subset::singleton(i); };
  return {
      CIConstraint::make(s(2), s(4)),
      CIConstraint::make(s(3), s(6), Subset::of({2, 4})),
      CIConstraint::make(s(4), s(6)),
      CIConstraint::make(s(5), s(2), Subset::of({4, 6})),
      CIConstraint::make(s(6), s(2)),
      CIConstraint::make(s(1), s(4), Subset::of({2, 6})),
  };
}

LinearInequality common_info() {
  return LinearInequality({{Subset::of({1, 3, 5}), 2},
                           {Subset::singleton(1), -1},
                           {Subset::singleton(3), -1},
                           {Subset::singleton(5), -1}});
}

LinearInequality common_info_pair() {
  return LinearInequality({{Subset::of({1, 3}), 1},
                           {Subset::of({3, 5}), 1},
                           {Subset::singleton(1), -1},
                           {Subset::singleton(3), -1},
                           {Subset::singleton(5), -1}});
}

std::optional<Scenario> named_scenario(const std::string& name) {
  auto number = [&](std::size_t prefix) -> std::optional<int> {
    int value = 0;
    const char* first = name.data() + prefix;
    const char* last = name.data() + name.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last || first == last) return std::nullopt;
    return value;
  };
  if (name == "mzy") return zy_scenario();
  if (name.starts_with("c")) {
    if (auto n = number(1); n && *n >= 3 && *n <= kDefaultMaxGroundSet) return cycle_scenario(*n);
  }
  if (name.starts_with("full")) {
    if (auto n = number(4); n && *n >= 1 && *n <= kDefaultMaxGroundSet) return full_scenario(*n);
  }
  return std::nullopt;
}

}  // namespace entropic
