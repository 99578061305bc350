#pragma once

#include <optional>
#include <string>
#include <vector>

#include "entropic/cones.hpp"
#include "entropic/distribution.hpp"
#include "entropic/inequality.hpp"
#include "entropic/scenario.hpp"

namespace entropic {

// Binary marginal models on C_3 (outcome 0 = heads, 1 = tails).
// {1,2} and {2,3} perfectly correlated, {1,3} perfectly anticorrelated.
MarginalModel trianglebox_model();
// {1,2} and {2,3} perfectly correlated, {1,3} independent and uniform.
MarginalModel triangle_puc_model();
// All three pairs perfectly correlated.
MarginalModel correlated_triangle_model();
// C_n: {i,i+1} perfectly correlated for i < n, {1,n} independent and uniform.
MarginalModel cycle_model(int n);

// Hidden common ancestors 2, 4, 6 of the observed 1, 3, 5:
// 2 -> 1, 2 -> 3, 4 -> 3, 4 -> 5, 6 -> 5, 6 -> 1.
BayesNet common_ancestor_net();
Subset common_ancestor_observed();
// I(2:4), I(3:6|24), I(4:6), I(5:2|46), I(6:2), I(1:4|62): the weaker list of
// conditions usually quoted for this network.
std::vector<CIConstraint> common_ancestor_pairwise_constraints();

// 2 H(135) >= H(1) + H(3) + H(5)
LinearInequality common_info();
// H(13) + H(35) >= H(1) + H(3) + H(5)
LinearInequality common_info_pair();

// "c<n>" for n >= 3, "mzy", or "full<n>".
std::optional<Scenario> named_scenario(const std::string& name);

}  // namespace entropic
