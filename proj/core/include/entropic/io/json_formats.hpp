#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "entropic/cones.hpp"
#include "entropic/distribution.hpp"
#include "entropic/labels.hpp"
#include "entropic/scenario.hpp"
#include "entropic/set_function.hpp"

// JSON document formats. Subsets are written as arrays of labels (or 1-based
// indices on input); rationals as strings "p/q"; entropies as numbers.
namespace entropic::io {

// {"n": 3, "labels": [...], "generators": [["A1","A2"], ...]}
// "scenario" may also be a name: "c3", "mzy", "full4".
struct ScenarioFile {
  Scenario scenario;
  Labels labels;
};
ScenarioFile parse_scenario(std::string_view text);
std::string format_scenario(const ScenarioFile& file);

// {"n": 2, "labels": [...],
//  "variables": [{"name": "A1", "outcomes": ["h", "t"]}, ...],
//  "table": [{"outcome": ["h", "h"], "p": "1/2"}, ...]}
// Variables not listed are absent from the distribution; "size" may replace
// "outcomes". Outcomes are names or 0-based indices.
struct DistributionFile {
  int n = 0;
  Labels labels;
  VariableNames names;
  JointDistribution distribution;
};
DistributionFile parse_distribution(std::string_view text);
std::string format_distribution(const DistributionFile& file);

// {"scenario": {...} | "c3", "variables": [...],
//  "tables": [{"member": ["A1","A2"], "table": [...]}, ...]}
// Tables for exactly the generators, or for every member.
struct ModelFile {
  ScenarioFile scenario;
  VariableNames names;
  MarginalModel model;
  // False when some probability was given as a plain JSON number; such models
  // are compared with a 1e-12 deviation threshold.
  bool exact = true;
};
ModelFile parse_model(std::string_view text);
std::string format_model(const ModelFile& file);

// {"scenario": ..., "exact": true, "values": {"A1": "2", "A1A2": "4", ...}}
// Exact vectors hold rationals; "exact": false marks entropy-valued data
// (numbers or decimal strings), checked with a tolerance downstream.
struct PartialVectorFile {
  ScenarioFile scenario;
  bool exact = true;
  PartialRankVector values;
};
PartialVectorFile parse_partial_vector(std::string_view text);
std::string format_partial_vector(const PartialVectorFile& file);
std::string format_entropy_vector(const EntropyVector& values, const Labels& labels);

// {"n": 6, "labels": [...], "edges": [[u, v], ...], "observed": [...]}
struct BayesNetFile {
  BayesNet net;
  Labels labels;
  Subset observed;
};
BayesNetFile parse_bayes_net(std::string_view text);
std::string format_bayes_net(const BayesNetFile& file);

// Lines `I(S:T|R)=0` (the `|R` part optional); '#' starts a comment.
std::vector<CIConstraint> parse_ci(std::string_view text, const Labels& labels);
std::string format_ci(const std::vector<CIConstraint>& constraints, const Labels& labels);

}  // namespace entropic::io
