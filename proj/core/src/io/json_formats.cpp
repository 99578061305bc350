#include "entropic/io/json_formats.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "entropic/error.hpp"
#include "entropic/fixtures.hpp"

namespace entropic::io {

using Json = nlohmann::ordered_json;

namespace {

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

template <class F>
auto guarded(const char* what, F&& body) {
  try {
    return body();
  } catch (const Json::exception& e) {
    throw ParseError(std::string("malformed ") + what + ": " + e.what());
  }
}

int element_of(const Json& j, const Labels& labels) {
  if (j.is_number_integer()) {
    const int e = j.get<int>();
    if (e < 1 || e > labels.size()) throw DomainError("element " + std::to_string(e) + " out of range");
    return e;
  }
  if (j.is_string()) {
    if (auto e = labels.find(j.get<std::string>())) return *e;
    throw ParseError("unknown label '" + j.get<std::string>() + "'");
  }
  throw ParseError("expected a label or 1-based index, got " + j.dump());
}

Subset subset_of(const Json& j, const Labels& labels) {
  if (j.is_string()) {
    const auto text = j.get<std::string>();
    return text.empty() ? Subset{} : labels.parse(text);
  }
  if (!j.is_array()) throw ParseError("expected an array of labels, got " + j.dump());
  Subset s;
  for (const auto& e : j) s = s.with(element_of(e, labels));
  return s;
}

Json subset_json(Subset s, const Labels& labels) {
  Json out = Json::array();
  for (int e : s.elements()) out.push_back(labels.name(e));
  return out;
}

// Rationals are strings; plain JSON numbers are accepted and read exactly
// from their decimal text. `inexact` is set when a number was seen.
Rational rational_of(const Json& j, bool* inexact = nullptr) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.dump());
  if (j.is_number()) {
    if (inexact) *inexact = true;
    return parse_rational(j.dump());
  }
  throw ParseError("expected a number or rational string, got " + j.dump());
}

Labels labels_of(const Json& j, int* n) {
  if (j.contains("labels")) {
    Labels labels(j.at("labels").get<std::vector<std::string>>());
    if (j.contains("n") && j.at("n").get<int>() != labels.size()) {
      throw ParseError("'n' does not match the number of labels");
    }
    *n = labels.size();
    return labels;
  }
  *n = j.at("n").get<int>();
  if (*n < 0 || *n > kDefaultMaxGroundSet) throw DomainError("n out of range");
  return Labels(*n);
}

ScenarioFile scenario_of(const Json& j) {
  if (j.is_string()) {
    const auto name = j.get<std::string>();
    auto scenario = named_scenario(name);
    if (!scenario) throw ParseError("unknown scenario name '" + name + "'");
    return ScenarioFile{*scenario, Labels(scenario->n())};
  }
  int n = 0;
  Labels labels = labels_of(j, &n);
  std::vector<Subset> generators;
  for (const auto& g : j.at("generators")) generators.push_back(subset_of(g, labels));
  return ScenarioFile{Scenario::downward_close(generators, n), labels};
}

Json scenario_json(const ScenarioFile& file) {
  Json j;
  j["n"] = file.scenario.n();
  j["labels"] = file.labels.names();
  Json gens = Json::array();
  for (Subset g : file.scenario.generators()) gens.push_back(subset_json(g, file.labels));
  j["generators"] = gens;
  return j;
}

// Reads "variables" into names (outcome names per element) and sizes.
void variables_of(const Json& j, const Labels& labels, VariableNames& names,
                  std::vector<int>& sizes, Subset* listed) {
  for (const auto& v : j) {
    const int e = element_of(v.at("name"), labels);
    auto& outcomes = names.outcomes[static_cast<std::size_t>(e - 1)];
    outcomes.clear();
    if (v.contains("outcomes")) {
      for (const auto& o : v.at("outcomes")) {
        outcomes.push_back(o.is_string() ? o.get<std::string>() : o.dump());
      }
    } else {
      const int size = v.at("size").get<int>();
      if (size < 1) throw DomainError("alphabet size must be positive");
      for (int k = 0; k < size; ++k) outcomes.push_back(std::to_string(k));
    }
    sizes[static_cast<std::size_t>(e - 1)] = static_cast<int>(outcomes.size());
    if (listed) *listed = listed->with(e);
  }
}

int outcome_of(const Json& j, const std::vector<std::string>& outcomes) {
  if (j.is_number_integer()) {
    const int k = j.get<int>();
    if (k < 0 || k >= static_cast<int>(outcomes.size())) {
      throw DomainError("outcome index " + std::to_string(k) + " out of range");
    }
    return k;
  }
  const auto name = j.get<std::string>();
  for (std::size_t k = 0; k < outcomes.size(); ++k) {
    if (outcomes[k] == name) return static_cast<int>(k);
  }
  throw ParseError("unknown outcome '" + name + "'");
}

JointDistribution table_of(const Json& j, Subset vars, const VariableNames& names,
                           const std::vector<int>& sizes, bool* inexact) {
  const std::vector<int> elems = vars.elements();
  std::vector<int> table_sizes;
  for (int e : elems) table_sizes.push_back(sizes[static_cast<std::size_t>(e - 1)]);
  std::map<Outcome, Rational> probs;
  bool local_inexact = false;
  for (const auto& row : j) {
    const Json& outcome = row.at("outcome");
    if (!outcome.is_array() || outcome.size() != elems.size()) {
      throw ParseError("outcome " + outcome.dump() + " does not have one entry per variable");
    }
    Outcome o;
    for (std::size_t k = 0; k < elems.size(); ++k) {
      o.push_back(outcome_of(outcome[k], names.outcomes[static_cast<std::size_t>(elems[k] - 1)]));
    }
    probs[o] += rational_of(row.at("p"), &local_inexact);
  }
  if (local_inexact && inexact) *inexact = true;
  const Rational tolerance = local_inexact ? Rational(1, 1'000'000'000'000) : Rational(0);
  return JointDistribution(vars, table_sizes, std::move(probs), tolerance);
}

Json table_json(const JointDistribution& dist, const VariableNames& names) {
  const std::vector<int> elems = dist.variables().elements();
  Json rows = Json::array();
  for (const auto& [o, p] : dist.probabilities()) {
    Json outcome = Json::array();
    for (std::size_t k = 0; k < elems.size(); ++k) {
      outcome.push_back(names.outcomes[static_cast<std::size_t>(elems[k] - 1)][static_cast<std::size_t>(o[k])]);
    }
    rows.push_back(Json{{"outcome", outcome}, {"p", to_string(p)}});
  }
  return rows;
}

Json variables_json(Subset vars, const VariableNames& names) {
  Json out = Json::array();
  for (int e : vars.elements()) {
    out.push_back(Json{{"name", names.labels.name(e)},
                       {"outcomes", names.outcomes[static_cast<std::size_t>(e - 1)]}});
  }
  return out;
}

VariableNames default_names(const Labels& labels, const std::vector<int>& sizes) {
  VariableNames names{labels, {}};
  for (int size : sizes) {
    std::vector<std::string> outcomes;
    for (int k = 0; k < size; ++k) outcomes.push_back(std::to_string(k));
    names.outcomes.push_back(outcomes);
  }
  return names;
}

std::string long_double_text(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15Lg", v);
  std::string s = buf;
  return s == "-0" ? "0" : s;
}

}  // namespace

ScenarioFile parse_scenario(std::string_view text) {
  const Json j = parse_json(text);
  return guarded("scenario", [&] { return scenario_of(j.contains("scenario") ? j.at("scenario") : j); });
}

std::string format_scenario(const ScenarioFile& file) { return scenario_json(file).dump(2) + "\n"; }

DistributionFile parse_distribution(std::string_view text) {
  const Json j = parse_json(text);
  return guarded("distribution", [&] {
    int n = 0;
    Labels labels;
    if (j.contains("n") || j.contains("labels")) {
      labels = labels_of(j, &n);
    } else {
      n = static_cast<int>(j.at("variables").size());
      labels = Labels(n);
    }
    std::vector<int> sizes(static_cast<std::size_t>(n), 1);
    VariableNames names = default_names(labels, sizes);
    Subset vars;
    variables_of(j.at("variables"), labels, names, sizes, &vars);
    JointDistribution dist = table_of(j.at("table"), vars, names, sizes, nullptr);
    return DistributionFile{n, labels, names, std::move(dist)};
  });
}

std::string format_distribution(const DistributionFile& file) {
  Json j;
  j["n"] = file.n;
  j["labels"] = file.labels.names();
  j["variables"] = variables_json(file.distribution.variables(), file.names);
  j["table"] = table_json(file.distribution, file.names);
  return j.dump(2) + "\n";
}

ModelFile parse_model(std::string_view text) {
  const Json j = parse_json(text);
  return guarded("marginal model", [&] {
    ScenarioFile scenario = scenario_of(j.at("scenario"));
    const int n = scenario.scenario.n();
    std::vector<int> sizes(static_cast<std::size_t>(n), 0);
    if (!j.contains("variables")) {
      // Integer outcomes only: alphabet sizes are inferred from the largest index.
      for (const auto& t : j.at("tables")) {
        const Subset member = subset_of(t.at("member"), scenario.labels);
        const auto elems = member.elements();
        for (const auto& row : t.at("table")) {
          for (std::size_t k = 0; k < elems.size() && k < row.at("outcome").size(); ++k) {
            auto& size = sizes[static_cast<std::size_t>(elems[k] - 1)];
            size = std::max(size, row.at("outcome")[k].get<int>() + 1);
          }
        }
      }
      for (auto& size : sizes) size = std::max(size, 1);
    }
    VariableNames names = default_names(scenario.labels, sizes);
    if (j.contains("variables")) variables_of(j.at("variables"), scenario.labels, names, sizes, nullptr);

    std::map<Subset, JointDistribution, CanonicalLess> tables;
    bool inexact = false;
    for (const auto& t : j.at("tables")) {
      const Subset member = subset_of(t.at("member"), scenario.labels);
      if (!scenario.scenario.contains(member)) {
        throw DomainError("table for " + scenario.labels.format(member) + " is not a scenario member");
      }
      for (int e : member.elements()) {
        if (sizes[static_cast<std::size_t>(e - 1)] < 1) {
          throw ParseError("no alphabet given for " + scenario.labels.name(e));
        }
      }
      if (!tables.emplace(member, table_of(t.at("table"), member, names, sizes, &inexact)).second) {
        throw ParseError("duplicate table for " + scenario.labels.format(member));
      }
    }
    std::vector<JointDistribution> generator_tables;
    bool only_generators = tables.size() == scenario.scenario.generators().size();
    for (Subset g : scenario.scenario.generators()) {
      auto it = tables.find(g);
      if (it == tables.end()) throw ParseError("missing table for generator " + scenario.labels.format(g));
      generator_tables.push_back(it->second);
    }
    if (!only_generators) {
      if (!tables.contains(Subset{})) tables.emplace(Subset{}, JointDistribution::trivial());
    }
    MarginalModel model = only_generators
                              ? MarginalModel::from_generators(scenario.scenario, generator_tables)
                              : MarginalModel::from_tables(scenario.scenario, tables);
    ModelFile file{scenario, names, std::move(model)};
    file.exact = !inexact;
    return file;
  });
}

std::string format_model(const ModelFile& file) {
  Json j;
  j["scenario"] = scenario_json(file.scenario);
  j["variables"] = variables_json(Subset::full(file.scenario.scenario.n()), file.names);
  Json tables = Json::array();
  for (Subset g : file.scenario.scenario.generators()) {
    tables.push_back(Json{{"member", subset_json(g, file.scenario.labels)},
                          {"table", table_json(file.model.table(g), file.names)}});
  }
  j["tables"] = tables;
  return j.dump(2) + "\n";
}

PartialVectorFile parse_partial_vector(std::string_view text) {
  const Json j = parse_json(text);
  return guarded("partial vector", [&] {
    ScenarioFile scenario = scenario_of(j.at("scenario"));
    const bool exact = j.value("exact", true);
    PartialRankVector values{scenario.scenario};
    std::vector<bool> seen(scenario.scenario.size(), false);
    for (const auto& [key, value] : j.at("values").items()) {
      const Subset s = scenario.labels.parse(key);
      const int index = scenario.scenario.index_of(s);
      if (index < 0) throw DomainError(key + " is not a scenario member");
      bool inexact = false;
      Rational v = rational_of(value, &inexact);
      if (exact && inexact) {
        throw ParseError("exact vector has a non-integer JSON number for " + key +
                         "; write it as a string");
      }
      values.set(s, std::move(v));
      seen[static_cast<std::size_t>(index)] = true;
    }
    for (std::size_t k = 1; k < seen.size(); ++k) {
      if (!seen[k]) {
        throw ParseError("missing value for " + scenario.labels.format(scenario.scenario.members()[k]));
      }
    }
    return PartialVectorFile{scenario, exact, std::move(values)};
  });
}

std::string format_partial_vector(const PartialVectorFile& file) {
  Json j;
  j["scenario"] = scenario_json(file.scenario);
  j["exact"] = file.exact;
  Json values = Json::object();
  for (Subset s : file.scenario.scenario.nonempty_members()) {
    values[file.scenario.labels.format(s)] = to_string(file.values[s]);
  }
  j["values"] = values;
  return j.dump(2) + "\n";
}

std::string format_entropy_vector(const EntropyVector& values, const Labels& labels) {
  Json j;
  j["scenario"] = scenario_json(ScenarioFile{values.scenario(), labels});
  j["exact"] = false;
  Json out = Json::object();
  for (Subset s : values.scenario().nonempty_members()) {
    out[labels.format(s)] = long_double_text(values[s]);
  }
  j["values"] = out;
  return j.dump(2) + "\n";
}

BayesNetFile parse_bayes_net(std::string_view text) {
  const Json j = parse_json(text);
  return guarded("Bayes net", [&] {
    int n = 0;
    Labels labels = labels_of(j, &n);
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair, got " + e.dump());
      edges.emplace_back(element_of(e[0], labels), element_of(e[1], labels));
    }
    Subset observed = j.contains("observed") ? subset_of(j.at("observed"), labels) : Subset::full(n);
    return BayesNetFile{BayesNet(n, std::move(edges)), labels, observed};
  });
}

std::string format_bayes_net(const BayesNetFile& file) {
  Json j;
  j["n"] = file.net.n();
  j["labels"] = file.labels.names();
  Json edges = Json::array();
  for (const auto& [u, v] : file.net.edges()) {
    edges.push_back(Json::array({file.labels.name(u), file.labels.name(v)}));
  }
  j["edges"] = edges;
  j["observed"] = subset_json(file.observed, file.labels);
  return j.dump(2) + "\n";
}

std::vector<CIConstraint> parse_ci(std::string_view text, const Labels& labels) {
  std::vector<CIConstraint> out;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    std::string line;
    for (char c : raw.substr(0, raw.find('#'))) {
      if (!std::isspace(static_cast<unsigned char>(c))) line += c;
    }
    if (line.empty()) continue;
    const auto fail = [&] { return ParseError("expected I(S:T|R)=0, got: " + raw); };
    if (!line.starts_with("I(")) throw fail();
    const auto close = line.find(')');
    if (close == std::string::npos) throw fail();
    const std::string tail = line.substr(close + 1);
    if (tail != "=0" && tail != "==0") throw fail();
    const std::string body = line.substr(2, close - 2);
    const auto colon = body.find(':');
    if (colon == std::string::npos) throw fail();
    const auto bar = body.find('|', colon);
    const std::string s = body.substr(0, colon);
    const std::string t = body.substr(colon + 1, bar == std::string::npos ? std::string::npos : bar - colon - 1);
    const std::string r = bar == std::string::npos ? std::string{} : body.substr(bar + 1);
    if (s.empty() || t.empty()) throw fail();
    out.push_back(CIConstraint::make(labels.parse(s), labels.parse(t),
                                     r.empty() ? Subset{} : labels.parse(r)));
  }
  return out;
}

std::string format_ci(const std::vector<CIConstraint>& constraints, const Labels& labels) {
  std::string out;
  for (const auto& c : constraints) {
    out += "I(" + labels.format(c.s) + ":" + labels.format(c.t);
    if (!c.r.empty()) out += "|" + labels.format(c.r);
    out += ")=0\n";
  }
  return out;
}

}  // namespace entropic::io
