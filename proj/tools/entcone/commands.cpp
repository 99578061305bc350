#include "commands.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "entropic/analytic.hpp"
#include "entropic/cones.hpp"
#include "entropic/entropy.hpp"
#include "entropic/error.hpp"
#include "entropic/fixtures.hpp"
#include "entropic/io/inequality_format.hpp"
#include "entropic/io/json_formats.hpp"
#include "entropic/marginal_lp.hpp"

namespace entcone {

using namespace entropic;
using Json = nlohmann::ordered_json;

namespace {

struct Config {
  std::optional<int> n;
  std::string ci_file;
  std::string bayes_file;
  std::string redundancy = "exact";
  double tolerance = 1e-9;
  int threads = 1;
  std::size_t budget = 10'000'000;
  std::size_t cap = kDefaultJointOutcomeCap;
  bool json = false;
  std::string export_format;
  std::string output;
  std::string scenario;
  std::vector<std::string> inputs;
};

std::string read_file(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ParseError("cannot write " + path);
  out << text;
}

std::string number_text(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10Lg", v);
  std::string s = buf;
  return s == "-0" ? "0" : s;
}

bool looks_like_json(const std::string& text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && (text[pos] == '{' || text[pos] == '"');
}

Json parse_json_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

io::ScenarioFile load_scenario(const std::string& arg) {
  if (auto s = named_scenario(arg)) return io::ScenarioFile{*s, Labels(s->n())};
  return io::parse_scenario(read_file(arg));
}

// Entropy-valued or exact values on a scenario, as read by check and extend.
struct Values {
  io::ScenarioFile scenario;
  bool exact = true;
  std::optional<PartialRankVector> rational;
  std::optional<EntropyVector> entropies;
};

Values load_values(const std::string& path) {
  const std::string text = read_file(path);
  const Json j = parse_json_text(text);
  if (j.contains("tables")) {
    io::ModelFile model = io::parse_model(text);
    const Rational tolerance = model.exact ? Rational(0) : Rational(1, 1'000'000'000'000);
    EntropyVector h = marginal_entropy_vector(model.model, tolerance);
    return Values{model.scenario, false, std::nullopt, std::move(h)};
  }
  if (j.contains("values")) {
    io::PartialVectorFile file = io::parse_partial_vector(text);
    if (file.exact) return Values{file.scenario, true, file.values, std::nullopt};
    return Values{file.scenario, false, std::nullopt, to_entropy(file.values)};
  }
  throw ParseError(path + " is neither a marginal model nor a partial vector");
}

std::vector<CIConstraint> load_constraints(const Config& cfg, const Labels& labels, int n) {
  std::vector<CIConstraint> constraints;
  if (!cfg.bayes_file.empty()) {
    const io::BayesNetFile net = io::parse_bayes_net(read_file(cfg.bayes_file));
    if (net.net.n() != n) {
      throw DomainError("Bayes net has " + std::to_string(net.net.n()) + " vertices, expected " +
                        std::to_string(n));
    }
    constraints = local_markov_constraints(net.net);
  }
  if (!cfg.ci_file.empty()) {
    for (const auto& c : io::parse_ci(read_file(cfg.ci_file), labels)) constraints.push_back(c);
  }
  return constraints;
}

std::string describe_row(const InequalitySystem& system, std::size_t i, const Labels& labels) {
  return io::format_inequality(system.rows()[i], labels);
}

// ---------------------------------------------------------------- project

int cmd_project(const Config& cfg, std::ostream& out) {
  std::optional<io::ScenarioFile> scenario;
  std::optional<io::BayesNetFile> net;
  if (!cfg.bayes_file.empty()) net = io::parse_bayes_net(read_file(cfg.bayes_file));
  if (!cfg.inputs.empty()) {
    scenario = load_scenario(cfg.inputs.front());
  } else if (net) {
    const Subset observed = net->observed;
    scenario = io::ScenarioFile{Scenario::downward_close(std::vector<Subset>{observed}, net->net.n()),
                                net->labels};
  } else {
    throw DomainError("project needs a scenario (file or name) or --bayes");
  }
  const int n = scenario->scenario.n();
  if (cfg.n && *cfg.n != n) throw DomainError("--n does not match the scenario");
  const std::vector<CIConstraint> constraints = load_constraints(cfg, scenario->labels, n);

  ProjectOptions options;
  options.final_pass = parse_redundancy(cfg.redundancy);
  options.threads = cfg.threads;
  options.budget = cfg.budget;
  const InequalitySystem system = project_cone(n, scenario->scenario, constraints, options);

  std::vector<std::string> notes{"projection of the polymatroid cone onto the scenario",
                                 "redundancy: " + cfg.redundancy};
  if (!constraints.empty()) {
    notes.push_back("constraints: " + std::to_string(constraints.size()));
  }
  const std::string text = io::format_inequalities(system, scenario->labels, notes);
  const bool porta = cfg.export_format == "porta";
  if (!cfg.export_format.empty() && !porta) {
    throw DomainError("unknown export format '" + cfg.export_format + "'");
  }
  if (!cfg.output.empty()) {
    write_file(cfg.output, text);
    if (porta) {
      std::string path = cfg.output;
      const auto dot = path.rfind('.');
      if (dot != std::string::npos && path.find('/', dot) == std::string::npos) path.resize(dot);
      write_file(path + ".ieq", io::format_porta(system));
    }
  }
  if (cfg.json) {
    Json j;
    j["command"] = "project";
    j["n"] = n;
    j["rows"] = system.rows().size();
    Json rows = Json::array();
    for (const auto& row : system.rows()) rows.push_back(io::format_inequality(row, scenario->labels));
    j["inequalities"] = rows;
    out << j.dump(2) << "\n";
  } else if (cfg.output.empty()) {
    out << text;
    if (porta) out << "\n" << io::format_porta(system);
  } else {
    out << "wrote " << system.rows().size() << " rows to " << cfg.output << "\n";
  }
  return kOk;
}

// ---------------------------------------------------------------- check

int cmd_check(const Config& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 2) throw DomainError("check needs <model-or-vector> <inequalities>");
  const Values values = load_values(cfg.inputs[0]);
  const Labels& labels = values.scenario.labels;
  const io::InequalityFile file = io::parse_inequalities(read_file(cfg.inputs[1]), &labels);
  const Scenario& scenario = values.scenario.scenario;
  for (const auto& row : file.system.rows()) {
    for (Subset s : row.support()) {
      if (!s.empty() && !scenario.contains(s)) {
        throw DomainError("coordinate mismatch: H(" + labels.format(s) +
                          ") is not a member of the input's scenario");
      }
    }
  }
  const long double tol = values.exact ? 0.0L : static_cast<long double>(cfg.tolerance);
  struct RowResult {
    std::string row;
    std::string value;
    bool violated;
  };
  std::vector<RowResult> results;
  std::size_t violations = 0;
  for (const auto& row : file.system.rows()) {
    RowResult r{io::format_inequality(row, labels), "", false};
    if (values.exact) {
      const Rational v = row.evaluate<Rational>(
          [&](Subset s) { return s.empty() ? Rational(0) : (*values.rational)[s]; });
      r.value = to_string(v);
      r.violated = row.is_equality() ? v != 0 : sgn(v) < 0;
    } else {
      const long double v = row.evaluate<long double>(
          [&](Subset s) { return s.empty() ? 0.0L : (*values.entropies)[s]; });
      r.value = number_text(v);
      r.violated = row.is_equality() ? (v > tol || v < -tol) : v < -tol;
    }
    if (r.violated) ++violations;
    results.push_back(std::move(r));
  }
  const bool passes = violations == 0;
  if (cfg.json) {
    Json j;
    j["command"] = "check";
    j["verdict"] = passes ? "PASSES" : "CONTEXTUAL";
    j["exact"] = values.exact;
    Json rows = Json::array();
    for (const auto& r : results) {
      rows.push_back(Json{{"inequality", r.row}, {"value", r.value}, {"violated", r.violated}});
    }
    j["rows"] = rows;
    out << j.dump(2) << "\n";
  } else {
    out << "# " << (values.exact ? "exact check" : "entropic check, tolerance " +
                                                        number_text(cfg.tolerance))
        << ", " << results.size() << " rows\n";
    for (std::size_t i = 0; i < results.size(); ++i) {
      out << (results[i].violated ? "VIOLATED " : "ok       ") << results[i].value << "  "
          << results[i].row << "\n";
    }
    if (passes) {
      out << "PASSES\n";
    } else {
      out << "CONTEXTUAL: " << violations << " violated row" << (violations == 1 ? "" : "s")
          << "\n";
      for (const auto& r : results) {
        if (r.violated) out << "  slack " << r.value << "  " << r.row << "\n";
      }
    }
  }
  return passes ? kOk : kViolation;
}

// ---------------------------------------------------------------- extend

int cmd_extend(const Config& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw DomainError("extend needs one partial-vector or model file");
  const Values values = load_values(cfg.inputs[0]);
  const int n = values.scenario.scenario.n();
  if (cfg.n && *cfg.n != n) throw DomainError("--n does not match the scenario");
  const Labels& labels = values.scenario.labels;
  const std::vector<CIConstraint> constraints = load_constraints(cfg, labels, n);

  PartialRankVector partial = values.exact ? *values.rational : PartialRankVector(values.scenario.scenario);
  Rational slack = 0;
  if (!values.exact) {
    for (Subset s : values.scenario.scenario.nonempty_members()) {
      partial.set(s, exact_rational((*values.entropies)[s]));
    }
    slack = exact_rational(static_cast<long double>(cfg.tolerance));
  }
  const ExtensionResult result = extend_partial(partial, constraints, slack);

  if (cfg.json) {
    Json j;
    j["command"] = "extend";
    j["verdict"] = result.feasible ? "FEASIBLE" : "INFEASIBLE";
    if (result.feasible) {
      Json ext = Json::object();
      for (Subset s : all_subsets(n)) {
        if (!s.empty()) ext[labels.format(s)] = to_string((*result.extension)[s]);
      }
      j["extension"] = ext;
    } else {
      j["violated"] = io::format_inequality(*result.violated, labels);
      j["value"] = to_string(result.violation);
    }
    out << j.dump(2) << "\n";
  } else if (result.feasible) {
    out << "FEASIBLE\n";
    for (Subset s : all_subsets(n)) {
      if (!s.empty()) out << "H(" << labels.format(s) << ") = " << to_string((*result.extension)[s]) << "\n";
    }
  } else {
    out << "INFEASIBLE\n";
    out << "violated: " << io::format_inequality(*result.violated, labels) << "\n";
    out << "value at input: " << to_string(result.violation) << "\n";
  }
  return result.feasible ? kOk : kViolation;
}

// ---------------------------------------------------------------- prove

int cmd_prove(const Config& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw DomainError("prove needs one inequality file");
  const io::InequalityFile file = io::parse_inequalities(read_file(cfg.inputs[0]));
  const int n = cfg.n.value_or(file.system.n());
  if (n < file.system.n()) throw DomainError("--n is smaller than the inequality file's ground set");
  const Labels labels = file.labels.size() == n ? file.labels : Labels(n);
  const std::vector<CIConstraint> constraints = load_constraints(cfg, labels, n);

  bool all = true;
  Json report = Json::array();
  std::ostringstream text;
  for (const auto& row : file.system.rows()) {
    const ShannonVerdict verdict = prove_shannon(row, n, constraints);
    const bool verified = verify_verdict(verdict, row);
    all = all && verdict.provable;
    const std::string shown = io::format_inequality(row, labels);
    Json entry{{"inequality", shown},
               {"verdict", verdict.provable ? "PROVABLE" : "NOT PROVABLE"},
               {"verified", verified}};
    text << (verdict.provable ? "PROVABLE     " : "NOT PROVABLE ") << shown << "\n";
    if (verdict.provable) {
      Json cert = Json::array();
      for (const auto& [i, y] : verdict.certificate.multipliers) {
        const std::string r = describe_row(verdict.system, i, labels);
        text << "  " << to_string(y) << " x [" << r << "]\n";
        cert.push_back(Json{{"multiplier", to_string(y)}, {"row", r}});
      }
      entry["certificate"] = cert;
    } else {
      Json ray = Json::object();
      text << "  counterexample:";
      for (const auto& [s, v] : verdict.counterexample) {
        if (s.empty() || v == 0) continue;
        text << " H(" << labels.format(s) << ")=" << to_string(v);
        ray[labels.format(s)] = to_string(v);
      }
      text << "\n";
      entry["counterexample"] = ray;
    }
    text << "  certificate verified: " << (verified ? "yes" : "NO") << "\n";
    report.push_back(entry);
  }
  if (cfg.json) {
    out << Json{{"command", "prove"}, {"n", n}, {"results", report}}.dump(2) << "\n";
  } else {
    out << text.str();
  }
  return all ? kOk : kViolation;
}

// ---------------------------------------------------------------- marginal-lp

int cmd_marginal_lp(const Config& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw DomainError("marginal-lp needs one model file");
  const io::ModelFile file = io::parse_model(read_file(cfg.inputs[0]));
  const Rational tolerance = file.exact ? Rational(0) : Rational(1, 1'000'000'000'000);
  const CompatibilityReport report = check_compatibility(file.model, tolerance);
  if (!report.compatible()) {
    const auto& v = report.violations.front();
    throw DomainError("incompatible tables " + file.scenario.labels.format(v.larger) + " and " +
                      file.scenario.labels.format(v.smaller));
  }
  const MarginalLpResult result = marginal_lp(file.model, cfg.cap);
  const Labels& labels = file.scenario.labels;
  auto outcome_text = [&](Subset vars, const Outcome& o) {
    std::string s;
    const auto elems = vars.elements();
    for (std::size_t k = 0; k < elems.size(); ++k) {
      if (k) s += ",";
      s += file.names.outcomes[static_cast<std::size_t>(elems[k] - 1)][static_cast<std::size_t>(o[k])];
    }
    return s;
  };
  if (result.noncontextual) {
    const JointDistribution& joint = *result.joint;
    if (cfg.json) {
      Json table = Json::array();
      for (const auto& [o, p] : joint.probabilities()) {
        table.push_back(Json{{"outcome", outcome_text(joint.variables(), o)}, {"p", to_string(p)}});
      }
      out << Json{{"command", "marginal-lp"}, {"verdict", "NON-CONTEXTUAL"}, {"joint", table}}.dump(2)
          << "\n";
    } else {
      out << "NON-CONTEXTUAL (" << result.joint_outcomes << " joint outcomes)\n";
      for (const auto& [o, p] : joint.probabilities()) {
        out << "  P(" << outcome_text(joint.variables(), o) << ") = " << to_string(p) << "\n";
      }
    }
    return kOk;
  }
  const bool verified = verify_contextuality_certificate(file.model, result.certificate);
  if (cfg.json) {
    Json cert = Json::array();
    for (const auto& w : result.certificate) {
      cert.push_back(Json{{"member", labels.format(w.member)},
                          {"outcome", outcome_text(w.member, w.outcome)},
                          {"weight", to_string(w.weight)}});
    }
    out << Json{{"command", "marginal-lp"},
                {"verdict", "CONTEXTUAL"},
                {"certificate", cert},
                {"verified", verified}}
               .dump(2)
        << "\n";
  } else {
    out << "CONTEXTUAL (" << result.joint_outcomes << " joint outcomes)\n";
    out << "Farkas certificate:\n";
    for (const auto& w : result.certificate) {
      out << "  w(" << (w.member.empty() ? "{}" : labels.format(w.member)) << "; " << outcome_text(w.member, w.outcome)
          << ") = " << to_string(w.weight) << "\n";
    }
    out << "certificate verified: " << (verified ? "yes" : "NO") << "\n";
  }
  return kViolation;
}

// ---------------------------------------------------------------- entropy

int cmd_entropy(const Config& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw DomainError("entropy needs one distribution or model file");
  const std::string text = read_file(cfg.inputs[0]);
  const Json j = parse_json_text(text);
  std::string doc;
  if (j.contains("tables")) {
    const io::ModelFile file = io::parse_model(text);
    const Rational tolerance = file.exact ? Rational(0) : Rational(1, 1'000'000'000'000);
    doc = io::format_entropy_vector(marginal_entropy_vector(file.model, tolerance),
                                    file.scenario.labels);
  } else {
    const io::DistributionFile file = io::parse_distribution(text);
    if (file.distribution.variables() != Subset::full(file.n)) {
      throw DomainError("the distribution must cover every variable 1..n");
    }
    doc = io::format_entropy_vector(entropy_vector(file.distribution, cfg.threads), file.labels);
  }
  if (!cfg.output.empty()) write_file(cfg.output, doc);
  else out << doc;
  return kOk;
}

// ---------------------------------------------------------------- fixture

const std::vector<std::string>& fixture_names() {
  static const std::vector<std::string> names{
      "trianglebox", "trianglePuc", "correlated-triangle", "cycle-model-<n>", "zy-model",
      "fzy",         "zhang-yeung", "cycle-<n>",           "commoninfo",      "commoninfo2",
      "baynet",      "baynet-ci",   "baynet-pairwise-ci",  "c<n>",            "mzy",
      "full<n>"};
  return names;
}

std::optional<int> suffix_number(const std::string& name, const std::string& prefix) {
  if (!name.starts_with(prefix) || name.size() == prefix.size()) return std::nullopt;
  const std::string rest = name.substr(prefix.size());
  if (!std::all_of(rest.begin(), rest.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    return std::nullopt;
  }
  return std::stoi(rest);
}

io::ModelFile model_file(MarginalModel model) {
  const Scenario& scenario = model.scenario();
  const Labels labels(scenario.n());
  VariableNames names{labels, {}};
  const auto sizes = model.alphabet_sizes();
  const bool binary = std::all_of(sizes.begin(), sizes.end(), [](int s) { return s == 2; });
  for (int size : sizes) {
    std::vector<std::string> outcomes;
    if (binary) outcomes = {"heads", "tails"};
    else for (int k = 0; k < size; ++k) outcomes.push_back(std::to_string(k));
    names.outcomes.push_back(outcomes);
  }
  return io::ModelFile{io::ScenarioFile{scenario, labels}, names, std::move(model)};
}

std::string inequality_fixture(const LinearInequality& row, int n, std::vector<Subset> coords,
                               const std::string& note) {
  InequalitySystem system(n, std::move(coords));
  system.add(row);
  return io::format_inequalities(system, Labels(n), {note});
}

std::string fixture_text(const std::string& name) {
  if (name == "trianglebox") return io::format_model(model_file(trianglebox_model()));
  if (name == "trianglePuc") return io::format_model(model_file(triangle_puc_model()));
  if (name == "correlated-triangle") return io::format_model(model_file(correlated_triangle_model()));
  if (name == "zy-model") return io::format_model(model_file(realize_zy_model()));
  if (auto n = suffix_number(name, "cycle-model-")) {
    return io::format_model(model_file(cycle_model(*n)));
  }
  if (name == "fzy") {
    const PartialRankVector f = fzy_fixture();
    return io::format_partial_vector(io::PartialVectorFile{{f.scenario(), Labels(4)}, true, f});
  }
  if (name == "zhang-yeung") {
    return inequality_fixture(zhang_yeung(), 4, zy_scenario().nonempty_members(), "Zhang-Yeung inequality");
  }
  if (auto n = suffix_number(name, "cycle-")) {
    const InequalitySystem system = cycle_inequalities(*n);
    return io::format_inequalities(system, Labels(*n), {"cycle inequalities"});
  }
  const Subset observed = common_ancestor_observed();
  const Scenario observed_scenario = Scenario::downward_close(std::vector<Subset>{observed}, 6);
  if (name == "commoninfo") {
    return inequality_fixture(common_info(), 6, observed_scenario.nonempty_members(),
                              "common ancestor inequality");
  }
  if (name == "commoninfo2") {
    return inequality_fixture(common_info_pair(), 6, observed_scenario.nonempty_members(),
                              "pairwise common ancestor inequality");
  }
  if (name == "baynet") {
    return io::format_bayes_net(io::BayesNetFile{common_ancestor_net(), Labels(6), observed});
  }
  if (name == "baynet-ci") {
    return io::format_ci(local_markov_constraints(common_ancestor_net()), Labels(6));
  }
  if (name == "baynet-pairwise-ci") {
    return io::format_ci(common_ancestor_pairwise_constraints(), Labels(6));
  }
  if (auto s = named_scenario(name)) {
    return io::format_scenario(io::ScenarioFile{*s, Labels(s->n())});
  }
  throw DomainError("unknown fixture '" + name + "' (try 'fixture list')");
}

int cmd_fixture(const Config& cfg, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw DomainError("fixture needs a name");
  if (cfg.inputs[0] == "list") {
    for (const auto& name : fixture_names()) out << name << "\n";
    return kOk;
  }
  const std::string text = fixture_text(cfg.inputs[0]);
  if (!cfg.output.empty()) write_file(cfg.output, text);
  else out << text;
  return kOk;
}

// ---------------------------------------------------------------- convert

int cmd_convert(const Config& cfg, const std::string& to, std::ostream& out) {
  if (cfg.inputs.size() != 1) throw DomainError("convert needs one input file");
  const std::string text = read_file(cfg.inputs[0]);
  std::string result;
  const auto first = text.find_first_not_of(" \t\r\n");
  const bool porta_input = first != std::string::npos && text.compare(first, 3, "DIM") == 0;
  if (porta_input) {
    if (cfg.scenario.empty()) throw DomainError("PORTA input needs --scenario for its coordinates");
    const io::ScenarioFile scenario = load_scenario(cfg.scenario);
    const InequalitySystem system = io::parse_porta(text, scenario.scenario.n(),
                                                    scenario.scenario.nonempty_members());
    result = to == "porta" ? io::format_porta(system) : io::format_inequalities(system, scenario.labels);
  } else if (looks_like_json(text)) {
    if (to != "json") throw DomainError("JSON documents convert only to json");
    const Json j = parse_json_text(text);
    if (j.contains("tables")) result = io::format_model(io::parse_model(text));
    else if (j.contains("values")) result = io::format_partial_vector(io::parse_partial_vector(text));
    else if (j.contains("edges")) result = io::format_bayes_net(io::parse_bayes_net(text));
    else if (j.contains("table")) result = io::format_distribution(io::parse_distribution(text));
    else result = io::format_scenario(io::parse_scenario(text));
  } else if (text.find("I(") != std::string::npos && text.find("H(") == std::string::npos) {
    if (!cfg.n) throw DomainError("conditional-independence files need --n");
    result = io::format_ci(io::parse_ci(text, Labels(*cfg.n)), Labels(*cfg.n));
  } else {
    const io::InequalityFile file = io::parse_inequalities(text);
    if (to == "porta") result = io::format_porta(file.system);
    else if (to == "text") result = io::format_inequalities(file.system, file.labels, file.notes);
    else throw DomainError("inequality files convert to text or porta");
  }
  if (!cfg.output.empty()) write_file(cfg.output, result);
  else out << result;
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"entcone: entropic inequalities for marginal scenarios"};
  app.require_subcommand(1);
  Config cfg;
  std::string convert_to = "text";

  auto common = [&](CLI::App* sub) {
    sub->add_option("--n", cfg.n, "Ground-set size");
    sub->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_flag("--json", cfg.json, "Machine-readable JSON report");
    sub->add_option("-o,--output", cfg.output, "Write the main output to this file");
  };
  auto constraints = [&](CLI::App* sub) {
    sub->add_option("--ci", cfg.ci_file, "Conditional-independence file, lines I(S:T|R)=0");
    sub->add_option("--bayes", cfg.bayes_file, "Bayes-net file; adds its local Markov constraints");
  };

  auto* project = app.add_subcommand("project", "Facets of the projected polymatroid cone");
  project->add_option("scenario", cfg.inputs, "Scenario file or name (c3, mzy, full4)");
  project->add_option("--redundancy", cfg.redundancy, "Final redundancy pass")
      ->check(CLI::IsMember({"none", "pairwise", "exact"}));
  project->add_option("--budget", cfg.budget, "Fourier-Motzkin derived-row budget")
      ->check(CLI::PositiveNumber);
  project->add_option("--export", cfg.export_format, "Also emit another format (porta)")
      ->check(CLI::IsMember({"porta"}));
  common(project);
  constraints(project);

  auto* check = app.add_subcommand("check", "Evaluate inequalities on a model or partial vector");
  check->add_option("inputs", cfg.inputs, "<model-or-vector> <inequalities>")->expected(2);
  check->add_option("--tolerance", cfg.tolerance, "Tolerance for entropy-valued inputs (bits)")
      ->check(CLI::PositiveNumber);
  common(check);

  auto* extend = app.add_subcommand("extend", "Extend a partial vector to a polymatroid");
  extend->add_option("input", cfg.inputs, "Partial-vector or model file")->expected(1);
  extend->add_option("--tolerance", cfg.tolerance, "Slack for entropy-valued inputs (bits)")
      ->check(CLI::PositiveNumber);
  common(extend);
  constraints(extend);

  auto* prove = app.add_subcommand("prove", "Decide Shannon-type validity of inequalities");
  prove->add_option("input", cfg.inputs, "Inequality file")->expected(1);
  common(prove);
  constraints(prove);

  auto* mlp = app.add_subcommand("marginal-lp", "Exact marginal-problem LP");
  mlp->add_option("input", cfg.inputs, "Marginal-model file")->expected(1);
  mlp->add_option("--cap", cfg.cap, "Maximum number of joint outcomes")->check(CLI::PositiveNumber);
  common(mlp);

  auto* entropy = app.add_subcommand("entropy", "Entropy vector of a distribution or model");
  entropy->add_option("input", cfg.inputs, "Distribution or marginal-model file")->expected(1);
  common(entropy);

  auto* fixture = app.add_subcommand("fixture", "Emit a named fixture ('list' for names)");
  fixture->add_option("name", cfg.inputs, "Fixture name")->expected(1);
  common(fixture);

  auto* convert = app.add_subcommand("convert", "Translate between file formats");
  convert->add_option("input", cfg.inputs, "Input file")->expected(1);
  convert->add_option("--to", convert_to, "text | porta | json")
      ->check(CLI::IsMember({"text", "porta", "json"}));
  convert->add_option("--scenario", cfg.scenario, "Scenario giving PORTA coordinates");
  common(convert);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kError;
  }

  try {
    if (project->parsed()) return cmd_project(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out);
    if (extend->parsed()) return cmd_extend(cfg, out);
    if (prove->parsed()) return cmd_prove(cfg, out);
    if (mlp->parsed()) return cmd_marginal_lp(cfg, out);
    if (entropy->parsed()) return cmd_entropy(cfg, out);
    if (fixture->parsed()) return cmd_fixture(cfg, out);
    if (convert->parsed()) return cmd_convert(cfg, convert_to, out);
  } catch (const BudgetExhausted& e) {
    err << "budget exhausted: " << e.what() << "\n";
    return kBudgetExhausted;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}

}  // namespace entcone
