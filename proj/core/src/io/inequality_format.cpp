#include "entropic/io/inequality_format.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>

#include "entropic/error.hpp"

namespace entropic::io {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string> split_words(std::string_view s) {
  std::vector<std::string> out;
  std::istringstream in{std::string(s)};
  for (std::string w; in >> w;) out.push_back(w);
  return out;
}

std::string format_coordinate(Subset s, const Labels& labels) {
  return s.empty() ? "{}" : labels.format(s);
}

Subset parse_coordinate(std::string_view text, const Labels& labels) {
  return text == "{}" ? Subset{} : labels.parse(text);
}

struct Relation {
  std::size_t pos;
  std::size_t length;
  Sense sense;
  bool flip;
};

Relation find_relation(std::string_view line) {
  for (const auto& [token, sense, flip] :
       {std::tuple{">=", Sense::kGreaterEqual, false}, std::tuple{"<=", Sense::kGreaterEqual, true},
        std::tuple{"==", Sense::kEqual, false}}) {
    if (auto pos = line.find(token); pos != std::string_view::npos) {
      return {pos, 2, sense, flip};
    }
  }
  if (auto pos = line.find('='); pos != std::string_view::npos) {
    return {pos, 1, Sense::kEqual, false};
  }
  throw ParseError("missing relation (>=, <= or ==) in: " + std::string(line));
}

// Parses `[sign] [coef] [*] <atom>` terms; `atom` consumes the variable part.
template <class Atom>
std::map<Subset, Rational, CanonicalLess> parse_terms(std::string_view text, Atom&& atom) {
  std::map<Subset, Rational, CanonicalLess> coeffs;
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  bool first = true;
  skip_space();
  if (trim(text.substr(i)) == "0") return coeffs;
  while (true) {
    skip_space();
    if (i >= text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_space();
    } else if (!first) {
      throw ParseError("expected '+' or '-' before term in: " + std::string(text));
    }
    first = false;
    std::size_t start = i;
    while (i < text.size() &&
           (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/' || text[i] == '.')) {
      ++i;
    }
    Rational coef = 1;
    if (i > start) coef = parse_rational(text.substr(start, i - start));
    skip_space();
    if (i < text.size() && text[i] == '*') {
      ++i;
      skip_space();
    }
    const Subset s = atom(text, i);
    coeffs[s] += sign * coef;
  }
  if (first) throw ParseError("empty left-hand side");
  return coeffs;
}

}  // namespace

std::string format_inequality(const LinearInequality& row, const Labels& labels) {
  std::string out;
  bool first = true;
  for (const auto& [s, c] : row.terms()) {
    const bool negative = sgn(c) < 0;
    const Integer magnitude = abs(c);
    if (first) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    out += magnitude.get_str() + "*H(" + labels.format(s) + ")";
    first = false;
  }
  if (first) out = "0";
  out += row.is_equality() ? " == 0" : " >= 0";
  return out;
}

std::string format_inequalities(const InequalitySystem& system, const Labels& labels,
                                const std::vector<std::string>& notes) {
  std::string out;
  out += "# n: " + std::to_string(system.n()) + "\n";
  out += "# labels:";
  for (const auto& name : labels.names()) out += " " + name;
  out += "\n# coordinates:";
  for (Subset s : system.coordinates()) out += " " + format_coordinate(s, labels);
  out += "\n# rows: " + std::to_string(system.rows().size()) + "\n";
  for (const auto& note : notes) out += "# " + note + "\n";
  for (const auto& row : system.rows()) out += format_inequality(row, labels) + "\n";
  return out;
}

LinearInequality parse_inequality(std::string_view line, const Labels& labels) {
  line = trim(line);
  const Relation rel = find_relation(line);
  if (trim(line.substr(rel.pos + rel.length)) != "0") {
    throw ParseError("right-hand side must be 0 in: " + std::string(line));
  }
  auto atom = [&](std::string_view text, std::size_t& i) {
    if (text.substr(i, 2) != "H(") throw ParseError("expected H(...) in: " + std::string(text));
    const std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw ParseError("unclosed H( in: " + std::string(text));
    const std::string_view label = trim(text.substr(i + 2, close - i - 2));
    i = close + 1;
    return label.empty() ? Subset{} : labels.parse(label);
  };
  auto coeffs = parse_terms(line.substr(0, rel.pos), atom);
  if (rel.flip) {
    for (auto& [s, c] : coeffs) c = -c;
  }
  return LinearInequality(coeffs, rel.sense);
}

InequalityFile parse_inequalities(std::string_view text, const Labels* labels) {
  std::optional<int> n;
  std::optional<Labels> header_labels;
  std::vector<std::string> coordinate_words;
  bool have_coordinates = false;
  std::vector<std::string> notes;
  std::vector<std::string> rows;

  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.front() != '#') {
      rows.emplace_back(line);
      continue;
    }
    line = trim(line.substr(1));
    auto header = [&](std::string_view key) {
      return line.starts_with(key) ? std::optional(trim(line.substr(key.size()))) : std::nullopt;
    };
    if (auto v = header("n:")) {
      try {
        n = std::stoi(std::string(*v));
      } catch (const std::exception&) {
        throw ParseError("bad n header: " + std::string(*v));
      }
    } else if (auto v = header("labels:")) {
      header_labels = Labels(split_words(*v));
    } else if (auto v = header("coordinates:")) {
      coordinate_words = split_words(*v);
      have_coordinates = true;
    } else if (!header("rows:")) {
      notes.emplace_back(line);
    }
  }

  Labels effective;
  if (header_labels) effective = *header_labels;
  else if (labels) effective = *labels;
  else effective = Labels(n.value_or(kDefaultMaxGroundSet));

  std::vector<LinearInequality> parsed;
  for (const auto& row : rows) parsed.push_back(parse_inequality(row, effective));

  std::vector<Subset> coordinates;
  if (have_coordinates) {
    for (const auto& w : coordinate_words) coordinates.push_back(parse_coordinate(w, effective));
  } else {
    for (const auto& row : parsed) {
      for (Subset s : row.support()) coordinates.push_back(s);
    }
    std::sort(coordinates.begin(), coordinates.end(), CanonicalLess{});
    coordinates.erase(std::unique(coordinates.begin(), coordinates.end()), coordinates.end());
  }
  if (!n) {
    if (header_labels || labels) {
      n = effective.size();
    } else {
      int top = 0;
      for (Subset s : coordinates) top = std::max(top, s.max_element());
      n = top;
    }
  }
  if (header_labels && header_labels->size() != *n) {
    throw ParseError("labels header does not match n");
  }
  if (!header_labels && !labels) effective = Labels(*n);

  InequalityFile file{InequalitySystem(*n, coordinates), effective, notes};
  for (const auto& row : parsed) file.system.add(row);
  return file;
}

std::string format_porta(const InequalitySystem& system) {
  const auto& coords = system.coordinates();
  std::string out = "DIM = " + std::to_string(coords.size()) + "\n\nINEQUALITIES_SECTION\n";
  std::size_t index = 0;
  for (const auto& row : system.rows()) {
    std::string line = "(" + std::to_string(++index) + ") ";
    for (const auto& [s, c] : row.terms()) {
      const std::size_t k = system.coordinate_index(s) + 1;
      line += sgn(c) < 0 ? "-" : "+";
      const Integer magnitude = abs(c);
      if (magnitude != 1) line += magnitude.get_str();
      line += "x" + std::to_string(k);
    }
    if (row.is_trivial()) line += "0";
    line += row.is_equality() ? " == 0" : " >= 0";
    out += line + "\n";
  }
  out += "\nEND\n";
  return out;
}

InequalitySystem parse_porta(std::string_view text, int n, const std::vector<Subset>& coordinates) {
  InequalitySystem system(n, coordinates);
  std::istringstream in{std::string(text)};
  bool in_section = false;
  bool saw_dim = false;
  for (std::string raw; std::getline(in, raw);) {
    std::string_view line = trim(raw);
    if (line.empty()) continue;
    if (line.starts_with("DIM")) {
      const auto eq = line.find('=');
      if (eq == std::string_view::npos) throw ParseError("bad DIM line");
      const std::string value(trim(line.substr(eq + 1)));
      if (std::stoul(value) != coordinates.size()) {
        throw ParseError("DIM " + value + " does not match " + std::to_string(coordinates.size()) +
                         " coordinates");
      }
      saw_dim = true;
      continue;
    }
    if (line == "INEQUALITIES_SECTION") {
      in_section = true;
      continue;
    }
    if (line == "END") break;
    if (!in_section) continue;
    if (line.front() == '(') {
      const auto close = line.find(')');
      if (close == std::string_view::npos) throw ParseError("bad row index in: " + raw);
      line = trim(line.substr(close + 1));
    }
    const Relation rel = find_relation(line);
    if (trim(line.substr(rel.pos + rel.length)) != "0") {
      throw ParseError("right-hand side must be 0 in: " + raw);
    }
    auto atom = [&](std::string_view t, std::size_t& i) {
      if (i >= t.size() || t[i] != 'x') throw ParseError("expected x<k> in: " + raw);
      std::size_t j = ++i;
      while (i < t.size() && std::isdigit(static_cast<unsigned char>(t[i]))) ++i;
      if (i == j) throw ParseError("expected x<k> in: " + raw);
      const std::size_t k = std::stoul(std::string(t.substr(j, i - j)));
      if (k < 1 || k > coordinates.size()) throw ParseError("variable index out of range in: " + raw);
      return coordinates[k - 1];
    };
    auto coeffs = parse_terms(line.substr(0, rel.pos), atom);
    if (rel.flip) {
      for (auto& [s, c] : coeffs) c = -c;
    }
    system.add(LinearInequality(coeffs, rel.sense));
  }
  if (!saw_dim) throw ParseError("missing DIM line");
  return system;
}

}  // namespace entropic::io
