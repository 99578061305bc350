#include "entropic/labels.hpp"

#include <algorithm>
#include <set>

#include "entropic/error.hpp"

namespace entropic {

namespace {

bool valid_label(const std::string& name) {
  if (name.empty()) return false;
  return std::none_of(name.begin(), name.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == '*' ||
           c == ':' || c == '|' || c == '+' || c == '-' || c == '=' || c == ',' || c == '#' ||
           c == '"' || c == '[' || c == ']' || c == '{' || c == '}';
  });
}

}  // namespace

Labels::Labels(int n) {
  if (n < 0 || n > kMaxEncodableGroundSet) {
    throw DomainError("ground-set size " + std::to_string(n) + " out of range");
  }
  names_.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) names_.push_back("A" + std::to_string(i));
}

Labels::Labels(std::vector<std::string> names) : names_(std::move(names)) {
  if (names_.size() > static_cast<std::size_t>(kMaxEncodableGroundSet)) {
    throw DomainError("too many labels");
  }
  std::set<std::string> seen;
  for (const auto& name : names_) {
    if (!valid_label(name)) throw DomainError("invalid label '" + name + "'");
    if (!seen.insert(name).second) throw DomainError("duplicate label '" + name + "'");
  }
}

const std::string& Labels::name(int element) const {
  if (element < 1 || element > size()) {
    throw DomainError("no label for element " + std::to_string(element));
  }
  return names_[static_cast<std::size_t>(element - 1)];
}

std::optional<int> Labels::find(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return static_cast<int>(i) + 1;
  }
  return std::nullopt;
}

std::string Labels::format(Subset s) const {
  std::string out;
  for (int e : s.elements()) out += name(e);
  return out;
}

Subset Labels::parse(std::string_view text) const {
  // Depth-first split of the text into labels with strictly increasing elements.
  std::vector<int> chosen;
  auto search = [&](auto&& self, std::size_t pos, int last) -> bool {
    if (pos == text.size()) return true;
    for (int e = last + 1; e <= size(); ++e) {
      const std::string& label = names_[static_cast<std::size_t>(e - 1)];
      if (text.substr(pos, label.size()) == label) {
        chosen.push_back(e);
        if (self(self, pos + label.size(), e)) return true;
        chosen.pop_back();
      }
    }
    return false;
  };
  if (!search(search, 0, 0)) {
    throw ParseError("cannot split '" + std::string(text) + "' into labels");
  }
  return Subset::of(std::span<const int>(chosen));
}

}  // namespace entropic
