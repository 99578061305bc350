#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "entropic/subset.hpp"

namespace entropic {

// Names for the ground-set elements 1..n. Defaults to A1, ..., An.
// Subsets are written by concatenating member labels in element order,
// and parsed back with the constraint that elements appear in increasing order.
class Labels {
 public:
  Labels() = default;
  explicit Labels(int n);
  explicit Labels(std::vector<std::string> names);

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& name(int element) const;
  const std::vector<std::string>& names() const { return names_; }
  std::optional<int> find(std::string_view name) const;

  std::string format(Subset s) const;
  // Inverse of format. Throws ParseError if the text is not a concatenation of labels.
  Subset parse(std::string_view text) const;

  bool operator==(const Labels&) const = default;

 private:
  std::vector<std::string> names_;
};

}  // namespace entropic
