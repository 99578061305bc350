#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "entropic/inequality.hpp"
#include "entropic/labels.hpp"

namespace entropic::io {

// Text inequality file. One row per line:
//   1*H(A1A2) + 1*H(A2A3) - 1*H(A1A3) - 1*H(A2) >= 0
// with `== 0` for equalities and H() for the empty set. Header comment lines
// starting with '#' carry `n:`, `labels:`, `coordinates:` and free-form notes.
struct InequalityFile {
  InequalitySystem system;
  Labels labels;
  std::vector<std::string> notes;
};

std::string format_inequality(const LinearInequality& row, const Labels& labels);
std::string format_inequalities(const InequalitySystem& system, const Labels& labels,
                                const std::vector<std::string>& notes = {});

// Without an `n:` header, n is taken from `labels` or from the largest element
// mentioned; without `coordinates:`, the coordinates are the union of the row
// supports. `<=` rows are accepted and negated. Throws ParseError.
InequalityFile parse_inequalities(std::string_view text, const Labels* labels = nullptr);
LinearInequality parse_inequality(std::string_view line, const Labels& labels);

// PORTA .ieq: variable x_k is coordinate k (1-based) of the system.
std::string format_porta(const InequalitySystem& system);
// Reads rows back onto the given coordinates.
InequalitySystem parse_porta(std::string_view text, int n, const std::vector<Subset>& coordinates);

}  // namespace entropic::io
