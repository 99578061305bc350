#pragma once

#include <stdexcept>
#include <string>

namespace entropic {

// Precondition violated by caller-supplied data (bad subset, cyclic graph, ...).
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Malformed input file or text.
class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Fourier-Motzkin exceeded its derived-row budget.
class BudgetExhausted : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace entropic
