#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "entropic/error.hpp"
#include "entropic/rational.hpp"
#include "entropic/scenario.hpp"

namespace entropic {

// A real-valued function on the members of a scenario with f(empty) = 0.
// Values are stored aligned with scenario().members().
template <class T>
class SetFunction {
 public:
  explicit SetFunction(Scenario scenario)
      : scenario_(std::move(scenario)), values_(scenario_.size(), T{}) {}

  SetFunction(Scenario scenario, std::vector<T> values)
      : scenario_(std::move(scenario)), values_(std::move(values)) {
    if (values_.size() != scenario_.size()) {
      throw DomainError("set function needs one value per scenario member");
    }
    if (values_.front() != T{}) throw DomainError("set function must vanish on the empty set");
  }

  const Scenario& scenario() const { return scenario_; }
  int n() const { return scenario_.n(); }
  const std::vector<T>& values() const { return values_; }
  bool is_full() const { return scenario_.is_full(); }

  const T& operator[](Subset s) const { return values_[position(s)]; }
  const T& at(Subset s) const { return values_[position(s)]; }

  void set(Subset s, T value) {
    const std::size_t i = position(s);
    if (i == 0 && value != T{}) throw DomainError("set function must vanish on the empty set");
    values_[i] = std::move(value);
  }

  // Callable view, for LinearInequality::evaluate and friends.
  std::function<T(Subset)> as_function() const {
    return [this](Subset s) { return at(s); };
  }

  bool operator==(const SetFunction& other) const = default;

 private:
  std::size_t position(Subset s) const {
    const int i = scenario_.index_of(s);
    if (i < 0) throw DomainError(debug_string(s) + " is not a scenario member");
    return static_cast<std::size_t>(i);
  }

  Scenario scenario_;
  std::vector<T> values_;
};

// Exact set functions. A RankVector lives on the full scenario 2^[n].
using RankVector = SetFunction<Rational>;
using PartialRankVector = SetFunction<Rational>;
// Entropies in bits; evaluated in extended precision.
using EntropyVector = SetFunction<long double>;

// Exact copy of an entropy vector (each long double converted to its binary value).
inline PartialRankVector to_rational(const EntropyVector& v) {
  std::vector<Rational> values;
  values.reserve(v.values().size());
  for (long double x : v.values()) values.push_back(exact_rational(x));
  return PartialRankVector(v.scenario(), std::move(values));
}

inline EntropyVector to_entropy(const PartialRankVector& v) {
  std::vector<long double> values;
  values.reserve(v.values().size());
  for (const Rational& x : v.values()) values.push_back(to_long_double(x));
  return EntropyVector(v.scenario(), std::move(values));
}

}  // namespace entropic
