#include "entropic/inequality.hpp"

#include <algorithm>

#include "entropic/error.hpp"

namespace entropic {

LinearInequality::LinearInequality(const std::map<Subset, Rational, CanonicalLess>& coeffs,
                                   Sense sense)
    : sense_(sense) {
  normalize({coeffs.begin(), coeffs.end()});
}

LinearInequality::LinearInequality(std::initializer_list<std::pair<Subset, long>> terms,
                                   Sense sense)
    : sense_(sense) {
  std::map<Subset, Rational, CanonicalLess> merged;
  for (const auto& [s, c] : terms) merged[s] += c;
  normalize({merged.begin(), merged.end()});
}

void LinearInequality::normalize(std::vector<std::pair<Subset, Rational>> raw) {
  std::erase_if(raw, [](const auto& t) { return t.second == 0; });
  std::sort(raw.begin(), raw.end(),
            [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
  terms_.clear();
  if (raw.empty()) return;

  Integer common_den = 1;
  for (const auto& [s, c] : raw) {
    mpz_lcm(common_den.get_mpz_t(), common_den.get_mpz_t(), c.get_den().get_mpz_t());
  }
  std::vector<Integer> ints;
  ints.reserve(raw.size());
  Integer g = 0;
  for (const auto& [s, c] : raw) {
    Integer v = c.get_num() * (common_den / c.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    ints.push_back(std::move(v));
  }
  if (sense_ == Sense::kEqual && ints.front() < 0) g = -g;
  terms_.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    terms_.emplace_back(raw[i].first, Integer(ints[i] / g));
  }
}

Integer LinearInequality::coefficient(Subset s) const {
  for (const auto& [t, c] : terms_) {
    if (t == s) return c;
  }
  return 0;
}

std::vector<Subset> LinearInequality::support() const {
  std::vector<Subset> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) out.push_back(t.first);
  return out;
}

LinearInequality LinearInequality::negated() const {
  LinearInequality out;
  out.sense_ = Sense::kGreaterEqual;
  out.terms_ = terms_;
  for (auto& t : out.terms_) t.second = -t.second;
  return out;
}

InequalitySystem::InequalitySystem(int n, std::vector<Subset> coordinates)
    : n_(n), coordinates_(std::move(coordinates)) {
  for (std::size_t i = 0; i < coordinates_.size(); ++i) {
    const Subset s = coordinates_[i];
    if (!s.within(n_)) {
      throw DomainError("coordinate " + debug_string(s) + " outside ground set of size " +
                        std::to_string(n_));
    }
    if (!coordinate_positions_.emplace(s.bits(), static_cast<int>(i)).second) {
      throw DomainError("duplicate coordinate " + debug_string(s));
    }
  }
}

std::size_t InequalitySystem::inequality_count() const {
  return static_cast<std::size_t>(
      std::count_if(rows_.begin(), rows_.end(), [](const auto& r) { return !r.is_equality(); }));
}

std::size_t InequalitySystem::equality_count() const { return rows_.size() - inequality_count(); }

bool InequalitySystem::has_coordinate(Subset s) const {
  return coordinate_positions_.contains(s.bits());
}

int InequalitySystem::coordinate_index(Subset s) const {
  auto it = coordinate_positions_.find(s.bits());
  return it == coordinate_positions_.end() ? -1 : it->second;
}

bool InequalitySystem::add(LinearInequality row) {
  for (const auto& [s, c] : row.terms()) {
    if (!has_coordinate(s)) {
      throw DomainError("row mentions " + debug_string(s) + ", which is not a coordinate");
    }
  }
  if (row.is_trivial()) return false;
  if (!index_.insert(row).second) return false;
  rows_.push_back(std::move(row));
  return true;
}

InequalitySystem InequalitySystem::canonicalized() const {
  std::vector<LinearInequality> sorted = rows_;
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    if (a.is_equality() != b.is_equality()) return a.is_equality();
    return a < b;
  });
  InequalitySystem out(n_, coordinates_);
  for (auto& r : sorted) out.add(std::move(r));
  return out;
}

InequalitySystem InequalitySystem::with_coordinates(std::vector<Subset> coordinates) const {
  InequalitySystem out(n_, std::move(coordinates));
  for (const auto& r : rows_) out.add(r);
  return out;
}

bool InequalitySystem::same_rows(const InequalitySystem& other) const {
  return index_ == other.index_;
}

}  // namespace entropic
