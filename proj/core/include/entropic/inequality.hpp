#pragma once

#include <initializer_list>
#include <map>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "entropic/rational.hpp"
#include "entropic/subset.hpp"

namespace entropic {

enum class Sense { kGreaterEqual, kEqual };

// sum_S coeff[S] * f(S)  (>= 0 | == 0).
//
// Stored normalized: coefficients scaled to coprime integers, zero terms
// dropped, terms in canonical subset order. Equalities are additionally
// sign-normalized so the first term is positive. Scaling by a positive
// rational therefore never changes the stored form.
class LinearInequality {
 public:
  using Term = std::pair<Subset, Integer>;

  LinearInequality() = default;
  LinearInequality(const std::map<Subset, Rational, CanonicalLess>& coeffs, Sense sense);
  LinearInequality(std::initializer_list<std::pair<Subset, long>> terms,
                   Sense sense = Sense::kGreaterEqual);

  const std::vector<Term>& terms() const { return terms_; }
  Sense sense() const { return sense_; }
  bool is_equality() const { return sense_ == Sense::kEqual; }
  // 0 == 0 or 0 >= 0.
  bool is_trivial() const { return terms_.empty(); }
  Integer coefficient(Subset s) const;
  std::vector<Subset> support() const;

  // The same functional with sense >= 0 and all coefficients negated.
  LinearInequality negated() const;

  // Value of the left-hand side for a set function given as a callable
  // Subset -> T. T is Rational for exact checks or long double for entropies.
  template <class T, class Fn>
  T evaluate(Fn&& value) const {
    T total{};
    for (const auto& [s, c] : terms_) total += scale<T>(c) * value(s);
    return total;
  }

  auto operator<=>(const LinearInequality& other) const;
  bool operator==(const LinearInequality& other) const = default;

 private:
  template <class T>
  static T scale(const Integer& c);
  void normalize(std::vector<std::pair<Subset, Rational>> raw);

  std::vector<Term> terms_;
  Sense sense_ = Sense::kGreaterEqual;
};

template <>
inline Rational LinearInequality::scale<Rational>(const Integer& c) {
  return Rational(c);
}
template <>
inline long double LinearInequality::scale<long double>(const Integer& c) {
  return to_long_double(c);
}

inline auto LinearInequality::operator<=>(const LinearInequality& other) const {
  if (auto c = sense_ <=> other.sense_; c != 0) return c;
  const std::size_t common = std::min(terms_.size(), other.terms_.size());
  for (std::size_t i = 0; i < common; ++i) {
    const auto& [sa, ca] = terms_[i];
    const auto& [sb, cb] = other.terms_[i];
    if (sa != sb) {
      return canonical_less(sa, sb) ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    if (int c = cmp(ca, cb); c != 0) {
      return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  return terms_.size() <=> other.terms_.size();
}

// A finite list of rows over an ordered coordinate list. Rows are kept in
// insertion order; duplicates (after normalization) and trivial rows are dropped.
class InequalitySystem {
 public:
  InequalitySystem() = default;
  InequalitySystem(int n, std::vector<Subset> coordinates);

  int n() const { return n_; }
  const std::vector<Subset>& coordinates() const { return coordinates_; }
  const std::vector<LinearInequality>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  std::size_t inequality_count() const;
  std::size_t equality_count() const;
  bool has_coordinate(Subset s) const;
  // Position of s in coordinates(), or -1.
  int coordinate_index(Subset s) const;

  // Returns false if the row was a duplicate or trivial.
  // Throws DomainError if the row mentions a coordinate not in the system.
  bool add(LinearInequality row);
  bool contains(const LinearInequality& row) const { return index_.contains(row); }

  // Rows sorted in the canonical row order (equalities first, then by terms).
  InequalitySystem canonicalized() const;
  // Same rows over a different coordinate list (which must cover every row's support).
  InequalitySystem with_coordinates(std::vector<Subset> coordinates) const;

  bool same_rows(const InequalitySystem& other) const;

 private:
  int n_ = 0;
  std::vector<Subset> coordinates_;
  std::map<std::uint32_t, int> coordinate_positions_;
  std::vector<LinearInequality> rows_;
  std::set<LinearInequality> index_;
};

}  // namespace entropic
