#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace entropic {

// Largest ground set the 32-bit encoding can hold.
inline constexpr int kMaxEncodableGroundSet = 32;
// Default cap on n; 2^n coordinates are materialized in several places.
inline constexpr int kDefaultMaxGroundSet = 16;

// A subset of the ground set {1, ..., n}. Element i is stored in bit i-1.
class Subset {
 public:
  constexpr Subset() = default;

  static constexpr Subset from_bits(std::uint32_t bits) { return Subset(bits); }
  // Throws DomainError for elements outside 1..32.
  static Subset of(std::initializer_list<int> elements);
  static Subset of(std::span<const int> elements);
  // {1, ..., n}
  static Subset full(int n);
  static Subset singleton(int element);

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool contains(int element) const {
    return element >= 1 && element <= kMaxEncodableGroundSet &&
           ((bits_ >> (element - 1)) & 1u) != 0;
  }
  constexpr bool is_subset_of(Subset other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool is_proper_subset_of(Subset other) const {
    return is_subset_of(other) && bits_ != other.bits_;
  }
  constexpr bool disjoint(Subset other) const { return (bits_ & other.bits_) == 0; }
  // 0 for the empty set.
  constexpr int max_element() const { return bits_ == 0 ? 0 : 32 - std::countl_zero(bits_); }
  constexpr bool within(int n) const { return max_element() <= n; }

  std::vector<int> elements() const;

  constexpr Subset operator|(Subset o) const { return Subset(bits_ | o.bits_); }
  constexpr Subset operator&(Subset o) const { return Subset(bits_ & o.bits_); }
  // Set difference.
  constexpr Subset operator-(Subset o) const { return Subset(bits_ & ~o.bits_); }
  Subset with(int element) const { return *this | singleton(element); }
  Subset without(int element) const { return *this - singleton(element); }

  constexpr bool operator==(const Subset&) const = default;

 private:
  constexpr explicit Subset(std::uint32_t bits) : bits_(bits) {}
  std::uint32_t bits_ = 0;
};

// Canonical total order: by cardinality, then lexicographically on the
// sorted element lists ({1,2} < {1,3} < {2,3}).
constexpr bool canonical_less(Subset a, Subset b) {
  if (a.size() != b.size()) return a.size() < b.size();
  const std::uint32_t diff = a.bits() ^ b.bits();
  if (diff == 0) return false;
  return (a.bits() & (diff & (~diff + 1))) != 0;
}

struct CanonicalLess {
  constexpr bool operator()(Subset a, Subset b) const { return canonical_less(a, b); }
};

// All 2^n subsets of [n] in canonical order, starting with the empty set.
std::vector<Subset> all_subsets(int n);
// All subsets of `set` in canonical order.
std::vector<Subset> subsets_of(Subset set);

// "{1,2,3}" style rendering, used in diagnostics.
std::string debug_string(Subset s);

}  // namespace entropic

template <>
struct std::hash<entropic::Subset> {
  std::size_t operator()(entropic::Subset s) const noexcept {
    return std::hash<std::uint32_t>{}(s.bits());
  }
};
