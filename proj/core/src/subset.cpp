#include "entropic/subset.hpp"

#include <algorithm>

#include "entropic/error.hpp"

namespace entropic {

Subset Subset::singleton(int element) {
  if (element < 1 || element > kMaxEncodableGroundSet) {
    throw DomainError("ground-set element " + std::to_string(element) + " out of range");
  }
  return Subset(1u << (element - 1));
}

Subset Subset::of(std::initializer_list<int> elements) {
  return of(std::span<const int>(elements.begin(), elements.size()));
}

Subset Subset::of(std::span<const int> elements) {
  Subset s;
  for (int e : elements) s = s | singleton(e);
  return s;
}

Subset Subset::full(int n) {
  if (n < 0 || n > kMaxEncodableGroundSet) {
    throw DomainError("ground-set size " + std::to_string(n) + " out of range");
  }
  return n == 32 ? Subset(~0u) : Subset((1u << n) - 1u);
}

std::vector<int> Subset::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (std::uint32_t b = bits_; b != 0; b &= b - 1) {
    out.push_back(std::countr_zero(b) + 1);
  }
  return out;
}

std::vector<Subset> all_subsets(int n) { return subsets_of(Subset::full(n)); }

std::vector<Subset> subsets_of(Subset set) {
  std::vector<Subset> out;
  out.reserve(std::size_t{1} << set.size());
  // Standard submask enumeration, then canonical sort.
  std::uint32_t sub = set.bits();
  while (true) {
    out.push_back(Subset::from_bits(sub));
    if (sub == 0) break;
    sub = (sub - 1) & set.bits();
  }
  std::sort(out.begin(), out.end(), CanonicalLess{});
  return out;
}

std::string debug_string(Subset s) {
  std::string out = "{";
  bool first = true;
  for (int e : s.elements()) {
    if (!first) out += ',';
    out += std::to_string(e);
    first = false;
  }
  return out + "}";
}

}  // namespace entropic
