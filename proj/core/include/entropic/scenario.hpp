#pragma once

#include <span>
#include <vector>

#include "entropic/subset.hpp"

namespace entropic {

// A marginal scenario: a downward-closed family of subsets of [n]
// (an abstract simplicial complex that always contains the empty set).
// Members are kept in canonical order; generators are the maximal members.
class Scenario {
 public:
  // Smallest downward-closed family containing every generator.
  // Throws DomainError if a generator has an element > n or n is outside [0, max_n].
  static Scenario downward_close(std::span<const Subset> generators, int n,
                                 int max_n = kDefaultMaxGroundSet);

  int n() const { return n_; }
  const std::vector<Subset>& members() const { return members_; }
  const std::vector<Subset>& generators() const { return generators_; }
  // Members without the empty set, in canonical order. These are the
  // coordinates of partial rank vectors and projected inequality systems.
  std::vector<Subset> nonempty_members() const;

  bool contains(Subset s) const;
  // Position of s in members(), or -1.
  int index_of(Subset s) const;
  std::size_t size() const { return members_.size(); }
  // True when every subset of [n] is a member.
  bool is_full() const { return members_.size() == (std::size_t{1} << n_); }

  bool operator==(const Scenario& other) const {
    return n_ == other.n_ && members_ == other.members_;
  }

 private:
  Scenario() = default;
  int n_ = 0;
  std::vector<Subset> members_;
  std::vector<Subset> generators_;
};

// Scenario generated by {i, i+1 mod n} for i = 1..n. Requires n >= 3.
Scenario cycle_scenario(int n);

// The four-variable scenario generated by {w,y,z}, {x,y,z}, {w,x}, with
// w,x,y,z mapped to 1,2,3,4.
Scenario zy_scenario();

// 2^[n]
Scenario full_scenario(int n);

}  // namespace entropic
