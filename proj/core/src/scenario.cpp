#include "entropic/scenario.hpp"

#include <algorithm>
#include <unordered_set>

#include "entropic/error.hpp"

namespace entropic {

Scenario Scenario::downward_close(std::span<const Subset> generators, int n, int max_n) {
  if (n < 0 || n > max_n || n > kMaxEncodableGroundSet) {
    throw DomainError("ground-set size " + std::to_string(n) + " outside [0, " +
                      std::to_string(std::min(max_n, kMaxEncodableGroundSet)) + "]");
  }
  std::unordered_set<Subset> closure;
  closure.insert(Subset{});
  for (Subset g : generators) {
    if (!g.within(n)) {
      throw DomainError("generator " + debug_string(g) + " is not a subset of [" +
                        std::to_string(n) + "]");
    }
    if (closure.contains(g)) continue;
    for (Subset s : subsets_of(g)) closure.insert(s);
  }

  Scenario out;
  out.n_ = n;
  out.members_.assign(closure.begin(), closure.end());
  std::sort(out.members_.begin(), out.members_.end(), CanonicalLess{});
  for (Subset s : out.members_) {
    bool maximal = true;
    for (int e = 1; e <= n && maximal; ++e) {
      if (!s.contains(e) && closure.contains(s.with(e))) maximal = false;
    }
    if (maximal) out.generators_.push_back(s);
  }
  return out;
}

std::vector<Subset> Scenario::nonempty_members() const {
  return {members_.begin() + 1, members_.end()};
}

int Scenario::index_of(Subset s) const {
  auto it = std::lower_bound(members_.begin(), members_.end(), s, CanonicalLess{});
  if (it == members_.end() || *it != s) return -1;
  return static_cast<int>(it - members_.begin());
}

bool Scenario::contains(Subset s) const { return index_of(s) >= 0; }

Scenario cycle_scenario(int n) {
  if (n < 3) throw DomainError("cycle scenario needs n >= 3, got " + std::to_string(n));
  std::vector<Subset> edges;
  for (int i = 1; i <= n; ++i) edges.push_back(Subset::of({i, i % n + 1}));
  return Scenario::downward_close(edges, n);
}

Scenario zy_scenario() {
  constexpr int w = 1, x = 2, y = 3, z = 4;
  const Subset generators[] = {Subset::of({w, y, z}), Subset::of({x, y, z}), Subset::of({w, x})};
  return Scenario::downward_close(generators, 4);
}

Scenario full_scenario(int n) {
  const Subset top = Subset::full(n);
  return Scenario::downward_close(std::span<const Subset>(&top, 1), n);
}

}  // namespace entropic
