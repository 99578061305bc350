#pragma once

#include <optional>
#include <span>
#include <vector>

#include "entropic/distribution.hpp"
#include "entropic/inequality.hpp"
#include "entropic/scenario.hpp"
#include "entropic/set_function.hpp"

namespace entropic {

// Row i (1-based) of the n-cycle family, over the nonempty members of C_n:
//   sum_{j != i} f({j,j+1}) - f({i,i+1}) - sum_{j != i,i+1} f({j}) >= 0
// with indices taken mod n in 1..n. For n = 3 the i = 3 row is the triangle
// inequality f({1,2}) + f({2,3}) - f({1,3}) - f({2}) >= 0.
LinearInequality cycle_inequality(int n, int i);
// All n rows, i = 1..n, in that order.
InequalitySystem cycle_inequalities(int n);

struct CycleVerdict {
  bool noncontextual = true;
  // Left-hand side of each cycle row, i = 1..n.
  std::vector<long double> slacks;
  // Rows (1-based i) whose slack is below -tolerance.
  std::vector<int> violated;
};

// Exact version for rational partial vectors. Throws DomainError naming the
// failed row if v violates one of C_n's local basic inequalities.
CycleVerdict check_cycle_contextuality(const PartialRankVector& v);
// Entropy-valued version; all comparisons use `tolerance`.
CycleVerdict check_cycle_contextuality(const EntropyVector& v,
                                       long double tolerance = 1e-9L);

// -4H(wyz) - H(xyz) - H(wx) + 3H(wy) + 3H(wz) + H(xy) + H(xz) + 3H(yz)
//   - H(w) - 2H(y) - 2H(z) >= 0, with w,x,y,z = 1,2,3,4.
LinearInequality zhang_yeung();

// Partial polymatroid on M_ZY: singletons 2, {w,x} = 4, other pairs 3,
// {w,y,z} = {x,y,z} = 4.
PartialRankVector fzy_fixture();

// Discrete realization of fzy_fixture from fair bits: table {w,y,z} uses
// A_v = (alpha_v, beta), table {x,y,z} the same with x in place of w, and table
// {w,x} is the product of two uniform 4-outcome variables. Outcome (a, b) of a
// variable is encoded as 2a + b.
MarginalModel realize_zy_model();

// Checks f(S) + f(T) >= f(S∪T) + f(S∩T) for every pair of members whose union
// is a member, then extends to all of 2^[n]: repeatedly take the first missing
// set V in canonical order and assign
//   f(V) = min over S, T ⊊ V with S∪T = V of f(S) + f(T) - f(S∩T).
// A missing singleton has no such pair and gets 0.
// Throws DomainError naming the violated (S, T, S∪T) triple.
RankVector submodular_extend(const PartialRankVector& v);

// Lower bound on I(A_1 : A_n) for a stationary process from H(A_1) and H(A_2|A_1).
struct ProcessBound {
  long double bound = 0;  // max(0, raw)
  long double raw = 0;    // H1 - (n-1) Hcond
  // floor(H1 / Hcond): the last n at which the bound is positive.
  // Absent when Hcond = 0 (every n).
  std::optional<long long> horizon;
};
// Throws DomainError for negative entropies or n < 2.
ProcessBound process_bound(long double h1, long double hcond, int n);

// g_B(S) = 1 if S meets B, else 0: one fair bit shared by the variables in B.
long block_rank(Subset block, Subset s);

// Writes an integer-valued partial polymatroid on C_n that satisfies the cycle
// rows as a sum of blocks g_B, following the four-case peeling argument
// (B is [n] or a cyclic interval). Throws DomainError if v is not integral or
// fails a local basic or cycle row.
std::vector<Subset> cycle_block_decomposition(const PartialRankVector& v);

// Independent fair bit per block; variable i is the tuple of bits of the
// blocks containing it. H(A_S) is the number of blocks meeting S.
MarginalModel block_model(const Scenario& scenario, std::span<const Subset> blocks);

}  // namespace entropic
