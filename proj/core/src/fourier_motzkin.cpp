#include "entropic/polyhedra.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>

#include "entropic/error.hpp"
#include "entropic/parallel.hpp"
#include "implication_filter.hpp"

namespace entropic {

const char* to_string(Redundancy policy) {
  switch (policy) {
    case Redundancy::kNone:
      return "none";
    case Redundancy::kPairwise:
      return "pairwise";
    case Redundancy::kExact:
      return "exact";
  }
  return "?";
}

Redundancy parse_redundancy(std::string_view text) {
  if (text == "none") return Redundancy::kNone;
  if (text == "pairwise") return Redundancy::kPairwise;
  if (text == "exact") return Redundancy::kExact;
  throw DomainError("unknown redundancy policy '" + std::string(text) + "'");
}

namespace {

using Coeffs = std::map<Subset, Rational, CanonicalLess>;

Coeffs as_coeffs(const LinearInequality& row) {
  Coeffs out;
  for (const auto& [s, c] : row.terms()) out[s] = Rational(c);
  return out;
}

// Adds `row` (built from raw coefficients) to `out`, recording the derivation
// rescaled to match the normalized row.
void emit(EliminationResult& out, const Coeffs& raw, Sense sense, Derivation derivation) {
  LinearInequality row(raw, sense);
  if (row.is_trivial()) return;
  const auto& [first, normalized] = row.terms().front();
  const Rational scale = raw.at(first) / Rational(normalized);
  for (auto& [i, m] : derivation.multipliers) m /= scale;
  if (out.system.add(std::move(row))) out.derivations.push_back(std::move(derivation));
}

Coeffs combine(const LinearInequality& a, const Rational& ka, const LinearInequality& b,
               const Rational& kb) {
  Coeffs out;
  for (const auto& [s, c] : a.terms()) out[s] += ka * c;
  for (const auto& [s, c] : b.terms()) out[s] += kb * c;
  return out;
}

}  // namespace

EliminationResult fm_eliminate(const InequalitySystem& system, Subset coord) {
  if (!system.has_coordinate(coord)) {
    throw DomainError("cannot eliminate " + debug_string(coord) + ": not a coordinate");
  }
  std::vector<Subset> remaining;
  for (Subset s : system.coordinates()) {
    if (s != coord) remaining.push_back(s);
  }
  EliminationResult out{InequalitySystem(system.n(), remaining), {}};
  const auto& rows = system.rows();

  std::size_t pivot = rows.size();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].is_equality() && rows[i].coefficient(coord) != 0) {
      pivot = i;
      break;
    }
  }

  if (pivot != rows.size()) {
    const Rational pc(rows[pivot].coefficient(coord));
    const Rational abs_pc = abs(pc);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == pivot) continue;
      const Rational rc(rows[i].coefficient(coord));
      if (rc == 0) {
        emit(out, as_coeffs(rows[i]), rows[i].sense(), {{{i, Rational(1)}}});
        continue;
      }
      const Rational k = -(pc > 0 ? rc : Rational(-rc));
      emit(out, combine(rows[i], abs_pc, rows[pivot], k), rows[i].sense(),
           {{{i, abs_pc}, {pivot, k}}});
    }
    return out;
  }

  std::vector<std::size_t> positive, negative;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const int sign = sgn(rows[i].coefficient(coord));
    if (sign == 0) {
      emit(out, as_coeffs(rows[i]), rows[i].sense(), {{{i, Rational(1)}}});
    } else if (sign > 0) {
      positive.push_back(i);
    } else {
      negative.push_back(i);
    }
  }
  for (std::size_t p : positive) {
    const Rational pc(rows[p].coefficient(coord));
    for (std::size_t q : negative) {
      const Rational nc(-rows[q].coefficient(coord));
      emit(out, combine(rows[p], nc, rows[q], pc), Sense::kGreaterEqual, {{{p, nc}, {q, pc}}});
    }
  }
  return out;
}

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in FM");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("coefficient overflow in FM");
  return r;
}

std::int64_t gcd64(std::int64_t a, std::int64_t b) {
  a = a < 0 ? -a : a;
  b = b < 0 ? -b : b;
  while (b != 0) {
    std::int64_t t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Dense working row for the projection loop.
struct WorkRow {
  std::vector<std::int64_t> coef;
  std::vector<std::uint64_t> ancestors;
  bool equality = false;

  int ancestor_count() const {
    int total = 0;
    for (auto w : ancestors) total += std::popcount(w);
    return total;
  }
  bool ancestors_subset_of(const WorkRow& other) const {
    for (std::size_t k = 0; k < ancestors.size(); ++k) {
      if ((ancestors[k] & ~other.ancestors[k]) != 0) return false;
    }
    return true;
  }
};

// Divides by the gcd; equalities get a positive leading coefficient.
// Returns false for the zero row.
bool normalize(WorkRow& row) {
  std::int64_t g = 0;
  for (auto v : row.coef) g = gcd64(g, v);
  if (g == 0) return false;
  if (row.equality) {
    for (auto v : row.coef) {
      if (v != 0) {
        if (v < 0) g = -g;
        break;
      }
    }
  }
  if (g != 1) {
    for (auto& v : row.coef) v /= g;
  }
  return true;
}

struct CoefHash {
  std::size_t operator()(const WorkRow* r) const {
    std::size_t h = r->equality ? 0x9e3779b97f4a7c15ull : 0;
    for (auto v : r->coef) h = (h ^ static_cast<std::size_t>(v)) * 0x100000001b3ull;
    return h;
  }
};

void drop_column(std::vector<WorkRow>& rows, std::size_t column) {
  for (auto& r : rows) r.coef.erase(r.coef.begin() + static_cast<std::ptrdiff_t>(column));
}

// Removes exact duplicates (coefficients and sense), keeping the first occurrence.
// The survivor takes whichever ancestor set is smaller; either one derives it.
void dedupe(std::vector<WorkRow>& rows) {
  std::vector<std::size_t> order(rows.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  auto less = [&](std::size_t a, std::size_t b) {
    if (rows[a].equality != rows[b].equality) return rows[a].equality;
    if (rows[a].coef != rows[b].coef) return rows[a].coef < rows[b].coef;
    return a < b;
  };
  std::sort(order.begin(), order.end(), less);
  std::vector<bool> keep(rows.size(), true);
  for (std::size_t k = 1; k < order.size(); ++k) {
    WorkRow& prev = rows[order[k - 1]];
    WorkRow& cur = rows[order[k]];
    if (prev.equality == cur.equality && prev.coef == cur.coef) {
      // `prev` may itself be dropped already; find the surviving representative.
      std::size_t rep = k - 1;
      while (!keep[order[rep]]) --rep;
      WorkRow& kept = rows[order[rep]];
      if (cur.ancestor_count() < kept.ancestor_count()) kept.ancestors = cur.ancestors;
      keep[order[k]] = false;
    }
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (keep[i]) {
      if (out != i) rows[out] = std::move(rows[i]);
      ++out;
    }
  }
  rows.resize(out);
}

// Sequentially drops inequality rows implied by the remaining ones.
std::size_t prune_implied(std::vector<WorkRow>& rows) {
  std::vector<char> removed(rows.size(), 0);
  std::vector<char> equality;
  std::vector<const std::vector<std::int64_t>*> others;
  std::size_t count = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].equality) continue;
    others.clear();
    equality.clear();
    for (std::size_t k = 0; k < rows.size(); ++k) {
      if (k == i || removed[k]) continue;
      others.push_back(&rows[k].coef);
      equality.push_back(rows[k].equality ? 1 : 0);
    }
    if (detail::certified_implied(rows[i].coef, others, equality)) {
      removed[i] = 1;
      ++count;
    }
  }
  std::size_t out = 0;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (removed[i]) continue;
    if (out != i) rows[out] = std::move(rows[i]);
    ++out;
  }
  rows.resize(out);
  return count;
}

}  // namespace

InequalitySystem project(const InequalitySystem& system, std::span<const Subset> keep,
                         const ProjectOptions& options) {
  for (Subset s : keep) {
    if (!system.has_coordinate(s)) {
      throw DomainError("cannot keep " + debug_string(s) + ": not a coordinate");
    }
  }
  std::vector<Subset> kept(keep.begin(), keep.end());
  std::sort(kept.begin(), kept.end(), CanonicalLess{});
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  ProjectStats local_stats;
  ProjectStats& stats = options.stats != nullptr ? *options.stats : local_stats;
  stats = {};

  // Working state: coordinate list and dense rows over it.
  std::vector<Subset> coords = system.coordinates();
  const std::size_t input_ineqs = system.inequality_count();
  const std::size_t words = (input_ineqs + 63) / 64;
  std::vector<WorkRow> rows;
  rows.reserve(system.size());
  {
    std::size_t ineq_index = 0;
    for (const auto& r : system.rows()) {
      WorkRow w;
      w.coef.assign(coords.size(), 0);
      w.ancestors.assign(words, 0);
      w.equality = r.is_equality();
      for (const auto& [s, c] : r.terms()) {
        if (!c.fits_slong_p()) throw std::overflow_error("input coefficient exceeds 64 bits");
        w.coef[static_cast<std::size_t>(system.coordinate_index(s))] = c.get_si();
      }
      if (!w.equality) {
        w.ancestors[ineq_index / 64] |= std::uint64_t{1} << (ineq_index % 64);
        ++ineq_index;
      }
      rows.push_back(std::move(w));
    }
  }

  auto is_kept = [&](Subset s) {
    return std::binary_search(kept.begin(), kept.end(), s, CanonicalLess{});
  };
  auto remove_coordinate = [&](std::size_t column) {
    const Subset gone = coords[column];
    coords.erase(coords.begin() + static_cast<std::ptrdiff_t>(column));
    drop_column(rows, column);
    stats.peak_rows = std::max(stats.peak_rows, rows.size());
    if (options.on_step) options.on_step(gone, rows.size());
  };

  // Equality substitutions.
  while (true) {
    std::size_t pivot_row = rows.size();
    std::size_t column = coords.size();
    for (std::size_t i = 0; i < rows.size() && pivot_row == rows.size(); ++i) {
      if (!rows[i].equality) continue;
      Subset best;
      bool found = false;
      for (std::size_t j = 0; j < coords.size(); ++j) {
        if (rows[i].coef[j] == 0 || is_kept(coords[j])) continue;
        if (!found || canonical_less(coords[j], best)) {
          best = coords[j];
          column = j;
          found = true;
        }
      }
      if (found) pivot_row = i;
    }
    if (pivot_row == rows.size()) break;

    WorkRow eq = std::move(rows[pivot_row]);
    rows.erase(rows.begin() + static_cast<std::ptrdiff_t>(pivot_row));
    const std::int64_t ec = eq.coef[column];
    const std::int64_t abs_ec = ec < 0 ? -ec : ec;
    std::vector<WorkRow> next;
    next.reserve(rows.size());
    for (auto& r : rows) {
      const std::int64_t rc = r.coef[column];
      if (rc != 0) {
        const std::int64_t k = ec > 0 ? -rc : rc;
        for (std::size_t j = 0; j < r.coef.size(); ++j) {
          r.coef[j] = checked_add(checked_mul(abs_ec, r.coef[j]), checked_mul(k, eq.coef[j]));
        }
        if (!normalize(r)) continue;
      }
      next.push_back(std::move(r));
    }
    rows = std::move(next);
    if (options.intermediate != Redundancy::kNone) dedupe(rows);
    ++stats.substitutions;
    remove_coordinate(column);
  }

  // Fourier-Motzkin steps.
  std::size_t fm_steps = 0;
  while (true) {
    std::size_t column = coords.size();
    std::size_t best_cost = std::numeric_limits<std::size_t>::max();
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (is_kept(coords[j])) continue;
      std::size_t pos = 0, neg = 0;
      for (const auto& r : rows) {
        if (r.coef[j] > 0) ++pos;
        if (r.coef[j] < 0) ++neg;
      }
      const std::size_t cost = pos * neg;
      if (column == coords.size() || cost < best_cost ||
          (cost == best_cost && canonical_less(coords[j], coords[column]))) {
        column = j;
        best_cost = cost;
      }
    }
    if (column == coords.size()) break;
    ++fm_steps;

    std::vector<WorkRow> zero;
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::int64_t c = rows[i].coef[column];
      if (c > 0) {
        pos.push_back(i);
      } else if (c < 0) {
        neg.push_back(i);
      }
    }
    if (stats.derived_rows + pos.size() * neg.size() > options.budget) {
      throw BudgetExhausted("Fourier-Motzkin budget of " + std::to_string(options.budget) +
                            " derived rows exhausted while eliminating " +
                            debug_string(coords[column]));
    }
    stats.derived_rows += pos.size() * neg.size();

    const int ancestor_limit = static_cast<int>(fm_steps) + 1;
    std::vector<std::vector<WorkRow>> produced(pos.size());
    parallel_for(pos.size(), options.threads, [&](std::size_t a) {
      const WorkRow& p = rows[pos[a]];
      const std::int64_t pc = p.coef[column];
      for (std::size_t b : neg) {
        const WorkRow& q = rows[b];
        const std::int64_t qc = -q.coef[column];
        WorkRow r;
        r.ancestors.resize(words);
        for (std::size_t w = 0; w < words; ++w) r.ancestors[w] = p.ancestors[w] | q.ancestors[w];
        if (options.chernikov && r.ancestor_count() > ancestor_limit) continue;
        r.coef.resize(p.coef.size());
        for (std::size_t j = 0; j < p.coef.size(); ++j) {
          r.coef[j] = checked_add(checked_mul(qc, p.coef[j]), checked_mul(pc, q.coef[j]));
        }
        if (!normalize(r)) continue;
        produced[a].push_back(std::move(r));
      }
    });
    std::size_t kohler_kept = 0;
    for (auto& chunk : produced) kohler_kept += chunk.size();
    stats.chernikov_discards += pos.size() * neg.size() - kohler_kept;

    std::vector<WorkRow> next;
    next.reserve(rows.size() - pos.size() - neg.size() + kohler_kept);
    for (auto& r : rows) {
      if (r.coef[column] == 0) next.push_back(std::move(r));
    }
    const std::size_t first_new = next.size();
    for (auto& chunk : produced) {
      for (auto& r : chunk) next.push_back(std::move(r));
    }
    if (options.intermediate != Redundancy::kNone) dedupe(next);

    if (options.chernikov) {
      // A new row whose ancestor set strictly contains another row's is redundant.
      // Only inequality rows carry ancestors; equalities are left alone.
      std::vector<char> drop(next.size(), 0);
      std::vector<int> counts(next.size());
      for (std::size_t i = 0; i < next.size(); ++i) counts[i] = next[i].ancestor_count();
      parallel_for(next.size(), options.threads, [&](std::size_t i) {
        if (next[i].equality || i < first_new) return;
        for (std::size_t k = 0; k < next.size(); ++k) {
          if (k == i || next[k].equality || counts[k] >= counts[i]) continue;
          if (next[k].ancestors_subset_of(next[i])) {
            drop[i] = 1;
            return;
          }
        }
      });
      std::size_t out = 0;
      for (std::size_t i = 0; i < next.size(); ++i) {
        if (drop[i]) {
          ++stats.chernikov_discards;
          continue;
        }
        if (out != i) next[out] = std::move(next[i]);
        ++out;
      }
      next.resize(out);
    }
    rows = std::move(next);
    ++stats.eliminations;
    remove_coordinate(column);
    if (options.intermediate == Redundancy::kExact ||
        (options.prune_above > 0 && rows.size() > options.prune_above)) {
      stats.lp_discards += prune_implied(rows);
    }
  }

  InequalitySystem result(system.n(), kept);
  for (const auto& r : rows) {
    Coeffs raw;
    for (std::size_t j = 0; j < coords.size(); ++j) {
      if (r.coef[j] != 0) raw[coords[j]] = Rational(r.coef[j]);
    }
    result.add(LinearInequality(raw, r.equality ? Sense::kEqual : Sense::kGreaterEqual));
  }
  // coords now equals kept, possibly in a different order.
  result = remove_redundant(result, options.final_pass, options.threads);
  return result.canonicalized();
}

}  // namespace entropic
