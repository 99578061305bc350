#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <set>

#include "entropic/analytic.hpp"
#include "entropic/cones.hpp"
#include "entropic/entropy.hpp"
#include "entropic/error.hpp"
#include "entropic/fixtures.hpp"
#include "entropic/polyhedra.hpp"
#include "oracles.hpp"

using namespace entropic;

namespace {

Subset S(std::initializer_list<int> e) { return Subset::of(e); }

PartialRankVector constant(const Scenario& scenario, long value) {
  PartialRankVector v(scenario);
  for (Subset s : scenario.nonempty_members()) v.set(s, value);
  return v;
}

// Extreme rays of {x : A x >= 0} (a pointed cone in R^d) by brute force: every
// choice of d-1 rows whose null space is one-dimensional, kept if the spanning
// vector (or its negative) satisfies all rows.
std::vector<std::vector<long>> extreme_rays(const std::vector<std::vector<long>>& rows, std::size_t d) {
  const std::size_t m = rows.size();
  std::set<std::vector<long>> found;
  std::vector<std::size_t> pick(d - 1);
  for (std::size_t k = 0; k < pick.size(); ++k) pick[k] = k;
  for (;;) {
    // Gaussian elimination in long double; candidates are confirmed exactly below.
    std::vector<std::vector<long double>> a;
    for (std::size_t k : pick) a.emplace_back(rows[k].begin(), rows[k].end());
    std::vector<int> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < d && r < a.size(); ++c) {
      std::size_t best = r;
      for (std::size_t i = r; i < a.size(); ++i) {
        if (std::fabs(a[i][c]) > std::fabs(a[best][c])) best = i;
      }
      if (std::fabs(a[best][c]) < 1e-12L) continue;
      std::swap(a[r], a[best]);
      for (std::size_t i = 0; i < a.size(); ++i) {
        if (i == r) continue;
        const long double f = a[i][c] / a[r][c];
        for (std::size_t j = 0; j < d; ++j) a[i][j] -= f * a[r][j];
      }
      pivot_col.push_back(static_cast<int>(c));
      ++r;
    }
    if (r == d - 1) {
      std::size_t free_col = 0;
      while (std::find(pivot_col.begin(), pivot_col.end(), static_cast<int>(free_col)) != pivot_col.end()) ++free_col;
      std::vector<long double> x(d, 0);
      x[free_col] = 1;
      for (std::size_t i = 0; i < r; ++i) {
        x[static_cast<std::size_t>(pivot_col[i])] = -a[i][free_col] / a[i][static_cast<std::size_t>(pivot_col[i])];
      }
      long double smallest = 0;
      for (long double v : x) {
        if (std::fabs(v) > 1e-9L && (smallest == 0 || std::fabs(v) < smallest)) smallest = std::fabs(v);
      }
      for (int scale = 1; scale <= 24; ++scale) {
        std::vector<long> ix(d);
        bool integral = true;
        for (std::size_t j = 0; j < d; ++j) {
          const long double v = x[j] / smallest * scale;
          ix[j] = std::lround(static_cast<double>(v));
          if (std::fabs(v - static_cast<long double>(ix[j])) > 1e-7L) integral = false;
        }
        if (!integral) continue;
        for (int sign : {1, -1}) {
          std::vector<long> cand(ix);
          for (auto& v : cand) v *= sign;
          bool ok = true;
          std::size_t active = 0;
          for (const auto& row : rows) {
            long dot = 0;
            for (std::size_t j = 0; j < d; ++j) dot += row[j] * cand[j];
            if (dot < 0) ok = false;
            if (dot == 0) ++active;
          }
          if (ok && active >= d - 1) {
            long g = 0;
            for (long v : cand) g = std::gcd(g, std::labs(v));
            for (auto& v : cand) v /= g;
            found.insert(cand);
          }
        }
        break;
      }
    }
    // Next combination.
    std::size_t k = pick.size();
    while (k > 0 && pick[k - 1] == m - pick.size() + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < pick.size(); ++j) pick[j] = pick[j - 1] + 1;
  }
  return {found.begin(), found.end()};
}

// Cut function of a random weighted graph plus a random modular term: submodular,
// usually neither monotone nor nonnegative.
oracle::Table random_submodular(int n, std::mt19937_64& rng) {
  oracle::Table f = oracle::random_polymatroid(n, rng, 3);
  std::uniform_int_distribution<int> w(0, 3), m(-3, 3);
  std::vector<int> modular(static_cast<std::size_t>(n));
  for (auto& v : modular) v = m(rng);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      const int weight = w(rng);
      for (std::uint32_t s = 0; s < f.size(); ++s) {
        if (((s >> i) & 1u) != ((s >> j) & 1u)) f[s] += weight;
      }
    }
  }
  for (std::uint32_t s = 0; s < f.size(); ++s) {
    for (int i = 0; i < n; ++i) {
      if ((s >> i) & 1u) f[s] += modular[static_cast<std::size_t>(i)];
    }
  }
  return f;
}

// Exact stationary binary Markov chain A_1 -> ... -> A_n with P(0->1) = a,
// P(1->0) = b, started in its stationary law.
JointDistribution binary_chain(int n, const Rational& a, const Rational& b) {
  const Rational pi0 = (a + b == 0) ? Rational(1, 2) : Rational(b / (a + b));
  std::map<Outcome, Rational> table;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    Outcome o(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) o[static_cast<std::size_t>(k)] = static_cast<int>((bits >> k) & 1u);
    Rational p = o[0] == 0 ? pi0 : Rational(1 - pi0);
    for (std::size_t k = 1; k < o.size() && p != 0; ++k) {
      const bool from0 = o[k - 1] == 0;
      const bool flip = o[k] != o[k - 1];
      p *= from0 ? (flip ? a : Rational(1 - a)) : (flip ? b : Rational(1 - b));
    }
    if (p != 0) table[o] = p;
  }
  return JointDistribution(Subset::full(n), std::vector<int>(static_cast<std::size_t>(n), 2), table);
}

double h2(double p) { return p <= 0 || p >= 1 ? 0.0 : -p * std::log2(p) - (1 - p) * std::log2(1 - p); }

}  // namespace

TEST(CycleInequalities, TriangleRow) {
  const LinearInequality tri({{S({1, 2}), 1}, {S({2, 3}), 1}, {S({1, 3}), -1}, {S({2}), -1}});
  EXPECT_EQ(cycle_inequality(3, 3), tri);
  EXPECT_EQ(cycle_inequalities(3).size(), 3u);
  EXPECT_THROW(cycle_inequalities(2), DomainError);
  EXPECT_THROW(cycle_inequality(4, 5), DomainError);
}

TEST(CycleInequalities, FourCyclePattern) {
  const InequalitySystem rows = cycle_inequalities(4);
  ASSERT_EQ(rows.size(), 4u);
  for (int i = 1; i <= 4; ++i) {
    const LinearInequality& row = rows.rows()[static_cast<std::size_t>(i - 1)];
    int plus_edges = 0, minus_edges = 0;
    std::vector<int> minus_singletons;
    for (const auto& [s, c] : row.terms()) {
      if (s.size() == 2) (c == 1 ? plus_edges : minus_edges) += 1;
      if (s.size() == 1) {
        EXPECT_EQ(c, -1);
        minus_singletons.push_back(s.elements()[0]);
      }
    }
    EXPECT_EQ(plus_edges, 3);
    EXPECT_EQ(minus_edges, 1);
    ASSERT_EQ(minus_singletons.size(), 2u);
    // The negative edge is {i, i+1}; the other two vertices lose their singletons.
    const int j = i % 4 + 1;
    EXPECT_EQ(S({minus_singletons[0], minus_singletons[1]}), Subset::full(4) - S({i, j}));
    EXPECT_EQ(row.coefficient(S({i, j})), -1);
  }
}

TEST(CycleInequalities, CyclicImagesAndTightness) {
  for (int n = 3; n <= 8; ++n) {
    const PartialRankVector ones = constant(cycle_scenario(n), 1);
    for (int i = 1; i <= n; ++i) {
      const LinearInequality row = cycle_inequality(n, i);
      EXPECT_EQ(row.evaluate<Rational>(ones.as_function()), 0);
      // Rotating every subset by one maps row i to row i+1.
      std::map<Subset, Rational, CanonicalLess> rotated;
      for (const auto& [s, c] : row.terms()) {
        Subset r;
        for (int e : s.elements()) r = r.with(e % n + 1);
        rotated[r] = Rational(c);
      }
      EXPECT_EQ(LinearInequality(rotated, Sense::kGreaterEqual), cycle_inequality(n, i % n + 1));
    }
  }
}

TEST(CycleContextuality, TriangleFixtures) {
  const CycleVerdict puc = check_cycle_contextuality(marginal_entropy_vector(triangle_puc_model()));
  EXPECT_FALSE(puc.noncontextual);
  ASSERT_EQ(puc.violated, std::vector<int>{3});
  EXPECT_NEAR(puc.slacks[2], -1.0L, 1e-9L);

  const CycleVerdict box = check_cycle_contextuality(marginal_entropy_vector(trianglebox_model()));
  EXPECT_TRUE(box.noncontextual);
  EXPECT_TRUE(box.violated.empty());
}

TEST(CycleContextuality, GeneralizedModelViolatesLastRow) {
  for (int n = 3; n <= 8; ++n) {
    const CycleVerdict v = check_cycle_contextuality(marginal_entropy_vector(cycle_model(n)));
    EXPECT_FALSE(v.noncontextual);
    EXPECT_EQ(v.violated, std::vector<int>{n});
    EXPECT_NEAR(v.slacks.back(), -1.0L, 1e-9L);
  }
}

TEST(CycleContextuality, ExactInputAndLocalBasicFailure) {
  PartialRankVector v = constant(cycle_scenario(4), 1);
  EXPECT_TRUE(check_cycle_contextuality(v).noncontextual);
  v.set(S({1, 2}), 3);  // exceeds H(1) + H(2)
  try {
    check_cycle_contextuality(v);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("{1,2}"), std::string::npos) << e.what();
  }
}

TEST(ZhangYeung, Evaluations) {
  const LinearInequality zy = zhang_yeung();
  // Direct substitution of the f^ZY values, term by term.
  const long by_hand = -4 * 4 - 1 * 4 - 1 * 4 + 3 * 3 + 3 * 3 + 1 * 3 + 1 * 3 + 3 * 3 - 1 * 2 - 2 * 2 - 2 * 2;
  EXPECT_EQ(by_hand, -1);
  EXPECT_EQ(zy.evaluate<Rational>(fzy_fixture().as_function()), by_hand);
  EXPECT_EQ(zy.evaluate<Rational>(constant(zy_scenario(), 1).as_function()), 0);
  EXPECT_EQ(zy.evaluate<Rational>(PartialRankVector(zy_scenario()).as_function()), 0);
  for (Subset s : zy.support()) EXPECT_TRUE(zy_scenario().contains(s));
}

TEST(Fzy, Values) {
  const PartialRankVector f = fzy_fixture();
  EXPECT_EQ(f[S({1, 2})], 4);
  EXPECT_EQ(f[Subset{}], 0);
  for (Subset s : zy_scenario().nonempty_members()) {
    const long expected = s.size() == 1 ? 2 : s == S({1, 2}) ? 4 : s.size() == 2 ? 3 : 4;
    EXPECT_EQ(f[s], expected) << debug_string(s);
  }
}

TEST(Fzy, PassesEveryProjectedFacet) {
  const InequalitySystem facets = project_cone(4, zy_scenario(), {});
  EXPECT_TRUE(satisfies(facets, fzy_fixture().as_function()));
}

TEST(RealizeZy, EntropiesAndCompatibility) {
  const MarginalModel m = realize_zy_model();
  EXPECT_TRUE(check_compatibility(m).compatible());
  EXPECT_NEAR(shannon_entropy(m.table(S({1, 3, 4}))), 4.0L, 1e-9L);
  EXPECT_NEAR(shannon_entropy(m.table(S({1}))), 2.0L, 1e-9L);
  const EntropyVector h = marginal_entropy_vector(m);
  for (Subset s : zy_scenario().nonempty_members()) {
    EXPECT_NEAR(h[s], to_long_double(fzy_fixture()[s]), 1e-9L) << debug_string(s);
  }
  EXPECT_NEAR(zhang_yeung().evaluate<long double>(h.as_function()), -1.0L, 1e-9L);
}

TEST(SubmodularExtend, Examples) {
  const RankVector zero = submodular_extend(PartialRankVector(cycle_scenario(4)));
  for (const Rational& v : zero.values()) EXPECT_EQ(v, 0);

  PartialRankVector v(cycle_scenario(3));
  for (Subset s : v.scenario().nonempty_members()) v.set(s, s.size());
  const RankVector out = submodular_extend(v);
  // min over the splits ({1,2},{1,3}), ({1,2},{2,3}), ({1,3},{2,3}) and the
  // splits with a singleton: 2 + 2 - 1 = 3, 2 + 1 - 0 = 3.
  EXPECT_EQ(out[S({1, 2, 3})], 3);
}

TEST(SubmodularExtend, MissingSingletonGetsZero) {
  const Scenario s = Scenario::downward_close(std::vector<Subset>{S({1, 2})}, 3);
  PartialRankVector v(s);
  v.set(S({1}), 2);
  v.set(S({2}), 1);
  v.set(S({1, 2}), 3);
  const RankVector out = submodular_extend(v);
  EXPECT_EQ(out[S({3})], 0);
  EXPECT_EQ(out[S({1, 3})], 2);
  EXPECT_EQ(out[S({1, 2, 3})], 3);
  EXPECT_TRUE(oracle::submodular(oracle::to_table(out)));
}

TEST(SubmodularExtend, RejectsNonSubmodularInput) {
  PartialRankVector v = constant(cycle_scenario(3), 1);
  v.set(S({1, 2}), 3);
  // f{1} + f{2} < f{1,2} + f{}: the violated triple is named.
  try {
    submodular_extend(v);
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    const std::string msg = e.what();
    EXPECT_NE(msg.find("{1}"), std::string::npos) << msg;
    EXPECT_NE(msg.find("{1,2}"), std::string::npos) << msg;
  }
}

TEST(SubmodularExtend, RandomInputsGiveSubmodularExtensions) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 4;
    const oracle::Table f = random_submodular(n, rng);
    ASSERT_TRUE(oracle::submodular(f));
    std::vector<Subset> gens;
    const int count = 1 + static_cast<int>(rng() % 4);
    for (int k = 0; k < count; ++k) gens.push_back(Subset::from_bits(static_cast<std::uint32_t>(rng() % (1u << n))));
    const Scenario scenario = Scenario::downward_close(gens, n);
    PartialRankVector v(scenario);
    for (Subset s : scenario.nonempty_members()) v.set(s, f[s.bits()] - f[0]);
    const RankVector out = submodular_extend(v);
    EXPECT_TRUE(oracle::submodular(oracle::to_table(out))) << "trial " << trial;
    for (Subset s : scenario.members()) EXPECT_EQ(out[s], v[s]);
  }
}

TEST(ProcessBound, Examples) {
  const ProcessBound copy = process_bound(1.0L, 0.0L, 7);
  EXPECT_EQ(copy.bound, 1.0L);
  EXPECT_FALSE(copy.horizon.has_value());

  const ProcessBound three = process_bound(1.0L, 0.25L, 3);
  EXPECT_NEAR(three.bound, 1.0L - 2 * 0.25L, 1e-15L);
  EXPECT_EQ(three.horizon, 4);

  const ProcessBound six = process_bound(1.0L, 0.25L, 6);
  EXPECT_EQ(six.bound, 0.0L);
  EXPECT_NEAR(six.raw, -0.25L, 1e-15L);
  EXPECT_EQ(six.horizon, 4);

  EXPECT_THROW(process_bound(-1.0L, 0.0L, 3), DomainError);
  EXPECT_THROW(process_bound(1.0L, 0.0L, 1), DomainError);
}

TEST(ProcessBound, HoldsForStationaryBinaryChains) {
  std::mt19937_64 rng(8);
  const std::vector<Rational> flips{Rational(0), Rational(1, 20), Rational(1, 4)};
  int trials = 0;
  for (int round = 0; round < 6; ++round) {
    for (const Rational& p : flips) {
      for (int n = 2; n <= 8; ++n) {
        // Symmetric channels on even rounds, random asymmetric ones otherwise.
        Rational a = p, b = p;
        if (round % 2 == 1) {
          a = Rational(static_cast<long>(rng() % 11), 20);
          b = Rational(static_cast<long>(rng() % 11), 20);
          a.canonicalize();
          b.canonicalize();
        }
        const JointDistribution chain = binary_chain(n, a, b);
        const long double h1 = shannon_entropy(chain.marginalize(S({1})));
        const long double hcond =
            shannon_entropy(chain.marginalize(S({1, 2}))) - shannon_entropy(chain.marginalize(S({1})));
        const long double info = mutual_information(chain, S({1}), S({n}));
        const ProcessBound bound = process_bound(h1, std::max(0.0L, hcond), n);
        EXPECT_GE(info, bound.bound - 1e-9L) << "n=" << n << " a=" << a << " b=" << b;
        if (a == b) {
          // Independent closed form for the symmetric channel.
          const double q = (1 - std::pow(1 - 2 * a.get_d(), n - 1)) / 2;
          EXPECT_NEAR(static_cast<double>(info), 1 - h2(q), 1e-9);
          EXPECT_NEAR(static_cast<double>(hcond), h2(a.get_d()), 1e-9);
        }
        ++trials;
      }
    }
  }
  EXPECT_GE(trials, 100);
}

TEST(BlockModel, SingleBlocks) {
  EXPECT_EQ(block_rank(S({1, 2}), S({2, 3})), 1);
  EXPECT_EQ(block_rank(S({1, 2}), S({3})), 0);
  EXPECT_EQ(block_rank(S({1, 2}), Subset{}), 0);
  const Subset blocks[] = {S({1, 2, 3, 4}), S({2, 3}), S({4})};
  const MarginalModel m = block_model(cycle_scenario(4), blocks);
  const EntropyVector h = marginal_entropy_vector(m);
  for (Subset s : cycle_scenario(4).nonempty_members()) {
    long expected = 0;
    for (Subset b : blocks) expected += b.disjoint(s) ? 0 : 1;
    EXPECT_NEAR(h[s], static_cast<long double>(expected), 1e-9L) << debug_string(s);
  }
}

TEST(BlockDecomposition, RejectsContextualAndFractionalInput) {
  PartialRankVector puc = constant(cycle_scenario(3), 1);
  puc.set(S({1, 3}), 2);
  EXPECT_THROW(cycle_block_decomposition(puc), DomainError);
  PartialRankVector half = constant(cycle_scenario(3), 1);
  half.set(S({1}), Rational(1, 2));
  EXPECT_THROW(cycle_block_decomposition(half), DomainError);
}

// Every extremal ray of the cone cut out by the local basic and cycle rows is
// the entropy vector of a model made of shared fair bits.
class CycleRays : public ::testing::TestWithParam<int> {};

TEST_P(CycleRays, EveryExtremalRayIsEntropic) {
  const int n = GetParam();
  const Scenario scenario = cycle_scenario(n);
  const auto coords = scenario.nonempty_members();
  InequalitySystem cone = local_basic_inequalities(scenario);
  const InequalitySystem sys = cycle_inequalities(n);
  for (const auto& row : sys.rows()) cone.add(row);
  std::vector<std::vector<long>> rows;
  for (const auto& row : cone.rows()) {
    std::vector<long> dense(coords.size(), 0);
    for (const auto& [s, c] : row.terms()) {
      dense[static_cast<std::size_t>(std::find(coords.begin(), coords.end(), s) - coords.begin())] = c.get_si();
    }
    rows.push_back(dense);
  }
  const auto rays = extreme_rays(rows, coords.size());
  EXPECT_GE(rays.size(), static_cast<std::size_t>(n));
  for (const auto& ray : rays) {
    PartialRankVector v(scenario);
    for (std::size_t j = 0; j < coords.size(); ++j) v.set(coords[j], ray[j]);
    const std::vector<Subset> blocks = cycle_block_decomposition(v);
    for (Subset s : coords) {
      long sum = 0;
      for (Subset b : blocks) sum += block_rank(b, s);
      EXPECT_EQ(v[s], sum);
    }
    for (Subset b : blocks) {
      // [n] or a cyclic interval.
      bool interval = b == Subset::full(n);
      for (int start = 1; start <= n && !interval; ++start) {
        Subset run;
        for (int len = 1; len < n && !interval; ++len) {
          run = run.with((start + len - 2) % n + 1);
          interval = run == b;
        }
      }
      EXPECT_TRUE(interval) << debug_string(b);
    }
    const EntropyVector h = marginal_entropy_vector(block_model(scenario, blocks));
    for (Subset s : coords) EXPECT_NEAR(h[s], to_long_double(v[s]), 1e-9L);
  }
}

INSTANTIATE_TEST_SUITE_P(SmallCycles, CycleRays, ::testing::Values(3, 4, 5));
