#include <gtest/gtest.h>

#include <random>

#include "entropic/cones.hpp"
#include "entropic/error.hpp"
#include "entropic/polyhedra.hpp"
#include "entropic/rational.hpp"
#include "entropic/simplex.hpp"
#include "oracles.hpp"

using namespace entropic;

namespace {

const Subset X = Subset::of({1});
const Subset Y = Subset::of({2});
const Subset Z = Subset::of({3});

InequalitySystem system_of(int n, std::vector<Subset> coords,
                           std::initializer_list<LinearInequality> rows) {
  InequalitySystem s(n, std::move(coords));
  for (const auto& r : rows) s.add(r);
  return s;
}

LinearInequality triangle() {
  return LinearInequality({{Subset::of({1, 2}), 1},
                           {Subset::of({2, 3}), 1},
                           {Subset::of({1, 3}), -1},
                           {Subset::of({2}), -1}});
}

// Does some point of `system` agree with `point` on the kept coordinates?
// Plain LP feasibility, no elimination involved.
bool extension_exists(const InequalitySystem& system,
                      const std::map<Subset, Rational, CanonicalLess>& point) {
  const auto& coords = system.coordinates();
  LinearProgram lp(coords.size());
  for (const auto& row : system.rows()) {
    SparseVector a;
    for (const auto& [s, c] : row.terms()) {
      a.emplace_back(static_cast<std::size_t>(system.coordinate_index(s)), Rational(c));
    }
    lp.add_row(std::move(a), row.is_equality() ? RowSense::kEqual : RowSense::kGreaterEqual, 0);
  }
  for (const auto& [s, v] : point) {
    lp.add_row({{static_cast<std::size_t>(system.coordinate_index(s)), Rational(1)}},
               RowSense::kEqual, v);
  }
  const LpSolution sol = lp.solve();
  EXPECT_TRUE(lp.verify(sol));
  return sol.status == LpStatus::kOptimal;
}

}  // namespace

TEST(RationalParse, FormsAndErrors) {
  EXPECT_EQ(parse_rational("3"), Rational(3));
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(parse_rational("0.125"), Rational(1, 8));
  EXPECT_EQ(parse_rational("1e-3"), Rational(1, 1000));
  EXPECT_EQ(parse_rational(" +2.5E1 "), Rational(25));
  EXPECT_THROW(parse_rational("1/0"), ParseError);
  EXPECT_THROW(parse_rational("abc"), ParseError);
  EXPECT_THROW(parse_rational(""), ParseError);
  const Rational r = parse_rational("10/4");
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(to_string(r), "5/2");
}

TEST(RationalParse, ExactBinaryConversion) {
  EXPECT_EQ(exact_rational(0.5L), Rational(1, 2));
  EXPECT_EQ(exact_rational(-3.0L), Rational(-3));
  EXPECT_EQ(to_long_double(exact_rational(0.1L)), 0.1L);
  EXPECT_THROW(exact_rational(std::numeric_limits<long double>::infinity()), DomainError);
}

TEST(LinearInequality, NormalizesToCoprimeIntegers) {
  std::map<Subset, Rational, CanonicalLess> raw{{X, Rational(2, 3)}, {Y, Rational(-4, 3)}, {Z, 0}};
  const LinearInequality row(raw, Sense::kGreaterEqual);
  ASSERT_EQ(row.terms().size(), 2u);
  EXPECT_EQ(row.coefficient(X), 1);
  EXPECT_EQ(row.coefficient(Y), -2);
  EXPECT_EQ(row.coefficient(Z), 0);
  // Positive scaling keeps the stored form; equalities also absorb sign.
  EXPECT_EQ(LinearInequality({{X, 3}, {Y, -6}}), row);
  EXPECT_EQ(LinearInequality({{X, -1}, {Y, 2}}, Sense::kEqual),
            LinearInequality({{X, 1}, {Y, -2}}, Sense::kEqual));
  EXPECT_NE(LinearInequality({{X, -1}, {Y, 2}}), row);
  EXPECT_TRUE(LinearInequality({{X, 0}}).is_trivial());
}

TEST(InequalitySystem, DropsDuplicatesAndRejectsForeignCoordinates) {
  InequalitySystem s(2, {X, Y});
  EXPECT_TRUE(s.add(LinearInequality({{X, 1}})));
  EXPECT_FALSE(s.add(LinearInequality({{X, 2}})));
  EXPECT_FALSE(s.add(LinearInequality({{X, 0}})));
  EXPECT_THROW(s.add(LinearInequality({{Z, 1}})), DomainError);
  EXPECT_EQ(s.size(), 1u);
}

TEST(FmEliminate, TriangleFromMonotonicityAndSubmodularity) {
  const Subset all = Subset::of({1, 2, 3});
  const InequalitySystem s = system_of(
      3, {Y, Subset::of({1, 2}), Subset::of({1, 3}), Subset::of({2, 3}), all},
      {LinearInequality({{all, 1}, {Subset::of({1, 3}), -1}}),
       LinearInequality({{Subset::of({1, 2}), 1}, {Subset::of({2, 3}), 1}, {all, -1}, {Y, -1}})});
  const EliminationResult r = fm_eliminate(s, all);
  EXPECT_TRUE(r.system.contains(triangle()));
  EXPECT_FALSE(r.system.has_coordinate(all));
}

TEST(FmEliminate, AbsentCoordinateOnlyChangesCoordinates) {
  const InequalitySystem s = system_of(2, {X, Y}, {LinearInequality({{X, 1}})});
  const EliminationResult r = fm_eliminate(s, Y);
  EXPECT_EQ(r.system.rows(), s.rows());
  EXPECT_EQ(r.system.coordinates(), std::vector<Subset>{X});
  EXPECT_THROW(fm_eliminate(s, Z), DomainError);
}

TEST(FmEliminate, SinglePairing) {
  const InequalitySystem s = system_of(
      2, {X, Y},
      {LinearInequality({{X, 1}}), LinearInequality({{X, -1}, {Y, 1}}), LinearInequality({{Y, -1}})});
  const EliminationResult r = fm_eliminate(s, X);
  const InequalitySystem expected =
      system_of(2, {Y}, {LinearInequality({{Y, 1}}), LinearInequality({{Y, -1}})});
  EXPECT_TRUE(r.system.same_rows(expected));
}

TEST(FmEliminate, EqualityIsUsedAsSubstitution) {
  // x - y == 0, x + z >= 0, -x >= 0 with x eliminated: y + z >= 0, -y >= 0.
  const InequalitySystem s = system_of(
      3, {X, Y, Z},
      {LinearInequality({{X, 1}, {Y, -1}}, Sense::kEqual), LinearInequality({{X, 1}, {Z, 1}}),
       LinearInequality({{X, -1}})});
  const EliminationResult r = fm_eliminate(s, X);
  const InequalitySystem expected =
      system_of(3, {Y, Z}, {LinearInequality({{Y, 1}, {Z, 1}}), LinearInequality({{Y, -1}})});
  EXPECT_TRUE(r.system.same_rows(expected));
}

TEST(FmEliminate, DerivationsReproduceEveryRow) {
  const InequalitySystem gamma = elemental_system(3);
  for (Subset coord : {Subset::of({1, 2, 3}), Subset{}, Subset::of({1, 2})}) {
    const EliminationResult r = fm_eliminate(gamma, coord);
    ASSERT_EQ(r.derivations.size(), r.system.size());
    for (std::size_t k = 0; k < r.system.size(); ++k) {
      const auto combo = recombine(r.derivations[k], gamma);
      ASSERT_TRUE(combo.has_value());
      EXPECT_EQ(*combo, to_objective(r.system.rows()[k])) << "row " << k;
    }
  }
}

TEST(Project, TriangleScenarioFacets) {
  const InequalitySystem gamma = elemental_system(3);
  const auto keep = cycle_scenario(3).nonempty_members();
  const InequalitySystem out = project(gamma, keep);
  EXPECT_EQ(out.size(), 12u);
  EXPECT_TRUE(out.contains(triangle()));
  EXPECT_EQ(out.coordinates(), keep);
}

TEST(Project, KeepingEverythingOnlyRemovesRedundancy) {
  const InequalitySystem s = system_of(
      2, {X, Y},
      {LinearInequality({{X, 1}}), LinearInequality({{Y, 1}}), LinearInequality({{X, 1}, {Y, 1}})});
  const std::vector<Subset> keep{X, Y};
  const InequalitySystem out = project(s, keep);
  EXPECT_TRUE(out.same_rows(system_of(2, {X, Y}, {LinearInequality({{X, 1}}), LinearInequality({{Y, 1}})})));
}

TEST(Project, BudgetIsEnforced) {
  ProjectOptions options;
  options.budget = 5;
  const auto keep = cycle_scenario(4).nonempty_members();
  EXPECT_THROW(project(elemental_system(4), keep, options), BudgetExhausted);
}

TEST(Project, StatsAndStepCallback) {
  ProjectStats stats;
  std::size_t steps = 0;
  ProjectOptions options;
  options.stats = &stats;
  options.on_step = [&](Subset, std::size_t) { ++steps; };
  const auto keep = cycle_scenario(3).nonempty_members();
  project(elemental_system(3), keep, options);
  EXPECT_EQ(steps, 2u);  // {} and {1,2,3}
  EXPECT_EQ(stats.eliminations + stats.substitutions, 2u);
  EXPECT_GT(stats.derived_rows, 0u);
}

TEST(Project, OutputDoesNotDependOnThreadsOrPruning) {
  const auto keep = cycle_scenario(4).nonempty_members();
  ProjectOptions serial;
  ProjectOptions parallel;
  parallel.threads = 4;
  ProjectOptions no_pruning;
  no_pruning.prune_above = 0;
  no_pruning.chernikov = false;
  const InequalitySystem a = project(elemental_system(4), keep, serial);
  EXPECT_EQ(a.rows(), project(elemental_system(4), keep, parallel).rows());
  EXPECT_EQ(a.rows(), project(elemental_system(4), keep, no_pruning).rows());
}

TEST(RemoveRedundant, ScalarDuplicate) {
  InequalitySystem s(1, {X});
  s.add(LinearInequality({{X, 1}}));
  s.add(LinearInequality({{X, 2}}));
  EXPECT_EQ(remove_redundant(s, Redundancy::kPairwise).size(), 1u);
}

TEST(RemoveRedundant, SumOfTwoRows) {
  const InequalitySystem s = system_of(
      2, {X, Y},
      {LinearInequality({{X, 1}}), LinearInequality({{Y, 1}}), LinearInequality({{X, 1}, {Y, 1}})});
  EXPECT_EQ(remove_redundant(s, Redundancy::kPairwise).size(), 3u);
  const InequalitySystem out = remove_redundant(s, Redundancy::kExact);
  EXPECT_TRUE(out.same_rows(system_of(2, {X, Y}, {LinearInequality({{X, 1}}), LinearInequality({{Y, 1}})})));
}

TEST(RemoveRedundant, ElementalRowsOfGamma3AreFacets) {
  const InequalitySystem gamma = elemental_system(3);
  const InequalitySystem out = remove_redundant(gamma, Redundancy::kExact);
  EXPECT_EQ(out.inequality_count(), 9u);
  EXPECT_EQ(out.equality_count(), 1u);
}

TEST(RemoveRedundant, MutuallyImpliedRowsKeepOne) {
  // x >= 0 listed through two equal forms and a third: x + y >= 0 with y == 0.
  const InequalitySystem s = system_of(
      2, {X, Y},
      {LinearInequality({{Y, 1}}, Sense::kEqual), LinearInequality({{X, 1}}),
       LinearInequality({{X, 1}, {Y, 1}})});
  const InequalitySystem out = remove_redundant(s, Redundancy::kExact);
  EXPECT_EQ(out.inequality_count(), 1u);
  EXPECT_EQ(out.equality_count(), 1u);
}

TEST(RemoveRedundant, OutputIsIrredundantByWitness) {
  const auto keep = zy_scenario().nonempty_members();
  const InequalitySystem facets = project(elemental_system(4), keep);
  for (std::size_t i = 0; i < facets.size(); ++i) {
    const auto witness = irredundancy_witness(facets, i);
    ASSERT_TRUE(witness.has_value()) << "row " << i;
    const auto value = [&](Subset s) {
      auto it = witness->find(s);
      return it == witness->end() ? Rational(0) : it->second;
    };
    for (std::size_t j = 0; j < facets.size(); ++j) {
      const Rational v = facets.rows()[j].evaluate<Rational>(value);
      if (j == i) {
        EXPECT_LT(sgn(v), 0);
      } else {
        EXPECT_GE(sgn(v), 0);
      }
    }
  }
}

TEST(LpSolve, TriangleIsValidOverGamma3) {
  const ConeLpResult r = lp_solve(to_objective(triangle()), elemental_system(3));
  ASSERT_EQ(r.status, LpStatus::kOptimal);
  EXPECT_EQ(r.optimum, 0);
  // Multipliers recombine to the objective.
  Derivation d;
  for (std::size_t i = 0; i < r.multipliers.size(); ++i) {
    if (r.multipliers[i] != 0) d.multipliers.emplace_back(i, r.multipliers[i]);
  }
  EXPECT_EQ(recombine(d, elemental_system(3)), to_objective(triangle()));
}

TEST(LpSolve, ZhangYeungIsUnboundedOverGamma4) {
  const LinearInequality zy({{Subset::of({1, 3, 4}), -4}, {Subset::of({2, 3, 4}), -1},
                             {Subset::of({1, 2}), -1},    {Subset::of({1, 3}), 3},
                             {Subset::of({1, 4}), 3},     {Subset::of({2, 3}), 1},
                             {Subset::of({2, 4}), 1},     {Subset::of({3, 4}), 3},
                             {Subset::of({1}), -1},       {Subset::of({3}), -2},
                             {Subset::of({4}), -2}});
  const InequalitySystem gamma = elemental_system(4);
  const ConeLpResult r = lp_solve(to_objective(zy), gamma);
  ASSERT_EQ(r.status, LpStatus::kUnbounded);
  const auto value = [&](Subset s) {
    auto it = r.ray.find(s);
    return it == r.ray.end() ? Rational(0) : it->second;
  };
  EXPECT_TRUE(satisfies(gamma, value));
  EXPECT_LT(sgn(zy.evaluate<Rational>(value)), 0);
}

TEST(LpSolve, ZeroObjectiveAndMaximize) {
  const InequalitySystem s = system_of(1, {X}, {LinearInequality({{X, 1}})});
  EXPECT_EQ(lp_solve({}, s).status, LpStatus::kOptimal);
  EXPECT_EQ(lp_solve({{X, 1}}, s, Direction::kMaximize).status, LpStatus::kUnbounded);
  EXPECT_EQ(lp_solve({{X, -1}}, s, Direction::kMaximize).status, LpStatus::kOptimal);
  EXPECT_THROW(lp_solve({{Y, 1}}, s), DomainError);
}

TEST(LinearProgram, SmallProblemsWithCertificates) {
  // max x + y  s.t.  x + 2y <= 4, 3x + y <= 6, x, y >= 0  -> optimum 14/5 at (8/5, 6/5).
  LinearProgram lp(2);
  lp.set_nonnegative(0);
  lp.set_nonnegative(1);
  lp.add_row({{0, 1}, {1, 2}}, RowSense::kLessEqual, 4);
  lp.add_row({{0, 3}, {1, 1}}, RowSense::kLessEqual, 6);
  lp.set_objective({{0, 1}, {1, 1}}, Direction::kMaximize);
  const LpSolution sol = lp.solve();
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_EQ(sol.optimum, Rational(14, 5));
  EXPECT_EQ(sol.primal[0], Rational(8, 5));
  EXPECT_TRUE(lp.verify(sol));

  LinearProgram infeasible(1);
  infeasible.add_row({{0, 1}}, RowSense::kGreaterEqual, 2);
  infeasible.add_row({{0, 1}}, RowSense::kLessEqual, 1);
  const LpSolution bad = infeasible.solve();
  EXPECT_EQ(bad.status, LpStatus::kInfeasible);
  EXPECT_TRUE(infeasible.verify(bad));

  LinearProgram unbounded(1);
  unbounded.add_row({{0, 1}}, RowSense::kGreaterEqual, 2);
  unbounded.set_objective({{0, 1}}, Direction::kMaximize);
  const LpSolution up = unbounded.solve();
  EXPECT_EQ(up.status, LpStatus::kUnbounded);
  EXPECT_TRUE(unbounded.verify(up));
}

TEST(LinearProgram, RandomProblemsCarryVerifiableCertificates) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<int> coeff(-4, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t vars = 2 + rng() % 3;
    LinearProgram lp(vars);
    for (std::size_t j = 0; j < vars; ++j) {
      if (rng() % 2) lp.set_nonnegative(j);
    }
    const std::size_t rows = 2 + rng() % 4;
    for (std::size_t i = 0; i < rows; ++i) {
      SparseVector a;
      for (std::size_t j = 0; j < vars; ++j) a.emplace_back(j, coeff(rng));
      lp.add_row(std::move(a), static_cast<RowSense>(rng() % 3), coeff(rng));
    }
    SparseVector c;
    for (std::size_t j = 0; j < vars; ++j) c.emplace_back(j, coeff(rng));
    lp.set_objective(std::move(c), rng() % 2 ? Direction::kMinimize : Direction::kMaximize);
    EXPECT_TRUE(lp.verify(lp.solve())) << "trial " << trial;
  }
}

// FM completeness at desk scale: a point satisfies the projection iff the
// unprojected system admits an extension of it.
class ProjectionCompleteness : public ::testing::TestWithParam<int> {};

TEST_P(ProjectionCompleteness, AgreesWithLpExtension) {
  const int which = GetParam();
  const Scenario scenario = which == 0 ? cycle_scenario(3) : which == 1 ? cycle_scenario(4) : zy_scenario();
  const int n = scenario.n();
  const InequalitySystem gamma = elemental_system(n);
  const auto keep = scenario.nonempty_members();
  const InequalitySystem facets = project(gamma, keep);

  std::mt19937_64 rng(100 + which);
  std::uniform_int_distribution<int> noise(-2, 2);
  int inside = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const oracle::Table f = oracle::random_polymatroid(n, rng);
    std::map<Subset, Rational, CanonicalLess> point;
    for (Subset s : keep) {
      Rational v = f[s.bits()];
      // Perturb two thirds of the trials so both verdicts occur.
      if (trial % 3 != 0) v += Rational(noise(rng)) / (1 + static_cast<int>(rng() % 3));
      point[s] = v;
    }
    const bool projected = satisfies(facets, [&](Subset s) { return point.at(s); });
    EXPECT_EQ(projected, extension_exists(gamma, point)) << "trial " << trial;
    inside += projected ? 1 : 0;
  }
  EXPECT_GE(inside, 40);
  EXPECT_LE(inside, 119);
}

INSTANTIATE_TEST_SUITE_P(Scenarios, ProjectionCompleteness, ::testing::Values(0, 1, 2));
