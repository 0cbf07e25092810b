// Copyright 2026 The compactlin Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "compactlin/coverage.h"
#include "compactlin/error.h"
#include "compactlin/lp.h"
#include "compactlin/zoo.h"
#include "testing.h"

namespace compactlin {
namespace {

using testing::Eq;
using testing::ExampleA;
using testing::ExampleB;

std::set<VarId> Vars(std::initializer_list<int> ids) {
  std::set<VarId> out;
  for (int i : ids) out.insert(VarId(i));
  return out;
}

Instance TwoEquations() {
  Instance inst;
  inst.n = 4;
  inst.equations = {Eq(1, {{1, "1"}, {2, "1"}}, "1"),
                    Eq(2, {{3, "1"}, {4, "1"}}, "1")};
  return inst;
}

RandomSpec DisjointSpec(uint64_t seed) {
  RandomSpec spec;
  spec.n = 8 + seed % 6;
  spec.num_equations = 2 + seed % 3;
  spec.support_min = 2;
  spec.support_max = 4;
  spec.coeff_max = 3;
  spec.num_products = 1 + seed % 4;
  spec.disjoint = true;
  spec.seed = seed;
  return spec;
}

RandomSpec OverlapSpec(uint64_t seed) {
  RandomSpec spec;
  spec.n = 5 + seed % 3;
  spec.num_equations = 2 + seed % 2;
  spec.support_min = 2;
  spec.support_max = 4;
  spec.coeff_max = 3;
  spec.num_products = 1 + seed % 3;
  spec.seed = seed;
  return spec;
}

TEST(InducedPairsTest, Empty) {
  EXPECT_TRUE(InducedPairs(TwoEquations(), {}).empty());
}

TEST(InducedPairsTest, SingleEquation) {
  Instance inst;
  inst.n = 3;
  inst.equations = {Eq(1, {{1, "1"}, {2, "1"}, {3, "1"}}, "1")};
  EXPECT_EQ(InducedPairs(inst, {{1, Vars({1})}}),
            (std::set<Pair>{Pair(1, 1), Pair(1, 2), Pair(1, 3)}));
}

TEST(InducedPairsTest, TwoEquations) {
  EXPECT_EQ(InducedPairs(TwoEquations(), {{1, Vars({3})}, {2, Vars({1})}}),
            (std::set<Pair>{Pair(1, 3), Pair(2, 3), Pair(1, 4)}));
}

TEST(InducedPairsTest, Monotone) {
  for (uint64_t seed = 1; seed <= 20; ++seed) {
    const Instance inst = GenRandom(OverlapSpec(seed));
    MultiplierMap small, large;
    for (const auto& eq : inst.equations) {
      for (int i = 1; i <= inst.n; ++i) {
        const int r = (i * 7 + eq.id * 3 + static_cast<int>(seed)) % 4;
        if (r == 0) small[eq.id].insert(VarId(i));
        if (r <= 1) large[eq.id].insert(VarId(i));
      }
    }
    const auto q_small = InducedPairs(inst, small);
    const auto q_large = InducedPairs(inst, large);
    EXPECT_TRUE(std::includes(q_large.begin(), q_large.end(), q_small.begin(),
                              q_small.end()));
  }
}

TEST(CheckConditionsTest, ExampleA) {
  const Instance inst = ExampleA();
  const CoveragePlan plan =
      MakePlan(inst, {{1, Vars({3, 4})}, {2, Vars({1, 2})}});
  const ConditionCheck check = CheckConditions(inst, plan);
  ASSERT_TRUE(check.ok) << check.failure;
  ASSERT_EQ(check.certificate.size(), 4u);
  for (const auto& [pair, w] : check.certificate) {
    const LinearEquation* k = inst.FindEquation(w.k);
    const LinearEquation* l = inst.FindEquation(w.l);
    ASSERT_NE(k, nullptr);
    ASSERT_NE(l, nullptr);
    EXPECT_TRUE(k->Contains(pair.i));
    EXPECT_TRUE(plan.multipliers.at(w.k).count(pair.j));
    EXPECT_TRUE(l->Contains(pair.j));
    EXPECT_TRUE(plan.multipliers.at(w.l).count(pair.i));
  }
  EXPECT_EQ(check.certificate.at(Pair(1, 3)), (ConditionWitness{1, 2}));
}

TEST(CheckConditionsTest, ConditionTwoViolated) {
  const Instance inst = ExampleA();
  const CoveragePlan plan = MakePlan(inst, {{1, Vars({3})}, {2, Vars({1})}});
  const ConditionCheck check = CheckConditions(inst, plan);
  EXPECT_FALSE(check.ok);
  EXPECT_NE(check.failure.find("condition 2 fails for (2,3)"), std::string::npos)
      << check.failure;
}

TEST(CheckConditionsTest, EmptyPlanWithoutProducts) {
  const Instance inst = TwoEquations();
  EXPECT_TRUE(CheckConditions(inst, MakePlan(inst, {})).ok);
}

TEST(CheckConditionsTest, MissingProductAndWrongQ) {
  const Instance inst = ExampleA();
  EXPECT_FALSE(CheckConditions(inst, MakePlan(inst, {})).ok);
  CoveragePlan plan = MakePlan(inst, {{1, Vars({3, 4})}, {2, Vars({1, 2})}});
  plan.pairs.erase(Pair(2, 4));
  EXPECT_FALSE(CheckConditions(inst, plan).ok);
}

TEST(ClosureTest, ExampleA) {
  const CoveragePlan plan = ClosureDisjoint(ExampleA());
  EXPECT_EQ(plan.multipliers.at(1), Vars({3, 4}));
  EXPECT_EQ(plan.multipliers.at(2), Vars({1, 2}));
  EXPECT_EQ(plan.pairs, (std::set<Pair>{Pair(1, 3), Pair(1, 4), Pair(2, 3),
                                         Pair(2, 4)}));
}

TEST(ClosureTest, ExampleBNeedsWholeSupport) {
  const CoveragePlan plan = ClosureDisjoint(ExampleB());
  EXPECT_EQ(plan.multipliers.at(1), Vars({1, 2, 3}));
  EXPECT_EQ(plan.pairs.size(), 6u);
  EXPECT_TRUE(plan.pairs.count(Pair(3, 3)));
}

TEST(ClosureTest, NoProducts) {
  const CoveragePlan plan = ClosureDisjoint(TwoEquations());
  EXPECT_TRUE(plan.pairs.empty());
  for (const auto& [k, b] : plan.multipliers) EXPECT_TRUE(b.empty());
}

TEST(ClosureTest, RejectsOverlap) {
  Instance inst = ExampleA();
  inst.equations.push_back(Eq(3, {{1, "1"}, {4, "1"}}, "1"));
  try {
    ClosureDisjoint(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSupportsNotDisjoint);
  }
}

TEST(StatsTest, ExcludesSquares) {
  const Instance inst = ExampleB();
  const CoverageStats stats = ComputeStats(inst, ClosureDisjoint(inst));
  EXPECT_EQ(stats.num_equations, 3);
  EXPECT_EQ(stats.num_vars, 3);
  EXPECT_EQ(stats.standard_ineq_count, 3);
}

TEST(SelectionTest, ExampleAModelSize) {
  const SelectionModel sel =
      BuildSelectionMilp(ExampleA(), SelectionWeights::Default(ExampleA()));
  EXPECT_EQ(sel.z.size(), 8u);
  EXPECT_EQ(sel.f.size(), 10u);
  for (const auto& [key, v] : sel.z) EXPECT_TRUE(sel.model.vars()[v].integral);
  for (const auto& [key, v] : sel.f) {
    EXPECT_FALSE(sel.model.vars()[v].integral);
    EXPECT_LE(sel.model.vars()[v].upper, 1);
  }
}

TEST(SelectionTest, DefaultWeights) {
  const SelectionWeights w = SelectionWeights::Default(ExampleB());
  EXPECT_EQ(w.var, 1);
  EXPECT_EQ(w.eqn, 4);
}

TEST(SelectionTest, NoProductsCostsNothing) {
  const SelectionResult result = SolveSelection(TwoEquations());
  EXPECT_EQ(result.objective, 0);
  EXPECT_TRUE(result.plan.pairs.empty());
}

TEST(SelectionTest, ExampleAMatchesClosure) {
  const SelectionResult result = SolveSelection(ExampleA());
  EXPECT_EQ(result.plan, ClosureDisjoint(ExampleA()));
  EXPECT_EQ(result.stats.num_equations, 4);
  EXPECT_EQ(result.stats.num_vars, 4);
  // 3 * 4 equations + 4 pairs.
  EXPECT_EQ(result.objective, 16);
  const SelectionModel sel =
      BuildSelectionMilp(ExampleA(), SelectionWeights::Default(ExampleA()));
  EXPECT_EQ(SolveMilp(sel.model).objective, result.objective);
}

TEST(SelectionTest, ExampleB) {
  const SelectionResult result = SolveSelection(ExampleB());
  EXPECT_EQ(result.stats.num_equations, 3);
  EXPECT_EQ(result.plan.multipliers.at(1), Vars({1, 2, 3}));
}

TEST(SelectionTest, DisjointAgreesWithClosureAndLpIsIntegral) {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    const Instance inst = GenRandom(DisjointSpec(seed));
    ASSERT_TRUE(inst.HasDisjointSupports());
    const SelectionResult result = SolveSelection(inst);
    EXPECT_TRUE(result.lp_integral) << "seed " << seed;
    EXPECT_EQ(result.plan, ClosureDisjoint(inst)) << "seed " << seed;
    EXPECT_TRUE(CheckConditions(inst, result.plan).ok);
  }
}

TEST(SelectionTest, OverlappingMatchesExhaustiveEnumeration) {
  for (uint64_t seed = 1; seed <= 12; ++seed) {
    const Instance inst = GenRandom(OverlapSpec(seed));
    const SelectionWeights w = SelectionWeights::Default(inst);
    const SelectionResult result = SolveSelection(inst, w);
    const auto oracle = testing::EnumerateSelections(inst, w.eqn, w.var);
    ASSERT_TRUE(oracle.feasible);
    EXPECT_EQ(result.objective, oracle.objective) << "seed " << seed;
    EXPECT_TRUE(CheckConditions(inst, result.plan).ok);
  }
}

TEST(SelectionTest, CustomWeightsStillValid) {
  for (uint64_t seed = 1; seed <= 8; ++seed) {
    const Instance inst = GenRandom(OverlapSpec(seed));
    const SelectionWeights w{Rational(1), Rational(5)};
    const SelectionResult result = SolveSelection(inst, w);
    EXPECT_TRUE(CheckConditions(inst, result.plan).ok);
    EXPECT_EQ(result.objective,
              testing::EnumerateSelections(inst, w.eqn, w.var).objective);
  }
}

TEST(SelectionTest, Deterministic) {
  const Instance inst = GenRandom(OverlapSpec(3));
  EXPECT_EQ(SolveSelection(inst).plan, SolveSelection(inst).plan);
}

TEST(PlanTest, SupportAndFullPlansSatisfyConditions) {
  for (uint64_t seed = 1; seed <= 10; ++seed) {
    const Instance inst = GenRandom(OverlapSpec(seed));
    EXPECT_TRUE(CheckConditions(inst, FullPlan(inst)).ok);
    const CoveragePlan support = SupportPlan(inst);
    for (const auto& eq : inst.equations) {
      EXPECT_EQ(support.multipliers.at(eq.id), eq.Support());
    }
  }
}

TEST(PlanTest, FormatPlan) {
  const CoveragePlan plan = ClosureDisjoint(ExampleA());
  const std::string text = FormatPlan(plan, ComputeStats(ExampleA(), plan));
  EXPECT_NE(text.find("B_1 = {3, 4}"), std::string::npos) << text;
  EXPECT_NE(text.find("standard-inequalities 3"), std::string::npos);
}

}  // namespace
}  // namespace compactlin
