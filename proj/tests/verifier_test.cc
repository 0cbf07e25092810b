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
#include "compactlin/linearizer.h"
#include "compactlin/verifier.h"
#include "compactlin/zoo.h"
#include "testing.h"

namespace compactlin {
namespace {

using testing::Eq;
using testing::ExampleA;
using testing::ExampleB;

bool AllNonPositive(const ViolationMap& map) {
  for (const auto& [key, value] : map) {
    if (value && *value > 0) return false;
  }
  return true;
}

TEST(Theorem1Test, ExampleA) {
  const Instance inst = ExampleA();
  const ConsistencyReport report = VerifyTheorem1(inst, ClosureDisjoint(inst));
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.num_points, 4);
  EXPECT_EQ(report.extension_failures, 0);
  EXPECT_EQ(report.per_pair_max.size(), 12u);
  EXPECT_TRUE(AllNonPositive(report.per_pair_max));
}

TEST(Theorem1Test, ExampleBFixesY12) {
  const Instance inst = ExampleB();
  const CoveragePlan plan = ClosureDisjoint(inst);
  const ConsistencyReport report = VerifyTheorem1(inst, plan);
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.num_points, 2);
  // With x fixed, y12 is pinned to 0 at both points.
  const LinModel model = Relax(CompactLinearize(inst, plan));
  const int y12 = *model.FindY(Pair(1, 2));
  for (const BinaryPoint& x : BruteForceFeasible(inst)) {
    std::vector<Rational> lower, upper;
    for (const LinVar& v : model.vars()) {
      lower.push_back(v.lower);
      upper.push_back(v.upper);
    }
    for (int i = 1; i <= inst.n; ++i) {
      lower[*model.FindX(VarId(i))] = upper[*model.FindX(VarId(i))] = x[i - 1];
    }
    Polytope poly(model, lower, upper);
    LinearExpr e;
    e.Add(y12, 1);
    EXPECT_EQ(poly.Maximize(e).objective, 0);
    EXPECT_EQ(poly.Minimize(e).objective, 0);
  }
}

TEST(Theorem1Test, VacuousWithoutProducts) {
  Instance inst;
  inst.n = 2;
  inst.equations = {Eq(1, {{1, "1"}, {2, "1"}}, "1")};
  const ConsistencyReport report = VerifyTheorem1(inst, ClosureDisjoint(inst));
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.per_pair_max.empty());
}

TEST(Theorem1Test, SizeExceeded) {
  RandomSpec spec;
  spec.n = 12;
  spec.num_equations = 2;
  spec.num_products = 1;
  spec.seed = 4;
  const Instance inst = GenRandom(spec);
  try {
    VerifyTheorem1(inst, SolveSelection(inst).plan, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeExceeded);
  }
}

// An invalid plan lets y float freely: y13 can exceed x1 = 0.
TEST(Theorem1Test, WeakRowsAreDetected) {
  const Instance inst = ExampleA();
  EXPECT_THROW(VerifyTheorem1(inst, MakePlan(inst, {{1, {VarId(3)}}})), Error);
}

TEST(RegimeTest, Detection) {
  EXPECT_EQ(DetectRegime(ExampleA(), ClosureDisjoint(ExampleA())),
            Regime::kAssignment);
  EXPECT_EQ(DetectRegime(ExampleB(), ClosureDisjoint(ExampleB())),
            Regime::kGeneral);
  const Instance tsp = GenQtsp(QtspSpec::Random(4, 1));
  EXPECT_EQ(DetectRegime(tsp, SupportPlan(tsp)), Regime::kDegreeTwo);
}

TEST(DominanceTest, ExampleAAssignment) {
  const DominanceReport report =
      VerifyDominance(ExampleA(), ClosureDisjoint(ExampleA()), Regime::kAssignment);
  EXPECT_TRUE(report.pass);
  EXPECT_TRUE(report.witnesses.empty());
  EXPECT_TRUE(AllNonPositive(report.per_pair_max));
}

TEST(DominanceTest, QtspFourDegreeTwo) {
  const Instance inst = GenQtsp(QtspSpec::Random(4, 2));
  const DominanceReport report =
      VerifyDominance(inst, SupportPlan(inst), Regime::kDegreeTwo);
  EXPECT_TRUE(report.pass);
  EXPECT_EQ(report.per_pair_max.size(), 3u * 12u);
}

TEST(DominanceTest, RegimeMismatch) {
  for (Regime r : {Regime::kAssignment, Regime::kDegreeTwo}) {
    try {
      VerifyDominance(ExampleB(), ClosureDisjoint(ExampleB()), r);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::kRegimeMismatch);
    }
  }
  // Degree-two needs B_k = A_k.
  const Instance tsp = GenQtsp(QtspSpec::Random(4, 2));
  EXPECT_THROW(VerifyDominance(tsp, FullPlan(tsp), Regime::kDegreeTwo), Error);
}

TEST(DominanceTest, GeneralWitnessesAreSound) {
  int witnesses = 0;
  for (uint64_t seed = 1; seed <= 25; ++seed) {
    RandomSpec spec;
    spec.n = 6 + seed % 4;
    spec.num_equations = 1 + seed % 3;
    spec.support_min = 3;
    spec.support_max = 5;
    spec.coeff_min = 1;
    spec.coeff_max = 5;
    spec.max_denominator = seed % 2 ? 1 : 3;
    spec.num_products = 2;
    spec.seed = seed;
    const Instance inst = GenRandom(spec);
    const CoveragePlan plan = SolveSelection(inst).plan;
    const DominanceReport report = VerifyDominance(inst, plan, Regime::kGeneral);
    EXPECT_TRUE(report.witnesses_sound);
    EXPECT_EQ(report.pass, report.witnesses.empty());
    const LinModel relaxed = Relax(CompactLinearize(inst, plan));
    for (const Witness& w : report.witnesses) {
      ++witnesses;
      EXPECT_GT(w.violation, 0);
      EXPECT_TRUE(relaxed.IsFeasible(w.point));
      EXPECT_EQ(LinModel::Evaluate(McCormickViolation(relaxed, w.pair, w.kind),
                                   w.point),
                w.violation);
      EXPECT_TRUE(WitnessIsSound(relaxed, w));
      Witness tampered = w;
      tampered.violation += 1;
      EXPECT_FALSE(WitnessIsSound(relaxed, tampered));
    }
  }
  RecordProperty("general_witnesses", witnesses);
}

TEST(CompareBoundsTest, ExampleB) {
  const BoundComparison cmp = CompareBounds(ExampleB(), ClosureDisjoint(ExampleB()));
  EXPECT_EQ(cmp.compact_bound, 0);
  EXPECT_EQ(cmp.standard_bound, Rational(-2, 3));
  EXPECT_EQ(cmp.delta, Rational(2, 3));
  EXPECT_FALSE(cmp.dominance_expected);
}

TEST(CompareBoundsTest, ZeroObjective) {
  Instance inst = ExampleA();
  inst.quadratic_objective.clear();
  const BoundComparison cmp = CompareBounds(inst, ClosureDisjoint(inst));
  EXPECT_EQ(cmp.compact_bound, 0);
  EXPECT_EQ(cmp.standard_bound, 0);
  EXPECT_EQ(cmp.delta, 0);
}

TEST(CompareBoundsTest, AssignmentWithNegativeCosts) {
  for (uint64_t seed = 1; seed <= 50; ++seed) {
    RandomSpec spec;
    spec.n = 6 + seed % 6;
    spec.num_equations = 2 + seed % 3;
    spec.support_min = 2;
    spec.support_max = 4;
    spec.coeff_min = spec.coeff_max = 1;
    spec.ones_per_equation = 1;
    spec.num_products = 2 + seed % 5;
    spec.objective_min = -10;
    spec.objective_max = 5;
    spec.disjoint = seed % 2 == 0;
    spec.seed = seed;
    const Instance inst = GenRandom(spec);
    const CoveragePlan plan = SolveSelection(inst).plan;
    const BoundComparison cmp = CompareBounds(inst, plan);
    EXPECT_EQ(cmp.regime, Regime::kAssignment);
    EXPECT_TRUE(cmp.dominance_expected);
    EXPECT_GE(cmp.delta, 0) << "seed " << seed;
    EXPECT_TRUE(cmp.dominance_holds);
  }
}

TEST(CompareBoundsTest, QtspFive) {
  const Instance inst = GenQtsp(QtspSpec::Random(5, 11));
  const BoundComparison cmp = CompareBounds(inst, SupportPlan(inst));
  EXPECT_EQ(cmp.regime, Regime::kDegreeTwo);
  EXPECT_GE(cmp.delta, 0);
}

TEST(StructuralMatchTest, Qtsp) {
  const StructuralMatch four = CheckStructuralMatch(ReferenceFamily::kQtsp, 4);
  EXPECT_TRUE(four.match);
  EXPECT_EQ(four.compact_rows, 12);
  EXPECT_EQ(four.reference_rows, 12);
  const StructuralMatch five = CheckStructuralMatch(ReferenceFamily::kQtsp, 5);
  EXPECT_TRUE(five.match);
  EXPECT_EQ(five.compact_rows, 20);
  EXPECT_EQ(five.product_vars, 30);
  EXPECT_EQ(five.standard_inequalities, 90);
}

TEST(StructuralMatchTest, Qap) {
  const StructuralMatch three = CheckStructuralMatch(ReferenceFamily::kQap, 3);
  EXPECT_TRUE(three.match);
  EXPECT_EQ(three.compact_rows, three.reference_rows);
  EXPECT_TRUE(CheckStructuralMatch(ReferenceFamily::kQap, 2).match);
}

TEST(ReportTest, DeterministicText) {
  const Instance inst = ExampleB();
  const CoveragePlan plan = ClosureDisjoint(inst);
  EXPECT_EQ(FormatReport(VerifyTheorem1(inst, plan)),
            FormatReport(VerifyTheorem1(inst, plan)));
  const std::string text =
      FormatReport(VerifyDominance(inst, plan, Regime::kGeneral));
  EXPECT_NE(text.find("dominance (general)"), std::string::npos);
}

}  // namespace
}  // namespace compactlin
