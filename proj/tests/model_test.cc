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

#include "compactlin/error.h"
#include "compactlin/model.h"
#include "compactlin/rational.h"
#include "compactlin/zoo.h"
#include "testing.h"

namespace compactlin {
namespace {

using testing::Eq;
using testing::ExampleA;
using testing::ExampleB;

TEST(RationalTest, ParsesIntegersFractionsAndDecimals) {
  Rational r;
  ASSERT_TRUE(ParseRational("1/3", &r));
  EXPECT_EQ(r, Rational(1, 3));
  ASSERT_TRUE(ParseRational("-2.25", &r));
  EXPECT_EQ(r, Rational(-9, 4));
  ASSERT_TRUE(ParseRational("4/6", &r));
  EXPECT_EQ(r.get_num(), 2);
  EXPECT_EQ(r.get_den(), 3);
  ASSERT_TRUE(ParseRational("0.1", &r));
  EXPECT_EQ(r, Rational(1, 10));
  ASSERT_TRUE(ParseRational("+7", &r));
  EXPECT_EQ(r, 7);
}

TEST(RationalTest, RejectsMalformed) {
  Rational r;
  for (const char* bad : {"", "1/0", "abc", ".", "1/2/3", "1e3", "--1"}) {
    EXPECT_FALSE(ParseRational(bad, &r)) << bad;
  }
}

TEST(RationalTest, ExactDecimal) {
  std::string s;
  EXPECT_TRUE(ToExactDecimal(Rational(3, 8), &s));
  EXPECT_EQ(s, "0.375");
  EXPECT_TRUE(ToExactDecimal(Rational(-5, 2), &s));
  EXPECT_EQ(s, "-2.5");
  EXPECT_TRUE(ToExactDecimal(Rational(4), &s));
  EXPECT_EQ(s, "4");
  EXPECT_FALSE(ToExactDecimal(Rational(1, 3), &s));
  EXPECT_EQ(ToString(Rational(-1, 3)), "-1/3");
}

TEST(ValidateTest, EmptyProductsIsOk) {
  Instance inst;
  inst.n = 2;
  inst.equations = {Eq(1, {{1, "1"}, {2, "1"}}, "1")};
  EXPECT_TRUE(ValidateInstance(inst).ok());
}

TEST(ValidateTest, WorkedExamplesAreOk) {
  EXPECT_TRUE(ValidateInstance(ExampleA()).ok());
  EXPECT_TRUE(ValidateInstance(ExampleB()).ok());
}

TEST(ValidateTest, UncoveredVariable) {
  Instance inst;
  inst.n = 3;
  inst.equations = {Eq(1, {{1, "1"}, {2, "1"}}, "1")};
  inst.products = {Pair(1, 3)};
  const ValidationReport report = ValidateInstance(inst);
  ASSERT_FALSE(report.ok());
  ASSERT_EQ(report.issues.size(), 1u);
  EXPECT_EQ(report.issues[0].code, "uncovered-variable");
  EXPECT_NE(report.issues[0].element.find('3'), std::string::npos);
}

TEST(ValidateTest, NonpositiveCoefficientAndRhs) {
  Instance inst;
  inst.n = 2;
  inst.equations = {Eq(1, {{1, "0"}, {2, "1"}}, "1"),
                    Eq(2, {{1, "1"}, {2, "1"}}, "-1")};
  const ValidationReport report = ValidateInstance(inst);
  ASSERT_FALSE(report.ok());
  std::set<std::string> codes;
  for (const auto& issue : report.issues) codes.insert(issue.code);
  EXPECT_TRUE(codes.count("nonpositive-coefficient"));
  EXPECT_TRUE(codes.count("nonpositive-rhs"));
}

TEST(ValidateTest, UnorderedPairAndSideOutsideP) {
  Instance inst = ExampleA();
  inst.products.insert(Pair(VarId(4), VarId(2)));
  SideConstraint side;
  side.y_coeffs[Pair(2, 4)] = 1;
  side.rhs = 0;
  inst.sides.push_back(side);
  const ValidationReport report = ValidateInstance(inst);
  EXPECT_FALSE(report.ok());
  std::set<std::string> codes;
  for (const auto& issue : report.issues) codes.insert(issue.code);
  EXPECT_TRUE(codes.count("unordered-pair"));
  EXPECT_TRUE(codes.count("side-pair-not-in-products"));
}

TEST(ValidateTest, IsPureAndDeterministic) {
  Instance inst = ExampleA();
  inst.products.insert(Pair(1, 9));
  const ValidationReport a = ValidateInstance(inst);
  const ValidationReport b = ValidateInstance(inst);
  EXPECT_EQ(a.Summary(), b.Summary());
  EXPECT_EQ(inst.products.size(), 2u);
}

TEST(BruteForceTest, ExampleB) {
  const std::vector<BinaryPoint> points = BruteForceFeasible(ExampleB());
  ASSERT_EQ(points.size(), 2u);
  EXPECT_EQ(points[0], (BinaryPoint{0, 1, 1}));
  EXPECT_EQ(points[1], (BinaryPoint{1, 0, 0}));
}

TEST(BruteForceTest, ExampleAHasFourPoints) {
  EXPECT_EQ(BruteForceFeasible(ExampleA()).size(), 4u);
}

TEST(BruteForceTest, SingleVariable) {
  Instance inst;
  inst.n = 1;
  inst.equations = {Eq(1, {{1, "1"}}, "1")};
  const auto points = BruteForceFeasible(inst);
  ASSERT_EQ(points.size(), 1u);
  EXPECT_EQ(points[0], BinaryPoint{1});
}

TEST(BruteForceTest, SizeExceeded) {
  Instance inst;
  inst.n = 26;
  try {
    BruteForceFeasible(inst);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeExceeded);
  }
  inst.n = 6;
  EXPECT_THROW(BruteForceFeasible(inst, 5), Error);
}

TEST(BruteForceTest, SidesUseProducts) {
  Instance inst = ExampleA();
  SideConstraint side;  // -y13 >= 0 forbids x1 = x3 = 1
  side.y_coeffs[Pair(1, 3)] = -1;
  side.rhs = 0;
  inst.sides.push_back(side);
  const auto points = BruteForceFeasible(inst);
  EXPECT_EQ(points.size(), 3u);
  for (const auto& x : points) EXPECT_FALSE(x[0] == 1 && x[2] == 1);
}

// Agreement with plain enumeration, plus exact re-substitution.
TEST(BruteForceTest, MatchesExhaustiveEnumeration) {
  for (uint64_t seed = 1; seed <= 40; ++seed) {
    RandomSpec spec;
    spec.n = 6 + seed % 6;
    spec.num_equations = 1 + seed % 4;
    spec.support_min = 3;
    spec.support_max = 5;
    spec.coeff_max = 4;
    spec.max_denominator = seed % 3 == 0 ? 3 : 1;
    spec.num_products = 2;
    spec.num_sides = seed % 2;
    spec.seed = seed;
    const Instance inst = GenRandom(spec);
    const auto points = BruteForceFeasible(inst);
    EXPECT_EQ(points, testing::EnumerateFeasible(inst)) << "seed " << seed;
    for (const auto& x : points) {
      EXPECT_TRUE(SatisfiesEquations(inst, x));
      EXPECT_TRUE(SatisfiesSides(inst, x));
    }
  }
}

TEST(ModelTest, EvaluateObjective) {
  Instance inst = ExampleB();
  inst.linear_objective[VarId(3)] = Rational(1, 2);
  EXPECT_EQ(EvaluateObjective(inst, {1, 1, 0}), Rational(-1));
  EXPECT_EQ(EvaluateObjective(inst, {0, 1, 1}), Rational(1, 2));
}

TEST(ModelTest, Helpers) {
  const Instance a = ExampleA();
  EXPECT_TRUE(a.HasDisjointSupports());
  EXPECT_TRUE(a.HasObjective());
  ASSERT_NE(a.FindEquation(2), nullptr);
  EXPECT_EQ(a.FindEquation(3), nullptr);
  EXPECT_EQ(a.EquationsContaining(VarId(3)), std::vector<int>{2});
  Instance b = a;
  b.equations.push_back(Eq(3, {{2, "1"}, {3, "1"}}, "1"));
  EXPECT_FALSE(b.HasDisjointSupports());
  EXPECT_EQ(ToString(Pair(2, 5)), "(2,5)");
  EXPECT_TRUE(Pair::Of(VarId(5), VarId(2)) == Pair(2, 5));
}

}  // namespace
}  // namespace compactlin
