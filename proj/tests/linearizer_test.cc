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

#include <map>

#include "compactlin/coverage.h"
#include "compactlin/error.h"
#include "compactlin/linearizer.h"
#include "compactlin/zoo.h"
#include "testing.h"

namespace compactlin {
namespace {

using testing::ExampleA;
using testing::ExampleB;

// Row as name -> coefficient, everything moved to the left-hand side.
using Row = std::map<std::string, Rational>;

std::set<Row> CompactRows(const LinModel& model) {
  std::set<Row> rows;
  for (const LinConstraint& c : model.constraints()) {
    if (c.provenance.kind != Provenance::Kind::kCompactEquation) continue;
    EXPECT_EQ(c.sense, Sense::kEqual);
    Row row;
    for (const Term& t : c.coeffs) row[model.vars()[t.var].name] = t.coeff;
    if (c.rhs != 0) row["rhs"] = c.rhs;
    rows.insert(row);
  }
  return rows;
}

// Equal up to a nonzero scalar.
bool SameRow(const Row& a, const Row& b) {
  if (a.size() != b.size() || a.empty()) return false;
  const Rational scale = b.begin()->second / a.begin()->second;
  for (const auto& [name, coeff] : a) {
    auto it = b.find(name);
    if (it == b.end() || it->second != coeff * scale) return false;
  }
  return true;
}

bool ContainsRow(const std::set<Row>& rows, const Row& row) {
  for (const Row& r : rows) {
    if (SameRow(r, row)) return true;
  }
  return false;
}

std::vector<Rational> IntegerPoint(const LinModel& model, const BinaryPoint& x) {
  std::vector<Rational> values(model.num_vars());
  for (int v = 0; v < model.num_vars(); ++v) {
    const LinVar& var = model.vars()[v];
    if (var.kind == VarKind::kOriginal) {
      values[v] = x[var.id.index - 1];
    } else {
      values[v] = x[var.pair.i.index - 1] * x[var.pair.j.index - 1];
    }
  }
  return values;
}

TEST(CompactTest, ExampleBRows) {
  const Instance inst = ExampleB();
  const LinModel model = CompactLinearize(inst, ClosureDisjoint(inst));
  const std::set<Row> rows = CompactRows(model);
  ASSERT_EQ(rows.size(), 3u);
  EXPECT_TRUE(ContainsRow(rows, {{"y1_2", 1}, {"y1_3", 1}}));
  EXPECT_TRUE(ContainsRow(rows, {{"y1_2", 2}, {"y2_3", 1}, {"x2", -1}}));
  EXPECT_TRUE(ContainsRow(rows, {{"y1_3", 2}, {"y2_3", 1}, {"x3", -1}}));
  for (const LinVar& var : model.vars()) {
    if (var.kind == VarKind::kProduct) EXPECT_FALSE(var.pair.IsSquare());
  }
  for (const BinaryPoint& x : BruteForceFeasible(inst)) {
    EXPECT_TRUE(model.IsIntegerFeasible(IntegerPoint(model, x)));
  }
}

TEST(CompactTest, ExampleARows) {
  const Instance inst = ExampleA();
  const LinModel model = CompactLinearize(inst, ClosureDisjoint(inst));
  const std::set<Row> rows = CompactRows(model);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_TRUE(ContainsRow(rows, {{"y1_3", 1}, {"y2_3", 1}, {"x3", -1}}));
  EXPECT_TRUE(ContainsRow(rows, {{"y1_4", 1}, {"y2_4", 1}, {"x4", -1}}));
  EXPECT_TRUE(ContainsRow(rows, {{"y1_3", 1}, {"y1_4", 1}, {"x1", -1}}));
  EXPECT_TRUE(ContainsRow(rows, {{"y2_3", 1}, {"y2_4", 1}, {"x2", -1}}));
  EXPECT_EQ(model.CountProvenance(Provenance::Kind::kOriginalEquation), 2);
  EXPECT_EQ(model.CountProvenance(Provenance::Kind::kMcCormickLower), 0);
  // Objective: y13 only.
  ASSERT_EQ(model.objective().terms.size(), 1u);
  EXPECT_EQ(model.vars()[model.objective().terms[0].var].name, "y1_3");
}

TEST(CompactTest, RejectsInvalidPlan) {
  const Instance inst = ExampleA();
  try {
    CompactLinearize(inst, MakePlan(inst, {{1, {VarId(3)}}, {2, {VarId(1)}}}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPlanInvalid);
  }
}

TEST(CompactTest, QtspRowsHaveDegreeTwoShape) {
  const Instance inst = GenQtsp(QtspSpec::Random(4, 3));
  const LinModel model = CompactLinearize(inst, SupportPlan(inst));
  EXPECT_EQ(model.CountProvenance(Provenance::Kind::kCompactEquation), 12);
  for (const Row& row : CompactRows(model)) {
    // sum of two y terms = x_jk.
    int ys = 0, xs = 0;
    for (const auto& [name, coeff] : row) {
      if (name[0] == 'y') {
        ++ys;
        EXPECT_EQ(coeff, 1);
      } else {
        ++xs;
        EXPECT_EQ(coeff, -1);
      }
    }
    EXPECT_EQ(ys, 2);
    EXPECT_EQ(xs, 1);
  }
}

// Integer consistency and the row-count identity on random instances.
TEST(CompactTest, IntegerPointsExtendAndCountsMatch) {
  for (uint64_t seed = 1; seed <= 30; ++seed) {
    RandomSpec spec;
    spec.n = 6 + seed % 5;
    spec.num_equations = 1 + seed % 3;
    spec.support_min = 3;
    spec.support_max = 4;
    spec.coeff_max = 4;
    spec.max_denominator = seed % 2 ? 1 : 2;
    spec.num_products = 2;
    spec.allow_squares = seed % 4 == 0;
    spec.num_sides = seed % 3 == 0 ? 1 : 0;
    spec.seed = seed;
    const Instance inst = GenRandom(spec);
    const SelectionResult sel = SolveSelection(inst);
    const LinModel model = CompactLinearize(inst, sel.plan);
    int64_t expected_rows = 0;
    for (const auto& [k, b] : sel.plan.multipliers) {
      expected_rows += static_cast<int64_t>(b.size());
    }
    // Rows that cancel to 0 = 0 are dropped.
    EXPECT_LE(model.CountProvenance(Provenance::Kind::kCompactEquation),
              expected_rows);
    EXPECT_EQ(sel.stats.num_equations, expected_rows);
    for (const BinaryPoint& x : BruteForceFeasible(inst)) {
      EXPECT_TRUE(model.IsIntegerFeasible(IntegerPoint(model, x)))
          << "seed " << seed;
    }
  }
}

TEST(StandardTest, SinglePair) {
  const LinModel model = StandardLinearize(ExampleA(), {Pair(1, 3)});
  EXPECT_EQ(model.CountProvenance(Provenance::Kind::kMcCormickUpperI), 1);
  EXPECT_EQ(model.CountProvenance(Provenance::Kind::kMcCormickUpperJ), 1);
  EXPECT_EQ(model.CountProvenance(Provenance::Kind::kMcCormickLower), 1);
  int ys = 0;
  for (const LinVar& v : model.vars()) ys += v.kind == VarKind::kProduct;
  EXPECT_EQ(ys, 1);
}

TEST(StandardTest, QtspFiveHasNinetyInequalities) {
  const Instance inst = GenQtsp(QtspSpec::Random(5, 1));
  ASSERT_EQ(inst.products.size(), 30u);
  const LinModel model = StandardLinearize(inst, inst.products);
  const int ineq = model.CountProvenance(Provenance::Kind::kMcCormickUpperI) +
                   model.CountProvenance(Provenance::Kind::kMcCormickUpperJ) +
                   model.CountProvenance(Provenance::Kind::kMcCormickLower);
  EXPECT_EQ(ineq, 90);
}

TEST(StandardTest, NoPairs) {
  Instance inst = ExampleA();
  inst.products.clear();
  inst.quadratic_objective.clear();
  const LinModel model = StandardLinearize(inst, {});
  EXPECT_EQ(model.constraints().size(), 2u);
  EXPECT_EQ(model.num_vars(), 4);
}

TEST(StandardTest, Errors) {
  try {
    StandardLinearize(ExampleA(), {Pair(1, 1), Pair(1, 3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSquarePairRejected);
  }
  try {
    StandardLinearize(ExampleA(), {Pair(2, 3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPlanInvalid);
  }
}

TEST(RelaxTest, ClearsIntegralityOnly) {
  const LinModel model = CompactLinearize(ExampleA(), ClosureDisjoint(ExampleA()));
  const LinModel relaxed = Relax(model);
  EXPECT_EQ(relaxed.constraints(), model.constraints());
  EXPECT_EQ(relaxed.num_vars(), model.num_vars());
  for (int v = 0; v < relaxed.num_vars(); ++v) {
    EXPECT_FALSE(relaxed.vars()[v].integral);
    EXPECT_EQ(relaxed.vars()[v].lower, model.vars()[v].lower);
    EXPECT_EQ(relaxed.vars()[v].upper, model.vars()[v].upper);
  }
  EXPECT_EQ(Relax(relaxed), relaxed);
}

}  // namespace
}  // namespace compactlin
