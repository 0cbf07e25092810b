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

#include "compactlin/linearizer.h"

#include "compactlin/error.h"

namespace compactlin {
namespace {

using Kind = Provenance::Kind;

LinVar OriginalVar(VarId v) {
  LinVar var;
  var.kind = VarKind::kOriginal;
  var.id = v;
  var.name = "x" + std::to_string(v.index);
  var.integral = true;
  return var;
}

LinVar ProductVar(const Pair& p) {
  LinVar var;
  var.kind = VarKind::kProduct;
  var.pair = p;
  var.name = "y" + std::to_string(p.i.index) + "_" + std::to_string(p.j.index);
  return var;
}

// Adds coeff * x_i x_j, reading the square x_i x_i as x_i.
void AddProduct(const LinModel& model, const Pair& p, const Rational& coeff,
                LinearExpr& expr) {
  if (p.IsSquare()) {
    expr.Add(*model.FindX(p.i), coeff);
    return;
  }
  const auto y = model.FindY(p);
  if (!y) {
    throw Error(ErrorCode::kInternal, "product " + ToString(p) + " not declared");
  }
  expr.Add(*y, coeff);
}

void AddOriginalVars(const Instance& inst, LinModel& model) {
  for (int i = 1; i <= inst.n; ++i) model.AddVar(OriginalVar(VarId(i)));
}

void AddOriginalEquations(const Instance& inst, LinModel& model) {
  for (const LinearEquation& eq : inst.equations) {
    LinearExpr row;
    for (const auto& [v, a] : eq.coeffs) row.Add(*model.FindX(v), a);
    Provenance provenance;
    provenance.kind = Kind::kOriginalEquation;
    provenance.k = eq.id;
    model.AddConstraint(row, Sense::kEqual, eq.rhs, provenance);
  }
}

void AddSidesAndObjective(const Instance& inst, LinModel& model) {
  for (std::size_t s = 0; s < inst.sides.size(); ++s) {
    const SideConstraint& side = inst.sides[s];
    LinearExpr row;
    for (const auto& [v, c] : side.x_coeffs) row.Add(*model.FindX(v), c);
    for (const auto& [p, c] : side.y_coeffs) AddProduct(model, p, c, row);
    Provenance provenance;
    provenance.kind = Kind::kSide;
    provenance.index = static_cast<int>(s);
    model.AddConstraint(row, Sense::kGreaterEqual, side.rhs, provenance);
  }
  LinearExpr objective;
  for (const auto& [v, c] : inst.linear_objective) {
    objective.Add(*model.FindX(v), c);
  }
  for (const auto& [p, d] : inst.quadratic_objective) {
    AddProduct(model, p, d, objective);
  }
  model.SetObjective(objective);
}

}  // namespace

std::set<Pair> NonSquareProducts(const Instance& inst) {
  std::set<Pair> pairs;
  for (const Pair& p : inst.products) {
    if (!p.IsSquare()) pairs.insert(p);
  }
  return pairs;
}

LinModel CompactLinearize(const Instance& inst, const CoveragePlan& plan) {
  const ConditionCheck check = CheckConditions(inst, plan);
  if (!check.ok) throw Error(ErrorCode::kPlanInvalid, check.failure);

  LinModel model;
  AddOriginalVars(inst, model);
  for (const Pair& p : plan.pairs) {
    if (!p.IsSquare()) model.AddVar(ProductVar(p));
  }
  AddOriginalEquations(inst, model);

  for (const auto& [k, b_k] : plan.multipliers) {
    const LinearEquation& eq = *inst.FindEquation(k);
    for (VarId j : b_k) {
      LinearExpr row;
      for (const auto& [i, a] : eq.coeffs) {
        AddProduct(model, Pair::Of(i, j), a, row);
      }
      row.Add(*model.FindX(j), -eq.rhs);
      row.Canonicalize();
      if (row.terms.empty()) continue;
      Provenance provenance;
      provenance.kind = Kind::kCompactEquation;
      provenance.k = k;
      provenance.j = j.index;
      model.AddConstraint(row, Sense::kEqual, 0, provenance);
    }
  }
  AddSidesAndObjective(inst, model);
  return model;
}

LinModel StandardLinearize(const Instance& inst, const std::set<Pair>& pairs) {
  for (const Pair& p : pairs) {
    if (p.IsSquare()) {
      throw Error(ErrorCode::kSquarePairRejected,
                  "square " + ToString(p) + " needs no McCormick triple");
    }
  }
  for (const Pair& p : NonSquareProducts(inst)) {
    if (!pairs.count(p)) {
      throw Error(ErrorCode::kPlanInvalid,
                  "product " + ToString(p) + " missing from the pair set");
    }
  }
  LinModel model;
  AddOriginalVars(inst, model);
  for (const Pair& p : pairs) model.AddVar(ProductVar(p));
  AddOriginalEquations(inst, model);
  for (const Pair& p : pairs) {
    const int y = *model.FindY(p);
    const int xi = *model.FindX(p.i);
    const int xj = *model.FindX(p.j);
    Provenance provenance;
    provenance.pair = p;

    LinearExpr upper_i;
    upper_i.Add(y, 1);
    upper_i.Add(xi, -1);
    provenance.kind = Kind::kMcCormickUpperI;
    model.AddConstraint(upper_i, Sense::kLessEqual, 0, provenance);

    LinearExpr upper_j;
    upper_j.Add(y, 1);
    upper_j.Add(xj, -1);
    provenance.kind = Kind::kMcCormickUpperJ;
    model.AddConstraint(upper_j, Sense::kLessEqual, 0, provenance);

    LinearExpr lower;
    lower.Add(y, 1);
    lower.Add(xi, -1);
    lower.Add(xj, -1);
    provenance.kind = Kind::kMcCormickLower;
    model.AddConstraint(lower, Sense::kGreaterEqual, -1, provenance);
  }
  AddSidesAndObjective(inst, model);
  return model;
}

LinModel Relax(const LinModel& model) {
  LinModel relaxed = model;
  for (LinVar& v : relaxed.mutable_vars()) v.integral = false;
  return relaxed;
}

}  // namespace compactlin
