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

#include "compactlin/lin_model.h"

#include <algorithm>

#include "compactlin/error.h"

namespace compactlin {

void LinearExpr::Add(int var, const Rational& coeff) {
  terms.push_back({var, coeff});
}

void LinearExpr::Canonicalize() {
  std::stable_sort(terms.begin(), terms.end(),
                   [](const Term& a, const Term& b) { return a.var < b.var; });
  std::vector<Term> merged;
  for (Term& t : terms) {
    if (!merged.empty() && merged.back().var == t.var) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms = std::move(merged);
}

std::string Provenance::Name() const {
  const std::string ij =
      std::to_string(pair.i.index) + "_" + std::to_string(pair.j.index);
  switch (kind) {
    case Kind::kOriginalEquation:
      return "eq_k" + std::to_string(k);
    case Kind::kCompactEquation:
      return "cmp_k" + std::to_string(k) + "_j" + std::to_string(j);
    case Kind::kMcCormickUpperI:
      return "mcu_i_" + ij;
    case Kind::kMcCormickUpperJ:
      return "mcu_j_" + ij;
    case Kind::kMcCormickLower:
      return "mcl_" + ij;
    case Kind::kSide:
      return "side_" + std::to_string(index);
    case Kind::kAuxiliary:
      return label;
  }
  return label;
}

std::tuple<int, int, int, int, int, int, std::string> Provenance::Key() const {
  // McCormick triples stay together per pair.
  int order = static_cast<int>(kind);
  if (kind == Kind::kMcCormickUpperJ || kind == Kind::kMcCormickLower) {
    order = static_cast<int>(Kind::kMcCormickUpperI);
  }
  return {order, k, j, pair.i.index, pair.j.index,
          index * 4 + static_cast<int>(kind), label};
}

int LinModel::AddVar(LinVar var) {
  const int index = static_cast<int>(vars_.size());
  if (var.kind == VarKind::kOriginal) x_index_[var.id] = index;
  if (var.kind == VarKind::kProduct) y_index_[var.pair] = index;
  vars_.push_back(std::move(var));
  return index;
}

void LinModel::AddConstraint(const LinearExpr& lhs, Sense sense,
                             const Rational& rhs, Provenance provenance) {
  LinearExpr expr = lhs;
  expr.Canonicalize();
  for (const Term& t : expr.terms) {
    if (t.var < 0 || t.var >= num_vars()) {
      throw Error(ErrorCode::kInternal, "constraint references undeclared var");
    }
  }
  constraints_.push_back(LinConstraint{std::move(expr.terms), sense,
                                       Rational(rhs - expr.constant),
                                       std::move(provenance)});
}

void LinModel::SetObjective(const LinearExpr& objective) {
  objective_ = objective;
  objective_.Canonicalize();
}

std::optional<int> LinModel::FindX(VarId v) const {
  const auto it = x_index_.find(v);
  if (it == x_index_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> LinModel::FindY(const Pair& p) const {
  const auto it = y_index_.find(p);
  if (it == y_index_.end()) return std::nullopt;
  return it->second;
}

int LinModel::CountProvenance(Provenance::Kind kind) const {
  return static_cast<int>(std::count_if(
      constraints_.begin(), constraints_.end(),
      [kind](const LinConstraint& c) { return c.provenance.kind == kind; }));
}

Rational LinModel::Evaluate(const std::vector<Term>& terms,
                            const std::vector<Rational>& values) {
  Rational sum = 0;
  for (const Term& t : terms) sum += t.coeff * values[t.var];
  return sum;
}

Rational LinModel::Evaluate(const LinearExpr& expr,
                            const std::vector<Rational>& values) {
  return Evaluate(expr.terms, values) + expr.constant;
}

bool LinModel::IsFeasible(const std::vector<Rational>& values) const {
  if (static_cast<int>(values.size()) != num_vars()) return false;
  for (int v = 0; v < num_vars(); ++v) {
    if (values[v] < vars_[v].lower || values[v] > vars_[v].upper) return false;
  }
  for (const LinConstraint& c : constraints_) {
    const Rational lhs = Evaluate(c.coeffs, values);
    switch (c.sense) {
      case Sense::kEqual:
        if (lhs != c.rhs) return false;
        break;
      case Sense::kGreaterEqual:
        if (lhs < c.rhs) return false;
        break;
      case Sense::kLessEqual:
        if (lhs > c.rhs) return false;
        break;
    }
  }
  return true;
}

bool LinModel::IsIntegerFeasible(const std::vector<Rational>& values) const {
  if (!IsFeasible(values)) return false;
  for (int v = 0; v < num_vars(); ++v) {
    if (vars_[v].integral && !IsIntegral(values[v])) return false;
  }
  return true;
}

}  // namespace compactlin
