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

#include "compactlin/model.h"

#include <algorithm>
#include <functional>
#include <sstream>

#include "compactlin/error.h"

namespace compactlin {

std::string ToString(VarId v) { return std::to_string(v.index); }

std::string ToString(const Pair& p) {
  return "(" + ToString(p.i) + "," + ToString(p.j) + ")";
}

std::set<VarId> LinearEquation::Support() const {
  std::set<VarId> support;
  for (const auto& [v, a] : coeffs) support.insert(v);
  return support;
}

const LinearEquation* Instance::FindEquation(int id) const {
  for (const LinearEquation& eq : equations) {
    if (eq.id == id) return &eq;
  }
  return nullptr;
}

std::vector<int> Instance::EquationsContaining(VarId v) const {
  std::vector<int> ids;
  for (const LinearEquation& eq : equations) {
    if (eq.Contains(v)) ids.push_back(eq.id);
  }
  std::sort(ids.begin(), ids.end());
  return ids;
}

bool Instance::HasDisjointSupports() const {
  std::set<VarId> seen;
  for (const LinearEquation& eq : equations) {
    for (const auto& [v, a] : eq.coeffs) {
      if (!seen.insert(v).second) return false;
    }
  }
  return true;
}

bool Instance::HasObjective() const {
  for (const auto& [v, c] : linear_objective) {
    if (c != 0) return true;
  }
  for (const auto& [p, d] : quadratic_objective) {
    if (d != 0) return true;
  }
  return false;
}

std::string ValidationReport::Summary() const {
  std::ostringstream out;
  for (const ValidationIssue& issue : issues) {
    out << issue.code << " [" << issue.element << "]: " << issue.message
        << "\n";
  }
  return out.str();
}

ValidationReport ValidateInstance(const Instance& inst) {
  ValidationReport report;
  auto issue = [&](std::string code, std::string message, std::string element) {
    report.issues.push_back(
        {std::move(code), std::move(message), std::move(element)});
  };
  auto in_range = [&](VarId v) { return v.index >= 1 && v.index <= inst.n; };

  if (inst.n < 1) issue("invalid-size", "n must be positive", "n");

  std::set<int> ids;
  std::set<VarId> covered;
  for (const LinearEquation& eq : inst.equations) {
    const std::string name = "equation " + std::to_string(eq.id);
    if (!ids.insert(eq.id).second) {
      issue("duplicate-equation-id", "equation id used twice", name);
    }
    if (eq.coeffs.empty()) issue("empty-equation", "equation has no terms", name);
    if (eq.rhs <= 0) {
      issue("nonpositive-rhs", "right-hand side " + ToString(eq.rhs) +
                                   " is not positive", name);
    }
    for (const auto& [v, a] : eq.coeffs) {
      if (!in_range(v)) {
        issue("index-out-of-range", "variable " + ToString(v) +
                                        " outside 1.." + std::to_string(inst.n),
              name);
        continue;
      }
      if (a <= 0) {
        issue("nonpositive-coefficient",
              "coefficient " + ToString(a) + " of x" + ToString(v) +
                  " is not positive",
              name);
      }
      covered.insert(v);
    }
  }

  std::set<VarId> uncovered;
  for (const Pair& p : inst.products) {
    if (!in_range(p.i) || !in_range(p.j)) {
      issue("index-out-of-range", "product index out of range", ToString(p));
      continue;
    }
    if (p.i > p.j) {
      issue("unordered-pair", "product pairs must satisfy i <= j", ToString(p));
    }
    for (VarId v : {p.i, p.j}) {
      if (!covered.count(v)) uncovered.insert(v);
    }
  }
  for (VarId v : uncovered) {
    issue("uncovered-variable",
          "x" + ToString(v) + " occurs in a product but in no equation",
          ToString(v));
  }

  for (const auto& [v, c] : inst.linear_objective) {
    if (!in_range(v)) {
      issue("index-out-of-range", "objective variable out of range",
            ToString(v));
    }
  }
  for (const auto& [p, d] : inst.quadratic_objective) {
    if (!inst.products.count(p)) {
      issue("objective-pair-not-in-products",
            "quadratic objective term without a declared product", ToString(p));
    }
  }
  for (std::size_t s = 0; s < inst.sides.size(); ++s) {
    const std::string name = "side " + std::to_string(s);
    for (const auto& [v, c] : inst.sides[s].x_coeffs) {
      if (!in_range(v)) {
        issue("index-out-of-range", "side variable out of range", name);
      }
    }
    for (const auto& [p, c] : inst.sides[s].y_coeffs) {
      if (!inst.products.count(p)) {
        issue("side-pair-not-in-products",
              "side constraint uses product " + ToString(p) +
                  " that is not declared",
              name);
      }
    }
  }
  return report;
}

bool SatisfiesEquations(const Instance& inst, const BinaryPoint& x) {
  for (const LinearEquation& eq : inst.equations) {
    Rational lhs = 0;
    for (const auto& [v, a] : eq.coeffs) {
      if (x[v.index - 1]) lhs += a;
    }
    if (lhs != eq.rhs) return false;
  }
  return true;
}

bool SatisfiesSides(const Instance& inst, const BinaryPoint& x) {
  for (const SideConstraint& side : inst.sides) {
    Rational lhs = 0;
    for (const auto& [v, c] : side.x_coeffs) {
      if (x[v.index - 1]) lhs += c;
    }
    for (const auto& [p, c] : side.y_coeffs) {
      if (x[p.i.index - 1] && x[p.j.index - 1]) lhs += c;
    }
    if (lhs < side.rhs) return false;
  }
  return true;
}

Rational EvaluateObjective(const Instance& inst, const BinaryPoint& x) {
  Rational value = 0;
  for (const auto& [v, c] : inst.linear_objective) {
    if (x[v.index - 1]) value += c;
  }
  for (const auto& [p, d] : inst.quadratic_objective) {
    if (x[p.i.index - 1] && x[p.j.index - 1]) value += d;
  }
  return value;
}

std::vector<BinaryPoint> BruteForceFeasible(const Instance& inst, int cap) {
  if (inst.n > cap) {
    throw Error(ErrorCode::kSizeExceeded,
                "n = " + std::to_string(inst.n) + " exceeds the brute-force cap " +
                    std::to_string(cap));
  }
  const int n = inst.n;
  const int m = static_cast<int>(inst.equations.size());
  // Per variable: the (equation, coefficient) entries it takes part in.
  std::vector<std::vector<std::pair<int, Rational>>> occurs(n);
  std::vector<Rational> remaining(m), partial(m);
  bool positive = true;
  for (int k = 0; k < m; ++k) {
    for (const auto& [v, a] : inst.equations[k].coeffs) {
      if (v.index < 1 || v.index > n) {
        throw Error(ErrorCode::kValidationError,
                    "equation variable " + ToString(v) + " out of range");
      }
      if (a <= 0) positive = false;
      occurs[v.index - 1].emplace_back(k, a);
      remaining[k] += a;
    }
  }

  std::vector<BinaryPoint> result;
  BinaryPoint x(n, 0);
  // Coefficients are positive, so an equation is dead once its partial sum
  // overshoots or the unassigned rest cannot reach the right-hand side.
  auto viable = [&](int var) {
    if (!positive) return true;
    for (const auto& [k, a] : occurs[var]) {
      const Rational& b = inst.equations[k].rhs;
      if (partial[k] > b || partial[k] + remaining[k] < b) return false;
    }
    return true;
  };
  std::function<void(int)> dfs = [&](int var) {
    if (var == n) {
      for (int k = 0; k < m; ++k) {
        if (partial[k] != inst.equations[k].rhs) return;
      }
      if (SatisfiesSides(inst, x)) result.push_back(x);
      return;
    }
    for (const auto& [k, a] : occurs[var]) remaining[k] -= a;
    for (int bit = 0; bit <= 1; ++bit) {
      x[var] = bit;
      if (bit) {
        for (const auto& [k, a] : occurs[var]) partial[k] += a;
      }
      if (viable(var)) dfs(var + 1);
      if (bit) {
        for (const auto& [k, a] : occurs[var]) partial[k] -= a;
      }
    }
    x[var] = 0;
    for (const auto& [k, a] : occurs[var]) remaining[k] += a;
  };
  // Equations with an empty support can never hold.
  for (int k = 0; k < m; ++k) {
    if (inst.equations[k].coeffs.empty() && inst.equations[k].rhs != 0) {
      return result;
    }
  }
  dfs(0);
  return result;
}

}  // namespace compactlin
