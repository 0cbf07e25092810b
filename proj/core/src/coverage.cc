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

#include "compactlin/coverage.h"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "compactlin/error.h"
#include "compactlin/lp.h"

namespace compactlin {

std::set<Pair> InducedPairs(const Instance& inst,
                            const MultiplierMap& multipliers) {
  std::set<Pair> pairs;
  for (const auto& [k, b_k] : multipliers) {
    const LinearEquation* eq = inst.FindEquation(k);
    if (eq == nullptr) continue;
    for (const auto& [i, a] : eq->coeffs) {
      for (VarId j : b_k) pairs.insert(Pair::Of(i, j));
    }
  }
  return pairs;
}

CoveragePlan MakePlan(const Instance& inst, MultiplierMap multipliers) {
  for (const LinearEquation& eq : inst.equations) multipliers[eq.id];
  CoveragePlan plan;
  plan.pairs = InducedPairs(inst, multipliers);
  plan.multipliers = std::move(multipliers);
  return plan;
}

ConditionCheck CheckConditions(const Instance& inst, const CoveragePlan& plan) {
  ConditionCheck check;
  for (const auto& [k, b_k] : plan.multipliers) {
    if (inst.FindEquation(k) == nullptr) {
      check.failure = "B names unknown equation " + std::to_string(k);
      return check;
    }
    for (VarId v : b_k) {
      if (v.index < 1 || v.index > inst.n) {
        check.failure = "B_" + std::to_string(k) + " holds out-of-range x" +
                        ToString(v);
        return check;
      }
    }
  }
  if (InducedPairs(inst, plan.multipliers) != plan.pairs) {
    check.failure = "Q differs from the set induced by B";
    return check;
  }
  for (const Pair& p : inst.products) {
    if (!plan.pairs.count(p)) {
      check.failure = "product " + ToString(p) + " is not in Q";
      return check;
    }
  }
  auto in_b = [&](int k, VarId v) {
    const auto it = plan.multipliers.find(k);
    return it != plan.multipliers.end() && it->second.count(v) > 0;
  };
  // Smallest k with a in A_k and b in B_k, or 0.
  auto witness = [&](VarId a, VarId b) {
    int best = 0;
    for (const LinearEquation& eq : inst.equations) {
      if (eq.Contains(a) && in_b(eq.id, b) && (best == 0 || eq.id < best)) {
        best = eq.id;
      }
    }
    return best;
  };
  std::vector<std::string> failures;
  for (const Pair& p : plan.pairs) {
    const int k = witness(p.i, p.j);
    const int l = witness(p.j, p.i);
    if (k == 0) failures.push_back("condition 1 fails for " + ToString(p));
    if (l == 0) failures.push_back("condition 2 fails for " + ToString(p));
    if (k != 0 && l != 0) check.certificate[p] = {k, l};
  }
  if (!failures.empty()) {
    for (std::size_t t = 0; t < failures.size(); ++t) {
      check.failure += (t ? "; " : "") + failures[t];
    }
    check.certificate.clear();
    return check;
  }
  check.ok = true;
  return check;
}

CoveragePlan ClosureDisjoint(const Instance& inst) {
  if (!inst.HasDisjointSupports()) {
    throw Error(ErrorCode::kSupportsNotDisjoint,
                "equation supports overlap; use the selection model");
  }
  std::map<VarId, const LinearEquation*> owner;
  for (const LinearEquation& eq : inst.equations) {
    for (const auto& [v, a] : eq.coeffs) owner[v] = &eq;
  }
  MultiplierMap multipliers;
  for (const LinearEquation& eq : inst.equations) multipliers[eq.id];

  std::deque<Pair> work(inst.products.begin(), inst.products.end());
  // Adds v to B_k of the owner of `a`; a new member induces (h, v) for all
  // h in that support.
  auto require = [&](VarId a, VarId v) {
    const auto it = owner.find(a);
    if (it == owner.end()) {
      throw Error(ErrorCode::kValidationError,
                  "x" + ToString(a) + " occurs in a product but in no equation");
    }
    const LinearEquation& eq = *it->second;
    if (!multipliers[eq.id].insert(v).second) return;
    for (const auto& [h, coeff] : eq.coeffs) work.push_back(Pair::Of(h, v));
  };
  while (!work.empty()) {
    const Pair p = work.front();
    work.pop_front();
    require(p.i, p.j);
    require(p.j, p.i);
  }
  return MakePlan(inst, std::move(multipliers));
}

CoveragePlan SupportPlan(const Instance& inst) {
  MultiplierMap multipliers;
  for (const LinearEquation& eq : inst.equations) {
    multipliers[eq.id] = eq.Support();
  }
  return MakePlan(inst, std::move(multipliers));
}

CoveragePlan FullPlan(const Instance& inst) {
  std::set<VarId> all;
  for (const LinearEquation& eq : inst.equations) {
    for (const auto& [v, a] : eq.coeffs) all.insert(v);
  }
  MultiplierMap multipliers;
  for (const LinearEquation& eq : inst.equations) multipliers[eq.id] = all;
  return MakePlan(inst, std::move(multipliers));
}

CoverageStats ComputeStats(const Instance& inst, const CoveragePlan& plan) {
  CoverageStats stats;
  for (const auto& [k, b_k] : plan.multipliers) {
    stats.num_equations += static_cast<int64_t>(b_k.size());
  }
  for (const Pair& p : plan.pairs) {
    if (!p.IsSquare()) ++stats.num_vars;
  }
  // Squares need no McCormick triple.
  for (const Pair& p : inst.products) {
    if (!p.IsSquare()) stats.standard_ineq_count += 3;
  }
  return stats;
}

SelectionWeights SelectionWeights::Default(const Instance& inst) {
  std::size_t widest = 0;
  for (const LinearEquation& eq : inst.equations) {
    widest = std::max(widest, eq.coeffs.size());
  }
  return {Rational(static_cast<long>(widest) + 1), Rational(1)};
}

SelectionModel BuildSelectionMilp(const Instance& inst,
                                  const SelectionWeights& weights) {
  SelectionModel sel;
  sel.weights = weights;
  LinModel& model = sel.model;
  LinearExpr objective;
  for (int i = 1; i <= inst.n; ++i) {
    for (const LinearEquation& eq : inst.equations) {
      LinVar z;
      z.kind = VarKind::kAuxiliary;
      z.name = "z" + std::to_string(i) + "_k" + std::to_string(eq.id);
      z.integral = true;
      const int index = model.AddVar(std::move(z));
      sel.z[{VarId(i), eq.id}] = index;
      objective.Add(index, weights.eqn);
    }
  }
  for (int i = 1; i <= inst.n; ++i) {
    for (int j = i; j <= inst.n; ++j) {
      LinVar f;
      f.kind = VarKind::kAuxiliary;
      f.name = "f" + std::to_string(i) + "_" + std::to_string(j);
      const int index = model.AddVar(std::move(f));
      sel.f[Pair(i, j)] = index;
      objective.Add(index, weights.var);
    }
  }
  model.SetObjective(objective);

  // Fix to zero every z and f that no feasible selection can set. z_jk
  // needs each (i, j), i in A_k, to be coverable, and (i, j) needs some
  // live z on both sides.
  std::set<std::pair<VarId, int>> dead_z;
  std::set<Pair> dead_f;
  std::set<VarId> covered;
  for (const LinearEquation& eq : inst.equations) {
    for (const auto& [v, a] : eq.coeffs) covered.insert(v);
  }
  for (const auto& [key, index] : sel.z) {
    if (!covered.count(key.first)) dead_z.insert(key);
  }
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [p, index] : sel.f) {
      if (dead_f.count(p)) continue;
      bool first = false;
      bool second = false;
      for (const LinearEquation& eq : inst.equations) {
        first = first || (eq.Contains(p.i) && !dead_z.count({p.j, eq.id}));
        second = second || (eq.Contains(p.j) && !dead_z.count({p.i, eq.id}));
      }
      if (!first || !second) {
        dead_f.insert(p);
        changed = true;
      }
    }
    for (const LinearEquation& eq : inst.equations) {
      for (int j = 1; j <= inst.n; ++j) {
        if (dead_z.count({VarId(j), eq.id})) continue;
        for (const auto& [i, a] : eq.coeffs) {
          if (dead_f.count(Pair::Of(i, VarId(j)))) {
            dead_z.insert({VarId(j), eq.id});
            changed = true;
            break;
          }
        }
      }
    }
  }
  for (const auto& key : dead_z) model.mutable_vars()[sel.z.at(key)].upper = 0;
  for (const Pair& p : dead_f) model.mutable_vars()[sel.f.at(p)].upper = 0;

  auto label = [](std::string prefix, int a, int b, int c = -1) {
    std::string s = prefix + "_" + std::to_string(a) + "_" + std::to_string(b);
    if (c >= 0) s += "_" + std::to_string(c);
    return Provenance{Provenance::Kind::kAuxiliary, 0, 0, {}, 0, s};
  };

  for (const Pair& p : inst.products) {
    LinearExpr row;
    row.Add(sel.f.at(p), 1);
    model.AddConstraint(row, Sense::kEqual, 1,
                        label("sel_fix", p.i.index, p.j.index));
  }
  // z_jk = 1 puts every (i, j), i in A_k, into Q.
  for (const LinearEquation& eq : inst.equations) {
    for (const auto& [i, a] : eq.coeffs) {
      for (int j = 1; j <= inst.n; ++j) {
        LinearExpr row;
        row.Add(sel.f.at(Pair::Of(i, VarId(j))), 1);
        row.Add(sel.z.at({VarId(j), eq.id}), -1);
        model.AddConstraint(row, Sense::kGreaterEqual, 0,
                            label("sel_induce", i.index, j, eq.id));
      }
    }
  }
  // (i, j) in Q needs k with i in A_k, j in B_k and l with j in A_l, i in B_l.
  for (int i = 1; i <= inst.n; ++i) {
    for (int j = i; j <= inst.n; ++j) {
      LinearExpr first;
      LinearExpr second;
      for (const LinearEquation& eq : inst.equations) {
        if (eq.Contains(VarId(i))) first.Add(sel.z.at({VarId(j), eq.id}), 1);
        if (eq.Contains(VarId(j))) second.Add(sel.z.at({VarId(i), eq.id}), 1);
      }
      first.Add(sel.f.at(Pair(i, j)), -1);
      second.Add(sel.f.at(Pair(i, j)), -1);
      model.AddConstraint(first, Sense::kGreaterEqual, 0,
                          label("sel_cond1", i, j));
      model.AddConstraint(second, Sense::kGreaterEqual, 0,
                          label("sel_cond2", i, j));
    }
  }
  return sel;
}

SelectionResult SolveSelection(const Instance& inst,
                               const SelectionWeights& weights) {
  const SelectionModel sel = BuildSelectionMilp(inst, weights);
  std::vector<Rational> values;
  SelectionResult result;
  const LpSolution lp = SolveLp(sel.model);
  if (lp.status != SolveStatus::kOptimal) {
    throw Error(ErrorCode::kInfeasibleSelection,
                "selection LP is " + std::string(SolveStatusName(lp.status)));
  }
  const bool integral = std::all_of(
      sel.z.begin(), sel.z.end(),
      [&](const auto& entry) { return IsIntegral(lp.values[entry.second]); });
  if (integral) {
    result.lp_integral = true;
    result.node_count = 1;
    result.objective = lp.objective;
    values = lp.values;
  } else {
    const MipSolution mip = SolveMilp(sel.model);
    if (mip.status != SolveStatus::kOptimal) {
      throw Error(ErrorCode::kInfeasibleSelection,
                  "selection MILP is " +
                      std::string(SolveStatusName(mip.status)));
    }
    result.node_count = mip.node_count;
    result.objective = mip.objective;
    values = mip.values;
  }
  MultiplierMap multipliers;
  for (const auto& [key, index] : sel.z) {
    if (values[index] == 1) multipliers[key.second].insert(key.first);
  }
  result.plan = MakePlan(inst, std::move(multipliers));
  const ConditionCheck check = CheckConditions(inst, result.plan);
  if (!check.ok) {
    throw Error(ErrorCode::kInternal,
                "selection produced an invalid plan: " + check.failure);
  }
  result.stats = ComputeStats(inst, result.plan);
  return result;
}

SelectionResult SolveSelection(const Instance& inst) {
  return SolveSelection(inst, SelectionWeights::Default(inst));
}

std::string FormatPlan(const CoveragePlan& plan, const CoverageStats& stats) {
  std::ostringstream out;
  for (const auto& [k, b_k] : plan.multipliers) {
    out << "B_" << k << " = {";
    bool first = true;
    for (VarId v : b_k) {
      out << (first ? "" : ", ") << v.index;
      first = false;
    }
    out << "}\n";
  }
  out << "Q = {";
  bool first = true;
  for (const Pair& p : plan.pairs) {
    out << (first ? "" : ", ") << ToString(p);
    first = false;
  }
  out << "}\n";
  out << "equations " << stats.num_equations << "\n";
  out << "product-vars " << stats.num_vars << "\n";
  out << "standard-inequalities " << stats.standard_ineq_count << "\n";
  return out.str();
}

}  // namespace compactlin
