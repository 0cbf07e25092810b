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

#ifndef COMPACTLIN_COVERAGE_H_
#define COMPACTLIN_COVERAGE_H_

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "compactlin/lin_model.h"
#include "compactlin/model.h"
#include "compactlin/rational.h"

namespace compactlin {

// Multiplier set B_k for every equation id k.
using MultiplierMap = std::map<int, std::set<VarId>>;

// The sets B_k and the pair set Q they induce.
struct CoveragePlan {
  MultiplierMap multipliers;
  std::set<Pair> pairs;

  friend bool operator==(const CoveragePlan&, const CoveragePlan&) = default;
};

struct CoverageStats {
  int64_t num_equations = 0;        // sum_k |B_k|
  int64_t num_vars = 0;             // |Q| without squares
  int64_t standard_ineq_count = 0;  // 3 |P|

  friend bool operator==(const CoverageStats&, const CoverageStats&) = default;
};

// { (i,j) | i <= j, exists k: i in A_k, j in B_k  or  j in A_k, i in B_k }.
// Keys of `multipliers` that name no equation are ignored.
std::set<Pair> InducedPairs(const Instance& inst,
                            const MultiplierMap& multipliers);

// Builds a plan from multiplier sets, adding an empty B_k for every equation
// without an entry and computing Q.
CoveragePlan MakePlan(const Instance& inst, MultiplierMap multipliers);

// Witness equations for one pair: i in A_k, j in B_k and j in A_l, i in B_l.
struct ConditionWitness {
  int k = 0;
  int l = 0;
  friend bool operator==(const ConditionWitness&,
                         const ConditionWitness&) = default;
};

struct ConditionCheck {
  bool ok = false;
  std::map<Pair, ConditionWitness> certificate;  // filled when ok
  std::string failure;                           // when !ok
};

// True iff Q contains P, Q is exactly the set induced by B, and both
// coverage conditions hold for every pair of Q. Witnesses use the smallest
// equation ids.
ConditionCheck CheckConditions(const Instance& inst, const CoveragePlan& plan);

// Minimum plan for instances whose equation supports are pairwise disjoint:
// seeds B from P and closes it under the coverage rule. Throws
// kSupportsNotDisjoint otherwise.
CoveragePlan ClosureDisjoint(const Instance& inst);

// B_k = A_k for every equation.
CoveragePlan SupportPlan(const Instance& inst);

// B_k = union of all supports for every equation.
CoveragePlan FullPlan(const Instance& inst);

CoverageStats ComputeStats(const Instance& inst, const CoveragePlan& plan);

struct SelectionWeights {
  Rational eqn;
  Rational var;

  // var = 1, eqn = max_k |A_k| + 1.
  static SelectionWeights Default(const Instance& inst);
};

// MILP choosing B (z_ik = [i in B_k]) and marking Q (f_ij = [(i,j) in Q]).
struct SelectionModel {
  LinModel model;
  std::map<std::pair<VarId, int>, int> z;  // (i, k) -> model variable
  std::map<Pair, int> f;                   // (i, j), i <= j -> model variable
  SelectionWeights weights;
};

SelectionModel BuildSelectionMilp(const Instance& inst,
                                  const SelectionWeights& weights);

struct SelectionResult {
  CoveragePlan plan;
  CoverageStats stats;
  Rational objective;
  // The root LP optimum already had integral z, so no branching was needed.
  bool lp_integral = false;
  int64_t node_count = 0;
};

// Solves the selection model: accepts the LP optimum when its z part is
// integral and falls back to branch and bound otherwise. The result always
// passes CheckConditions.
SelectionResult SolveSelection(const Instance& inst,
                               const SelectionWeights& weights);
SelectionResult SolveSelection(const Instance& inst);

// Plain-text rendering of B_k, Q and the stats.
std::string FormatPlan(const CoveragePlan& plan, const CoverageStats& stats);

}  // namespace compactlin

#endif  // COMPACTLIN_COVERAGE_H_
