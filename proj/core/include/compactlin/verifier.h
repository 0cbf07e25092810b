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

#ifndef COMPACTLIN_VERIFIER_H_
#define COMPACTLIN_VERIFIER_H_

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "compactlin/coverage.h"
#include "compactlin/lin_model.h"
#include "compactlin/lp.h"
#include "compactlin/model.h"
#include "compactlin/rational.h"

namespace compactlin {

enum class McCormickKind {
  kUpperI,  // y_ij <= x_i
  kUpperJ,  // y_ij <= x_j
  kLower,   // y_ij >= x_i + x_j - 1
};

const char* McCormickKindName(McCormickKind kind);

// Violation expression of one McCormick inequality over `model`
// (positive means violated). The model must declare x_i, x_j and y_ij.
LinearExpr McCormickViolation(const LinModel& model, const Pair& pair,
                              McCormickKind kind);

using ViolationKey = std::pair<Pair, McCormickKind>;
// Maximum violation per key; std::nullopt is minus infinity.
using ViolationMap = std::map<ViolationKey, std::optional<Rational>>;

struct ConsistencyReport {
  std::string instance_id;
  ViolationMap per_pair_max;
  bool pass = true;  // all maxima <= 0
  int num_points = 0;
  // Feasible integer points x for which (x, x_i x_j) violates a compact row.
  int extension_failures = 0;
};

// For every feasible binary point of the instance and every non-square pair
// of Q: fixes x in the relaxed compact model and maximizes each McCormick
// violation. Throws kSizeExceeded past the brute-force cap and kPlanInvalid
// for plans failing CheckConditions.
ConsistencyReport VerifyTheorem1(const Instance& inst, const CoveragePlan& plan,
                                 int cap = kDefaultBruteForceCap);

enum class Regime { kAssignment, kDegreeTwo, kGeneral };

const char* RegimeName(Regime regime);

// kAssignment for unit coefficients with b = 1, kDegreeTwo for unit
// coefficients with b = 2 and B_k = A_k, kGeneral otherwise.
Regime DetectRegime(const Instance& inst, const CoveragePlan& plan);

struct Witness {
  Pair pair;
  McCormickKind kind = McCormickKind::kLower;
  Rational violation;
  std::vector<Rational> point;  // values of the relaxed compact model vars
  bool sound = false;           // re-substitution confirmed exactly
};

struct DominanceReport {
  Regime regime = Regime::kGeneral;
  ViolationMap per_pair_max;
  bool pass = true;  // all maxima <= 0
  std::vector<Witness> witnesses;  // one per positive maximum
  bool witnesses_sound = true;
};

// Maximizes every McCormick violation for every non-square pair of Q over the
// relaxed compact model. Throws kRegimeMismatch when the instance or plan
// does not meet the structural requirements of `regime`.
DominanceReport VerifyDominance(const Instance& inst, const CoveragePlan& plan,
                                Regime regime);

// Re-checks a witness point against the relaxed compact model.
bool WitnessIsSound(const LinModel& relaxed_compact, const Witness& witness);

struct BoundComparison {
  SolveStatus compact_status = SolveStatus::kInfeasible;
  SolveStatus standard_status = SolveStatus::kInfeasible;
  Rational compact_bound;
  Rational standard_bound;
  Rational delta;  // compact - standard
  Regime regime = Regime::kGeneral;
  // Assignment and degree-two regimes promise delta >= 0.
  bool dominance_expected = false;
  bool dominance_holds = true;
};

// LP bounds of the relaxed compact model and the relaxed standard model over
// the non-square products of the instance.
BoundComparison CompareBounds(const Instance& inst, const CoveragePlan& plan);

enum class ReferenceFamily { kQap, kQtsp };

struct StructuralMatch {
  bool match = false;
  int compact_rows = 0;  // emitted, duplicates included
  int reference_rows = 0;
  int product_vars = 0;
  int standard_inequalities = 0;
};

// Generates the instance, builds its plan (full multiplier sets for QAP,
// B_k = A_k for QTSP) and compares the compact rows with independently
// emitted Frieze-Yadegar (QAP) / Fischer-Helmberg (QTSP) rows.
StructuralMatch CheckStructuralMatch(ReferenceFamily family, int size);

std::string FormatReport(const ConsistencyReport& report);
std::string FormatReport(const DominanceReport& report);
std::string FormatReport(const BoundComparison& comparison);

}  // namespace compactlin

#endif  // COMPACTLIN_VERIFIER_H_
