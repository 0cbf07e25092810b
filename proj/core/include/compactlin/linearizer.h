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

#ifndef COMPACTLIN_LINEARIZER_H_
#define COMPACTLIN_LINEARIZER_H_

#include <set>

#include "compactlin/coverage.h"
#include "compactlin/lin_model.h"
#include "compactlin/model.h"

namespace compactlin {

// Original equations, one row per k and j in B_k obtained by multiplying
// equation k with x_j, the side constraints and the objective. Every square
// y_jj is replaced by x_j, so rows read
//   sum_{i in A_k, i != j} a_i y_{ij} = (b - a_j [j in A_k]) x_j.
// Rows that become 0 = 0 are dropped. Throws kPlanInvalid unless the plan
// passes CheckConditions.
LinModel CompactLinearize(const Instance& inst, const CoveragePlan& plan);

// Original equations, side constraints, objective, and the three McCormick
// inequalities for each pair. `pairs` must contain every non-square product
// of the instance (kPlanInvalid) and no squares (kSquarePairRejected).
// Objective and side terms on a square product act on x_i.
LinModel StandardLinearize(const Instance& inst, const std::set<Pair>& pairs);

// Copy with every integrality flag cleared.
LinModel Relax(const LinModel& model);

// Pairs of P without the squares.
std::set<Pair> NonSquareProducts(const Instance& inst);

}  // namespace compactlin

#endif  // COMPACTLIN_LINEARIZER_H_
