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

#ifndef COMPACTLIN_LP_H_
#define COMPACTLIN_LP_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <vector>

#include "compactlin/lin_model.h"
#include "compactlin/rational.h"

namespace compactlin {

enum class SolveStatus { kOptimal, kInfeasible, kUnbounded };

const char* SolveStatusName(SolveStatus status);

struct LpSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  Rational objective;
  std::vector<Rational> values;  // one per model variable, when optimal
  int64_t pivots = 0;
};

struct MipSolution {
  SolveStatus status = SolveStatus::kInfeasible;
  Rational objective;
  std::vector<Rational> values;
  int64_t node_count = 0;
};

// Solves the continuous relaxation of `model` (integrality is ignored) with an
// exact bounded-variable primal simplex using Bland's rule. Variables with
// equal bounds are substituted out before the simplex runs. The returned
// point is checked against every row and bound by exact substitution.
LpSolution SolveLp(const LinModel& model);

// Same, with the variable bounds of `model` replaced.
LpSolution SolveLp(const LinModel& model, const std::vector<Rational>& lower,
                   const std::vector<Rational>& upper);

inline constexpr int64_t kDefaultNodeBudget = 1'000'000;

// kDefaultNodeBudget unless COMPACTLIN_NODE_BUDGET holds a positive integer.
int64_t DefaultNodeBudget();

struct MilpOptions {
  int64_t node_budget = DefaultNodeBudget();
};

// Best-first branch and bound on the LP bound. Branches on the lowest-index
// fractional integral variable and explores the down branch first. Throws
// kNodeBudgetExceeded when more than `node_budget` LPs would be solved.
MipSolution SolveMilp(const LinModel& model, const MilpOptions& options = {});

// The relaxation polytope of a model with a feasible basis kept between
// calls, so that many objectives can be optimized after a single phase 1.
class Polytope {
 public:
  explicit Polytope(const LinModel& model);
  Polytope(const LinModel& model, const std::vector<Rational>& lower,
           const std::vector<Rational>& upper);
  // Shares `model` instead of copying it.
  Polytope(std::shared_ptr<const LinModel> model,
           const std::vector<Rational>& lower,
           const std::vector<Rational>& upper);
  ~Polytope();
  Polytope(Polytope&&) noexcept;
  Polytope& operator=(Polytope&&) noexcept;

  bool feasible() const;
  // With keep_values = false only the status and objective are filled in.
  LpSolution Minimize(const LinearExpr& objective, bool keep_values = true);
  LpSolution Maximize(const LinearExpr& objective, bool keep_values = true);

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// max expr over the relaxation polytope of `model`; std::nullopt stands for
// minus infinity (empty polytope). The model must not carry integrality
// flags. If `argmax` is given it receives the maximizing point.
std::optional<Rational> MaximizeViolation(
    const LinModel& model, const LinearExpr& expr,
    std::vector<Rational>* argmax = nullptr);

}  // namespace compactlin

#endif  // COMPACTLIN_LP_H_
