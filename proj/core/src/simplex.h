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

#ifndef COMPACTLIN_SRC_SIMPLEX_H_
#define COMPACTLIN_SRC_SIMPLEX_H_

#include <optional>
#include <vector>

#include "compactlin/lin_model.h"
#include "compactlin/lp.h"
#include "compactlin/rational.h"
#include "small_rational.h"

namespace compactlin {

// Dense tableau for min c.x s.t. rows, lower <= x <= upper, where every
// inequality row carries a slack column. Variables whose bounds coincide are
// substituted into the right-hand sides and never become columns; rows with
// a single column only tighten that column's bounds.
//
// Phase 1 runs in the constructor. Rows whose slack is feasible at the
// lower-bound point start with the slack basic; every other row gets an
// implicit artificial that is never re-entered and is pivoted out (or its row
// deleted as redundant) before any objective is optimized. Pricing picks the
// largest reduced cost and falls back to Bland's smallest-index rule during
// degenerate stalls; ratio-test ties always go to the smallest basic index.
//
// Num is Rational or SmallRational. The latter throws RationalOverflow when
// an entry leaves the 64-bit range.
template <typename Num>
class SimplexTableau {
 public:
  // `model` must outlive the tableau.
  SimplexTableau(const LinModel& model, std::vector<Rational> lower,
                 std::vector<Rational> upper);

  bool feasible() const { return feasible_; }

  // Continues from the current (feasible) basis.
  LpSolution Optimize(const LinearExpr& objective, bool maximize,
                      bool keep_values);

 private:
  enum class StepResult { kOptimal, kUnbounded };

  bool IsArtificial(int basic) const { return basic >= num_cols_; }
  Num ColumnValue(int col) const;
  StepResult Run(std::vector<Num>& reduced_costs);
  void Pivot(int row, int col, std::vector<Num>& reduced_costs);
  void RemoveArtificials();
  std::vector<Num> ModelValues() const;
  bool Verify(const std::vector<Num>& values) const;

  const LinModel* model_;  // not owned
  std::vector<Rational> lower_;  // per model variable
  std::vector<Rational> upper_;
  std::vector<Num> var_lower_;
  std::vector<Num> var_upper_;

  // The model rows in Num, for re-substituting solutions.
  struct CheckRow {
    std::vector<std::pair<int, Num>> terms;
    Sense sense;
    Num rhs;
  };
  std::vector<CheckRow> check_rows_;

  int num_cols_ = 0;
  std::vector<int> column_of_var_;  // -1 when fixed
  std::vector<int> var_of_column_;  // -1 for slacks
  std::vector<Num> col_lower_;
  std::vector<std::optional<Num>> col_upper_;  // nullopt = +infinity

  std::vector<std::vector<Num>> rows_;
  std::vector<int> basis_;     // column, or num_cols_ + r for artificials
  std::vector<Num> beta_;      // values of the basic variables
  std::vector<char> is_basic_;  // per column
  std::vector<char> at_upper_;  // per nonbasic column
  bool feasible_ = false;
  int64_t pivots_ = 0;
};

}  // namespace compactlin

#endif  // COMPACTLIN_SRC_SIMPLEX_H_
