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

#include "compactlin/lp.h"

#include <cstdlib>
#include <queue>
#include <string>

#include "compactlin/error.h"
#include "simplex.h"

namespace compactlin {
namespace {

template <typename Num>
Num FromRational(const Rational& q);

template <>
Rational FromRational<Rational>(const Rational& q) {
  return q;
}

template <>
SmallRational FromRational<SmallRational>(const Rational& q) {
  return SmallRational(q);
}

Rational ToRational(const Rational& q) { return q; }
Rational ToRational(const SmallRational& q) { return q.ToRational(); }

bool IsWhole(const Rational& q) {
  return mpz_cmp_ui(q.get_den_mpz_t(), 1) == 0;
}

// dst -= a * b without temporaries.
void SubMul(Rational& dst, const Rational& a, const Rational& b,
            Rational& scratch) {
  if (IsWhole(dst) && IsWhole(a) && IsWhole(b)) {
    mpz_submul(dst.get_num_mpz_t(), a.get_num_mpz_t(), b.get_num_mpz_t());
    return;
  }
  mpq_mul(scratch.get_mpq_t(), a.get_mpq_t(), b.get_mpq_t());
  mpq_sub(dst.get_mpq_t(), dst.get_mpq_t(), scratch.get_mpq_t());
}

void SubMul(SmallRational& dst, const SmallRational& a, const SmallRational& b,
            SmallRational&) {
  dst.SubMul(a, b);
}

}  // namespace

const char* SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kInfeasible:
      return "infeasible";
    case SolveStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

template <typename Num>
SimplexTableau<Num>::SimplexTableau(const LinModel& model,
                                    std::vector<Rational> lower,
                                    std::vector<Rational> upper)
    : model_(&model), lower_(std::move(lower)), upper_(std::move(upper)) {
  const int n = model_->num_vars();
  for (int v = 0; v < n; ++v) {
    var_lower_.push_back(FromRational<Num>(lower_[v]));
    var_upper_.push_back(FromRational<Num>(upper_[v]));
  }
  for (const LinConstraint& c : model_->constraints()) {
    CheckRow row{{}, c.sense, FromRational<Num>(c.rhs)};
    for (const Term& t : c.coeffs) {
      row.terms.emplace_back(t.var, FromRational<Num>(t.coeff));
    }
    check_rows_.push_back(std::move(row));
  }
  column_of_var_.assign(n, -1);
  std::vector<Rational> exact_lower;
  std::vector<std::optional<Rational>> exact_upper;
  for (int v = 0; v < n; ++v) {
    if (lower_[v] > upper_[v]) return;  // empty box
    if (lower_[v] == upper_[v]) continue;
    column_of_var_[v] = num_cols_++;
    var_of_column_.push_back(v);
    exact_lower.push_back(lower_[v]);
    exact_upper.push_back(upper_[v]);
  }

  // Slack columns are appended after all structural columns, so collect the
  // rows first.
  struct PendingRow {
    std::vector<std::pair<int, Rational>> entries;
    int slack_sign = 0;
    Rational rhs;
  };
  std::vector<PendingRow> pending;
  for (const LinConstraint& c : model_->constraints()) {
    PendingRow row;
    row.rhs = c.rhs;
    for (const Term& t : c.coeffs) {
      const int col = column_of_var_[t.var];
      if (col < 0) {
        row.rhs -= t.coeff * lower_[t.var];
      } else {
        row.entries.emplace_back(col, t.coeff);
      }
    }
    if (c.sense == Sense::kLessEqual) row.slack_sign = 1;
    if (c.sense == Sense::kGreaterEqual) row.slack_sign = -1;
    if (row.entries.size() == 1) {
      // Singleton rows only tighten the column bounds.
      const auto& [col, a] = row.entries.front();
      const Rational bound = row.rhs / a;
      Sense sense = c.sense;
      if (a < 0 && sense != Sense::kEqual) {
        sense = sense == Sense::kLessEqual ? Sense::kGreaterEqual
                                           : Sense::kLessEqual;
      }
      if (sense != Sense::kLessEqual && bound > exact_lower[col]) {
        exact_lower[col] = bound;
      }
      if (sense != Sense::kGreaterEqual &&
          (!exact_upper[col] || bound < *exact_upper[col])) {
        exact_upper[col] = bound;
      }
      if (exact_upper[col] && exact_lower[col] > *exact_upper[col]) return;
      continue;
    }
    if (row.entries.empty()) {
      // Constant row: 0 (sense) rhs.
      const bool ok = (c.sense == Sense::kEqual && row.rhs == 0) ||
                      (c.sense == Sense::kLessEqual && row.rhs >= 0) ||
                      (c.sense == Sense::kGreaterEqual && row.rhs <= 0);
      if (!ok) return;
      continue;
    }
    pending.push_back(std::move(row));
  }
  for (int col = 0; col < num_cols_; ++col) {
    col_lower_.push_back(FromRational<Num>(exact_lower[col]));
    col_upper_.push_back(exact_upper[col]
                             ? std::optional<Num>(
                                   FromRational<Num>(*exact_upper[col]))
                             : std::nullopt);
  }
  for (PendingRow& row : pending) {
    if (row.slack_sign != 0) {
      row.entries.emplace_back(num_cols_++, Rational(row.slack_sign));
      var_of_column_.push_back(-1);
      col_lower_.push_back(0);
      col_upper_.push_back(std::nullopt);
      exact_lower.push_back(0);
    }
  }

  const int m = static_cast<int>(pending.size());
  rows_.assign(m, std::vector<Num>(num_cols_));
  basis_.resize(m);
  beta_.resize(m);
  is_basic_.assign(num_cols_, 0);
  at_upper_.assign(num_cols_, 0);
  std::vector<int> slack_col(m, -1);
  for (int r = 0; r < m; ++r) {
    if (pending[r].slack_sign != 0) slack_col[r] = pending[r].entries.back().first;
  }
  for (int r = 0; r < m; ++r) {
    Rational residual = pending[r].rhs;
    for (const auto& [col, a] : pending[r].entries) {
      rows_[r][col] = FromRational<Num>(a);
      if (col != slack_col[r]) residual -= a * exact_lower[col];
    }
    // Start from the slack when it is feasible at the lower-bound point.
    if (slack_col[r] >= 0 && residual * pending[r].slack_sign >= 0) {
      if (pending[r].slack_sign < 0) {
        for (Num& a : rows_[r]) a = -a;
      }
      basis_[r] = slack_col[r];
      beta_[r] = FromRational<Num>(residual * pending[r].slack_sign);
      is_basic_[slack_col[r]] = 1;
      continue;
    }
    if (residual < 0) {
      for (Num& a : rows_[r]) a = -a;
      residual = -residual;
    }
    basis_[r] = num_cols_ + r;
    beta_[r] = FromRational<Num>(residual);
  }

  // Phase 1: minimize the sum of the artificials.
  std::vector<Num> reduced(num_cols_);
  for (int r = 0; r < m; ++r) {
    if (!IsArtificial(basis_[r])) continue;
    for (int col = 0; col < num_cols_; ++col) {
      if (rows_[r][col] != 0) reduced[col] -= rows_[r][col];
    }
  }
  Run(reduced);
  for (int r = 0; r < static_cast<int>(basis_.size()); ++r) {
    if (IsArtificial(basis_[r]) && beta_[r] > 0) return;
  }
  RemoveArtificials();
  feasible_ = true;
}

template <typename Num>
Num SimplexTableau<Num>::ColumnValue(int col) const {
  return at_upper_[col] ? *col_upper_[col] : col_lower_[col];
}

template <typename Num>
void SimplexTableau<Num>::Pivot(int row, int col,
                                std::vector<Num>& reduced_costs) {
  ++pivots_;
  std::vector<Num>& pivot_row = rows_[row];
  const Num pivot = pivot_row[col];
  std::vector<int> nonzero;
  for (int k = 0; k < num_cols_; ++k) {
    if (pivot_row[k] != 0) {
      pivot_row[k] /= pivot;
      nonzero.push_back(k);
    }
  }
  Num factor, scratch;
  for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
    if (r == row || rows_[r][col] == 0) continue;
    factor = rows_[r][col];
    for (int k : nonzero) SubMul(rows_[r][k], factor, pivot_row[k], scratch);
  }
  if (reduced_costs[col] != 0) {
    factor = reduced_costs[col];
    for (int k : nonzero) {
      SubMul(reduced_costs[k], factor, pivot_row[k], scratch);
    }
  }
}

template <typename Num>
typename SimplexTableau<Num>::StepResult SimplexTableau<Num>::Run(
    std::vector<Num>& reduced_costs) {
  const int m = static_cast<int>(rows_.size());
  Num step, candidate, rate;
  // Largest-coefficient pricing; after a run of degenerate pivots switch to
  // Bland's rule until the objective moves again, which rules out cycling.
  constexpr int kDegenerateLimit = 16;
  int degenerate_run = 0;
  while (true) {
    const bool bland = degenerate_run >= kDegenerateLimit;
    int entering = -1;
    Num best;
    for (int col = 0; col < num_cols_; ++col) {
      if (is_basic_[col]) continue;
      const Num& d = reduced_costs[col];
      if (at_upper_[col] ? d > 0 : d < 0) {
        if (!at_upper_[col] && col_upper_[col] &&
            *col_upper_[col] == col_lower_[col]) {
          continue;
        }
        if (bland) {
          entering = col;
          break;
        }
        if (entering < 0 || abs(d) > best) {
          entering = col;
          best = abs(d);
        }
      }
    }
    if (entering < 0) return StepResult::kOptimal;
    const int direction = at_upper_[entering] ? -1 : 1;

    // Ratio test; ties go to the smallest basic index.
    int leave_row = -1;
    bool leave_to_upper = false;
    bool have_step = false;
    for (int r = 0; r < m; ++r) {
      const Num& a = rows_[r][entering];
      if (a == 0) continue;
      // d(basic)/dt = -direction * a
      rate = direction > 0 ? Num(-a) : a;
      const int basic = basis_[r];
      bool to_upper = false;
      if (rate < 0) {
        const Num lower = IsArtificial(basic) ? Num(0) : col_lower_[basic];
        candidate = (beta_[r] - lower) / (-rate);
      } else {
        if (IsArtificial(basic) || !col_upper_[basic]) continue;
        candidate = (*col_upper_[basic] - beta_[r]) / rate;
        to_upper = true;
      }
      if (!have_step || candidate < step ||
          (candidate == step && basic < basis_[leave_row])) {
        step = candidate;
        leave_row = r;
        leave_to_upper = to_upper;
        have_step = true;
      }
    }
    bool flip = false;
    if (col_upper_[entering]) {
      const Num width = *col_upper_[entering] - col_lower_[entering];
      if (!have_step || width <= step) {
        step = width;
        flip = true;
        have_step = true;
      }
    }
    if (!have_step) return StepResult::kUnbounded;
    degenerate_run = step == 0 ? degenerate_run + 1 : 0;

    if (step != 0) {
      for (int r = 0; r < m; ++r) {
        const Num& a = rows_[r][entering];
        if (a == 0) continue;
        if (direction > 0) {
          beta_[r] -= a * step;
        } else {
          beta_[r] += a * step;
        }
      }
    }
    if (flip) {
      at_upper_[entering] = !at_upper_[entering];
      continue;
    }
    Num entering_value = ColumnValue(entering);
    if (direction > 0) {
      entering_value += step;
    } else {
      entering_value -= step;
    }
    const int leaving = basis_[leave_row];
    Pivot(leave_row, entering, reduced_costs);
    if (!IsArtificial(leaving)) {
      is_basic_[leaving] = 0;
      at_upper_[leaving] = leave_to_upper ? 1 : 0;
    }
    basis_[leave_row] = entering;
    beta_[leave_row] = entering_value;
    is_basic_[entering] = 1;
    at_upper_[entering] = 0;
  }
}

template <typename Num>
void SimplexTableau<Num>::RemoveArtificials() {
  std::vector<Num> scratch(num_cols_);
  for (int r = 0; r < static_cast<int>(rows_.size());) {
    if (!IsArtificial(basis_[r])) {
      ++r;
      continue;
    }
    int col = -1;
    for (int k = 0; k < num_cols_; ++k) {
      if (!is_basic_[k] && rows_[r][k] != 0) {
        col = k;
        break;
      }
    }
    if (col < 0) {
      // Redundant row.
      rows_.erase(rows_.begin() + r);
      basis_.erase(basis_.begin() + r);
      beta_.erase(beta_.begin() + r);
      continue;
    }
    // Degenerate pivot: the artificial is zero, the entering column keeps
    // its current bound value.
    const Num value = ColumnValue(col);
    Pivot(r, col, scratch);
    basis_[r] = col;
    beta_[r] = value;
    is_basic_[col] = 1;
    at_upper_[col] = 0;
    ++r;
  }
}

template <typename Num>
std::vector<Num> SimplexTableau<Num>::ModelValues() const {
  std::vector<Num> col_values(num_cols_);
  for (int col = 0; col < num_cols_; ++col) {
    if (!is_basic_[col]) col_values[col] = ColumnValue(col);
  }
  for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
    col_values[basis_[r]] = beta_[r];
  }
  std::vector<Num> values(model_->num_vars());
  for (int v = 0; v < model_->num_vars(); ++v) {
    const int col = column_of_var_[v];
    values[v] = col < 0 ? var_lower_[v] : col_values[col];
  }
  return values;
}

template <typename Num>
bool SimplexTableau<Num>::Verify(const std::vector<Num>& values) const {
  for (int v = 0; v < model_->num_vars(); ++v) {
    if (values[v] < var_lower_[v] || values[v] > var_upper_[v]) return false;
  }
  Num lhs, scratch;
  for (const CheckRow& row : check_rows_) {
    lhs = 0;
    for (const auto& [var, coeff] : row.terms) {
      SubMul(lhs, coeff, values[var], scratch);
    }
    lhs = -lhs;
    if ((row.sense == Sense::kEqual && lhs != row.rhs) ||
        (row.sense == Sense::kLessEqual && lhs > row.rhs) ||
        (row.sense == Sense::kGreaterEqual && lhs < row.rhs)) {
      return false;
    }
  }
  return true;
}

template <typename Num>
LpSolution SimplexTableau<Num>::Optimize(const LinearExpr& objective,
                                         bool maximize, bool keep_values) {
  LpSolution solution;
  if (!feasible_) {
    solution.status = SolveStatus::kInfeasible;
    return solution;
  }
  std::vector<Num> cost(num_cols_);
  for (const Term& t : objective.terms) {
    const int col = column_of_var_[t.var];
    if (col < 0) continue;
    cost[col] = FromRational<Num>(maximize ? Rational(-t.coeff) : t.coeff);
  }
  std::vector<Num> reduced = cost;
  for (int r = 0; r < static_cast<int>(rows_.size()); ++r) {
    const Num& cb = cost[basis_[r]];
    if (cb == 0) continue;
    for (int col = 0; col < num_cols_; ++col) {
      if (rows_[r][col] != 0) reduced[col] -= cb * rows_[r][col];
    }
  }
  const int64_t before = pivots_;
  if (Run(reduced) == StepResult::kUnbounded) {
    solution.status = SolveStatus::kUnbounded;
    solution.pivots = pivots_ - before;
    return solution;
  }
  const std::vector<Num> values = ModelValues();
  if (!Verify(values)) {
    throw Error(ErrorCode::kInternal,
                "simplex solution failed exact re-substitution");
  }
  solution.status = SolveStatus::kOptimal;
  Num value = FromRational<Num>(objective.constant);
  Num scratch;
  for (const Term& t : objective.terms) {
    SubMul(value, FromRational<Num>(-t.coeff), values[t.var], scratch);
  }
  solution.objective = ToRational(value);
  if (keep_values) {
    solution.values.reserve(values.size());
    for (const Num& v : values) solution.values.push_back(ToRational(v));
  }
  solution.pivots = pivots_ - before;
  return solution;
}

template class SimplexTableau<Rational>;
template class SimplexTableau<SmallRational>;

LpSolution SolveLp(const LinModel& model, const std::vector<Rational>& lower,
                   const std::vector<Rational>& upper) {
  try {
    SimplexTableau<SmallRational> tableau(model, lower, upper);
    return tableau.Optimize(model.objective(), /*maximize=*/false,
                            /*keep_values=*/true);
  } catch (const RationalOverflow&) {
    SimplexTableau<Rational> tableau(model, lower, upper);
    return tableau.Optimize(model.objective(), /*maximize=*/false,
                            /*keep_values=*/true);
  }
}

LpSolution SolveLp(const LinModel& model) {
  std::vector<Rational> lower, upper;
  for (const LinVar& v : model.vars()) {
    lower.push_back(v.lower);
    upper.push_back(v.upper);
  }
  return SolveLp(model, lower, upper);
}

int64_t DefaultNodeBudget() {
  if (const char* env = std::getenv("COMPACTLIN_NODE_BUDGET")) {
    char* end = nullptr;
    const long long value = std::strtoll(env, &end, 10);
    if (end != env && *end == '\0' && value > 0) return value;
  }
  return kDefaultNodeBudget;
}

namespace {

struct Node {
  Rational bound;
  int64_t sequence = 0;
  std::vector<Rational> lower;
  std::vector<Rational> upper;
  std::vector<Rational> values;
};

struct NodeOrder {
  bool operator()(const Node& a, const Node& b) const {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.sequence > b.sequence;
  }
};

int FirstFractional(const LinModel& model, const std::vector<Rational>& values) {
  for (int v = 0; v < model.num_vars(); ++v) {
    if (model.vars()[v].integral && !IsIntegral(values[v])) return v;
  }
  return -1;
}

}  // namespace

MipSolution SolveMilp(const LinModel& model, const MilpOptions& options) {
  MipSolution best;
  best.status = SolveStatus::kInfeasible;
  bool have_incumbent = false;
  int64_t sequence = 0;
  std::priority_queue<Node, std::vector<Node>, NodeOrder> open;

  // Solves the node LP and either records an incumbent or queues the node.
  auto process = [&](std::vector<Rational> lower, std::vector<Rational> upper) {
    if (best.node_count >= options.node_budget) {
      throw Error(ErrorCode::kNodeBudgetExceeded,
                  "branch and bound exceeded " +
                      std::to_string(options.node_budget) + " nodes");
    }
    ++best.node_count;
    LpSolution lp = SolveLp(model, lower, upper);
    if (lp.status == SolveStatus::kUnbounded) {
      best.status = SolveStatus::kUnbounded;
      return false;
    }
    if (lp.status != SolveStatus::kOptimal) return true;
    if (have_incumbent && lp.objective >= best.objective) return true;
    if (FirstFractional(model, lp.values) < 0) {
      have_incumbent = true;
      best.status = SolveStatus::kOptimal;
      best.objective = lp.objective;
      best.values = std::move(lp.values);
      return true;
    }
    open.push(Node{lp.objective, sequence++, std::move(lower),
                   std::move(upper), std::move(lp.values)});
    return true;
  };

  std::vector<Rational> lower, upper;
  for (const LinVar& v : model.vars()) {
    lower.push_back(v.lower);
    upper.push_back(v.upper);
  }
  if (!process(lower, upper)) return best;
  while (!open.empty()) {
    Node node = open.top();
    open.pop();
    if (have_incumbent && node.bound >= best.objective) break;
    const int var = FirstFractional(model, node.values);
    const Rational& value = node.values[var];
    mpz_class floor_value;
    mpz_fdiv_q(floor_value.get_mpz_t(), value.get_num_mpz_t(),
               value.get_den_mpz_t());
    {
      std::vector<Rational> child_upper = node.upper;
      child_upper[var] = Rational(floor_value);
      if (!process(node.lower, std::move(child_upper))) return best;
    }
    {
      std::vector<Rational> child_lower = node.lower;
      child_lower[var] = Rational(floor_value + 1);
      if (!process(std::move(child_lower), node.upper)) return best;
    }
  }
  return best;
}

// Starts on 64-bit fractions and moves to GMP for good after an overflow.
struct Polytope::Impl {
  Impl(std::shared_ptr<const LinModel> model, std::vector<Rational> lower,
       std::vector<Rational> upper)
      : model(std::move(model)), lower(std::move(lower)), upper(std::move(upper)) {
    try {
      fast = std::make_unique<SimplexTableau<SmallRational>>(
          *this->model, this->lower, this->upper);
    } catch (const RationalOverflow&) {
      MakeExact();
    }
  }

  void MakeExact() {
    fast.reset();
    exact = std::make_unique<SimplexTableau<Rational>>(*model, lower, upper);
  }

  LpSolution Optimize(const LinearExpr& objective, bool maximize,
                      bool keep_values) {
    if (fast) {
      try {
        return fast->Optimize(objective, maximize, keep_values);
      } catch (const RationalOverflow&) {
        MakeExact();
      }
    }
    return exact->Optimize(objective, maximize, keep_values);
  }

  std::shared_ptr<const LinModel> model;
  std::vector<Rational> lower;
  std::vector<Rational> upper;
  std::unique_ptr<SimplexTableau<SmallRational>> fast;
  std::unique_ptr<SimplexTableau<Rational>> exact;
};

Polytope::Polytope(const LinModel& model) {
  std::vector<Rational> lower, upper;
  for (const LinVar& v : model.vars()) {
    lower.push_back(v.lower);
    upper.push_back(v.upper);
  }
  impl_ = std::make_unique<Impl>(std::make_shared<const LinModel>(model),
                                 std::move(lower), std::move(upper));
}

Polytope::Polytope(const LinModel& model, const std::vector<Rational>& lower,
                   const std::vector<Rational>& upper)
    : impl_(std::make_unique<Impl>(std::make_shared<const LinModel>(model),
                                   lower, upper)) {}

Polytope::Polytope(std::shared_ptr<const LinModel> model,
                   const std::vector<Rational>& lower,
                   const std::vector<Rational>& upper)
    : impl_(std::make_unique<Impl>(std::move(model), lower, upper)) {}

Polytope::~Polytope() = default;
Polytope::Polytope(Polytope&&) noexcept = default;
Polytope& Polytope::operator=(Polytope&&) noexcept = default;

bool Polytope::feasible() const {
  return impl_->fast ? impl_->fast->feasible() : impl_->exact->feasible();
}

LpSolution Polytope::Minimize(const LinearExpr& objective, bool keep_values) {
  return impl_->Optimize(objective, /*maximize=*/false, keep_values);
}

LpSolution Polytope::Maximize(const LinearExpr& objective, bool keep_values) {
  return impl_->Optimize(objective, /*maximize=*/true, keep_values);
}

std::optional<Rational> MaximizeViolation(const LinModel& model,
                                          const LinearExpr& expr,
                                          std::vector<Rational>* argmax) {
  for (const LinVar& v : model.vars()) {
    if (v.integral) {
      throw Error(ErrorCode::kInternal,
                  "MaximizeViolation needs a relaxed model");
    }
  }
  Polytope polytope(model);
  if (!polytope.feasible()) return std::nullopt;
  LpSolution solution = polytope.Maximize(expr);
  if (solution.status != SolveStatus::kOptimal) {
    throw Error(ErrorCode::kInternal, "violation LP is unbounded");
  }
  if (argmax) *argmax = std::move(solution.values);
  return solution.objective;
}

}  // namespace compactlin
