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

#ifndef COMPACTLIN_LIN_MODEL_H_
#define COMPACTLIN_LIN_MODEL_H_

#include <map>
#include <optional>
#include <tuple>
#include <string>
#include <utility>
#include <vector>

#include "compactlin/model.h"
#include "compactlin/rational.h"

namespace compactlin {

enum class VarKind {
  kOriginal,  // x_i
  kProduct,   // y_ij
  kAuxiliary, // anything else, e.g. the selection model's z / f
};

struct LinVar {
  VarKind kind = VarKind::kOriginal;
  VarId id;   // kOriginal
  Pair pair;  // kProduct
  std::string name;
  Rational lower = 0;
  Rational upper = 1;
  bool integral = false;

  friend bool operator==(const LinVar&, const LinVar&) = default;
};

struct Term {
  int var = 0;  // index into LinModel::vars
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

// sum(terms) + constant. Canonical form: sorted by var, no zero coefficients.
struct LinearExpr {
  std::vector<Term> terms;
  Rational constant = 0;

  void Add(int var, const Rational& coeff);
  void Canonicalize();
  friend bool operator==(const LinearExpr&, const LinearExpr&) = default;
};

enum class Sense { kEqual, kGreaterEqual, kLessEqual };

// Which rule produced a constraint.
struct Provenance {
  enum class Kind {
    kOriginalEquation,  // equation k
    kCompactEquation,   // equation k multiplied by x_j
    kMcCormickUpperI,   // y_ij <= x_i
    kMcCormickUpperJ,   // y_ij <= x_j
    kMcCormickLower,    // y_ij >= x_i + x_j - 1
    kSide,              // side constraint #index
    kAuxiliary,         // free-form label, used by internal models
  };
  Kind kind = Kind::kAuxiliary;
  int k = 0;
  int j = 0;
  Pair pair;
  int index = 0;
  std::string label;

  // Constraint name, e.g. "cmp_k1_j3", "mcl_1_3", "eq_k2", "side_0".
  std::string Name() const;
  // Orders constraints for deterministic export.
  std::tuple<int, int, int, int, int, int, std::string> Key() const;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

struct LinConstraint {
  std::vector<Term> coeffs;  // sorted by var
  Sense sense = Sense::kEqual;
  Rational rhs = 0;
  Provenance provenance;

  friend bool operator==(const LinConstraint&, const LinConstraint&) = default;
};

// A minimization model over bounded variables.
class LinModel {
 public:
  int AddVar(LinVar var);
  // Canonicalizes the expression; the expression constant moves to the rhs.
  void AddConstraint(const LinearExpr& lhs, Sense sense, const Rational& rhs,
                     Provenance provenance);
  void SetObjective(const LinearExpr& objective);

  const std::vector<LinVar>& vars() const { return vars_; }
  std::vector<LinVar>& mutable_vars() { return vars_; }
  const std::vector<LinConstraint>& constraints() const { return constraints_; }
  const LinearExpr& objective() const { return objective_; }
  int num_vars() const { return static_cast<int>(vars_.size()); }

  std::optional<int> FindX(VarId v) const;
  std::optional<int> FindY(const Pair& p) const;
  int CountProvenance(Provenance::Kind kind) const;

  // Exact evaluation helpers.
  static Rational Evaluate(const std::vector<Term>& terms,
                           const std::vector<Rational>& values);
  static Rational Evaluate(const LinearExpr& expr,
                           const std::vector<Rational>& values);
  // True iff values satisfy every bound and constraint exactly.
  bool IsFeasible(const std::vector<Rational>& values) const;
  // Integrality of integral variables is checked too.
  bool IsIntegerFeasible(const std::vector<Rational>& values) const;

  friend bool operator==(const LinModel&, const LinModel&) = default;

 private:
  std::vector<LinVar> vars_;
  std::vector<LinConstraint> constraints_;
  LinearExpr objective_;
  std::map<VarId, int> x_index_;
  std::map<Pair, int> y_index_;
};

}  // namespace compactlin

#endif  // COMPACTLIN_LIN_MODEL_H_
