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

#ifndef COMPACTLIN_MODEL_H_
#define COMPACTLIN_MODEL_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "compactlin/rational.h"

namespace compactlin {

// 1-based index of a binary variable x_i of an instance.
struct VarId {
  int index = 0;

  constexpr VarId() = default;
  constexpr explicit VarId(int i) : index(i) {}
  friend constexpr auto operator<=>(VarId, VarId) = default;
};

// Product x_i * x_j stored with i <= j. The square (i, i) is representable.
struct Pair {
  VarId i;
  VarId j;

  constexpr Pair() = default;
  constexpr Pair(VarId a, VarId b) : i(a), j(b) {}
  constexpr Pair(int a, int b) : i(a), j(b) {}

  // Orders the endpoints.
  static constexpr Pair Of(VarId a, VarId b) {
    return a <= b ? Pair(a, b) : Pair(b, a);
  }
  constexpr bool IsSquare() const { return i == j; }
  friend constexpr auto operator<=>(const Pair&, const Pair&) = default;
};

// sum_{i in support} coeffs[i] * x_i = rhs, with positive data once validated.
struct LinearEquation {
  int id = 0;
  std::map<VarId, Rational> coeffs;
  Rational rhs;

  bool Contains(VarId v) const { return coeffs.count(v) > 0; }
  std::set<VarId> Support() const;
  friend bool operator==(const LinearEquation&, const LinearEquation&) = default;
};

// x_coeffs . x + y_coeffs . y >= rhs.
struct SideConstraint {
  std::map<VarId, Rational> x_coeffs;
  std::map<Pair, Rational> y_coeffs;
  Rational rhs;

  friend bool operator==(const SideConstraint&, const SideConstraint&) = default;
};

// min c.x + d.y  s.t.  equations, sides, y_ij = x_i x_j for (i,j) in products,
// x binary.
struct Instance {
  int n = 0;
  std::map<VarId, Rational> linear_objective;
  std::map<Pair, Rational> quadratic_objective;
  std::vector<LinearEquation> equations;
  std::set<Pair> products;
  std::vector<SideConstraint> sides;

  const LinearEquation* FindEquation(int id) const;
  // Ids of the equations whose support contains v, ascending.
  std::vector<int> EquationsContaining(VarId v) const;
  bool HasDisjointSupports() const;
  bool HasObjective() const;

  friend bool operator==(const Instance&, const Instance&) = default;
};

struct ValidationIssue {
  std::string code;
  std::string message;
  std::string element;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool ok() const { return issues.empty(); }
  std::string Summary() const;
};

// Checks the prerequisites of the compact linearization: positive equation
// data, every product variable appears in some equation, ordered pairs, and
// side constraints / quadratic objective only referencing declared products.
ValidationReport ValidateInstance(const Instance& inst);

// x[i - 1] is the value of x_i.
using BinaryPoint = std::vector<int>;

inline constexpr int kDefaultBruteForceCap = 25;

// All binary points satisfying the equations and side constraints (with
// y_ij = x_i x_j), in lexicographic order of (x_1, ..., x_n).
// Throws kSizeExceeded when n > cap.
std::vector<BinaryPoint> BruteForceFeasible(const Instance& inst,
                                            int cap = kDefaultBruteForceCap);

// c.x + d.y with y_ij = x_i x_j.
Rational EvaluateObjective(const Instance& inst, const BinaryPoint& x);

bool SatisfiesEquations(const Instance& inst, const BinaryPoint& x);
bool SatisfiesSides(const Instance& inst, const BinaryPoint& x);

std::string ToString(VarId v);
std::string ToString(const Pair& p);

}  // namespace compactlin

#endif  // COMPACTLIN_MODEL_H_
