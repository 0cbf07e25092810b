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

#ifndef COMPACTLIN_ZOO_H_
#define COMPACTLIN_ZOO_H_

#include <cstdint>
#include <map>
#include <optional>
#include <tuple>
#include <vector>

#include "compactlin/model.h"
#include "compactlin/rational.h"

namespace compactlin {

// Symmetric quadratic TSP on the complete graph with vertices 1..vertices.
// costs[(i, j, k)] weighs the edge pair {i,j},{j,k} with middle vertex j and
// i < k.
struct QtspSpec {
  int vertices = 4;
  std::map<std::tuple<int, int, int>, Rational> costs;
  bool include_subtours = true;

  // Costs drawn uniformly from 1..10.
  static QtspSpec Random(int vertices, uint64_t seed,
                         bool include_subtours = true);
};

// Variable of edge {a, b} in the lexicographic edge order of K_vertices.
VarId QtspEdgeVar(int vertices, int a, int b);

// Edge binaries, one degree equation (= 2) per vertex with id = vertex,
// subtour constraints |W| - 1 - x(E(W)) >= 0 for 2 <= |W| <= |V| - 2 when
// enabled, and every pair of edges sharing a vertex as a product.
// Throws kSizeExceeded unless 4 <= vertices <= 8.
Instance GenQtsp(const QtspSpec& spec);

// Koopmans-Beckmann QAP: facility i at location p is x_{(i-1) n + p}.
struct QapSpec {
  int n = 3;
  std::vector<std::vector<Rational>> flow;      // n x n, facilities
  std::vector<std::vector<Rational>> distance;  // n x n, locations

  // Off-diagonal entries drawn from 1..9, zero diagonal.
  static QapSpec Random(int n, uint64_t seed);
};

VarId QapVar(int n, int facility, int location);

// Row equations get ids 1..n, column equations n+1..2n. Products are the
// pairs (ip, jq), i < j, p != q with a nonzero cost
// flow[i][j] dist[p][q] + flow[j][i] dist[q][p]. Throws kSizeExceeded unless
// 2 <= n <= 4.
Instance GenQap(const QapSpec& spec);

struct RandomSpec {
  int n = 8;
  int num_equations = 2;
  int support_min = 2;
  int support_max = 4;
  int coeff_min = 1;  // numerators of equation coefficients
  int coeff_max = 3;
  int max_denominator = 1;  // > 1 yields fractional coefficients
  // Exactly this many variables of each support are one at the planted
  // point; with unit coefficients this fixes the right-hand sides.
  std::optional<int> ones_per_equation;
  int num_products = 3;
  bool allow_squares = false;
  bool disjoint = false;
  int num_sides = 0;
  int objective_min = -10;
  int objective_max = 10;
  uint64_t seed = 1;
};

// Seeded random instance with a planted feasible point: supports are drawn
// first, then each b^k is set to the value of equation k at the planted
// point. Throws kInconsistentSpec for unsatisfiable parameters.
Instance GenRandom(const RandomSpec& spec);

}  // namespace compactlin

#endif  // COMPACTLIN_ZOO_H_
