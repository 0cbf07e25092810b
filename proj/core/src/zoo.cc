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

#include "compactlin/zoo.h"

#include <algorithm>
#include <random>

#include "compactlin/error.h"

namespace compactlin {
namespace {

// Unbiased draw from [lo, hi]; independent of the standard library's
// distribution implementations so that seeds reproduce everywhere.
int64_t Uniform(std::mt19937_64& rng, int64_t lo, int64_t hi) {
  const uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  const uint64_t limit = rng.max() - rng.max() % span;
  uint64_t r;
  do {
    r = rng();
  } while (r >= limit);
  return lo + static_cast<int64_t>(r % span);
}

template <typename T>
void PartialShuffle(std::mt19937_64& rng, std::vector<T>& items, int count) {
  for (int i = 0; i < count; ++i) {
    const int64_t j = Uniform(rng, i, static_cast<int64_t>(items.size()) - 1);
    std::swap(items[i], items[j]);
  }
}

}  // namespace

VarId QtspEdgeVar(int vertices, int a, int b) {
  if (a > b) std::swap(a, b);
  // Edges (1,2), (1,3), ..., (1,V), (2,3), ...
  int index = 0;
  for (int u = 1; u < a; ++u) index += vertices - u;
  return VarId(index + (b - a));
}

QtspSpec QtspSpec::Random(int vertices, uint64_t seed, bool include_subtours) {
  QtspSpec spec;
  spec.vertices = vertices;
  spec.include_subtours = include_subtours;
  std::mt19937_64 rng(seed);
  for (int j = 1; j <= vertices; ++j) {
    for (int i = 1; i <= vertices; ++i) {
      for (int k = i + 1; k <= vertices; ++k) {
        if (i == j || k == j) continue;
        spec.costs[{i, j, k}] = Rational(Uniform(rng, 1, 10));
      }
    }
  }
  return spec;
}

Instance GenQtsp(const QtspSpec& spec) {
  const int v = spec.vertices;
  if (v < 4 || v > 8) {
    throw Error(ErrorCode::kSizeExceeded,
                "QTSP needs 4 <= |V| <= 8, got " + std::to_string(v));
  }
  Instance inst;
  inst.n = v * (v - 1) / 2;
  for (int j = 1; j <= v; ++j) {
    LinearEquation degree;
    degree.id = j;
    degree.rhs = 2;
    for (int u = 1; u <= v; ++u) {
      if (u != j) degree.coeffs[QtspEdgeVar(v, u, j)] = 1;
    }
    inst.equations.push_back(std::move(degree));
  }
  for (int j = 1; j <= v; ++j) {
    for (int i = 1; i <= v; ++i) {
      for (int k = i + 1; k <= v; ++k) {
        if (i == j || k == j) continue;
        const Pair p = Pair::Of(QtspEdgeVar(v, i, j), QtspEdgeVar(v, j, k));
        inst.products.insert(p);
        const auto cost = spec.costs.find({i, j, k});
        if (cost != spec.costs.end() && cost->second != 0) {
          inst.quadratic_objective[p] = cost->second;
        }
      }
    }
  }
  if (spec.include_subtours) {
    for (unsigned mask = 0; mask < (1u << v); ++mask) {
      const int size = __builtin_popcount(mask);
      if (size < 2 || size > v - 2) continue;
      SideConstraint subtour;
      for (int a = 1; a <= v; ++a) {
        for (int b = a + 1; b <= v; ++b) {
          if ((mask >> (a - 1) & 1) && (mask >> (b - 1) & 1)) {
            subtour.x_coeffs[QtspEdgeVar(v, a, b)] = -1;
          }
        }
      }
      subtour.rhs = 1 - size;
      inst.sides.push_back(std::move(subtour));
    }
  }
  return inst;
}

VarId QapVar(int n, int facility, int location) {
  return VarId((facility - 1) * n + location);
}

QapSpec QapSpec::Random(int n, uint64_t seed) {
  QapSpec spec;
  spec.n = n;
  std::mt19937_64 rng(seed);
  auto matrix = [&] {
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b) {
        if (a != b) m[a][b] = Rational(Uniform(rng, 1, 9));
      }
    }
    return m;
  };
  spec.flow = matrix();
  spec.distance = matrix();
  return spec;
}

Instance GenQap(const QapSpec& spec) {
  const int n = spec.n;
  if (n < 2 || n > 4) {
    throw Error(ErrorCode::kSizeExceeded,
                "QAP needs 2 <= n <= 4, got " + std::to_string(n));
  }
  auto entry = [](const std::vector<std::vector<Rational>>& m, int a, int b) {
    if (a - 1 < static_cast<int>(m.size()) &&
        b - 1 < static_cast<int>(m[a - 1].size())) {
      return m[a - 1][b - 1];
    }
    return Rational(0);
  };
  Instance inst;
  inst.n = n * n;
  for (int i = 1; i <= n; ++i) {
    LinearEquation row;
    row.id = i;
    row.rhs = 1;
    for (int p = 1; p <= n; ++p) row.coeffs[QapVar(n, i, p)] = 1;
    inst.equations.push_back(std::move(row));
  }
  for (int p = 1; p <= n; ++p) {
    LinearEquation column;
    column.id = n + p;
    column.rhs = 1;
    for (int i = 1; i <= n; ++i) column.coeffs[QapVar(n, i, p)] = 1;
    inst.equations.push_back(std::move(column));
  }
  for (int i = 1; i <= n; ++i) {
    for (int j = i + 1; j <= n; ++j) {
      for (int p = 1; p <= n; ++p) {
        for (int q = 1; q <= n; ++q) {
          if (p == q) continue;
          const Rational cost = entry(spec.flow, i, j) * entry(spec.distance, p, q) +
                                entry(spec.flow, j, i) * entry(spec.distance, q, p);
          if (cost == 0) continue;
          const Pair pair(QapVar(n, i, p), QapVar(n, j, q));
          inst.products.insert(pair);
          inst.quadratic_objective[pair] = cost;
        }
      }
    }
  }
  return inst;
}

Instance GenRandom(const RandomSpec& spec) {
  auto inconsistent = [](const std::string& why) {
    return Error(ErrorCode::kInconsistentSpec, why);
  };
  if (spec.n < 1 || spec.num_equations < 1) throw inconsistent("empty instance");
  if (spec.support_min < 1 || spec.support_min > spec.support_max ||
      spec.support_max > spec.n) {
    throw inconsistent("support sizes must satisfy 1 <= min <= max <= n");
  }
  if (spec.coeff_min < 1 || spec.coeff_min > spec.coeff_max ||
      spec.max_denominator < 1) {
    throw inconsistent("coefficients must be positive");
  }
  if (spec.disjoint && spec.num_equations * spec.support_min > spec.n) {
    throw inconsistent("disjoint supports do not fit into n variables");
  }
  if (spec.ones_per_equation &&
      (*spec.ones_per_equation < 1 ||
       *spec.ones_per_equation > spec.support_max)) {
    throw inconsistent("ones_per_equation outside the support size range");
  }
  if (spec.objective_min > spec.objective_max) {
    throw inconsistent("empty objective range");
  }

  std::mt19937_64 rng(spec.seed);
  constexpr int kAttempts = 200;
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<int> planted(spec.n + 1);
    for (int i = 1; i <= spec.n; ++i) planted[i] = static_cast<int>(Uniform(rng, 0, 1));

    std::vector<int> pool(spec.n);
    for (int i = 0; i < spec.n; ++i) pool[i] = i + 1;
    std::vector<std::vector<int>> supports;
    bool ok = true;
    for (int k = 0; k < spec.num_equations && ok; ++k) {
      std::vector<int> ones, zeros;
      for (int v : pool) (planted[v] ? ones : zeros).push_back(v);
      const int reserve =
          spec.disjoint ? (spec.num_equations - k - 1) * spec.support_min : 0;
      const int room = static_cast<int>(pool.size()) - reserve;
      int size_lo = spec.support_min;
      int size_hi = std::min(spec.support_max, room);
      if (spec.ones_per_equation) {
        const int o = *spec.ones_per_equation;
        size_lo = std::max(size_lo, o);
        size_hi = std::min(size_hi, o + static_cast<int>(zeros.size()));
        if (o > static_cast<int>(ones.size())) size_hi = size_lo - 1;
      } else {
        size_hi = std::min(size_hi, static_cast<int>(zeros.size() + ones.size()));
        if (ones.empty()) size_hi = size_lo - 1;
      }
      if (size_lo > size_hi) {
        ok = false;
        break;
      }
      const int size = static_cast<int>(Uniform(rng, size_lo, size_hi));
      int num_ones;
      if (spec.ones_per_equation) {
        num_ones = *spec.ones_per_equation;
      } else {
        const int lo = std::max(1, size - static_cast<int>(zeros.size()));
        const int hi = std::min(size, static_cast<int>(ones.size()));
        num_ones = static_cast<int>(Uniform(rng, lo, hi));
      }
      PartialShuffle(rng, ones, num_ones);
      PartialShuffle(rng, zeros, size - num_ones);
      std::vector<int> support(ones.begin(), ones.begin() + num_ones);
      support.insert(support.end(), zeros.begin(),
                     zeros.begin() + (size - num_ones));
      std::sort(support.begin(), support.end());
      if (spec.disjoint) {
        std::erase_if(pool, [&](int v) {
          return std::binary_search(support.begin(), support.end(), v);
        });
      }
      supports.push_back(std::move(support));
    }
    if (!ok) continue;

    Instance inst;
    inst.n = spec.n;
    std::set<VarId> covered;
    for (int k = 0; k < spec.num_equations; ++k) {
      LinearEquation eq;
      eq.id = k + 1;
      eq.rhs = 0;
      for (int v : supports[k]) {
        const int64_t num = Uniform(rng, spec.coeff_min, spec.coeff_max);
        const int64_t den = Uniform(rng, 1, spec.max_denominator);
        Rational a(num, den);
        a.canonicalize();
        if (planted[v]) eq.rhs += a;
        eq.coeffs[VarId(v)] = a;
        covered.insert(VarId(v));
      }
      inst.equations.push_back(std::move(eq));
    }

    std::vector<Pair> candidates;
    for (VarId a : covered) {
      for (VarId b : covered) {
        if (a < b || (spec.allow_squares && a == b)) candidates.emplace_back(a, b);
      }
    }
    if (spec.num_products > static_cast<int>(candidates.size())) {
      throw inconsistent("more products requested than coverable pairs");
    }
    PartialShuffle(rng, candidates, spec.num_products);
    inst.products.insert(candidates.begin(),
                         candidates.begin() + spec.num_products);

    for (int i = 1; i <= spec.n; ++i) {
      const Rational c(Uniform(rng, spec.objective_min, spec.objective_max));
      if (c != 0) inst.linear_objective[VarId(i)] = c;
    }
    for (const Pair& p : inst.products) {
      const Rational d(Uniform(rng, spec.objective_min, spec.objective_max));
      if (d != 0) inst.quadratic_objective[p] = d;
    }

    const std::vector<Pair> product_list(inst.products.begin(),
                                         inst.products.end());
    for (int s = 0; s < spec.num_sides; ++s) {
      SideConstraint side;
      Rational lhs = 0;
      for (int t = 0; t < 2; ++t) {
        const VarId v(static_cast<int>(Uniform(rng, 1, spec.n)));
        const Rational c(Uniform(rng, -3, 3));
        if (c == 0) continue;
        side.x_coeffs[v] += c;
      }
      if (!product_list.empty()) {
        const Pair& p = product_list[Uniform(
            rng, 0, static_cast<int64_t>(product_list.size()) - 1)];
        const Rational c(Uniform(rng, -3, 3));
        if (c != 0) side.y_coeffs[p] = c;
      }
      std::erase_if(side.x_coeffs, [](const auto& e) { return e.second == 0; });
      for (const auto& [v, c] : side.x_coeffs) {
        if (planted[v.index]) lhs += c;
      }
      for (const auto& [p, c] : side.y_coeffs) {
        if (planted[p.i.index] && planted[p.j.index]) lhs += c;
      }
      side.rhs = lhs - Uniform(rng, 0, 2);
      inst.sides.push_back(std::move(side));
    }
    return inst;
  }
  throw inconsistent("no planted point compatible with the support sizes");
}

}  // namespace compactlin
