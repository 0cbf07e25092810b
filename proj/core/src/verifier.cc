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

#include "compactlin/verifier.h"

#include <algorithm>
#include <memory>
#include <sstream>

#include "compactlin/error.h"
#include "compactlin/linearizer.h"
#include "compactlin/lp.h"
#include "compactlin/zoo.h"

namespace compactlin {
namespace {

constexpr McCormickKind kKinds[] = {McCormickKind::kUpperI,
                                    McCormickKind::kUpperJ,
                                    McCormickKind::kLower};

void RequireValidPlan(const Instance& inst, const CoveragePlan& plan) {
  const ConditionCheck check = CheckConditions(inst, plan);
  if (!check.ok) throw Error(ErrorCode::kPlanInvalid, check.failure);
}

bool Exceeds(const std::optional<Rational>& value, const Rational& other) {
  return value && *value > other;
}

bool AllNonPositive(const ViolationMap& maxima) {
  for (const auto& [key, value] : maxima) {
    if (Exceeds(value, 0)) return false;
  }
  return true;
}

std::string FormatMax(const std::optional<Rational>& value) {
  return value ? ToString(*value) : "-inf";
}

void FormatMaxima(const ViolationMap& maxima, std::ostringstream& out) {
  for (const auto& [key, value] : maxima) {
    out << "  " << ToString(key.first) << " " << McCormickKindName(key.second)
        << " max " << FormatMax(value) << "\n";
  }
}

bool UnitCoefficients(const Instance& inst) {
  for (const LinearEquation& eq : inst.equations) {
    for (const auto& [v, a] : eq.coeffs) {
      if (a != 1) return false;
    }
  }
  return true;
}

bool AllRhs(const Instance& inst, int value) {
  for (const LinearEquation& eq : inst.equations) {
    if (eq.rhs != value) return false;
  }
  return true;
}

bool MultipliersEqualSupports(const Instance& inst, const CoveragePlan& plan) {
  for (const LinearEquation& eq : inst.equations) {
    const auto it = plan.multipliers.find(eq.id);
    const std::set<VarId> empty;
    if ((it == plan.multipliers.end() ? empty : it->second) != eq.Support()) {
      return false;
    }
  }
  return true;
}

// Coefficients keyed by variable name, scaled so the first one is 1.
using CanonicalRow = std::map<std::string, Rational>;

CanonicalRow Normalize(CanonicalRow row) {
  std::erase_if(row, [](const auto& e) { return e.second == 0; });
  if (row.empty()) return row;
  const Rational scale = row.begin()->second;
  for (auto& [name, coeff] : row) coeff /= scale;
  return row;
}

std::string XName(VarId v) { return "x" + std::to_string(v.index); }

std::string YName(VarId a, VarId b) {
  const Pair p = Pair::Of(a, b);
  return "y" + std::to_string(p.i.index) + "_" + std::to_string(p.j.index);
}

// Fischer-Helmberg rows: for each edge {j,k} and endpoint j,
//   sum_{i not in {j,k}} y_{ij,jk} = x_jk.
std::set<CanonicalRow> FischerHelmbergRows(int vertices) {
  std::set<CanonicalRow> rows;
  for (int j = 1; j <= vertices; ++j) {
    for (int k = 1; k <= vertices; ++k) {
      if (k == j) continue;
      const VarId jk = QtspEdgeVar(vertices, j, k);
      CanonicalRow row;
      for (int i = 1; i <= vertices; ++i) {
        if (i == j || i == k) continue;
        row[YName(QtspEdgeVar(vertices, i, j), jk)] += 1;
      }
      row[XName(jk)] -= 1;
      rows.insert(Normalize(std::move(row)));
    }
  }
  return rows;
}

// Frieze-Yadegar equations with y_{ij,kl} = y_{kl,ij} and y_{ij,ij} = x_ij:
//   sum_i y_{ij,kl} = x_kl,  sum_j y_{ij,kl} = x_kl,
//   sum_k y_{ij,kl} = x_ij,  sum_l y_{ij,kl} = x_ij.
std::set<CanonicalRow> FriezeYadegarRows(int n) {
  std::set<CanonicalRow> rows;
  auto x = [n](int facility, int location) { return QapVar(n, facility, location); };
  auto add_product = [&](CanonicalRow& row, VarId a, VarId b) {
    if (a == b) {
      row[XName(a)] += 1;
    } else {
      row[YName(a, b)] += 1;
    }
  };
  for (int a = 1; a <= n; ++a) {
    for (int k = 1; k <= n; ++k) {
      for (int l = 1; l <= n; ++l) {
        CanonicalRow over_facilities;  // location a fixed
        CanonicalRow over_locations;   // facility a fixed
        for (int i = 1; i <= n; ++i) add_product(over_facilities, x(i, a), x(k, l));
        for (int j = 1; j <= n; ++j) add_product(over_locations, x(a, j), x(k, l));
        over_facilities[XName(x(k, l))] -= 1;
        over_locations[XName(x(k, l))] -= 1;
        CanonicalRow mirrored_f;
        CanonicalRow mirrored_l;
        for (int i = 1; i <= n; ++i) add_product(mirrored_f, x(k, l), x(i, a));
        for (int j = 1; j <= n; ++j) add_product(mirrored_l, x(k, l), x(a, j));
        mirrored_f[XName(x(k, l))] -= 1;
        mirrored_l[XName(x(k, l))] -= 1;
        for (CanonicalRow* row :
             {&over_facilities, &over_locations, &mirrored_f, &mirrored_l}) {
          CanonicalRow normalized = Normalize(std::move(*row));
          if (!normalized.empty()) rows.insert(std::move(normalized));
        }
      }
    }
  }
  return rows;
}

}  // namespace

const char* McCormickKindName(McCormickKind kind) {
  switch (kind) {
    case McCormickKind::kUpperI:
      return "upper-i";
    case McCormickKind::kUpperJ:
      return "upper-j";
    case McCormickKind::kLower:
      return "lower";
  }
  return "unknown";
}

const char* RegimeName(Regime regime) {
  switch (regime) {
    case Regime::kAssignment:
      return "assignment";
    case Regime::kDegreeTwo:
      return "degree-two";
    case Regime::kGeneral:
      return "general";
  }
  return "unknown";
}

LinearExpr McCormickViolation(const LinModel& model, const Pair& pair,
                              McCormickKind kind) {
  const auto y = model.FindY(pair);
  const auto xi = model.FindX(pair.i);
  const auto xj = model.FindX(pair.j);
  if (!y || !xi || !xj) {
    throw Error(ErrorCode::kInternal,
                "model lacks the variables of " + ToString(pair));
  }
  LinearExpr expr;
  switch (kind) {
    case McCormickKind::kUpperI:
      expr.Add(*y, 1);
      expr.Add(*xi, -1);
      break;
    case McCormickKind::kUpperJ:
      expr.Add(*y, 1);
      expr.Add(*xj, -1);
      break;
    case McCormickKind::kLower:
      expr.Add(*xi, 1);
      expr.Add(*xj, 1);
      expr.Add(*y, -1);
      expr.constant = -1;
      break;
  }
  expr.Canonicalize();
  return expr;
}

ConsistencyReport VerifyTheorem1(const Instance& inst, const CoveragePlan& plan,
                                 int cap) {
  RequireValidPlan(inst, plan);
  const std::vector<BinaryPoint> points = BruteForceFeasible(inst, cap);
  const auto shared =
      std::make_shared<const LinModel>(Relax(CompactLinearize(inst, plan)));
  const LinModel& relaxed = *shared;

  ConsistencyReport report;
  report.num_points = static_cast<int>(points.size());
  std::vector<std::pair<ViolationKey, LinearExpr>> checks;
  for (const Pair& p : plan.pairs) {
    if (p.IsSquare()) continue;
    for (McCormickKind kind : kKinds) {
      report.per_pair_max[{p, kind}] = std::nullopt;
      checks.emplace_back(ViolationKey{p, kind},
                          McCormickViolation(relaxed, p, kind));
    }
  }

  // With x fixed only the product part of a violation needs an LP, and
  // several violations share it.
  std::vector<LinearExpr> free_parts;
  std::vector<int> free_part_of(checks.size());
  for (std::size_t c = 0; c < checks.size(); ++c) {
    LinearExpr part;
    for (const Term& t : checks[c].second.terms) {
      if (relaxed.vars()[t.var].kind != VarKind::kOriginal) {
        part.Add(t.var, t.coeff);
      }
    }
    part.Canonicalize();
    auto it = std::find(free_parts.begin(), free_parts.end(), part);
    free_part_of[c] = static_cast<int>(it - free_parts.begin());
    if (it == free_parts.end()) free_parts.push_back(std::move(part));
  }

  std::vector<Rational> lower, upper;
  for (const LinVar& v : relaxed.vars()) {
    lower.push_back(v.lower);
    upper.push_back(v.upper);
  }
  std::vector<Rational> free_max(free_parts.size());
  for (const BinaryPoint& x : points) {
    std::vector<Rational> product_point(relaxed.num_vars());
    for (int v = 0; v < relaxed.num_vars(); ++v) {
      const LinVar& var = relaxed.vars()[v];
      if (var.kind == VarKind::kOriginal) {
        lower[v] = upper[v] = x[var.id.index - 1];
        product_point[v] = x[var.id.index - 1];
      } else if (var.kind == VarKind::kProduct) {
        product_point[v] = x[var.pair.i.index - 1] * x[var.pair.j.index - 1];
      }
    }
    if (!relaxed.IsFeasible(product_point)) ++report.extension_failures;

    Polytope polytope(shared, lower, upper);
    if (!polytope.feasible()) continue;
    for (std::size_t f = 0; f < free_parts.size(); ++f) {
      const LpSolution solution =
          polytope.Maximize(free_parts[f], /*keep_values=*/false);
      if (solution.status != SolveStatus::kOptimal) {
        throw Error(ErrorCode::kInternal, "violation LP is unbounded");
      }
      free_max[f] = solution.objective;
    }
    for (std::size_t c = 0; c < checks.size(); ++c) {
      const auto& [key, expr] = checks[c];
      Rational value = free_max[free_part_of[c]] + expr.constant;
      for (const Term& t : expr.terms) {
        if (relaxed.vars()[t.var].kind == VarKind::kOriginal) {
          value += t.coeff * lower[t.var];
        }
      }
      std::optional<Rational>& best = report.per_pair_max[key];
      if (!best || value > *best) best = value;
    }
  }
  report.pass = AllNonPositive(report.per_pair_max);
  return report;
}

Regime DetectRegime(const Instance& inst, const CoveragePlan& plan) {
  if (!UnitCoefficients(inst)) return Regime::kGeneral;
  if (AllRhs(inst, 1)) return Regime::kAssignment;
  if (AllRhs(inst, 2) && MultipliersEqualSupports(inst, plan)) {
    return Regime::kDegreeTwo;
  }
  return Regime::kGeneral;
}

bool WitnessIsSound(const LinModel& relaxed_compact, const Witness& witness) {
  if (witness.violation <= 0) return false;
  if (!relaxed_compact.IsFeasible(witness.point)) return false;
  const LinearExpr expr =
      McCormickViolation(relaxed_compact, witness.pair, witness.kind);
  return LinModel::Evaluate(expr, witness.point) == witness.violation;
}

DominanceReport VerifyDominance(const Instance& inst, const CoveragePlan& plan,
                                Regime regime) {
  if (regime == Regime::kAssignment &&
      !(UnitCoefficients(inst) && AllRhs(inst, 1))) {
    throw Error(ErrorCode::kRegimeMismatch,
                "assignment regime needs unit coefficients and b = 1");
  }
  if (regime == Regime::kDegreeTwo &&
      !(UnitCoefficients(inst) && AllRhs(inst, 2) &&
        MultipliersEqualSupports(inst, plan))) {
    throw Error(ErrorCode::kRegimeMismatch,
                "degree-two regime needs unit coefficients, b = 2 and B_k = A_k");
  }
  RequireValidPlan(inst, plan);
  const LinModel relaxed = Relax(CompactLinearize(inst, plan));
  DominanceReport report;
  report.regime = regime;
  Polytope polytope(relaxed);
  for (const Pair& p : plan.pairs) {
    if (p.IsSquare()) continue;
    for (McCormickKind kind : kKinds) {
      std::optional<Rational>& best = report.per_pair_max[{p, kind}];
      if (!polytope.feasible()) continue;
      const LinearExpr expr = McCormickViolation(relaxed, p, kind);
      LpSolution solution = polytope.Maximize(expr);
      if (solution.status != SolveStatus::kOptimal) {
        throw Error(ErrorCode::kInternal, "violation LP is unbounded");
      }
      best = solution.objective;
      if (solution.objective > 0) {
        Witness witness{p, kind, solution.objective, std::move(solution.values)};
        witness.sound = WitnessIsSound(relaxed, witness);
        report.witnesses_sound = report.witnesses_sound && witness.sound;
        report.witnesses.push_back(std::move(witness));
      }
    }
  }
  report.pass = AllNonPositive(report.per_pair_max);
  return report;
}

BoundComparison CompareBounds(const Instance& inst, const CoveragePlan& plan) {
  RequireValidPlan(inst, plan);
  const LinModel compact = Relax(CompactLinearize(inst, plan));
  const LinModel standard = Relax(StandardLinearize(inst, NonSquareProducts(inst)));
  const LpSolution compact_lp = SolveLp(compact);
  const LpSolution standard_lp = SolveLp(standard);

  BoundComparison result;
  result.compact_status = compact_lp.status;
  result.standard_status = standard_lp.status;
  result.regime = DetectRegime(inst, plan);
  result.dominance_expected = result.regime != Regime::kGeneral;
  const bool compact_ok = compact_lp.status == SolveStatus::kOptimal;
  const bool standard_ok = standard_lp.status == SolveStatus::kOptimal;
  if (compact_ok) result.compact_bound = compact_lp.objective;
  if (standard_ok) result.standard_bound = standard_lp.objective;
  if (compact_ok && standard_ok) {
    result.delta = result.compact_bound - result.standard_bound;
    result.dominance_holds = result.delta >= 0;
  } else {
    // An empty compact relaxation is the tightest possible bound; the
    // reverse cannot happen when the compact polytope projects into the
    // standard one.
    result.dominance_holds = !compact_ok || standard_lp.status != SolveStatus::kInfeasible;
  }
  if (!result.dominance_expected) result.dominance_holds = true;
  return result;
}

StructuralMatch CheckStructuralMatch(ReferenceFamily family, int size) {
  Instance inst;
  CoveragePlan plan;
  std::set<CanonicalRow> reference;
  if (family == ReferenceFamily::kQtsp) {
    inst = GenQtsp(QtspSpec::Random(size, /*seed=*/1));
    plan = SupportPlan(inst);
    reference = FischerHelmbergRows(size);
  } else {
    inst = GenQap(QapSpec::Random(size, /*seed=*/1));
    plan = FullPlan(inst);
    reference = FriezeYadegarRows(size);
  }
  const LinModel model = CompactLinearize(inst, plan);
  std::set<CanonicalRow> compact;
  StructuralMatch result;
  for (const LinConstraint& c : model.constraints()) {
    if (c.provenance.kind != Provenance::Kind::kCompactEquation) continue;
    ++result.compact_rows;
    CanonicalRow row;
    for (const Term& t : c.coeffs) row[model.vars()[t.var].name] += t.coeff;
    compact.insert(Normalize(std::move(row)));
  }
  result.reference_rows = static_cast<int>(reference.size());
  result.product_vars = static_cast<int>(ComputeStats(inst, plan).num_vars);
  result.standard_inequalities =
      static_cast<int>(ComputeStats(inst, plan).standard_ineq_count);
  result.match = compact == reference;
  return result;
}

std::string FormatReport(const ConsistencyReport& report) {
  std::ostringstream out;
  out << "theorem-1 consistency: " << (report.pass ? "PASS" : "FAIL") << "\n";
  if (!report.instance_id.empty()) out << "instance " << report.instance_id << "\n";
  out << "feasible-points " << report.num_points << "\n";
  out << "extension-failures " << report.extension_failures << "\n";
  FormatMaxima(report.per_pair_max, out);
  return out.str();
}

std::string FormatReport(const DominanceReport& report) {
  std::ostringstream out;
  out << "dominance (" << RegimeName(report.regime)
      << "): " << (report.pass ? "PASS" : "VIOLATED") << "\n";
  FormatMaxima(report.per_pair_max, out);
  for (const Witness& w : report.witnesses) {
    out << "witness " << ToString(w.pair) << " " << McCormickKindName(w.kind)
        << " violation " << ToString(w.violation)
        << (w.sound ? " (re-verified)" : " (NOT re-verified)") << "\n";
    out << "  point";
    for (const Rational& v : w.point) out << " " << ToString(v);
    out << "\n";
  }
  return out.str();
}

std::string FormatReport(const BoundComparison& c) {
  std::ostringstream out;
  auto bound = [](SolveStatus status, const Rational& value) {
    return status == SolveStatus::kOptimal ? ToString(value)
                                           : std::string(SolveStatusName(status));
  };
  out << "regime " << RegimeName(c.regime) << "\n";
  out << "lp-bound-compact " << bound(c.compact_status, c.compact_bound) << "\n";
  out << "lp-bound-standard " << bound(c.standard_status, c.standard_bound)
      << "\n";
  out << "delta " << ToString(c.delta) << "\n";
  if (c.dominance_expected) {
    out << "dominance " << (c.dominance_holds ? "holds" : "VIOLATED") << "\n";
  }
  return out.str();
}

}  // namespace compactlin
