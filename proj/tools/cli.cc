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

#include "cli.h"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "compactlin/coverage.h"
#include "compactlin/error.h"
#include "compactlin/io.h"
#include "compactlin/linearizer.h"
#include "compactlin/lp.h"
#include "compactlin/verifier.h"
#include "compactlin/zoo.h"

namespace compactlin {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailed = 1;
constexpr int kExitUsage = 2;

Instance LoadInstance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kSyntaxError, "cannot open " + path);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return ParseInstance(buffer.str());
}

void WriteOutput(const std::string& path, const std::string& text,
                 std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::kSyntaxError, "cannot write " + path);
  file << text;
}

SelectionWeights ParseWeights(const Instance& inst, const std::string& text) {
  if (text.empty()) return SelectionWeights::Default(inst);
  const auto comma = text.find(',');
  SelectionWeights weights;
  if (comma == std::string::npos ||
      !ParseRational(text.substr(0, comma), &weights.eqn) ||
      !ParseRational(text.substr(comma + 1), &weights.var) ||
      weights.eqn < 0 || weights.var < 0) {
    throw CLI::ValidationError("--weights", "expected E,V with E, V >= 0");
  }
  return weights;
}

CoveragePlan ChoosePlan(const Instance& inst, const std::string& method,
                        const std::string& weights) {
  const bool fixpoint =
      method == "fixpoint" || (method == "auto" && inst.HasDisjointSupports());
  if (fixpoint && weights.empty()) return ClosureDisjoint(inst);
  return SolveSelection(inst, ParseWeights(inst, weights)).plan;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Compact linearization of binary quadratic programs with "
               "linear equations"};
  app.require_subcommand(1);

  std::string file, method = "auto", weights, out_path, regime;
  int theorem = 1;

  auto* plan_cmd = app.add_subcommand("plan", "Compute multiplier sets B_k and Q");
  plan_cmd->add_option("file", file, "Instance file")->required();
  plan_cmd->add_option("--weights", weights, "Selection weights E,V");
  plan_cmd->add_option("--method", method, "auto | fixpoint | milp")
      ->check(CLI::IsMember({"auto", "fixpoint", "milp"}));

  std::string lin_method;
  auto* lin_cmd = app.add_subcommand("linearize", "Export a linearized model");
  lin_cmd->add_option("file", file, "Instance file")->required();
  lin_cmd->add_option("--method", lin_method, "compact | standard")
      ->required()
      ->check(CLI::IsMember({"compact", "standard"}));
  lin_cmd->add_option("--out", out_path, "LP file ('-' for stdout)");
  lin_cmd->add_option("--weights", weights, "Selection weights E,V");

  auto* compare_cmd = app.add_subcommand("compare", "Compare LP relaxation bounds");
  compare_cmd->add_option("file", file, "Instance file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Check a consistency or dominance theorem");
  verify_cmd->add_option("file", file, "Instance file")->required();
  verify_cmd->add_option("--theorem", theorem, "1 | 2 | 3")
      ->check(CLI::IsMember({1, 2, 3}));
  verify_cmd->add_option("--regime", regime, "assignment | degree-two | general")
      ->check(CLI::IsMember({"assignment", "degree-two", "general"}));

  std::string solve_method = "compact";
  auto* solve_cmd = app.add_subcommand("solve", "Solve the linearized MILP exactly");
  solve_cmd->add_option("file", file, "Instance file")->required();
  solve_cmd->add_option("--method", solve_method, "compact | standard")
      ->check(CLI::IsMember({"compact", "standard"}));

  auto* gen_cmd = app.add_subcommand("gen", "Generate an instance");
  gen_cmd->require_subcommand(1);
  uint64_t seed = 1;
  int size = 3;
  bool no_subtours = false;
  RandomSpec rspec;
  int ones = 0;
  auto* gen_qap = gen_cmd->add_subcommand("qap", "Koopmans-Beckmann QAP");
  gen_qap->add_option("--n", size, "Facilities")->check(CLI::Range(2, 4));
  gen_qap->add_option("--seed", seed, "Random seed");
  gen_qap->add_option("--out", out_path, "Output file");
  auto* gen_qtsp = gen_cmd->add_subcommand("qtsp", "Symmetric quadratic TSP");
  gen_qtsp->add_option("--v", size, "Vertices")->check(CLI::Range(4, 8));
  gen_qtsp->add_option("--seed", seed, "Random seed");
  gen_qtsp->add_flag("--no-subtours", no_subtours, "Omit subtour constraints");
  gen_qtsp->add_option("--out", out_path, "Output file");
  auto* gen_random = gen_cmd->add_subcommand("random", "Random instance with a planted point");
  gen_random->add_option("--n", rspec.n, "Variables");
  gen_random->add_option("--equations", rspec.num_equations, "Equations");
  gen_random->add_option("--support-min", rspec.support_min);
  gen_random->add_option("--support-max", rspec.support_max);
  gen_random->add_option("--coeff-min", rspec.coeff_min);
  gen_random->add_option("--coeff-max", rspec.coeff_max);
  gen_random->add_option("--max-den", rspec.max_denominator, "Largest coefficient denominator");
  gen_random->add_option("--ones", ones, "Ones per equation at the planted point");
  gen_random->add_option("--products", rspec.num_products, "Number of products");
  gen_random->add_flag("--disjoint", rspec.disjoint, "Pairwise disjoint supports");
  gen_random->add_flag("--squares", rspec.allow_squares, "Allow square products");
  gen_random->add_option("--sides", rspec.num_sides, "Side constraints");
  gen_random->add_option("--seed", seed, "Random seed");
  gen_random->add_option("--out", out_path, "Output file");

  std::string family;
  auto* match_cmd = app.add_subcommand("match", "Compare with a reference linearization");
  match_cmd->add_option("family", family, "qap | qtsp")
      ->required()
      ->check(CLI::IsMember({"qap", "qtsp"}));
  match_cmd->add_option("--size", size, "n (QAP) or |V| (QTSP)")->required();

  std::vector<std::string> argv_rev(args.rbegin(), args.rend());
  try {
    app.parse(argv_rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (plan_cmd->parsed()) {
      const Instance inst = LoadInstance(file);
      const CoveragePlan plan = ChoosePlan(inst, method, weights);
      out << FormatPlan(plan, ComputeStats(inst, plan));
      return kExitOk;
    }
    if (lin_cmd->parsed()) {
      const Instance inst = LoadInstance(file);
      const LinModel model =
          lin_method == "compact"
              ? CompactLinearize(inst, ChoosePlan(inst, "auto", weights))
              : StandardLinearize(inst, NonSquareProducts(inst));
      WriteOutput(out_path, ExportLp(model), out);
      return kExitOk;
    }
    if (compare_cmd->parsed()) {
      const Instance inst = LoadInstance(file);
      const BoundComparison comparison =
          CompareBounds(inst, ChoosePlan(inst, "auto", ""));
      out << FormatReport(comparison);
      return comparison.dominance_holds ? kExitOk : kExitFailed;
    }
    if (verify_cmd->parsed()) {
      const Instance inst = LoadInstance(file);
      if (theorem == 1) {
        const CoveragePlan plan = ChoosePlan(inst, "auto", "");
        ConsistencyReport report = VerifyTheorem1(inst, plan);
        report.instance_id = file;
        out << FormatReport(report);
        bool ok = report.pass && report.extension_failures == 0;
        if (!regime.empty()) {
          const Regime r = regime == "general"      ? Regime::kGeneral
                           : regime == "assignment" ? Regime::kAssignment
                                                    : Regime::kDegreeTwo;
          const DominanceReport probe = VerifyDominance(inst, plan, r);
          out << FormatReport(probe);
          ok = ok && probe.witnesses_sound &&
               (r == Regime::kGeneral || probe.pass);
        }
        return ok ? kExitOk : kExitFailed;
      }
      Regime r = theorem == 2 ? Regime::kAssignment : Regime::kDegreeTwo;
      if (regime == "general") r = Regime::kGeneral;
      const CoveragePlan plan = theorem == 3 ? SupportPlan(inst)
                                             : ChoosePlan(inst, "auto", "");
      const DominanceReport report = VerifyDominance(inst, plan, r);
      out << FormatReport(report);
      if (!report.witnesses_sound) return kExitFailed;
      return (report.pass || r == Regime::kGeneral) ? kExitOk : kExitFailed;
    }
    if (solve_cmd->parsed()) {
      const Instance inst = LoadInstance(file);
      const LinModel model =
          solve_method == "compact"
              ? CompactLinearize(inst, ChoosePlan(inst, "auto", ""))
              : StandardLinearize(inst, NonSquareProducts(inst));
      const MipSolution solution = SolveMilp(model);
      out << "status " << SolveStatusName(solution.status) << "\n";
      if (solution.status == SolveStatus::kOptimal) {
        out << "objective " << ToString(solution.objective) << "\n";
        out << "x";
        for (int i = 1; i <= inst.n; ++i) {
          out << " " << ToString(solution.values[*model.FindX(VarId(i))]);
        }
        out << "\n";
      }
      out << "nodes " << solution.node_count << "\n";
      return kExitOk;
    }
    if (gen_qap->parsed()) {
      WriteOutput(out_path, SerializeInstance(GenQap(QapSpec::Random(size, seed))), out);
      return kExitOk;
    }
    if (gen_qtsp->parsed()) {
      WriteOutput(out_path,
                  SerializeInstance(GenQtsp(QtspSpec::Random(size, seed, !no_subtours))),
                  out);
      return kExitOk;
    }
    if (gen_random->parsed()) {
      rspec.seed = seed;
      if (ones > 0) rspec.ones_per_equation = ones;
      WriteOutput(out_path, SerializeInstance(GenRandom(rspec)), out);
      return kExitOk;
    }
    if (match_cmd->parsed()) {
      const StructuralMatch match = CheckStructuralMatch(
          family == "qap" ? ReferenceFamily::kQap : ReferenceFamily::kQtsp, size);
      out << "match " << (match.match ? "true" : "false") << "\n";
      out << "compact-rows " << match.compact_rows << "\n";
      out << "reference-rows " << match.reference_rows << "\n";
      out << "product-vars " << match.product_vars << "\n";
      out << "standard-inequalities " << match.standard_inequalities << "\n";
      return match.match ? kExitOk : kExitFailed;
    }
  } catch (const CLI::ValidationError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return e.code() == ErrorCode::kInternal ||
                   e.code() == ErrorCode::kInfeasibleSelection
               ? kExitFailed
               : kExitUsage;
  }
  return kExitUsage;
}

}  // namespace compactlin
