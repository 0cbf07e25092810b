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

#include "compactlin/io.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <tuple>

namespace compactlin {
namespace {

std::vector<std::string> Tokenize(std::string_view line) {
  std::vector<std::string> tokens;
  std::string current;
  for (char c : line) {
    if (c == '#') break;
    if (std::isspace(static_cast<unsigned char>(c))) {
      if (!current.empty()) tokens.push_back(std::move(current));
      current.clear();
    } else {
      current.push_back(c);
    }
  }
  if (!current.empty()) tokens.push_back(std::move(current));
  return tokens;
}

bool ParseInt(const std::string& token, int* out) {
  if (token.empty() || token.size() > 9) return false;
  for (char c : token) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  *out = std::stoi(token);
  return true;
}

// "x3" -> var 3; "y1_3" -> pair (1, 3) as written.
bool ParseTermName(const std::string& token, bool* is_product, VarId* var,
                   Pair* pair) {
  if (token.size() < 2) return false;
  if (token[0] == 'x') {
    int i;
    if (!ParseInt(token.substr(1), &i)) return false;
    *is_product = false;
    *var = VarId(i);
    return true;
  }
  if (token[0] == 'y') {
    const auto underscore = token.find('_');
    if (underscore == std::string::npos) return false;
    int i, j;
    if (!ParseInt(token.substr(1, underscore - 1), &i) ||
        !ParseInt(token.substr(underscore + 1), &j)) {
      return false;
    }
    *is_product = true;
    *pair = Pair(i, j);
    return true;
  }
  return false;
}

std::string ValidationSummary(const std::vector<Diagnostic>& diagnostics) {
  std::ostringstream out;
  for (std::size_t d = 0; d < diagnostics.size(); ++d) {
    if (d) out << "; ";
    if (diagnostics[d].line > 0) out << "line " << diagnostics[d].line << ": ";
    if (diagnostics[d].code != "syntax-error") out << diagnostics[d].code << ": ";
    out << diagnostics[d].message;
  }
  return out.str();
}

}  // namespace

ParseError::ParseError(ErrorCode code, std::vector<Diagnostic> diagnostics)
    : Error(code, ValidationSummary(diagnostics)),
      diagnostics_(std::move(diagnostics)) {}

Instance ParseInstance(std::string_view text) {
  Instance inst;
  std::vector<Diagnostic> errors;
  std::map<std::string, int> element_line;
  bool have_n = false;
  std::string section;
  int line_no = 0;

  auto error = [&](const std::string& message) {
    errors.push_back({line_no, "syntax-error", message});
  };
  auto rational = [&](const std::string& token, Rational* out) {
    if (ParseRational(token, out)) return true;
    error("malformed number '" + token + "'");
    return false;
  };
  auto index = [&](const std::string& token, int* out) {
    if (ParseInt(token, out)) return true;
    error("malformed index '" + token + "'");
    return false;
  };

  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t end = std::min(text.find('\n', pos), text.size());
    const std::string_view raw = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    const std::vector<std::string> tokens = Tokenize(raw);
    if (tokens.empty()) continue;
    const std::string& head = tokens[0];

    if (head.front() == '[') {
      if (tokens.size() != 1 || head.back() != ']') {
        error("malformed section header");
        continue;
      }
      section = head.substr(1, head.size() - 2);
      if (section != "linear" && section != "quadratic" && section != "pairs" &&
          section != "equations" && section != "sides") {
        error("unknown section [" + section + "]");
        section.clear();
      }
      continue;
    }
    if (section.empty()) {
      if (head == "n" && tokens.size() == 2) {
        if (have_n) {
          error("duplicate 'n' line");
        } else if (index(tokens[1], &inst.n)) {
          have_n = true;
        }
      } else {
        error("expected 'n <count>' or a section header");
      }
      continue;
    }
    if (section == "linear") {
      int i;
      Rational c;
      if (tokens.size() != 2) {
        error("expected '<var> <coef>'");
      } else if (index(tokens[0], &i) && rational(tokens[1], &c)) {
        if (!inst.linear_objective.emplace(VarId(i), c).second) {
          error("duplicate linear term for x" + tokens[0]);
        }
      }
    } else if (section == "quadratic") {
      int i, j;
      Rational d;
      if (tokens.size() != 3) {
        error("expected '<i> <j> <coef>'");
      } else if (index(tokens[0], &i) && index(tokens[1], &j) &&
                 rational(tokens[2], &d)) {
        if (!inst.quadratic_objective.emplace(Pair(i, j), d).second) {
          error("duplicate quadratic term");
        }
      }
    } else if (section == "pairs") {
      int i, j;
      if (tokens.size() != 2) {
        error("expected '<i> <j>'");
      } else if (index(tokens[0], &i) && index(tokens[1], &j)) {
        inst.products.insert(Pair(i, j));
      }
    } else if (section == "equations") {
      // <id> <var> <coef> ... = <rhs>
      LinearEquation eq;
      if (tokens.size() < 3 || tokens[tokens.size() - 2] != "=" ||
          tokens.size() % 2 != 1) {
        error("expected '<id> <var> <coef> ... = <rhs>'");
        continue;
      }
      bool ok = index(tokens[0], &eq.id) &&
                rational(tokens.back(), &eq.rhs);
      for (std::size_t t = 1; ok && t + 2 < tokens.size(); t += 2) {
        int v;
        Rational a;
        ok = index(tokens[t], &v) && rational(tokens[t + 1], &a);
        if (ok && !eq.coeffs.emplace(VarId(v), a).second) {
          error("x" + tokens[t] + " appears twice in one equation");
          ok = false;
        }
      }
      if (ok) {
        element_line["equation " + std::to_string(eq.id)] = line_no;
        inst.equations.push_back(std::move(eq));
      }
    } else if (section == "sides") {
      // <term> <coef> ... >= <rhs>
      SideConstraint side;
      if (tokens.size() < 2 || tokens[tokens.size() - 2] != ">=" ||
          tokens.size() % 2 != 0) {
        error("expected '<term> <coef> ... >= <rhs>'");
        continue;
      }
      bool ok = rational(tokens.back(), &side.rhs);
      for (std::size_t t = 0; ok && t + 2 < tokens.size(); t += 2) {
        bool is_product = false;
        VarId v;
        Pair p;
        Rational c;
        if (!ParseTermName(tokens[t], &is_product, &v, &p)) {
          error("malformed term '" + tokens[t] + "'");
          ok = false;
          break;
        }
        ok = rational(tokens[t + 1], &c);
        if (!ok) break;
        const bool fresh = is_product ? side.y_coeffs.emplace(p, c).second
                                      : side.x_coeffs.emplace(v, c).second;
        if (!fresh) {
          error("term '" + tokens[t] + "' appears twice in one side constraint");
          ok = false;
        }
      }
      if (ok) {
        element_line["side " + std::to_string(inst.sides.size())] = line_no;
        inst.sides.push_back(std::move(side));
      }
    }
  }
  if (!have_n) errors.push_back({0, "syntax-error", "missing 'n <count>'"});
  if (!errors.empty()) throw ParseError(ErrorCode::kSyntaxError, errors);

  const ValidationReport report = ValidateInstance(inst);
  if (!report.ok()) {
    std::vector<Diagnostic> diagnostics;
    for (const ValidationIssue& issue : report.issues) {
      const auto it = element_line.find(issue.element);
      diagnostics.push_back({it == element_line.end() ? 0 : it->second,
                             issue.code, issue.message});
    }
    throw ParseError(ErrorCode::kValidationError, std::move(diagnostics));
  }
  return inst;
}

std::string SerializeInstance(const Instance& inst) {
  std::ostringstream out;
  out << "# compactlin instance\n";
  out << "n " << inst.n << "\n";
  out << "\n[linear]\n";
  for (const auto& [v, c] : inst.linear_objective) {
    out << v.index << " " << ToString(c) << "\n";
  }
  out << "\n[quadratic]\n";
  for (const auto& [p, d] : inst.quadratic_objective) {
    out << p.i.index << " " << p.j.index << " " << ToString(d) << "\n";
  }
  out << "\n[pairs]\n";
  for (const Pair& p : inst.products) {
    out << p.i.index << " " << p.j.index << "\n";
  }
  out << "\n[equations]\n";
  for (const LinearEquation& eq : inst.equations) {
    out << eq.id;
    for (const auto& [v, a] : eq.coeffs) out << "  " << v.index << " " << ToString(a);
    out << "  = " << ToString(eq.rhs) << "\n";
  }
  out << "\n[sides]\n";
  for (const SideConstraint& side : inst.sides) {
    bool first = true;
    auto sep = [&]() -> const char* {
      const char* s = first ? "" : "  ";
      first = false;
      return s;
    };
    for (const auto& [v, c] : side.x_coeffs) {
      out << sep() << "x" << v.index << " " << ToString(c);
    }
    for (const auto& [p, c] : side.y_coeffs) {
      out << sep() << "y" << p.i.index << "_" << p.j.index << " " << ToString(c);
    }
    out << (first ? "" : "  ") << ">= " << ToString(side.rhs) << "\n";
  }
  return out.str();
}

namespace {

constexpr std::size_t kLpLineWidth = 100;

// Renders an integer-or-decimal coefficient row. `scale` multiplies every
// number; it is one unless some value is not an exact decimal.
struct RowText {
  mpz_class scale = 1;
  std::vector<std::pair<std::string, std::string>> terms;  // sign+coef, name
  std::string rhs;
};

mpz_class DenominatorLcm(const std::vector<Rational>& values) {
  mpz_class lcm = 1;
  for (const Rational& v : values) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), v.get_den_mpz_t());
  }
  return lcm;
}

std::string Number(const Rational& value) {
  std::string text;
  if (ToExactDecimal(value, &text)) return text;
  return ToString(value);  // not reached for scaled rows
}

RowText RenderRow(const std::vector<Term>& terms, const LinModel& model,
                  const std::optional<Rational>& rhs) {
  std::vector<Rational> values;
  for (const Term& t : terms) values.push_back(t.coeff);
  if (rhs) values.push_back(*rhs);
  std::string probe;
  bool decimal = true;
  for (const Rational& v : values) decimal = decimal && ToExactDecimal(v, &probe);
  RowText row;
  if (!decimal) row.scale = DenominatorLcm(values);
  const Rational factor(row.scale);
  for (const Term& t : terms) {
    const Rational c = t.coeff * factor;
    std::string coef;
    if (abs(c) != 1) coef = Number(abs(c)) + " ";
    row.terms.emplace_back((c < 0 ? "- " : "+ ") + coef,
                           model.vars()[t.var].name);
  }
  if (rhs) row.rhs = Number(*rhs * factor);
  return row;
}

void EmitTerms(const RowText& row, std::string line, std::ostringstream& out) {
  bool first = true;
  for (const auto& [coef, name] : row.terms) {
    std::string piece = coef + name;
    if (first && piece.rfind("+ ", 0) == 0) piece = piece.substr(2);
    if (line.size() + piece.size() + 1 > kLpLineWidth) {
      out << line << "\n";
      line = "   ";
    }
    line += " " + piece;
    first = false;
  }
  out << line;
}

}  // namespace

std::string ExportLp(const LinModel& model) {
  std::ostringstream out;
  out << "\\ compactlin LP export\n";
  out << "\\ " << model.num_vars() << " variables, "
      << model.constraints().size() << " constraints\n";

  out << "Minimize\n";
  const RowText objective = RenderRow(model.objective().terms, model, std::nullopt);
  if (objective.scale != 1) {
    out << "\\ objective scaled by " << objective.scale.get_str() << "\n";
  }
  EmitTerms(objective, " obj:", out);
  out << "\n";

  out << "Subject To\n";
  std::vector<const LinConstraint*> ordered;
  for (const LinConstraint& c : model.constraints()) ordered.push_back(&c);
  std::stable_sort(ordered.begin(), ordered.end(),
                   [](const LinConstraint* a, const LinConstraint* b) {
                     return a->provenance.Key() < b->provenance.Key();
                   });
  for (const LinConstraint* c : ordered) {
    const RowText row = RenderRow(c->coeffs, model, c->rhs);
    const std::string name = c->provenance.Name();
    if (row.scale != 1) {
      out << "\\ row " << name << " scaled by " << row.scale.get_str() << "\n";
    }
    const char* sense = c->sense == Sense::kEqual          ? "="
                        : c->sense == Sense::kGreaterEqual ? ">="
                                                           : "<=";
    std::ostringstream body;
    EmitTerms(row, " " + name + ":", body);
    out << body.str() << " " << sense << " " << row.rhs << "\n";
  }
  // Bounds that are not exact decimals become scaled rows.
  for (const LinVar& v : model.vars()) {
    std::string lo, hi;
    if (ToExactDecimal(v.lower, &lo) && ToExactDecimal(v.upper, &hi)) continue;
    for (const auto& [bound, sense, tag] :
         {std::tuple{v.lower, ">=", "lb_"}, std::tuple{v.upper, "<=", "ub_"}}) {
      const mpz_class den = bound.get_den();
      out << "\\ row " << tag << v.name << " scaled by " << den.get_str() << "\n";
      out << " " << tag << v.name << ": " << den.get_str() << " " << v.name << " "
          << sense << " " << bound.get_num().get_str() << "\n";
    }
  }

  out << "Bounds\n";
  for (const LinVar& v : model.vars()) {
    std::string lo, hi;
    if (ToExactDecimal(v.lower, &lo) && ToExactDecimal(v.upper, &hi)) {
      out << " " << lo << " <= " << v.name << " <= " << hi << "\n";
    } else {
      out << " " << v.name << " free\n";
    }
  }
  std::vector<std::string> binaries, generals;
  for (const LinVar& v : model.vars()) {
    if (!v.integral) continue;
    (v.lower == 0 && v.upper == 1 ? binaries : generals).push_back(v.name);
  }
  if (!binaries.empty()) {
    out << "Binary\n";
    for (const std::string& name : binaries) out << " " << name << "\n";
  }
  if (!generals.empty()) {
    out << "General\n";
    for (const std::string& name : generals) out << " " << name << "\n";
  }
  out << "End\n";
  return out.str();
}

}  // namespace compactlin
