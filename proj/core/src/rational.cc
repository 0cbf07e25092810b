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

#include "compactlin/rational.h"

#include <algorithm>
#include <cctype>
#include <string>

#include "compactlin/error.h"

namespace compactlin {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

bool ParseRational(std::string_view text, Rational* out) {
  if (text.empty()) return false;
  bool negative = false;
  if (text.front() == '+' || text.front() == '-') {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  Rational value;
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const std::string_view num = text.substr(0, slash);
    const std::string_view den = text.substr(slash + 1);
    if (!AllDigits(num) || !AllDigits(den)) return false;
    mpz_class d(std::string(den), 10);
    if (d == 0) return false;
    value = Rational(mpz_class(std::string(num), 10), d);
    value.canonicalize();
  } else if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view whole = text.substr(0, dot);
    const std::string_view frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return false;
    if (!whole.empty() && !AllDigits(whole)) return false;
    if (!frac.empty() && !AllDigits(frac)) return false;
    const std::string digits = std::string(whole) + std::string(frac);
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, frac.size());
    value = Rational(mpz_class(digits.empty() ? "0" : digits, 10), scale);
    value.canonicalize();
  } else {
    if (!AllDigits(text)) return false;
    value = Rational(mpz_class(std::string(text), 10));
  }
  *out = negative ? Rational(-value) : value;
  return true;
}

std::string ToString(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_str();
}

bool ToExactDecimal(const Rational& value, std::string* out) {
  mpz_class den = value.get_den();
  int twos = 0;
  int fives = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), 2)) {
    den /= 2;
    ++twos;
  }
  while (mpz_divisible_ui_p(den.get_mpz_t(), 5)) {
    den /= 5;
    ++fives;
  }
  if (den != 1) return false;
  const int digits = std::max(twos, fives);
  if (digits == 0) {
    *out = value.get_num().get_str();
    return true;
  }
  mpz_class scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, digits);
  const mpz_class scaled = value.get_num() * scale / value.get_den();
  mpz_class magnitude = abs(scaled);
  std::string s = magnitude.get_str();
  if (static_cast<int>(s.size()) <= digits) {
    s.insert(0, digits + 1 - s.size(), '0');
  }
  s.insert(s.size() - digits, ".");
  while (s.back() == '0') s.pop_back();
  if (s.back() == '.') s.pop_back();
  *out = (scaled < 0 ? "-" : "") + s;
  return true;
}

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSizeExceeded:
      return "size-exceeded";
    case ErrorCode::kSupportsNotDisjoint:
      return "supports-not-disjoint";
    case ErrorCode::kPlanInvalid:
      return "plan-invalid";
    case ErrorCode::kSquarePairRejected:
      return "square-pair-rejected";
    case ErrorCode::kNodeBudgetExceeded:
      return "node-budget-exceeded";
    case ErrorCode::kRegimeMismatch:
      return "regime-mismatch";
    case ErrorCode::kInconsistentSpec:
      return "inconsistent-spec";
    case ErrorCode::kSyntaxError:
      return "syntax-error";
    case ErrorCode::kValidationError:
      return "validation-error";
    case ErrorCode::kInfeasibleSelection:
      return "infeasible-selection";
    case ErrorCode::kInternal:
      return "internal-error";
  }
  return "unknown";
}

}  // namespace compactlin
