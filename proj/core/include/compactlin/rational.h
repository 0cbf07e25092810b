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

#ifndef COMPACTLIN_RATIONAL_H_
#define COMPACTLIN_RATIONAL_H_

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace compactlin {

// Exact arbitrary-precision rational. mpq_class keeps values canonical
// (reduced, positive denominator) after every arithmetic operation.
using Rational = mpq_class;

// Parses "12", "-3/4", "0.125", "+2.5". Decimal literals are converted
// exactly. Returns false on malformed input or a zero denominator.
bool ParseRational(std::string_view text, Rational* out);

// "p/q" or "p" when the denominator is one.
std::string ToString(const Rational& value);

// Exact decimal rendering when the denominator has only factors 2 and 5,
// e.g. 1/8 -> "0.125". Returns false otherwise.
bool ToExactDecimal(const Rational& value, std::string* out);

inline bool IsIntegral(const Rational& value) {
  return value.get_den() == 1;
}

}  // namespace compactlin

#endif  // COMPACTLIN_RATIONAL_H_
