// Copyright 2026 The omlprob Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace oml {

/// Exact rational scalar used by the state and polytope code.
using Rational = mpq_class;

/// Parses "p/q" or "p". Throws Error(Parse) on malformed input or a zero
/// denominator; the result is canonicalized.
Rational parse_rational(std::string_view text);

/// Always "p/q", including q = 1.
std::string format_rational(const Rational& value);

/// Nearest rational with denominator 10^digits.
Rational round_to_decimal(double value, int digits);

}  // namespace oml
