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

#include "oml/rational.hpp"

#include <cmath>

#include "oml/error.hpp"

namespace oml {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "invalid-argument";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::Parse: return "parse";
    case ErrorKind::DanglingReference: return "dangling-reference";
    case ErrorKind::NotALattice: return "not-a-lattice";
    case ErrorKind::Validation: return "validation";
    case ErrorKind::Diagram: return "diagram";
    case ErrorKind::PastingInvalid: return "pasting-invalid";
    case ErrorKind::Size: return "size";
    case ErrorKind::MissingElement: return "missing-element";
    case ErrorKind::Normalization: return "normalization";
    case ErrorKind::NoState: return "no-state";
    case ErrorKind::DimensionMismatch: return "dimension-mismatch";
    case ErrorKind::InvalidMatrix: return "invalid-matrix";
    case ErrorKind::IllConditioned: return "ill-conditioned";
    case ErrorKind::ClosureOverflow: return "closure-overflow";
    case ErrorKind::Precondition: return "precondition";
    case ErrorKind::Domain: return "domain";
    case ErrorKind::Internal: return "internal";
  }
  return "unknown";
}

Rational parse_rational(std::string_view text) {
  auto valid = [](std::string_view digits, bool allow_sign) {
    if (allow_sign && !digits.empty() && (digits[0] == '-' || digits[0] == '+')) {
      digits.remove_prefix(1);
    }
    if (digits.empty()) return false;
    for (char c : digits) {
      if (c < '0' || c > '9') return false;
    }
    return true;
  };
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!valid(num, true) || !valid(den, false)) {
    throw ParseError(1, 1, "malformed rational '" + std::string(text) + "'");
  }
  if (num[0] == '+') num.remove_prefix(1);
  Rational value;
  value.get_num() = mpz_class(std::string(num));
  value.get_den() = mpz_class(std::string(den));
  if (value.get_den() == 0) throw ParseError(1, 1, "zero denominator in '" + std::string(text) + "'");
  value.canonicalize();
  return value;
}

std::string format_rational(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

Rational round_to_decimal(double value, int digits) {
  if (!std::isfinite(value)) fail(ErrorKind::InvalidArgument, "cannot round a non-finite value");
  const double scale = std::pow(10.0, digits);
  Rational out;
  out.get_num() = mpz_class(static_cast<long>(std::llround(value * scale)));
  mpz_ui_pow_ui(out.get_den().get_mpz_t(), 10, static_cast<unsigned long>(digits));
  out.canonicalize();
  return out;
}

}  // namespace oml
