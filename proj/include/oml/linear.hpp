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

#include <cstddef>
#include <vector>

#include "oml/rational.hpp"

namespace oml {

/// Dense exact matrix, row-major.
using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

/// Reduced row echelon form of the augmented system [A | b].
struct RowEchelon {
  RationalMatrix rows;            // nonzero rows of the reduced A
  RationalVector rhs;             // matching right-hand sides
  std::vector<std::size_t> pivots;  // pivot column of each row
  std::vector<std::size_t> free_columns;
  bool consistent = true;         // false if some 0 = c != 0 row appeared
};

RowEchelon row_reduce(const RationalMatrix& a, const RationalVector& b, std::size_t columns);

/// Solution set of A x = b written as x = offset + directions * t with one
/// parameter per free column (t_j equals x at that column).
struct AffineParametrization {
  RationalVector offset;
  RationalMatrix directions;  // columns x free count
  std::vector<std::size_t> free_columns;
};

AffineParametrization parametrize(const RowEchelon& echelon, std::size_t columns);

enum class LpStatus { Optimal, Infeasible, Unbounded };

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  RationalVector x;
  Rational objective;
  /// When infeasible: y with y^T A <= 0 componentwise and y^T b > 0.
  RationalVector farkas;
};

/// Exact two-phase primal simplex with Bland's rule:
///   maximize c.x  subject to  A x = b,  x >= 0.
LpResult solve_lp(const RationalMatrix& a, const RationalVector& b, const RationalVector& c);

/// True when `y` certifies that {A x = b, x >= 0} is empty.
bool verify_farkas(const RationalMatrix& a, const RationalVector& b, const RationalVector& y);

/// Vertices of {x in [0,1]^n : E x = e} by exact double description, sorted
/// lexicographically. Throws Size when the equality system leaves more than
/// `max_free` free coordinates.
std::vector<RationalVector> box_polytope_vertices(const RationalMatrix& e, const RationalVector& rhs,
                                                  std::size_t columns, std::size_t max_free);

}  // namespace oml
