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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oml/lattice.hpp"
#include "oml/linear.hpp"
#include "oml/rational.hpp"

namespace oml {

/// Assignment of a probability to every element of a lattice, indexed by
/// element. `approximate` marks values rounded from floating point (Born
/// states); those are validated in tolerance mode.
struct State {
  RationalVector values;
  bool approximate = false;

  const Rational& operator[](Element e) const { return values.at(e); }
  friend bool operator==(const State&, const State&) = default;
};

/// Checks, in order: s(0) = 0, s(1) = 1, additivity over every orthogonal
/// pair, s(~a) = 1 - s(a), 0 <= s <= 1, and a <= b => s(a) <= s(b).
/// `tolerance` = 0 compares exactly. Throws MissingElement when `s` does not
/// cover the lattice.
LawReport validate_state(const OrthoLattice& lattice, const State& s,
                         const Rational& tolerance = Rational(0));

/// Tolerance used for approximate states.
Rational approximate_tolerance();

/// Validates with approximate_tolerance() when s.approximate is set.
LawReport validate_state_auto(const OrthoLattice& lattice, const State& s);

/// Classical measure on gen_boolean(n) with s(A) = sum of weights in A.
/// Throws Normalization unless weights are nonnegative and sum to 1.
State kolmogorov_from_weights(const RationalVector& weights);

enum class ConstraintKind { Bottom, Top, Complement, Additivity };

struct StateConstraint {
  ConstraintKind kind;
  std::vector<Element> elements;  // the elements the constraint is about
  std::vector<std::pair<Element, int>> terms;  // sparse coefficients
  Rational rhs;
};

/// H-representation of the state space: one variable per element,
/// 0 <= x <= 1 implicit, equality constraints in emission order:
///   x_bottom = 0, x_top = 1,
///   x_a + x_~a = 1 for each complement pair {a, ~a} (a < ~a),
///   x_(a v b) = x_a + x_b for each orthogonal pair a < b, both nonzero.
class StatePolytope {
 public:
  explicit StatePolytope(const OrthoLattice& lattice);

  std::size_t variables() const noexcept { return variables_; }
  const std::vector<StateConstraint>& equalities() const noexcept { return equalities_; }
  std::size_t count(ConstraintKind kind) const;

  /// Dimension of the affine solution set of the equalities, -1 if they are
  /// inconsistent.
  long equality_dimension() const;
  /// Free coordinates after eliminating the equalities.
  std::size_t free_dimensions() const;

  RationalMatrix matrix() const;
  RationalVector rhs() const;

  /// True when every equality and bound holds exactly at `x`.
  bool satisfied_by(const RationalVector& x) const;

  /// Exact vertices, sorted and duplicate-free. Throws Size past
  /// kMaxFreeDimensions free coordinates.
  const std::vector<State>& vertices() const;
  bool has_vertices() const noexcept { return vertices_.has_value(); }

 private:
  const RowEchelon& echelon() const;

  std::size_t variables_;
  std::vector<StateConstraint> equalities_;
  mutable std::optional<RowEchelon> echelon_;
  mutable std::optional<std::vector<State>> vertices_;
};

inline constexpr std::size_t kMaxFreeDimensions = 12;

StatePolytope state_constraints(const OrthoLattice& lattice);

/// Convenience: the polytope with vertices already enumerated.
StatePolytope state_polytope_vertices(const OrthoLattice& lattice);

struct Feasibility {
  bool feasible = false;
  std::optional<State> state;
  /// Certificate over the standard-form system when infeasible.
  RationalMatrix system;
  RationalVector system_rhs;
  RationalVector farkas;
};

/// Exact LP feasibility of the state constraints.
Feasibility admits_state(const OrthoLattice& lattice);

enum class DefectKind { InclusionExclusion, TotalProbability, Superadditivity };

const char* to_string(DefectKind kind) noexcept;

struct DefectReport {
  DefectKind kind;
  std::vector<Element> elements;
  Rational left;
  Rational right;
  Rational defect;  // left - right
};

/// s(a v b) - [s(a) + s(b) - s(a ^ b)].
DefectReport inclusion_exclusion_defect(const OrthoLattice& lattice, const State& s, Element a,
                                        Element b);

/// s(a) - [s(a ^ b) + s(a ^ ~b)].
DefectReport total_probability_defect(const OrthoLattice& lattice, const State& s, Element a,
                                      Element b);

struct SuperadditivityWitness {
  State state;
  Element a;
  Element b;
  DefectReport report;  // s(a v b) - s(a) - s(b)
};

/// Over all pairs a < b of nonzero elements with a ^ b = 0, maximizes
/// s(a v b) - s(a) - s(b) by exact LP and returns the largest strictly
/// positive optimum (first pair on ties), or nothing when it is never
/// positive.
std::optional<SuperadditivityWitness> superadditivity_witness(const OrthoLattice& lattice);

/// Convex combination of polytope vertices with weights drawn from `seed`.
/// Throws NoState when the polytope is empty.
State random_state(const OrthoLattice& lattice, std::uint64_t seed);
State random_state(const StatePolytope& polytope, std::uint64_t seed);

/// `.state` text: "state 1", "lattice <fingerprint>", "value <i> <p>/<q>".
std::string format_state(const OrthoLattice& lattice, const State& s);
State parse_state(const OrthoLattice& lattice, std::string_view text);
/// Several `.state` blocks separated by blank lines.
std::string format_states(const OrthoLattice& lattice, const std::vector<State>& states);
std::vector<State> parse_states(const OrthoLattice& lattice, std::string_view text);

}  // namespace oml
