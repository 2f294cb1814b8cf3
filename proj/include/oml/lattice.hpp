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
#include <vector>

namespace oml {

/// Index of an element inside one OrthoLattice (0..size()-1).
using Element = std::uint32_t;

/// Largest element count accepted for explicitly tabulated lattices.
inline constexpr std::size_t kMaxExplicitElements = 4096;
/// Largest outcome count accepted by gen_boolean (2^20 elements).
inline constexpr unsigned kMaxBooleanAtoms = 20;

enum class Law {
  PartialOrder,
  Bounds,
  UniqueMeet,
  UniqueJoin,
  OrthoInvolution,
  OrthoOrderReversing,
  ComplementJoin,
  ComplementMeet,
  Orthomodular,
  Modular,
  Distributive,
  // State laws (see states.hpp).
  StateBottom,
  StateTop,
  StateAdditivity,
  StateComplement,
  StateRange,
  StateMonotone,
  // Deduced rules checked by cox_rules_check (see cox.hpp).
  CoxNonnegative,
  CoxOrderPreserving,
  CoxNullity,
  CoxComplement,
  CoxFamilyAdditivity,
};

const char* to_string(Law law) noexcept;

struct LawReport {
  Law law;
  bool holds = true;
  /// Lexicographically first violating tuple; empty when the law holds.
  std::vector<Element> witness;
  std::string detail;

  static LawReport pass(Law law) { return {law, true, {}, {}}; }
  static LawReport violation(Law law, std::vector<Element> witness, std::string detail) {
    return {law, false, std::move(witness), std::move(detail)};
  }
};

/// Raw order + orthocomplement data prior to lattice validation. Used by the
/// parsers and by validate_ortholattice on unvalidated input.
struct OrderData {
  std::size_t size = 0;
  std::vector<std::uint8_t> leq;  // row-major size x size
  std::vector<Element> ortho;
  Element bottom = 0;
  Element top = 0;

  bool at(Element a, Element b) const { return leq[std::size_t(a) * size + b] != 0; }
};

/// Finite bounded lattice with an orthocomplement. Immutable after
/// construction; meets and joins are tabulated up front.
///
/// Boolean algebras produced by gen_boolean are stored implicitly (element
/// index = bitmask of outcomes) so that 2^20 elements stay cheap.
class OrthoLattice {
 public:
  /// Builds from an order relation and an ortho map. Throws NotALattice
  /// (naming the first pair without a unique meet or join), Validation if
  /// the relation is not a bounded partial order, and Size past the cap.
  /// Orthocomplement laws are not enforced here; see validate_ortholattice.
  static OrthoLattice from_order(const OrderData& data, std::vector<std::string> labels = {});

  /// Power set of an n-element outcome set, ortho = set complement.
  static OrthoLattice boolean_algebra(unsigned outcomes);

  std::size_t size() const noexcept { return size_; }
  Element bottom() const noexcept { return bottom_; }
  Element top() const noexcept { return top_; }
  bool is_implicit_boolean() const noexcept { return boolean_outcomes_.has_value(); }

  bool leq(Element a, Element b) const;
  Element meet(Element a, Element b) const;
  Element join(Element a, Element b) const;
  Element ortho(Element a) const;
  bool is_orthogonal(Element a, Element b) const { return leq(a, ortho(b)); }

  /// Display name; falls back to the decimal index when unlabeled.
  std::string label(Element a) const;
  bool has_labels() const noexcept { return !labels_.empty(); }
  /// Resolves a label or a decimal index.
  std::optional<Element> find(const std::string& name) const;

  /// Elements that cover `a` (Hasse successors), ascending.
  std::vector<Element> covers_of(Element a) const;

  OrderData order_data() const;

  friend bool operator==(const OrthoLattice& lhs, const OrthoLattice& rhs);

 private:
  OrthoLattice() = default;
  void check(Element a) const;

  std::size_t size_ = 0;
  Element bottom_ = 0;
  Element top_ = 0;
  std::optional<unsigned> boolean_outcomes_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::uint16_t> meet_;
  std::vector<std::uint16_t> join_;
  std::vector<Element> ortho_;
  std::vector<std::string> labels_;
};

// Law checks. All are exhaustive over the relevant tuples and return the
// lexicographically first witness on failure.

/// One report per ortholattice law, in a fixed order: PartialOrder, Bounds,
/// UniqueMeet, UniqueJoin, OrthoInvolution, OrthoOrderReversing,
/// ComplementJoin, ComplementMeet. Never throws on malformed data.
std::vector<LawReport> validate_ortholattice(const OrderData& data);
std::vector<LawReport> validate_ortholattice(const OrthoLattice& lattice);

/// a <= b implies b = a v (~a ^ b). Witness (a, b).
LawReport is_orthomodular(const OrthoLattice& lattice);
/// a <= c implies a v (b ^ c) = (a v b) ^ c. Witness (a, b, c).
LawReport is_modular(const OrthoLattice& lattice);
/// a ^ (b v c) = (a ^ b) v (a ^ c). Witness (a, b, c).
LawReport is_distributive(const OrthoLattice& lattice);

/// Re-evaluates `law` on `witness`; true when the tuple violates it. Covers
/// the lattice-level laws (not the state laws).
bool witness_violates(const OrthoLattice& lattice, Law law, const std::vector<Element>& witness);

std::vector<Element> atoms(const OrthoLattice& lattice);

/// Maximal Boolean subalgebras, each as a sorted element list; the list is
/// sorted lexicographically. Throws Validation when the lattice is not
/// orthomodular.
std::vector<std::vector<Element>> blocks(const OrthoLattice& lattice);

/// Union of two ortholattices with bottoms and tops identified.
OrthoLattice horizontal_sum(const OrthoLattice& lhs, const OrthoLattice& rhs);

}  // namespace oml
