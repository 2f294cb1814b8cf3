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

namespace oml {

/// Directive-level view of an `.oml` document.
///
///   oml 1
///   elements <n>
///   bottom <i>
///   top <i>
///   label <i> <name>
///   cover <i> <j>      (j covers i)
///   ortho <i> <j>
///
/// `#` starts a comment. The serializer writes directives in exactly this
/// order (kind, then index), one per line, LF endings.
struct LatticeDocument {
  std::size_t elements = 0;
  std::optional<Element> bottom;
  std::optional<Element> top;
  std::vector<std::pair<Element, std::string>> labels;
  std::vector<std::pair<Element, Element>> covers;
  std::vector<std::pair<Element, Element>> orthos;
};

LatticeDocument parse_lattice_document(std::string_view text);
std::string format_lattice_document(const LatticeDocument& doc);

/// Builds and fully validates. Errors: Parse, DanglingReference,
/// NotALattice, Validation (named law and witness), Size.
OrthoLattice build_lattice(const LatticeDocument& doc);

OrthoLattice parse_lattice(std::string_view text);
std::string serialize(const OrthoLattice& lattice);
LatticeDocument to_document(const OrthoLattice& lattice);

/// Greechie diagram: atoms plus blocks of pairwise orthogonal atoms.
struct GreechieDiagram {
  std::vector<std::string> atom_names;
  std::vector<std::vector<std::size_t>> blocks;  // indices into atom_names
};

/// `.gre`: header `gre 1`, then one `block a b c ...` line per block.
GreechieDiagram parse_greechie_diagram(std::string_view text);

/// Pastes the blocks of a diagram into one logic and returns it only if it
/// is an orthomodular lattice. Errors: Diagram, PastingInvalid, Size.
OrthoLattice paste(const GreechieDiagram& diagram);

OrthoLattice parse_greechie(std::string_view text);

/// Dispatches on the header line (`oml 1` or `gre 1`).
OrthoLattice parse_any(std::string_view text);

/// Power set of n outcomes, 1 <= n <= 20.
OrthoLattice gen_boolean(unsigned n);

/// MO(n): bottom, a1, ~a1, ..., an, ~an, top.
OrthoLattice gen_mo(unsigned n);

/// FNV-1a 64 of the serialized document; identifies a lattice in `.state`
/// files.
std::uint64_t lattice_fingerprint(const OrthoLattice& lattice);

}  // namespace oml
