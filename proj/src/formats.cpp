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

#include "oml/formats.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <unordered_map>
#include <unordered_set>

#include "detail/bitset.hpp"
#include "detail/text.hpp"
#include "oml/error.hpp"

namespace oml {

namespace {

using detail::Line;
using detail::parse_index;
using detail::split_lines;

void expect_header(const std::vector<Line>& lines, std::string_view magic) {
  if (lines.empty()) throw ParseError(1, 1, "empty document; expected '" + std::string(magic) + " 1'");
  const Line& first = lines.front();
  if (first.tokens.size() != 2 || first.tokens[0].text != magic || first.tokens[1].text != "1") {
    throw ParseError(first.number, first.tokens[0].column,
                     "expected header '" + std::string(magic) + " 1'");
  }
}

void expect_arity(const Line& line, std::size_t arity) {
  if (line.tokens.size() != arity + 1) {
    const auto& last = line.tokens.back();
    throw ParseError(line.number, last.column,
                     "'" + std::string(line.tokens[0].text) + "' takes " + std::to_string(arity) +
                         " argument(s)");
  }
}

[[noreturn]] void law_failure(ErrorKind kind, const LawReport& report, const OrthoLattice* lattice) {
  std::string message = std::string(to_string(report.law)) + " violated";
  if (!report.witness.empty()) {
    message += ", witness (";
    for (std::size_t i = 0; i < report.witness.size(); ++i) {
      if (i) message += ", ";
      message += lattice ? lattice->label(report.witness[i]) : std::to_string(report.witness[i]);
    }
    message += ")";
  }
  if (!report.detail.empty()) message += ": " + report.detail;
  throw Error(kind, message);
}

// Reflexive-transitive closure of a relation given as bitset rows. Returns
// false on a cycle through distinct elements.
bool close_order(std::vector<detail::Bitset>& rows) {
  const std::size_t n = rows.size();
  for (std::size_t i = 0; i < n; ++i) rows[i].set(i);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (rows[i].test(k)) rows[i] |= rows[k];
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rows[i].test(j) && rows[j].test(i)) return false;
    }
  }
  return true;
}

void check_validated(const OrthoLattice& lattice, ErrorKind kind) {
  for (const auto& report : validate_ortholattice(lattice)) {
    if (!report.holds) law_failure(kind, report, &lattice);
  }
}

}  // namespace

LatticeDocument parse_lattice_document(std::string_view text) {
  const auto lines = split_lines(text);
  expect_header(lines, "oml");
  LatticeDocument doc;
  bool have_elements = false;
  std::unordered_set<std::string> names;
  std::unordered_set<Element> labeled;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto& kw = line.tokens[0];
    if (kw.text == "oml") {
      throw ParseError(line.number, kw.column, "duplicate header");
    } else if (kw.text == "elements") {
      expect_arity(line, 1);
      if (have_elements) throw ParseError(line.number, kw.column, "duplicate 'elements'");
      doc.elements = parse_index(line, 1);
      have_elements = true;
    } else if (kw.text == "bottom" || kw.text == "top") {
      expect_arity(line, 1);
      auto& slot = kw.text == "bottom" ? doc.bottom : doc.top;
      if (slot) throw ParseError(line.number, kw.column, "duplicate '" + std::string(kw.text) + "'");
      slot = static_cast<Element>(parse_index(line, 1));
    } else if (kw.text == "label") {
      expect_arity(line, 2);
      const auto index = static_cast<Element>(parse_index(line, 1));
      std::string name(line.tokens[2].text);
      if (!labeled.insert(index).second) {
        throw ParseError(line.number, line.tokens[1].column, "element relabeled");
      }
      if (!names.insert(name).second) {
        throw ParseError(line.number, line.tokens[2].column, "duplicate label '" + name + "'");
      }
      doc.labels.emplace_back(index, std::move(name));
    } else if (kw.text == "cover") {
      expect_arity(line, 2);
      doc.covers.emplace_back(static_cast<Element>(parse_index(line, 1)),
                              static_cast<Element>(parse_index(line, 2)));
    } else if (kw.text == "ortho") {
      expect_arity(line, 2);
      doc.orthos.emplace_back(static_cast<Element>(parse_index(line, 1)),
                              static_cast<Element>(parse_index(line, 2)));
    } else {
      throw ParseError(line.number, kw.column, "unknown directive '" + std::string(kw.text) + "'");
    }
  }
  if (!have_elements) {
    throw ParseError(lines.back().number + 1, 1, "missing 'elements' directive");
  }
  return doc;
}

std::string format_lattice_document(const LatticeDocument& doc) {
  auto labels = doc.labels;
  auto covers = doc.covers;
  auto orthos = doc.orthos;
  std::sort(labels.begin(), labels.end());
  std::sort(covers.begin(), covers.end());
  std::sort(orthos.begin(), orthos.end());
  std::string out = "oml 1\nelements " + std::to_string(doc.elements) + "\n";
  if (doc.bottom) out += "bottom " + std::to_string(*doc.bottom) + "\n";
  if (doc.top) out += "top " + std::to_string(*doc.top) + "\n";
  for (const auto& [i, name] : labels) out += "label " + std::to_string(i) + " " + name + "\n";
  for (const auto& [i, j] : covers) {
    out += "cover " + std::to_string(i) + " " + std::to_string(j) + "\n";
  }
  for (const auto& [i, j] : orthos) {
    out += "ortho " + std::to_string(i) + " " + std::to_string(j) + "\n";
  }
  return out;
}

OrthoLattice build_lattice(const LatticeDocument& doc) {
  const std::size_t n = doc.elements;
  if (n > kMaxExplicitElements) {
    fail(ErrorKind::Size, "document declares " + std::to_string(n) + " elements; cap is " +
                              std::to_string(kMaxExplicitElements));
  }
  if (n < 2) fail(ErrorKind::Size, "lattice needs at least 2 elements");
  auto in_range = [&](Element e, const char* what) {
    if (e >= n) {
      fail(ErrorKind::DanglingReference,
           std::string(what) + " references element " + std::to_string(e) + " of " +
               std::to_string(n));
    }
  };

  std::vector<std::string> labels;
  if (!doc.labels.empty()) {
    labels.resize(n);
    for (Element i = 0; i < n; ++i) labels[i] = std::to_string(i);
    for (const auto& [i, name] : doc.labels) {
      in_range(i, "label");
      labels[i] = name;
    }
  }

  std::vector<detail::Bitset> rows(n, detail::Bitset(n));
  for (const auto& [lo, hi] : doc.covers) {
    in_range(lo, "cover");
    in_range(hi, "cover");
    rows[lo].set(hi);
  }
  if (!close_order(rows)) {
    fail(ErrorKind::Validation, "partial-order violated: cover relation has a cycle");
  }

  OrderData data;
  data.size = n;
  data.leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) data.leq[i * n + j] = rows[i].test(j) ? 1 : 0;
  }

  auto unique_extreme = [&](bool lowest) -> Element {
    std::optional<Element> found;
    for (Element x = 0; x < n; ++x) {
      bool extreme = true;
      for (Element y = 0; y < n && extreme; ++y) {
        if (y != x && (lowest ? data.at(y, x) : data.at(x, y))) extreme = false;
      }
      if (extreme) {
        if (found) {
          fail(ErrorKind::Validation, std::string("bounds violated: several ") +
                                          (lowest ? "minimal" : "maximal") + " elements");
        }
        found = x;
      }
    }
    return *found;
  };
  if (doc.bottom) in_range(*doc.bottom, "bottom");
  if (doc.top) in_range(*doc.top, "top");
  data.bottom = doc.bottom ? *doc.bottom : unique_extreme(true);
  data.top = doc.top ? *doc.top : unique_extreme(false);

  constexpr Element kUnset = ~Element{0};
  data.ortho.assign(n, kUnset);
  for (const auto& [a, b] : doc.orthos) {
    in_range(a, "ortho");
    in_range(b, "ortho");
    for (auto [x, y] : {std::pair{a, b}, std::pair{b, a}}) {
      if (data.ortho[x] != kUnset && data.ortho[x] != y) {
        fail(ErrorKind::Validation, "ortho-involution violated, witness (" + std::to_string(x) +
                                        "): conflicting orthocomplements");
      }
      data.ortho[x] = y;
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (data.ortho[a] == kUnset) {
      fail(ErrorKind::DanglingReference, "element " + std::to_string(a) + " has no ortho pair");
    }
  }

  auto lattice = OrthoLattice::from_order(data, std::move(labels));
  check_validated(lattice, ErrorKind::Validation);
  return lattice;
}

OrthoLattice parse_lattice(std::string_view text) {
  return build_lattice(parse_lattice_document(text));
}

LatticeDocument to_document(const OrthoLattice& lattice) {
  if (lattice.size() > kMaxExplicitElements) {
    fail(ErrorKind::Size, "lattice too large to serialize as .oml");
  }
  LatticeDocument doc;
  doc.elements = lattice.size();
  doc.bottom = lattice.bottom();
  doc.top = lattice.top();
  const auto n = static_cast<Element>(lattice.size());
  const bool labeled = lattice.has_labels() || lattice.is_implicit_boolean();
  for (Element a = 0; a < n; ++a) {
    if (labeled) doc.labels.emplace_back(a, lattice.label(a));
    for (Element b : lattice.covers_of(a)) doc.covers.emplace_back(a, b);
    if (a <= lattice.ortho(a)) doc.orthos.emplace_back(a, lattice.ortho(a));
  }
  return doc;
}

std::string serialize(const OrthoLattice& lattice) {
  return format_lattice_document(to_document(lattice));
}

GreechieDiagram parse_greechie_diagram(std::string_view text) {
  const auto lines = split_lines(text);
  expect_header(lines, "gre");
  GreechieDiagram diagram;
  std::unordered_map<std::string, std::size_t> index;
  for (std::size_t li = 1; li < lines.size(); ++li) {
    const Line& line = lines[li];
    const auto& kw = line.tokens[0];
    if (kw.text != "block") {
      throw ParseError(line.number, kw.column, "unknown directive '" + std::string(kw.text) + "'");
    }
    if (line.tokens.size() < 3) {
      throw ParseError(line.number, kw.column, "a block needs at least 2 atoms");
    }
    std::vector<std::size_t> block;
    for (std::size_t t = 1; t < line.tokens.size(); ++t) {
      std::string name(line.tokens[t].text);
      if (name == "0" || name == "1" || name.find_first_of("+~") != std::string::npos) {
        throw ParseError(line.number, line.tokens[t].column,
                         "atom name '" + name + "' is reserved or contains '+'/'~'");
      }
      auto [it, inserted] = index.emplace(name, diagram.atom_names.size());
      if (inserted) diagram.atom_names.push_back(name);
      if (std::find(block.begin(), block.end(), it->second) != block.end()) {
        fail(ErrorKind::Diagram, "line " + std::to_string(line.number) + ": atom '" + name +
                                     "' repeated inside a block");
      }
      block.push_back(it->second);
    }
    diagram.blocks.push_back(std::move(block));
  }
  if (diagram.blocks.empty()) fail(ErrorKind::Diagram, "diagram has no blocks");
  return diagram;
}

OrthoLattice paste(const GreechieDiagram& diagram) {
  const auto& blocks = diagram.blocks;
  if (blocks.empty()) fail(ErrorKind::Diagram, "diagram has no blocks");
  std::vector<bool> used(diagram.atom_names.size(), false);
  for (const auto& block : blocks) {
    if (block.size() < 2) fail(ErrorKind::Diagram, "a block needs at least 2 atoms");
    if (block.size() > 12) fail(ErrorKind::Size, "blocks are capped at 12 atoms");
    for (auto atom : block) {
      if (atom >= used.size()) fail(ErrorKind::Diagram, "block references an unknown atom");
      used[atom] = true;
    }
  }
  for (std::size_t a = 0; a < used.size(); ++a) {
    if (!used[a]) fail(ErrorKind::Diagram, "atom '" + diagram.atom_names[a] + "' is in no block");
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (std::size_t j = i + 1; j < blocks.size(); ++j) {
      std::size_t shared = 0;
      for (auto a : blocks[i]) {
        shared += std::count(blocks[j].begin(), blocks[j].end(), a);
      }
      if (shared >= 2) {
        fail(ErrorKind::Diagram, "blocks " + std::to_string(i + 1) + " and " +
                                     std::to_string(j + 1) + " share " + std::to_string(shared) +
                                     " atoms");
      }
    }
  }

  // One node per (block, subset of the block).
  std::vector<std::size_t> offset(blocks.size() + 1, 0);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    offset[b + 1] = offset[b] + (std::size_t{1} << blocks[b].size());
  }
  const std::size_t nodes = offset.back();
  if (nodes > 16 * kMaxExplicitElements) fail(ErrorKind::Size, "diagram too large to paste");

  std::vector<std::size_t> node_block(nodes);
  std::vector<std::vector<std::size_t>> node_atoms(nodes);
  std::vector<std::size_t> complement(nodes);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::size_t full = (std::size_t{1} << blocks[b].size()) - 1;
    for (std::size_t mask = 0; mask <= full; ++mask) {
      const std::size_t node = offset[b] + mask;
      node_block[node] = b;
      complement[node] = offset[b] + (full & ~mask);
      for (std::size_t i = 0; i < blocks[b].size(); ++i) {
        if ((mask >> i) & 1U) node_atoms[node].push_back(blocks[b][i]);
      }
      std::sort(node_atoms[node].begin(), node_atoms[node].end());
    }
  }

  std::vector<std::size_t> parent(nodes);
  for (std::size_t i = 0; i < nodes; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::size_t x, std::size_t y) {
    x = find(x);
    y = find(y);
    if (x == y) return false;
    parent[std::max(x, y)] = std::min(x, y);
    return true;
  };

  // Same atom set (empty set and shared singletons), and all full blocks.
  std::map<std::vector<std::size_t>, std::size_t> by_atoms;
  for (std::size_t node = 0; node < nodes; ++node) {
    auto [it, inserted] = by_atoms.emplace(node_atoms[node], node);
    if (!inserted) unite(it->second, node);
  }
  for (std::size_t b = 1; b < blocks.size(); ++b) unite(complement[offset[0]], complement[offset[b]]);
  // Complements of identified elements are identified.
  for (bool changed = true; changed;) {
    changed = false;
    std::unordered_map<std::size_t, std::size_t> first_complement;
    for (std::size_t node = 0; node < nodes; ++node) {
      auto [it, inserted] = first_complement.emplace(find(node), complement[node]);
      if (!inserted && unite(it->second, complement[node])) changed = true;
    }
  }

  // Class representatives: smallest atom set by (size, lexicographic).
  std::map<std::size_t, std::size_t> representative;
  auto smaller = [&](std::size_t x, std::size_t y) {
    if (node_atoms[x].size() != node_atoms[y].size()) {
      return node_atoms[x].size() < node_atoms[y].size();
    }
    return node_atoms[x] < node_atoms[y];
  };
  for (std::size_t node = 0; node < nodes; ++node) {
    auto [it, inserted] = representative.emplace(find(node), node);
    if (!inserted && smaller(node, it->second)) it->second = node;
  }
  const std::size_t bottom_root = find(offset[0]);
  const std::size_t top_root = find(complement[offset[0]]);
  std::vector<std::size_t> roots;
  for (const auto& [root, rep] : representative) {
    if (root != bottom_root && root != top_root) roots.push_back(root);
  }
  std::sort(roots.begin(), roots.end(), [&](std::size_t x, std::size_t y) {
    return smaller(representative[x], representative[y]);
  });
  if (top_root == bottom_root) {
    fail(ErrorKind::PastingInvalid, "identifications collapse bottom and top");
  }
  roots.insert(roots.begin(), bottom_root);
  roots.push_back(top_root);
  const std::size_t n = roots.size();
  if (n > kMaxExplicitElements) fail(ErrorKind::Size, "pasted logic exceeds element cap");

  std::unordered_map<std::size_t, Element> class_of_root;
  for (std::size_t i = 0; i < n; ++i) class_of_root[roots[i]] = static_cast<Element>(i);
  auto cls = [&](std::size_t node) { return class_of_root.at(find(node)); };

  OrderData data;
  data.size = n;
  data.bottom = 0;
  data.top = static_cast<Element>(n - 1);
  data.ortho.resize(n);
  for (std::size_t node = 0; node < nodes; ++node) data.ortho[cls(node)] = cls(complement[node]);

  std::vector<detail::Bitset> rows(n, detail::Bitset(n));
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    const std::size_t full = (std::size_t{1} << blocks[b].size()) - 1;
    for (std::size_t sub = 0; sub <= full; ++sub) {
      // Enumerate supersets of `sub` within the block.
      for (std::size_t sup = sub;; sup = (sup + 1) | sub) {
        rows[cls(offset[b] + sub)].set(cls(offset[b] + sup));
        if (sup == full) break;
      }
    }
  }
  if (!close_order(rows)) {
    fail(ErrorKind::PastingInvalid, "partial-order violated: identifications create a cycle");
  }
  data.leq.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) data.leq[i * n + j] = rows[i].test(j) ? 1 : 0;
  }

  std::vector<std::string> labels(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& atoms_of = node_atoms[representative[roots[i]]];
    if (i == 0) {
      labels[i] = "0";
    } else if (i == n - 1) {
      labels[i] = "1";
    } else if (atoms_of.size() == 1) {
      labels[i] = diagram.atom_names[atoms_of[0]];
    } else {
      const auto& comp_atoms = node_atoms[representative[roots[data.ortho[i]]]];
      if (comp_atoms.size() == 1) {
        labels[i] = "~" + diagram.atom_names[comp_atoms[0]];
      } else {
        for (std::size_t k = 0; k < atoms_of.size(); ++k) {
          if (k) labels[i] += "+";
          labels[i] += diagram.atom_names[atoms_of[k]];
        }
      }
    }
  }

  std::optional<OrthoLattice> lattice;
  try {
    lattice = OrthoLattice::from_order(data, std::move(labels));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotALattice || e.kind() == ErrorKind::Validation) {
      throw Error(ErrorKind::PastingInvalid, e.what());
    }
    throw;
  }
  check_validated(*lattice, ErrorKind::PastingInvalid);
  if (auto report = is_orthomodular(*lattice); !report.holds) {
    law_failure(ErrorKind::PastingInvalid, report, &*lattice);
  }
  return *lattice;
}

OrthoLattice parse_greechie(std::string_view text) { return paste(parse_greechie_diagram(text)); }

OrthoLattice parse_any(std::string_view text) {
  const auto lines = split_lines(text);
  if (!lines.empty() && lines.front().tokens[0].text == "gre") return parse_greechie(text);
  return parse_lattice(text);
}

OrthoLattice gen_boolean(unsigned n) { return OrthoLattice::boolean_algebra(n); }

OrthoLattice gen_mo(unsigned n) {
  if (n == 0) fail(ErrorKind::Size, "MO(n) needs n >= 1");
  const std::size_t size = 2 * std::size_t{n} + 2;
  if (size > kMaxExplicitElements) fail(ErrorKind::Size, "MO(n) exceeds element cap");
  OrderData data;
  data.size = size;
  data.bottom = 0;
  data.top = static_cast<Element>(size - 1);
  data.leq.assign(size * size, 0);
  data.ortho.resize(size);
  std::vector<std::string> labels(size);
  labels[0] = "0";
  labels[size - 1] = "1";
  for (Element a = 0; a < size; ++a) {
    data.leq[a * size + a] = 1;
    data.leq[a] = 1;
    data.leq[a * size + size - 1] = 1;
  }
  data.ortho[0] = data.top;
  data.ortho[data.top] = 0;
  for (unsigned i = 0; i < n; ++i) {
    const Element atom = 2 * i + 1;
    data.ortho[atom] = atom + 1;
    data.ortho[atom + 1] = atom;
    labels[atom] = "a" + std::to_string(i + 1);
    labels[atom + 1] = "~a" + std::to_string(i + 1);
  }
  return OrthoLattice::from_order(data, std::move(labels));
}

std::uint64_t lattice_fingerprint(const OrthoLattice& lattice) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : serialize(lattice)) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

}  // namespace oml
