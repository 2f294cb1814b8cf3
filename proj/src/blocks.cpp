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

#include <algorithm>

#include "oml/error.hpp"
#include "oml/lattice.hpp"

namespace oml {

namespace {

// Bron-Kerbosch with pivoting over a small dense graph.
void maximal_cliques(const std::vector<std::vector<bool>>& adj, std::vector<std::size_t>& current,
                     std::vector<std::size_t> candidates, std::vector<std::size_t> excluded,
                     std::vector<std::vector<std::size_t>>& out) {
  if (candidates.empty() && excluded.empty()) {
    out.push_back(current);
    return;
  }
  std::size_t pivot = candidates.empty() ? excluded.front() : candidates.front();
  std::size_t best = 0;
  for (auto* group : {&candidates, &excluded}) {
    for (std::size_t u : *group) {
      std::size_t degree = 0;
      for (std::size_t v : candidates) degree += adj[u][v] ? 1 : 0;
      if (degree > best) {
        best = degree;
        pivot = u;
      }
    }
  }
  const auto snapshot = candidates;
  for (std::size_t v : snapshot) {
    if (adj[pivot][v]) continue;
    std::vector<std::size_t> next_candidates;
    std::vector<std::size_t> next_excluded;
    for (std::size_t u : candidates) {
      if (adj[v][u]) next_candidates.push_back(u);
    }
    for (std::size_t u : excluded) {
      if (adj[v][u]) next_excluded.push_back(u);
    }
    current.push_back(v);
    maximal_cliques(adj, current, next_candidates, next_excluded, out);
    current.pop_back();
    candidates.erase(std::find(candidates.begin(), candidates.end(), v));
    excluded.push_back(v);
  }
}

}  // namespace

std::vector<std::vector<Element>> blocks(const OrthoLattice& lattice) {
  if (auto report = is_orthomodular(lattice); !report.holds) {
    throw Error(ErrorKind::Validation, "blocks need an orthomodular lattice: " + report.detail);
  }
  // In a finite orthomodular lattice every block is the Boolean algebra
  // generated by a maximal set of pairwise orthogonal atoms.
  const auto atom_list = atoms(lattice);
  const std::size_t k = atom_list.size();
  std::vector<std::vector<bool>> adj(k, std::vector<bool>(k, false));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      adj[i][j] = i != j && lattice.is_orthogonal(atom_list[i], atom_list[j]);
    }
  }
  std::vector<std::size_t> all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;
  std::vector<std::vector<std::size_t>> cliques;
  std::vector<std::size_t> current;
  maximal_cliques(adj, current, all, {}, cliques);

  std::vector<std::vector<Element>> out;
  for (const auto& clique : cliques) {
    if (clique.size() > 12) fail(ErrorKind::Size, "block with more than 12 atoms");
    const std::size_t count = std::size_t{1} << clique.size();
    std::vector<Element> block;
    block.reserve(count);
    for (std::size_t mask = 0; mask < count; ++mask) {
      Element e = lattice.bottom();
      for (std::size_t i = 0; i < clique.size(); ++i) {
        if ((mask >> i) & 1U) e = lattice.join(e, atom_list[clique[i]]);
      }
      block.push_back(e);
    }
    std::sort(block.begin(), block.end());
    block.erase(std::unique(block.begin(), block.end()), block.end());
    if (block.size() != count || !std::binary_search(block.begin(), block.end(), lattice.top())) {
      fail(ErrorKind::Internal, "orthogonal atom set did not generate a Boolean block");
    }
    for (Element a : block) {
      if (!std::binary_search(block.begin(), block.end(), lattice.ortho(a))) {
        fail(ErrorKind::Internal, "generated block is not closed under ortho");
      }
    }
    out.push_back(std::move(block));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace oml
