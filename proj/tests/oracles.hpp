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


// Independent brute-force references used by the tests. Nothing here calls
// into the algorithms under test beyond the lattice operation tables.

#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oml/lattice.hpp"

namespace oml::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(OMLPROB_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

inline std::string read_fixture(const std::string& name) { return read_file(fixture_path(name)); }

/// Order- and ortho-preserving bijection from `a` to `b`, by backtracking.
inline std::optional<std::vector<Element>> find_isomorphism(const OrthoLattice& a, const OrthoLattice& b) {
  const std::size_t n = a.size();
  if (n != b.size()) return std::nullopt;
  std::vector<Element> map(n, 0);
  std::vector<bool> assigned(n, false);
  std::vector<bool> used(n, false);
  auto height = [](const OrthoLattice& l, Element x) {
    std::size_t below = 0;
    for (Element y = 0; y < l.size(); ++y) below += l.leq(y, x) ? 1 : 0;
    return below;
  };
  std::function<bool(Element)> assign = [&](Element x) -> bool {
    if (x == n) return true;
    if (assigned[x]) return assign(x + 1);
    for (Element y = 0; y < n; ++y) {
      if (used[y] || height(a, x) != height(b, y)) continue;
      const Element ox = a.ortho(x);
      const Element oy = b.ortho(y);
      if ((ox == x) != (oy == y)) continue;
      if (ox != x && (assigned[ox] ? map[ox] != oy : used[oy])) continue;
      bool consistent = true;
      for (Element z = 0; z < n && consistent; ++z) {
        if (!assigned[z]) continue;
        consistent = a.leq(x, z) == b.leq(y, map[z]) && a.leq(z, x) == b.leq(map[z], y);
      }
      if (!consistent) continue;
      map[x] = y;
      assigned[x] = used[y] = true;
      bool pair_added = false;
      if (ox != x && !assigned[ox]) {
        bool ok = true;
        for (Element z = 0; z < n && ok; ++z) {
          if (!assigned[z]) continue;
          ok = a.leq(ox, z) == b.leq(oy, map[z]) && a.leq(z, ox) == b.leq(map[z], oy);
        }
        if (!ok) {
          assigned[x] = used[y] = false;
          continue;
        }
        map[ox] = oy;
        assigned[ox] = used[oy] = true;
        pair_added = true;
      }
      if (assign(x + 1)) return true;
      assigned[x] = used[y] = false;
      if (pair_added) assigned[ox] = used[oy] = false;
    }
    return false;
  };
  if (!assign(0)) return std::nullopt;
  return map;
}

/// Maximal Boolean subalgebras by exhaustive search over element subsets.
/// Only for lattices with at most ~16 elements.
inline std::vector<std::vector<Element>> brute_force_blocks(const OrthoLattice& l) {
  const std::size_t n = l.size();
  std::vector<std::vector<Element>> boolean_subalgebras;
  for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
    auto in = [&](Element e) { return (mask >> e) & 1U; };
    if (!in(l.bottom()) || !in(l.top())) continue;
    bool ok = true;
    for (Element a = 0; a < n && ok; ++a) {
      if (!in(a)) continue;
      ok = in(l.ortho(a));
      for (Element b = 0; b < n && ok; ++b) {
        if (!in(b)) continue;
        ok = in(l.meet(a, b)) && in(l.join(a, b));
        for (Element c = 0; c < n && ok; ++c) {
          if (!in(c)) continue;
          ok = l.meet(a, l.join(b, c)) == l.join(l.meet(a, b), l.meet(a, c));
        }
      }
    }
    if (!ok) continue;
    std::vector<Element> members;
    for (Element e = 0; e < n; ++e) {
      if (in(e)) members.push_back(e);
    }
    boolean_subalgebras.push_back(members);
  }
  std::vector<std::vector<Element>> maximal;
  for (const auto& s : boolean_subalgebras) {
    bool is_max = true;
    for (const auto& t : boolean_subalgebras) {
      if (t.size() > s.size() && std::includes(t.begin(), t.end(), s.begin(), s.end())) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(s);
  }
  std::sort(maximal.begin(), maximal.end());
  return maximal;
}

/// The state equalities written out directly from the lattice: bottom,
/// top, complements, and additivity on every orthogonal pair.
inline std::vector<std::vector<mpq_class>> brute_force_state_rows(const OrthoLattice& l,
                                                                  std::vector<mpq_class>& rhs) {
  const std::size_t n = l.size();
  std::vector<std::vector<mpq_class>> rows;
  rhs.clear();
  auto row = [&] { return std::vector<mpq_class>(n, 0); };
  auto r = row();
  r[l.bottom()] = 1;
  rows.push_back(r);
  rhs.push_back(0);
  r = row();
  r[l.top()] = 1;
  rows.push_back(r);
  rhs.push_back(1);
  for (Element a = 0; a < n; ++a) {
    r = row();
    r[a] += 1;
    r[l.ortho(a)] += 1;
    rows.push_back(r);
    rhs.push_back(1);
    for (Element b = 0; b < n; ++b) {
      if (!l.is_orthogonal(a, b)) continue;
      r = row();
      r[l.join(a, b)] += 1;
      r[a] -= 1;
      r[b] -= 1;
      rows.push_back(r);
      rhs.push_back(0);
    }
  }
  return rows;
}

/// Solves A x = b restricted to `columns` by Gaussian elimination; returns
/// the unique solution or nothing when inconsistent or underdetermined.
inline std::optional<std::vector<mpq_class>> unique_solution(std::vector<std::vector<mpq_class>> a,
                                                             std::vector<mpq_class> b) {
  const std::size_t m = a.size();
  const std::size_t k = m ? a[0].size() : 0;
  std::size_t row = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < k && row < m; ++c) {
    std::size_t p = row;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) return std::nullopt;  // free column
    std::swap(a[p], a[row]);
    std::swap(b[p], b[row]);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == row || a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[row][c];
      for (std::size_t j = c; j < k; ++j) a[i][j] -= f * a[row][j];
      b[i] -= f * b[row];
    }
    pivot_col.push_back(c);
    ++row;
  }
  if (row < k) return std::nullopt;
  for (std::size_t i = row; i < m; ++i) {
    if (b[i] != 0) return std::nullopt;
  }
  std::vector<mpq_class> x(k);
  for (std::size_t i = 0; i < k; ++i) x[i] = b[i] / a[i][pivot_col[i]];
  return x;
}

/// Vertices of the state polytope by enumerating every assignment of each
/// coordinate to {0, 1, free} and keeping the points that are uniquely
/// determined and feasible. Exponential: 3^n candidates.
inline std::set<std::vector<mpq_class>> brute_force_vertices(const OrthoLattice& l) {
  const std::size_t n = l.size();
  std::vector<mpq_class> rhs;
  const auto rows = brute_force_state_rows(l, rhs);
  std::set<std::vector<mpq_class>> out;
  std::vector<int> choice(n, 0);
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= 3;
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    std::vector<std::size_t> free;
    for (std::size_t i = 0; i < n; ++i) {
      choice[i] = static_cast<int>(c % 3);
      c /= 3;
      if (choice[i] == 2) free.push_back(i);
    }
    std::vector<std::vector<mpq_class>> a;
    std::vector<mpq_class> b;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      std::vector<mpq_class> reduced;
      mpq_class value = rhs[r];
      for (std::size_t i = 0; i < n; ++i) {
        if (choice[i] == 2) {
          reduced.push_back(rows[r][i]);
        } else if (choice[i] == 1) {
          value -= rows[r][i];
        }
      }
      a.push_back(reduced);
      b.push_back(value);
    }
    std::vector<mpq_class> x(n);
    if (free.empty()) {
      bool ok = true;
      for (std::size_t r = 0; r < b.size() && ok; ++r) ok = b[r] == 0;
      if (!ok) continue;
    } else {
      auto solved = unique_solution(a, b);
      if (!solved) continue;
      bool interior = true;
      for (std::size_t j = 0; j < free.size() && interior; ++j) {
        interior = (*solved)[j] > 0 && (*solved)[j] < 1;
        x[free[j]] = (*solved)[j];
      }
      if (!interior) continue;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (choice[i] != 2) x[i] = choice[i];
    }
    out.insert(x);
  }
  return out;
}

inline std::size_t rank_of(std::vector<std::vector<mpq_class>> a) {
  const std::size_t m = a.size();
  const std::size_t k = m ? a[0].size() : 0;
  std::size_t row = 0;
  for (std::size_t c = 0; c < k && row < m; ++c) {
    std::size_t p = row;
    while (p < m && a[p][c] == 0) ++p;
    if (p == m) continue;
    std::swap(a[p], a[row]);
    for (std::size_t i = row + 1; i < m; ++i) {
      if (a[i][c] == 0) continue;
      const mpq_class f = a[i][c] / a[row][c];
      for (std::size_t j = c; j < k; ++j) a[i][j] -= f * a[row][j];
    }
    ++row;
  }
  return row;
}

/// A feasible point is a vertex exactly when its active constraints have
/// full rank.
inline bool is_state_vertex(const OrthoLattice& l, const std::vector<mpq_class>& x) {
  std::vector<mpq_class> rhs;
  auto rows = brute_force_state_rows(l, rhs);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0 || x[i] == 1) {
      std::vector<mpq_class> unit(x.size(), 0);
      unit[i] = 1;
      rows.push_back(unit);
    }
  }
  return rank_of(rows) == x.size();
}

}  // namespace oml::testing
