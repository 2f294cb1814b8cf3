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

#include "oml/linear.hpp"

#include <algorithm>
#include <set>

#include "detail/bitset.hpp"
#include "oml/error.hpp"

namespace oml {

RowEchelon row_reduce(const RationalMatrix& a, const RationalVector& b, std::size_t columns) {
  if (a.size() != b.size()) fail(ErrorKind::InvalidArgument, "row count does not match rhs");
  RationalMatrix m = a;
  RationalVector rhs = b;
  for (auto& row : m) {
    if (row.size() != columns) fail(ErrorKind::InvalidArgument, "ragged matrix");
  }
  RowEchelon out;
  std::size_t r = 0;
  for (std::size_t col = 0; col < columns && r < m.size(); ++col) {
    std::size_t p = r;
    while (p < m.size() && m[p][col] == 0) ++p;
    if (p == m.size()) {
      out.free_columns.push_back(col);
      continue;
    }
    std::swap(m[p], m[r]);
    std::swap(rhs[p], rhs[r]);
    const Rational inv = 1 / m[r][col];
    for (std::size_t j = col; j < columns; ++j) m[r][j] *= inv;
    rhs[r] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][col] == 0) continue;
      const Rational factor = m[i][col];
      for (std::size_t j = col; j < columns; ++j) {
        if (m[r][j] != 0) m[i][j] -= factor * m[r][j];
      }
      rhs[i] -= factor * rhs[r];
    }
    out.pivots.push_back(col);
    ++r;
  }
  // Columns after the last pivot row are free as well.
  const std::size_t last = out.pivots.empty() ? 0 : out.pivots.back() + 1;
  for (std::size_t col = last; col < columns; ++col) {
    if (std::find(out.free_columns.begin(), out.free_columns.end(), col) == out.free_columns.end()) {
      out.free_columns.push_back(col);
    }
  }
  std::sort(out.free_columns.begin(), out.free_columns.end());
  for (std::size_t i = r; i < m.size(); ++i) {
    if (rhs[i] != 0) out.consistent = false;
  }
  m.resize(r);
  rhs.resize(r);
  out.rows = std::move(m);
  out.rhs = std::move(rhs);
  return out;
}

AffineParametrization parametrize(const RowEchelon& echelon, std::size_t columns) {
  if (!echelon.consistent) fail(ErrorKind::InvalidArgument, "cannot parametrize an inconsistent system");
  AffineParametrization out;
  out.free_columns = echelon.free_columns;
  const std::size_t k = out.free_columns.size();
  out.offset.assign(columns, Rational(0));
  out.directions.assign(columns, RationalVector(k, Rational(0)));
  for (std::size_t j = 0; j < k; ++j) out.directions[out.free_columns[j]][j] = 1;
  for (std::size_t i = 0; i < echelon.pivots.size(); ++i) {
    const std::size_t p = echelon.pivots[i];
    out.offset[p] = echelon.rhs[i];
    for (std::size_t j = 0; j < k; ++j) out.directions[p][j] = -echelon.rows[i][out.free_columns[j]];
  }
  return out;
}

namespace {

// Simplex tableau over A x = b with one artificial per row. Columns:
// [0, n) structural, [n, n + m) artificial.
class Tableau {
 public:
  Tableau(const RationalMatrix& a, const RationalVector& b, std::vector<int>& signs)
      : m_(a.size()), n_(a.empty() ? 0 : a[0].size()) {
    cells_.assign(m_, RationalVector(n_ + m_, Rational(0)));
    rhs_.resize(m_);
    basis_.resize(m_);
    signs.assign(m_, 1);
    for (std::size_t i = 0; i < m_; ++i) {
      if (a[i].size() != n_) fail(ErrorKind::InvalidArgument, "ragged LP matrix");
      signs[i] = b[i] < 0 ? -1 : 1;
      for (std::size_t j = 0; j < n_; ++j) cells_[i][j] = signs[i] < 0 ? -a[i][j] : a[i][j];
      rhs_[i] = signs[i] < 0 ? -b[i] : b[i];
      cells_[i][n_ + i] = 1;
      basis_[i] = n_ + i;
    }
  }

  // Minimizes cost . x over the current basis, columns >= `allowed` barred
  // from entering. Returns false when unbounded.
  bool minimize(const RationalVector& cost, std::size_t allowed) {
    for (;;) {
      reduced_ = reduced_costs(cost);
      std::size_t entering = allowed;
      for (std::size_t j = 0; j < allowed; ++j) {
        if (reduced_[j] < 0) {
          entering = j;
          break;
        }
      }
      if (entering == allowed) return true;
      std::size_t leaving = m_;
      Rational best;
      for (std::size_t i = 0; i < m_; ++i) {
        if (cells_[i][entering] <= 0) continue;
        Rational ratio = rhs_[i] / cells_[i][entering];
        if (leaving == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leaving])) {
          leaving = i;
          best = ratio;
        }
      }
      if (leaving == m_) return false;
      pivot(leaving, entering);
    }
  }

  RationalVector reduced_costs(const RationalVector& cost) const {
    RationalVector rc(cost);
    for (std::size_t i = 0; i < m_; ++i) {
      const Rational& cb = cost[basis_[i]];
      if (cb == 0) continue;
      for (std::size_t j = 0; j < rc.size(); ++j) {
        if (cells_[i][j] != 0) rc[j] -= cb * cells_[i][j];
      }
    }
    return rc;
  }

  // Moves artificial columns out of the basis after a zero-cost phase 1.
  void expel_artificials() {
    for (std::size_t i = 0; i < m_;) {
      if (basis_[i] < n_) {
        ++i;
        continue;
      }
      std::size_t col = n_;
      for (std::size_t j = 0; j < n_; ++j) {
        if (cells_[i][j] != 0) {
          col = j;
          break;
        }
      }
      if (col < n_) {
        pivot(i, col);
        ++i;
      } else {
        // Redundant row.
        cells_.erase(cells_.begin() + static_cast<std::ptrdiff_t>(i));
        rhs_.erase(rhs_.begin() + static_cast<std::ptrdiff_t>(i));
        basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
        --m_;
      }
    }
  }

  RationalVector solution() const {
    RationalVector x(n_, Rational(0));
    for (std::size_t i = 0; i < m_; ++i) {
      if (basis_[i] < n_) x[basis_[i]] = rhs_[i];
    }
    return x;
  }

  Rational objective(const RationalVector& cost) const {
    Rational total = 0;
    for (std::size_t i = 0; i < m_; ++i) total += cost[basis_[i]] * rhs_[i];
    return total;
  }

  std::size_t structural() const { return n_; }
  const RationalVector& last_reduced() const { return reduced_; }

 private:
  void pivot(std::size_t row, std::size_t col) {
    const Rational inv = 1 / cells_[row][col];
    for (auto& v : cells_[row]) {
      if (v != 0) v *= inv;
    }
    rhs_[row] *= inv;
    for (std::size_t i = 0; i < m_; ++i) {
      if (i == row || cells_[i][col] == 0) continue;
      const Rational factor = cells_[i][col];
      for (std::size_t j = 0; j < cells_[i].size(); ++j) {
        if (cells_[row][j] != 0) cells_[i][j] -= factor * cells_[row][j];
      }
      rhs_[i] -= factor * rhs_[row];
    }
    basis_[row] = col;
  }

  std::size_t m_;
  std::size_t n_;
  RationalMatrix cells_;
  RationalVector rhs_;
  std::vector<std::size_t> basis_;
  RationalVector reduced_;
};

}  // namespace

LpResult solve_lp(const RationalMatrix& a, const RationalVector& b, const RationalVector& c) {
  if (a.size() != b.size()) fail(ErrorKind::InvalidArgument, "row count does not match rhs");
  const std::size_t n = c.size();
  const std::size_t m = a.size();
  RationalMatrix rows = a;
  if (m == 0) rows.clear();
  for (const auto& row : rows) {
    if (row.size() != n) fail(ErrorKind::InvalidArgument, "LP matrix width does not match objective");
  }

  LpResult result;
  if (m == 0) {
    // Only x >= 0: bounded iff no positive objective coefficient.
    for (const auto& coefficient : c) {
      if (coefficient > 0) {
        result.status = LpStatus::Unbounded;
        return result;
      }
    }
    result.status = LpStatus::Optimal;
    result.x.assign(n, Rational(0));
    result.objective = 0;
    return result;
  }

  std::vector<int> signs;
  RationalMatrix padded = rows;
  Tableau tableau(padded, b, signs);
  RationalVector phase1(n + m, Rational(0));
  for (std::size_t i = 0; i < m; ++i) phase1[n + i] = 1;
  tableau.minimize(phase1, n);
  const Rational infeasibility = tableau.objective(phase1);
  if (infeasibility > 0) {
    // Duals of the phase-1 optimum: y_i = 1 - reduced cost of artificial i.
    const auto rc = tableau.reduced_costs(phase1);
    result.status = LpStatus::Infeasible;
    result.farkas.resize(m);
    for (std::size_t i = 0; i < m; ++i) result.farkas[i] = (1 - rc[n + i]) * signs[i];
    return result;
  }

  tableau.expel_artificials();
  RationalVector phase2(n + m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) phase2[j] = -c[j];
  if (!tableau.minimize(phase2, n)) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  result.status = LpStatus::Optimal;
  result.x = tableau.solution();
  result.objective = 0;
  for (std::size_t j = 0; j < n; ++j) result.objective += c[j] * result.x[j];
  return result;
}

bool verify_farkas(const RationalMatrix& a, const RationalVector& b, const RationalVector& y) {
  if (y.size() != a.size() || b.size() != a.size()) return false;
  Rational yb = 0;
  for (std::size_t i = 0; i < b.size(); ++i) yb += y[i] * b[i];
  if (yb <= 0) return false;
  const std::size_t n = a.empty() ? 0 : a[0].size();
  for (std::size_t j = 0; j < n; ++j) {
    Rational col = 0;
    for (std::size_t i = 0; i < a.size(); ++i) col += y[i] * a[i][j];
    if (col > 0) return false;
  }
  return true;
}

namespace {

// Halfspace coeffs . t + constant >= 0.
struct Halfspace {
  RationalVector coeffs;
  Rational constant;
};

struct Point {
  RationalVector t;
  detail::Bitset tight;
};

Rational evaluate(const Halfspace& h, const RationalVector& t) {
  Rational s = h.constant;
  for (std::size_t j = 0; j < t.size(); ++j) {
    if (h.coeffs[j] != 0 && t[j] != 0) s += h.coeffs[j] * t[j];
  }
  return s;
}

// Scales so the first nonzero coefficient has absolute value 1.
RationalVector normalized_key(const Halfspace& h) {
  RationalVector key = h.coeffs;
  key.push_back(h.constant);
  Rational scale = 0;
  for (const auto& v : h.coeffs) {
    if (v != 0) {
      scale = abs(v);
      break;
    }
  }
  for (auto& v : key) v /= scale;
  return key;
}

}  // namespace

std::vector<RationalVector> box_polytope_vertices(const RationalMatrix& e, const RationalVector& rhs,
                                                  std::size_t columns, std::size_t max_free) {
  const auto echelon = row_reduce(e, rhs, columns);
  if (!echelon.consistent) return {};
  const auto param = parametrize(echelon, columns);
  const std::size_t k = param.free_columns.size();
  if (k > max_free) {
    fail(ErrorKind::Size, "polytope has " + std::to_string(k) + " free dimensions; cap is " +
                              std::to_string(max_free));
  }

  // Free coordinates live in [0,1] directly, so start from the unit cube in
  // parameter space and cut by the bounds of the pivot coordinates.
  std::vector<Halfspace> cuts;
  std::set<RationalVector> seen;
  for (std::size_t j = 0; j < k; ++j) {
    Halfspace lower{RationalVector(k, Rational(0)), Rational(0)};
    lower.coeffs[j] = 1;
    Halfspace upper{RationalVector(k, Rational(0)), Rational(1)};
    upper.coeffs[j] = -1;
    seen.insert(normalized_key(lower));
    seen.insert(normalized_key(upper));
    cuts.push_back(std::move(lower));
    cuts.push_back(std::move(upper));
  }
  const std::size_t cube_cuts = cuts.size();
  for (std::size_t p : echelon.pivots) {
    Halfspace lower{param.directions[p], param.offset[p]};
    Halfspace upper{param.directions[p], 1 - param.offset[p]};
    for (auto& v : upper.coeffs) v = -v;
    for (auto* h : {&lower, &upper}) {
      if (std::all_of(h->coeffs.begin(), h->coeffs.end(), [](const Rational& v) { return v == 0; })) {
        if (h->constant < 0) return {};
        continue;
      }
      if (seen.insert(normalized_key(*h)).second) cuts.push_back(*h);
    }
  }

  std::vector<Point> points;
  const std::size_t corners = std::size_t{1} << k;
  for (std::size_t mask = 0; mask < corners; ++mask) {
    Point point{RationalVector(k, Rational(0)), detail::Bitset(cuts.size())};
    for (std::size_t j = 0; j < k; ++j) {
      if ((mask >> j) & 1U) {
        point.t[j] = 1;
        point.tight.set(2 * j + 1);
      } else {
        point.tight.set(2 * j);
      }
    }
    points.push_back(std::move(point));
  }

  for (std::size_t h = cube_cuts; h < cuts.size(); ++h) {
    std::vector<Rational> slack(points.size());
    std::vector<std::size_t> pos, zero, neg;
    for (std::size_t i = 0; i < points.size(); ++i) {
      slack[i] = evaluate(cuts[h], points[i].t);
      if (slack[i] > 0) {
        pos.push_back(i);
      } else if (slack[i] == 0) {
        zero.push_back(i);
      } else {
        neg.push_back(i);
      }
    }
    if (neg.empty()) {
      for (std::size_t i : zero) points[i].tight.set(h);
      continue;
    }
    if (pos.empty() && zero.empty()) return {};

    std::vector<Point> next;
    for (std::size_t i : pos) next.push_back(points[i]);
    for (std::size_t i : zero) {
      next.push_back(points[i]);
      next.back().tight.set(h);
    }
    for (std::size_t p : pos) {
      for (std::size_t q : neg) {
        const auto common = points[p].tight & points[q].tight;
        bool adjacent = true;
        for (std::size_t r = 0; r < points.size() && adjacent; ++r) {
          if (r != p && r != q && common.subset_of(points[r].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        const Rational denom = slack[p] - slack[q];
        Point fresh{RationalVector(k), common};
        for (std::size_t j = 0; j < k; ++j) {
          fresh.t[j] = (slack[p] * points[q].t[j] - slack[q] * points[p].t[j]) / denom;
        }
        fresh.tight.set(h);
        next.push_back(std::move(fresh));
      }
    }
    points = std::move(next);
  }

  std::vector<RationalVector> vertices;
  vertices.reserve(points.size());
  for (const auto& point : points) {
    RationalVector x = param.offset;
    for (std::size_t i = 0; i < columns; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (param.directions[i][j] != 0) x[i] += param.directions[i][j] * point.t[j];
      }
    }
    vertices.push_back(std::move(x));
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  return vertices;
}

}  // namespace oml
