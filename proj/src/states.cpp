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

#include "oml/states.hpp"

#include <algorithm>
#include <bit>
#include <random>

#include "oml/error.hpp"

namespace oml {

namespace {

void require_cover(const OrthoLattice& lattice, const State& s) {
  if (s.values.size() != lattice.size()) {
    fail(ErrorKind::MissingElement, "state assigns " + std::to_string(s.values.size()) +
                                        " values; lattice has " + std::to_string(lattice.size()) +
                                        " elements");
  }
}

bool close(const Rational& x, const Rational& y, const Rational& tol) {
  return tol == 0 ? x == y : abs(x - y) <= tol;
}

// Standard form over z = (x, u): the state equalities on x plus x + u = 1,
// z >= 0.
struct StandardForm {
  RationalMatrix a;
  RationalVector b;
};

StandardForm standard_form(const StatePolytope& polytope) {
  const std::size_t n = polytope.variables();
  StandardForm form;
  for (const auto& eq : polytope.equalities()) {
    RationalVector row(2 * n, Rational(0));
    for (const auto& [e, c] : eq.terms) row[e] += c;
    form.a.push_back(std::move(row));
    form.b.push_back(eq.rhs);
  }
  for (std::size_t i = 0; i < n; ++i) {
    RationalVector row(2 * n, Rational(0));
    row[i] = 1;
    row[n + i] = 1;
    form.a.push_back(std::move(row));
    form.b.push_back(1);
  }
  return form;
}

}  // namespace

const char* to_string(DefectKind kind) noexcept {
  switch (kind) {
    case DefectKind::InclusionExclusion: return "inclusion-exclusion";
    case DefectKind::TotalProbability: return "total-probability";
    case DefectKind::Superadditivity: return "superadditivity";
  }
  return "unknown";
}

Rational approximate_tolerance() { return Rational(1, 1000000000); }

LawReport validate_state(const OrthoLattice& lattice, const State& s, const Rational& tolerance) {
  require_cover(lattice, s);
  const auto n = static_cast<Element>(lattice.size());
  const Element bottom = lattice.bottom();
  const Element top = lattice.top();
  if (!close(s[bottom], 0, tolerance)) {
    return LawReport::violation(Law::StateBottom, {bottom}, "s(0) = " + format_rational(s[bottom]));
  }
  if (!close(s[top], 1, tolerance)) {
    return LawReport::violation(Law::StateTop, {top}, "s(1) = " + format_rational(s[top]));
  }
  for (Element a = 0; a < n; ++a) {
    if (a == bottom) continue;
    for (Element b = a + 1; b < n; ++b) {
      if (b == bottom || !lattice.is_orthogonal(a, b)) continue;
      const Element j = lattice.join(a, b);
      if (!close(s[j], s[a] + s[b], tolerance)) {
        return LawReport::violation(Law::StateAdditivity, {a, b},
                                    "s(a v b) = " + format_rational(s[j]) + " but s(a) + s(b) = " +
                                        format_rational(s[a] + s[b]));
      }
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (!close(s[lattice.ortho(a)], 1 - s[a], tolerance)) {
      return LawReport::violation(Law::StateComplement, {a}, "s(~a) != 1 - s(a)");
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (s[a] < -tolerance || s[a] > 1 + tolerance) {
      return LawReport::violation(Law::StateRange, {a}, "s(a) = " + format_rational(s[a]));
    }
  }
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b) {
      if (a != b && lattice.leq(a, b) && s[a] > s[b] + tolerance) {
        return LawReport::violation(Law::StateMonotone, {a, b}, "a <= b but s(a) > s(b)");
      }
    }
  }
  return LawReport::pass(Law::StateAdditivity);
}

LawReport validate_state_auto(const OrthoLattice& lattice, const State& s) {
  return validate_state(lattice, s, s.approximate ? approximate_tolerance() : Rational(0));
}

State kolmogorov_from_weights(const RationalVector& weights) {
  if (weights.empty()) fail(ErrorKind::Size, "need at least one outcome weight");
  if (weights.size() > kMaxBooleanAtoms) fail(ErrorKind::Size, "too many outcomes");
  Rational total = 0;
  for (const auto& w : weights) {
    if (w < 0) fail(ErrorKind::Normalization, "negative weight " + format_rational(w));
    total += w;
  }
  if (total != 1) fail(ErrorKind::Normalization, "weights sum to " + format_rational(total));
  const std::size_t size = std::size_t{1} << weights.size();
  State s;
  s.values.assign(size, Rational(0));
  for (std::size_t mask = 1; mask < size; ++mask) {
    // Peel off the lowest outcome and reuse the smaller subset.
    const std::size_t low = mask & (~mask + 1);
    s.values[mask] = s.values[mask ^ low] + weights[static_cast<std::size_t>(std::countr_zero(low))];
  }
  return s;
}

StatePolytope::StatePolytope(const OrthoLattice& lattice) : variables_(lattice.size()) {
  if (lattice.size() > kMaxExplicitElements) {
    fail(ErrorKind::Size, "state polytope capped at " + std::to_string(kMaxExplicitElements) +
                              " elements");
  }
  const auto n = static_cast<Element>(lattice.size());
  const Element bottom = lattice.bottom();
  equalities_.push_back({ConstraintKind::Bottom, {bottom}, {{bottom, 1}}, Rational(0)});
  equalities_.push_back({ConstraintKind::Top, {lattice.top()}, {{lattice.top(), 1}}, Rational(1)});
  for (Element a = 0; a < n; ++a) {
    const Element na = lattice.ortho(a);
    if (a < na) {
      equalities_.push_back({ConstraintKind::Complement, {a, na}, {{a, 1}, {na, 1}}, Rational(1)});
    } else if (a == na) {
      equalities_.push_back({ConstraintKind::Complement, {a, a}, {{a, 2}}, Rational(1)});
    }
  }
  for (Element a = 0; a < n; ++a) {
    if (a == bottom) continue;
    for (Element b = a + 1; b < n; ++b) {
      if (b == bottom || !lattice.is_orthogonal(a, b)) continue;
      const Element j = lattice.join(a, b);
      equalities_.push_back(
          {ConstraintKind::Additivity, {a, b}, {{j, 1}, {a, -1}, {b, -1}}, Rational(0)});
    }
  }
}

std::size_t StatePolytope::count(ConstraintKind kind) const {
  return static_cast<std::size_t>(std::count_if(equalities_.begin(), equalities_.end(),
                                                [&](const auto& c) { return c.kind == kind; }));
}

RationalMatrix StatePolytope::matrix() const {
  RationalMatrix m;
  m.reserve(equalities_.size());
  for (const auto& eq : equalities_) {
    RationalVector row(variables_, Rational(0));
    for (const auto& [e, c] : eq.terms) row[e] += c;
    m.push_back(std::move(row));
  }
  return m;
}

RationalVector StatePolytope::rhs() const {
  RationalVector b;
  b.reserve(equalities_.size());
  for (const auto& eq : equalities_) b.push_back(eq.rhs);
  return b;
}

const RowEchelon& StatePolytope::echelon() const {
  if (!echelon_) echelon_ = row_reduce(matrix(), rhs(), variables_);
  return *echelon_;
}

long StatePolytope::equality_dimension() const {
  const auto& ech = echelon();
  if (!ech.consistent) return -1;
  return static_cast<long>(variables_ - ech.pivots.size());
}

std::size_t StatePolytope::free_dimensions() const { return echelon().free_columns.size(); }

bool StatePolytope::satisfied_by(const RationalVector& x) const {
  if (x.size() != variables_) return false;
  for (const auto& v : x) {
    if (v < 0 || v > 1) return false;
  }
  for (const auto& eq : equalities_) {
    Rational lhs = 0;
    for (const auto& [e, c] : eq.terms) lhs += c * x[e];
    if (lhs != eq.rhs) return false;
  }
  return true;
}

const std::vector<State>& StatePolytope::vertices() const {
  if (!vertices_) {
    const auto& ech = echelon();
    std::vector<State> out;
    if (ech.consistent) {
      if (ech.free_columns.size() > kMaxFreeDimensions) {
        fail(ErrorKind::Size, "state polytope has " + std::to_string(ech.free_columns.size()) +
                                  " free dimensions; vertex enumeration is capped at " +
                                  std::to_string(kMaxFreeDimensions));
      }
      for (auto& x : box_polytope_vertices(matrix(), rhs(), variables_, kMaxFreeDimensions)) {
        out.push_back(State{std::move(x), false});
      }
    }
    vertices_ = std::move(out);
  }
  return *vertices_;
}

StatePolytope state_constraints(const OrthoLattice& lattice) { return StatePolytope(lattice); }

StatePolytope state_polytope_vertices(const OrthoLattice& lattice) {
  StatePolytope polytope(lattice);
  polytope.vertices();
  return polytope;
}

Feasibility admits_state(const OrthoLattice& lattice) {
  const StatePolytope polytope(lattice);
  const auto form = standard_form(polytope);
  const std::size_t n = polytope.variables();
  const auto result = solve_lp(form.a, form.b, RationalVector(2 * n, Rational(0)));
  Feasibility out;
  if (result.status == LpStatus::Optimal) {
    out.feasible = true;
    out.state = State{RationalVector(result.x.begin(), result.x.begin() + static_cast<long>(n)), false};
    return out;
  }
  out.feasible = false;
  out.system = form.a;
  out.system_rhs = form.b;
  out.farkas = result.farkas;
  return out;
}

DefectReport inclusion_exclusion_defect(const OrthoLattice& lattice, const State& s, Element a,
                                        Element b) {
  require_cover(lattice, s);
  DefectReport r{DefectKind::InclusionExclusion, {a, b}, {}, {}, {}};
  r.left = s[lattice.join(a, b)];
  r.right = s[a] + s[b] - s[lattice.meet(a, b)];
  r.defect = r.left - r.right;
  return r;
}

DefectReport total_probability_defect(const OrthoLattice& lattice, const State& s, Element a,
                                      Element b) {
  require_cover(lattice, s);
  DefectReport r{DefectKind::TotalProbability, {a, b}, {}, {}, {}};
  r.left = s[a];
  r.right = s[lattice.meet(a, b)] + s[lattice.meet(a, lattice.ortho(b))];
  r.defect = r.left - r.right;
  return r;
}

std::optional<SuperadditivityWitness> superadditivity_witness(const OrthoLattice& lattice) {
  const StatePolytope polytope(lattice);
  const auto form = standard_form(polytope);
  const auto n = static_cast<Element>(lattice.size());
  const Element bottom = lattice.bottom();
  std::optional<SuperadditivityWitness> best;
  for (Element a = 0; a < n; ++a) {
    if (a == bottom) continue;
    for (Element b = a + 1; b < n; ++b) {
      if (b == bottom || lattice.meet(a, b) != bottom) continue;
      // Orthogonal pairs are pinned to zero defect by additivity.
      if (lattice.is_orthogonal(a, b)) continue;
      RationalVector objective(2 * std::size_t{n}, Rational(0));
      objective[lattice.join(a, b)] += 1;
      objective[a] -= 1;
      objective[b] -= 1;
      const auto result = solve_lp(form.a, form.b, objective);
      if (result.status == LpStatus::Infeasible) return std::nullopt;
      if (result.status != LpStatus::Optimal) fail(ErrorKind::Internal, "bounded LP reported unbounded");
      if (result.objective <= 0) continue;
      if (best && result.objective <= best->report.defect) continue;
      State s{RationalVector(result.x.begin(), result.x.begin() + n), false};
      DefectReport report{DefectKind::Superadditivity, {a, b}, s[lattice.join(a, b)], s[a] + s[b], {}};
      report.defect = report.left - report.right;
      best = SuperadditivityWitness{std::move(s), a, b, std::move(report)};
    }
  }
  return best;
}

State random_state(const StatePolytope& polytope, std::uint64_t seed) {
  const auto& vertices = polytope.vertices();
  if (vertices.empty()) fail(ErrorKind::NoState, "the lattice admits no state");
  std::mt19937_64 engine(seed);
  RationalVector values(polytope.variables(), Rational(0));
  Rational total = 0;
  for (const auto& vertex : vertices) {
    const Rational weight(static_cast<long>(1 + engine() % 1000));
    total += weight;
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (vertex.values[i] != 0) values[i] += weight * vertex.values[i];
    }
  }
  for (auto& v : values) v /= total;
  return State{std::move(values), false};
}

State random_state(const OrthoLattice& lattice, std::uint64_t seed) {
  return random_state(StatePolytope(lattice), seed);
}

}  // namespace oml
