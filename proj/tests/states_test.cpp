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


#include <gtest/gtest.h>

#include "oml/error.hpp"
#include "oml/formats.hpp"
#include "oml/states.hpp"
#include "oracles.hpp"

namespace oml {
namespace {

using testing::read_fixture;

State make_state(const std::vector<Rational>& values) { return State{values, false}; }

std::set<std::vector<mpq_class>> as_set(const std::vector<State>& states) {
  std::set<std::vector<mpq_class>> out;
  for (const auto& s : states) out.insert(s.values);
  return out;
}

// MO(2) state with s(a1) = 7/10 and s(a2) = 1/2.
State mo2_example() {
  return make_state({0, Rational(7, 10), Rational(3, 10), Rational(1, 2), Rational(1, 2), 1});
}

TEST(ValidateState, AcceptsKolmogorovStates) {
  const auto s = kolmogorov_from_weights({Rational(1, 2), Rational(1, 3), Rational(1, 6)});
  EXPECT_TRUE(validate_state(gen_boolean(3), s).holds);
  EXPECT_EQ(s[0b101], Rational(2, 3));
  EXPECT_TRUE(validate_state(gen_mo(2), mo2_example()).holds);
}

TEST(ValidateState, ReportsFirstFailingLaw) {
  const auto l = gen_boolean(2);
  // s({0}) = 3/5, s({1}) = 3/5 but s({0,1}) = 1.
  auto s = make_state({0, Rational(3, 5), Rational(3, 5), 1});
  auto r = validate_state(l, s);
  EXPECT_FALSE(r.holds);
  EXPECT_EQ(r.law, Law::StateAdditivity);
  EXPECT_EQ(r.witness, (std::vector<Element>{1, 2}));

  r = validate_state(l, make_state({Rational(1, 10), 0, 0, 1}));
  EXPECT_EQ(r.law, Law::StateBottom);
  r = validate_state(l, make_state({0, 0, 0, Rational(1, 2)}));
  EXPECT_EQ(r.law, Law::StateTop);
  r = validate_state(gen_mo(1), make_state({0, Rational(3, 2), Rational(-1, 2), 1}));
  EXPECT_EQ(r.law, Law::StateRange);
}

TEST(ValidateState, ToleranceMode) {
  auto s = mo2_example();
  s.values[1] += Rational(1, 1000000) / 10000;
  EXPECT_FALSE(validate_state(gen_mo(2), s).holds);
  EXPECT_TRUE(validate_state(gen_mo(2), s, approximate_tolerance()).holds);
  s.approximate = true;
  EXPECT_TRUE(validate_state_auto(gen_mo(2), s).holds);
}

TEST(ValidateState, MissingElements) {
  try {
    validate_state(gen_mo(2), make_state({0, 1}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::MissingElement);
  }
}

TEST(Kolmogorov, RejectsBadWeights) {
  try {
    kolmogorov_from_weights({Rational(1, 2), Rational(1, 3)});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::Normalization);
  }
  EXPECT_THROW(kolmogorov_from_weights({Rational(3, 2), Rational(-1, 2)}), Error);
}

TEST(Polytope, ConstraintCounts) {
  const StatePolytope p(gen_mo(2));
  EXPECT_EQ(p.count(ConstraintKind::Bottom), 1u);
  EXPECT_EQ(p.count(ConstraintKind::Top), 1u);
  EXPECT_EQ(p.count(ConstraintKind::Complement), 3u);
  // Orthogonal nonzero pairs: (a1,~a1), (a2,~a2).
  EXPECT_EQ(p.count(ConstraintKind::Additivity), 2u);
  EXPECT_EQ(p.equality_dimension(), 2);
  EXPECT_EQ(StatePolytope(gen_boolean(3)).equality_dimension(), 2);
  EXPECT_TRUE(p.satisfied_by(mo2_example().values));
  EXPECT_FALSE(p.satisfied_by(RationalVector(6, Rational(1, 2))));
}

TEST(Polytope, VerticesMatchBruteForce) {
  const std::vector<OrthoLattice> lattices{gen_boolean(1), gen_boolean(2), gen_boolean(3), gen_mo(1),
                                           gen_mo(2),      gen_mo(3),      parse_any(read_fixture("o6.oml"))};
  for (const auto& l : lattices) {
    const StatePolytope p(l);
    EXPECT_EQ(as_set(p.vertices()), testing::brute_force_vertices(l)) << serialize(l);
  }
}

TEST(Polytope, VerticesAreExtremeStates) {
  for (const auto& name : {"chain3.gre", "pentagon.gre", "mo2.gre"}) {
    const auto l = parse_any(read_fixture(name));
    const StatePolytope p(l);
    ASSERT_FALSE(p.vertices().empty()) << name;
    for (const auto& v : p.vertices()) {
      EXPECT_TRUE(validate_state(l, v).holds) << name;
      EXPECT_TRUE(testing::is_state_vertex(l, v.values)) << name;
    }
  }
  for (unsigned n = 2; n <= 5; ++n) {
    const auto l = gen_mo(n);
    const StatePolytope p(l);
    const auto& v = p.vertices();
    EXPECT_EQ(v.size(), std::size_t{1} << n);
    for (const auto& s : v) EXPECT_TRUE(testing::is_state_vertex(l, s.values));
  }
}

TEST(Polytope, BooleanVerticesArePointMasses) {
  for (unsigned n = 1; n <= 4; ++n) {
    const auto l = gen_boolean(n);
    const StatePolytope p(l);
    const auto& v = p.vertices();
    ASSERT_EQ(v.size(), n);
    std::set<std::vector<mpq_class>> expected;
    for (unsigned k = 0; k < n; ++k) {
      RationalVector w(n, Rational(0));
      w[k] = 1;
      expected.insert(kolmogorov_from_weights(w).values);
    }
    EXPECT_EQ(as_set(v), expected);
  }
}

TEST(Polytope, FreeDimensionCap) {
  EXPECT_THROW(StatePolytope(gen_mo(13)).vertices(), Error);
}

TEST(Feasibility, StatefulAndStateless) {
  const auto ok = admits_state(gen_mo(3));
  ASSERT_TRUE(ok.feasible);
  EXPECT_TRUE(validate_state(gen_mo(3), *ok.state).holds);

  const auto stateless = parse_any(read_fixture("stateless.oml"));
  const auto none = admits_state(stateless);
  EXPECT_FALSE(none.feasible);
  EXPECT_TRUE(verify_farkas(none.system, none.system_rhs, none.farkas));
  EXPECT_TRUE(StatePolytope(stateless).vertices().empty());
  try {
    random_state(stateless, 1);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoState);
  }
}

TEST(Feasibility, O6HasStates) {
  const auto o6 = parse_any(read_fixture("o6.oml"));
  EXPECT_TRUE(admits_state(o6).feasible);
}

TEST(RandomState, DeterministicValidAndInterior) {
  const StatePolytope p(gen_mo(3));
  const auto a = random_state(p, 42);
  EXPECT_EQ(a, random_state(p, 42));
  EXPECT_NE(a, random_state(p, 43));
  EXPECT_TRUE(validate_state(gen_mo(3), a).holds);
  EXPECT_TRUE(p.satisfied_by(a.values));
  // Strictly positive weights on every vertex keep atoms off the boundary.
  for (Element e = 1; e + 1 < 8; ++e) {
    EXPECT_GT(a[e], 0);
    EXPECT_LT(a[e], 1);
  }
}

TEST(Defects, InclusionExclusionVanishesClassically) {
  const auto l = gen_boolean(4);
  const StatePolytope p(l);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = random_state(p, seed);
    for (Element a = 0; a < l.size(); ++a) {
      for (Element b = 0; b < l.size(); ++b) {
        const auto r = inclusion_exclusion_defect(l, s, a, b);
        ASSERT_EQ(r.defect, 0);
        ASSERT_EQ(r.defect, r.left - r.right);
      }
    }
  }
}

TEST(Defects, TotalProbabilityOnMo2) {
  const auto r = total_probability_defect(gen_mo(2), mo2_example(), 1, 3);
  EXPECT_EQ(r.kind, DefectKind::TotalProbability);
  EXPECT_EQ(r.left, Rational(7, 10));
  EXPECT_EQ(r.right, 0);
  EXPECT_EQ(r.defect, Rational(7, 10));
  const auto ie = inclusion_exclusion_defect(gen_mo(2), mo2_example(), 1, 3);
  EXPECT_EQ(ie.defect, Rational(1) - Rational(7, 10) - Rational(1, 2));
}

TEST(Defects, TotalProbabilityVanishesOnBooleanVertices) {
  const auto l = gen_boolean(3);
  const StatePolytope p(l);
  for (const auto& s : p.vertices()) {
    for (Element a = 0; a < l.size(); ++a) {
      for (Element b = 0; b < l.size(); ++b) ASSERT_EQ(total_probability_defect(l, s, a, b).defect, 0);
    }
  }
}

TEST(Superadditivity, Mo2Witness) {
  const auto w = superadditivity_witness(gen_mo(2));
  ASSERT_TRUE(w.has_value());
  EXPECT_EQ(w->report.defect, 1);
  EXPECT_EQ(w->state[w->a], 0);
  EXPECT_EQ(w->state[w->b], 0);
  EXPECT_EQ(w->state[gen_mo(2).join(w->a, w->b)], 1);
  EXPECT_TRUE(validate_state(gen_mo(2), w->state).holds);
}

TEST(Superadditivity, NoneOnBooleanAlgebras) {
  for (unsigned n = 1; n <= 3; ++n) EXPECT_FALSE(superadditivity_witness(gen_boolean(n)).has_value());
}

TEST(Superadditivity, OptimumMatchesVertexScan) {
  // The LP optimum over the polytope equals the best vertex.
  const auto l = parse_any(read_fixture("chain3.gre"));
  const auto w = superadditivity_witness(l);
  Rational best = 0;
  const StatePolytope p(l);
  for (const auto& v : p.vertices()) {
    for (Element a = 0; a < l.size(); ++a) {
      for (Element b = a + 1; b < l.size(); ++b) {
        if (a == l.bottom() || b == l.bottom() || l.meet(a, b) != l.bottom() || l.is_orthogonal(a, b)) continue;
        best = std::max(best, Rational(v[l.join(a, b)] - v[a] - v[b]));
      }
    }
  }
  if (best > 0) {
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->report.defect, best);
  } else {
    EXPECT_FALSE(w.has_value());
  }
}

}  // namespace
}  // namespace oml
