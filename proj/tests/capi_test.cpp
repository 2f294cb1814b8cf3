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

#include <cmath>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "omlprob/omlprob.h"

namespace {

std::string take(char* s) {
  std::string out = s ? s : "";
  oml_string_free(s);
  return out;
}

std::string fixture(const std::string& name) {
  std::ifstream in(std::string(OMLPROB_FIXTURE_DIR) + "/" + name);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

oml_lattice* parse(const std::string& text) {
  oml_lattice* l = nullptr;
  EXPECT_EQ(oml_lattice_parse(text.data(), text.size(), &l), OML_OK) << oml_last_error();
  return l;
}

TEST(CApi, StatusNamesAndVersion) {
  EXPECT_STRNE(oml_version(), "");
  EXPECT_STREQ(oml_status_name(OML_OK), "ok");
  for (int s = OML_OK; s <= OML_ERR_INTERNAL; ++s) EXPECT_NE(oml_status_name(s), nullptr);
  EXPECT_STREQ(oml_law_name(OML_LAW_ORTHOMODULAR), oml_law_name(OML_LAW_ORTHOMODULAR));
  EXPECT_STREQ(oml_law_name(1000), "unknown");
}

TEST(CApi, NullArgumentsAreRejected) {
  EXPECT_EQ(oml_lattice_gen_mo(2, nullptr), OML_ERR_INVALID_ARGUMENT);
  EXPECT_STRNE(oml_last_error(), "");
  oml_lattice* l = nullptr;
  EXPECT_EQ(oml_lattice_parse(nullptr, 3, &l), OML_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(l, nullptr);
  EXPECT_EQ(oml_lattice_serialize(nullptr, nullptr), OML_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(oml_lattice_size(nullptr), 0u);
  oml_lattice_free(nullptr);
  oml_report_free(nullptr);
  oml_state_free(nullptr);
  oml_string_free(nullptr);
}

TEST(CApi, ErrorsCarryKindAndMessage) {
  oml_lattice* l = nullptr;
  const std::string bad = "oml 1\nelements 0 1\northo 0 1\nleq 0 2\n";
  EXPECT_NE(oml_lattice_parse(bad.data(), bad.size(), &l), OML_OK);
  EXPECT_EQ(l, nullptr);
  EXPECT_STRNE(oml_last_error(), "");
  EXPECT_EQ(oml_lattice_gen_boolean(0, &l), OML_ERR_SIZE);
  EXPECT_EQ(oml_lattice_gen_boolean(21, &l), OML_ERR_SIZE);
  const std::string loop = fixture("loop3.gre");
  EXPECT_EQ(oml_lattice_parse(loop.data(), loop.size(), &l), OML_ERR_PASTING_INVALID);
  ASSERT_EQ(oml_lattice_gen_mo(2, &l), OML_OK);
  EXPECT_STREQ(oml_last_error(), "");
  uint32_t out = 0;
  EXPECT_EQ(oml_lattice_meet(l, 0, 99, &out), OML_ERR_OUT_OF_RANGE);
  EXPECT_EQ(oml_lattice_find(l, "nope", &out), OML_ERR_MISSING_ELEMENT);
  oml_lattice_free(l);
}

TEST(CApi, LatticeOperations) {
  oml_lattice* l = nullptr;
  ASSERT_EQ(oml_lattice_gen_mo(2, &l), OML_OK);
  EXPECT_EQ(oml_lattice_size(l), 6u);
  EXPECT_EQ(oml_lattice_bottom(l), 0u);
  EXPECT_EQ(oml_lattice_top(l), 5u);
  uint32_t a1 = 0, a2 = 0, m = 0, j = 0, o = 0;
  ASSERT_EQ(oml_lattice_find(l, "a1", &a1), OML_OK);
  ASSERT_EQ(oml_lattice_find(l, "a2", &a2), OML_OK);
  ASSERT_EQ(oml_lattice_meet(l, a1, a2, &m), OML_OK);
  ASSERT_EQ(oml_lattice_join(l, a1, a2, &j), OML_OK);
  ASSERT_EQ(oml_lattice_ortho(l, a1, &o), OML_OK);
  EXPECT_EQ(m, 0u);
  EXPECT_EQ(j, 5u);
  char* label = nullptr;
  ASSERT_EQ(oml_lattice_label(l, o, &label), OML_OK);
  EXPECT_EQ(take(label), "~a1");
  int leq = -1;
  ASSERT_EQ(oml_lattice_leq(l, 0, a1, &leq), OML_OK);
  EXPECT_EQ(leq, 1);

  char* text = nullptr;
  ASSERT_EQ(oml_lattice_serialize(l, &text), OML_OK);
  oml_lattice* again = parse(take(text));
  int equal = 0;
  ASSERT_EQ(oml_lattice_equal(l, again, &equal), OML_OK);
  EXPECT_EQ(equal, 1);
  char* f1 = nullptr;
  char* f2 = nullptr;
  ASSERT_EQ(oml_lattice_fingerprint(l, &f1), OML_OK);
  ASSERT_EQ(oml_lattice_fingerprint(again, &f2), OML_OK);
  const std::string fp = take(f1);
  EXPECT_EQ(fp.size(), 16u);
  EXPECT_EQ(fp, take(f2));
  oml_lattice* copy = nullptr;
  ASSERT_EQ(oml_lattice_clone(l, &copy), OML_OK);
  oml_lattice_free(l);
  EXPECT_EQ(oml_lattice_size(copy), 6u);
  oml_lattice_free(copy);
  oml_lattice_free(again);
}

TEST(CApi, LawReports) {
  oml_lattice* l = parse(fixture("o6.oml"));
  oml_report* r = nullptr;
  ASSERT_EQ(oml_check_law(l, OML_LAW_ORTHOMODULAR, &r), OML_OK);
  EXPECT_EQ(oml_report_holds(r), 0);
  EXPECT_EQ(oml_report_law(r), OML_LAW_ORTHOMODULAR);
  EXPECT_GT(oml_report_witness_size(r), 0u);
  EXPECT_NE(oml_report_witness(r), nullptr);
  EXPECT_STRNE(oml_report_detail(r), "");
  oml_report_free(r);
  EXPECT_EQ(oml_check_law(l, 999, &r), OML_ERR_INVALID_ARGUMENT);
  oml_blocks* b = nullptr;
  EXPECT_NE(oml_lattice_blocks(l, &b), OML_OK);
  oml_lattice_free(l);

  l = parse(fixture("pentagon.gre"));
  ASSERT_EQ(oml_lattice_blocks(l, &b), OML_OK);
  EXPECT_EQ(oml_blocks_count(b), 5u);
  for (size_t i = 0; i < oml_blocks_count(b); ++i) {
    EXPECT_EQ(oml_blocks_size(b, i), 8u);
    EXPECT_NE(oml_blocks_elements(b, i), nullptr);
  }
  oml_blocks_free(b);
  oml_lattice_free(l);
}

TEST(CApi, StatesAndPolytope) {
  oml_lattice* l = nullptr;
  ASSERT_EQ(oml_lattice_gen_mo(2, &l), OML_OK);
  const char* values[] = {"0", "7/10", "3/10", "1/2", "1/2", "1"};
  oml_state* s = nullptr;
  ASSERT_EQ(oml_state_new(values, 6, 0, &s), OML_OK);
  oml_report* r = nullptr;
  ASSERT_EQ(oml_state_validate(l, s, &r), OML_OK);
  EXPECT_EQ(oml_report_holds(r), 1);
  oml_report_free(r);
  ASSERT_EQ(oml_cox_rules_check(l, s, &r), OML_OK);
  EXPECT_EQ(oml_report_holds(r), 1);
  EXPECT_EQ(oml_report_law(r), OML_LAW_COX_FAMILY_ADDITIVITY);
  oml_report_free(r);
  char* v = nullptr;
  ASSERT_EQ(oml_state_value(s, 1, &v), OML_OK);
  EXPECT_EQ(take(v), "7/10");
  double d = 0;
  ASSERT_EQ(oml_state_value_double(s, 2, &d), OML_OK);
  EXPECT_DOUBLE_EQ(d, 0.3);

  char* text = nullptr;
  ASSERT_EQ(oml_state_format(l, s, &text), OML_OK);
  const std::string formatted = take(text);
  oml_state* back = nullptr;
  ASSERT_EQ(oml_state_parse(l, formatted.data(), formatted.size(), &back), OML_OK);
  for (uint32_t e = 0; e < 6; ++e) {
    char* x = nullptr;
    char* y = nullptr;
    oml_state_value(s, e, &x);
    oml_state_value(back, e, &y);
    EXPECT_EQ(take(x), take(y));
  }
  oml_state_free(back);

  char* defect = nullptr;
  char* left = nullptr;
  char* right = nullptr;
  ASSERT_EQ(oml_defect(l, s, OML_DEFECT_TOTAL_PROBABILITY, 1, 3, &defect, &left, &right), OML_OK);
  EXPECT_EQ(take(left), "7/10");
  take(right);
  take(defect);
  oml_state_free(s);

  const char* bad[] = {"1/2", "1/2"};
  EXPECT_EQ(oml_state_new(bad, 2, 0, &s), OML_OK);
  EXPECT_EQ(oml_state_validate(l, s, &r), OML_ERR_MISSING_ELEMENT);
  oml_state_free(s);
  const char* junk[] = {"x"};
  EXPECT_EQ(oml_state_new(junk, 1, 0, &s), OML_ERR_PARSE);

  oml_polytope* p = nullptr;
  ASSERT_EQ(oml_polytope_new(l, &p), OML_OK);
  EXPECT_EQ(oml_polytope_dimension(p), 2);
  oml_state_list* list = nullptr;
  ASSERT_EQ(oml_polytope_vertices(p, &list), OML_OK);
  EXPECT_EQ(oml_state_list_size(list), 4u);
  EXPECT_NE(oml_state_list_at(list, 0), nullptr);
  EXPECT_EQ(oml_state_list_at(list, 4), nullptr);
  oml_state_list_free(list);
  oml_polytope_free(p);

  int found = 0;
  uint32_t a = 0, b = 0;
  oml_state* witness = nullptr;
  ASSERT_EQ(oml_superadditivity_witness(l, &found, &a, &b, &defect, &witness), OML_OK);
  EXPECT_EQ(found, 1);
  EXPECT_EQ(take(defect), "1/1");
  oml_state_free(witness);
  oml_lattice_free(l);
}

TEST(CApi, AdmitsStateAndFarkas) {
  oml_lattice* l = parse(fixture("stateless.oml"));
  int feasible = -1, ok = -1;
  oml_state* s = nullptr;
  char* farkas = nullptr;
  ASSERT_EQ(oml_admits_state(l, &feasible, &s, &farkas, &ok), OML_OK);
  EXPECT_EQ(feasible, 0);
  EXPECT_EQ(s, nullptr);
  EXPECT_EQ(ok, 1);
  EXPECT_FALSE(take(farkas).empty());
  EXPECT_EQ(oml_random_state(l, 1, &s), OML_ERR_NO_STATE);
  oml_lattice_free(l);

  ASSERT_EQ(oml_lattice_gen_boolean(3, &l), OML_OK);
  farkas = nullptr;
  ASSERT_EQ(oml_admits_state(l, &feasible, &s, &farkas, &ok), OML_OK);
  EXPECT_EQ(feasible, 1);
  ASSERT_NE(s, nullptr);
  EXPECT_EQ(farkas, nullptr);
  oml_state_free(s);
  oml_state* r1 = nullptr;
  oml_state* r2 = nullptr;
  ASSERT_EQ(oml_random_state(l, 7, &r1), OML_OK);
  ASSERT_EQ(oml_random_state(l, 7, &r2), OML_OK);
  char* t1 = nullptr;
  char* t2 = nullptr;
  oml_state_format(l, r1, &t1);
  oml_state_format(l, r2, &t2);
  EXPECT_EQ(take(t1), take(t2));
  oml_state_free(r1);
  oml_state_free(r2);

  const char* weights[] = {"1/2", "1/4", "1/4"};
  ASSERT_EQ(oml_kolmogorov_from_weights(weights, 3, &s), OML_OK);
  EXPECT_EQ(oml_state_size(s), 8u);
  oml_state_free(s);
  const char* heavy[] = {"1/2", "1/2", "1/2"};
  EXPECT_EQ(oml_kolmogorov_from_weights(heavy, 3, &s), OML_ERR_NORMALIZATION);
  oml_lattice_free(l);
}

TEST(CApi, HilbertQubitClosure) {
  const double re[] = {1, 0, 1 / std::sqrt(2.0), 1 / std::sqrt(2.0)};
  const double im[] = {0, 0, 0, 0};
  oml_closure* c = nullptr;
  ASSERT_EQ(oml_closure_new(2, 2, re, im, 0, 0, &c), OML_OK) << oml_last_error();
  EXPECT_EQ(oml_closure_dimension(c), 2u);
  oml_lattice* l = nullptr;
  ASSERT_EQ(oml_closure_lattice(c, &l), OML_OK);
  EXPECT_EQ(oml_lattice_size(l), 6u);
  size_t rank = 0;
  ASSERT_EQ(oml_closure_rank(c, oml_lattice_top(l), &rank), OML_OK);
  EXPECT_EQ(rank, 2u);
  const double rho_re[] = {1, 0, 0, 0};
  const double rho_im[] = {0, 0, 0, 0};
  oml_state* s = nullptr;
  ASSERT_EQ(oml_closure_born_state(c, rho_re, rho_im, &s), OML_OK);
  EXPECT_EQ(oml_state_approximate(s), 1);
  oml_report* r = nullptr;
  ASSERT_EQ(oml_state_validate(l, s, &r), OML_OK);
  EXPECT_EQ(oml_report_holds(r), 1);
  oml_report_free(r);
  oml_state_free(s);
  oml_lattice_free(l);
  oml_closure_free(c);

  EXPECT_EQ(oml_closure_new(2, 2, re, im, 3, 0, &c), OML_ERR_CLOSURE_OVERFLOW);
}

TEST(CApi, BornRule) {
  std::vector<double> re(9), im(9);
  ASSERT_EQ(oml_random_density(3, 5, re.data(), im.data()), OML_OK);
  std::vector<double> ure(9), uim(9);
  ASSERT_EQ(oml_random_unitary(3, 6, ure.data(), uim.data()), OML_OK);
  double probs[3] = {0, 0, 0};
  ASSERT_EQ(oml_born_resolution(3, re.data(), im.data(), ure.data(), uim.data(), 0, probs), OML_OK);
  EXPECT_NEAR(probs[0] + probs[1] + probs[2], 1.0, 1e-12);
  const double id_re[] = {1, 0, 0, 0, 1, 0, 0, 0, 1};
  const double zeros[9] = {};
  double p = 0;
  ASSERT_EQ(oml_born(3, re.data(), im.data(), id_re, zeros, 0, &p), OML_OK);
  EXPECT_NEAR(p, 1.0, 1e-12);
  const double half[] = {0.5, 0, 0, 0, 0.5, 0, 0, 0, 0.5};
  EXPECT_EQ(oml_born(3, re.data(), im.data(), half, zeros, 0, &p), OML_ERR_INVALID_MATRIX);
  char* text = nullptr;
  ASSERT_EQ(oml_matrix_format(3, 3, re.data(), im.data(), &text), OML_OK);
  EXPECT_EQ(take(text).rfind("mat 3 3", 0), 0u);
}

TEST(CApi, GridLifecycle) {
  oml_grid* g = nullptr;
  ASSERT_EQ(oml_grid_builtin("sum", 33, 1.0, &g), OML_OK);
  EXPECT_EQ(oml_grid_points(g), 33u);
  EXPECT_EQ(oml_grid_x_max(g), 1.0);
  EXPECT_DOUBLE_EQ(oml_grid_value(g, 4, 8), 0.375);
  double residual = -1;
  size_t admissible = 0, skipped = 0, worst[3];
  ASSERT_EQ(oml_grid_residual(g, &residual, &admissible, &skipped, worst), OML_OK);
  EXPECT_EQ(residual, 0.0);
  EXPECT_EQ(admissible + skipped, 33u * 33u * 33u);

  char* text = nullptr;
  ASSERT_EQ(oml_grid_format(g, &text), OML_OK);
  const std::string formatted = take(text);
  oml_grid* back = nullptr;
  ASSERT_EQ(oml_grid_parse(formatted.data(), formatted.size(), &back), OML_OK);
  EXPECT_EQ(oml_grid_value(back, 4, 8), oml_grid_value(g, 4, 8));
  oml_grid_free(back);

  oml_grid* moved = nullptr;
  ASSERT_EQ(oml_grid_transport(g, "square", &moved), OML_OK);
  EXPECT_NEAR(oml_grid_value(moved, 8, 8), 1.0, 1e-12);
  oml_grid_free(moved);
  EXPECT_EQ(oml_grid_transport(g, "cube", &moved), OML_ERR_INVALID_ARGUMENT);
  EXPECT_EQ(oml_grid_transport(g, "scale:0.5", &moved), OML_ERR_INVALID_ARGUMENT);

  oml_representation* rep = nullptr;
  ASSERT_EQ(oml_grid_extract(g, 0.25, &rep), OML_OK);
  EXPECT_LT(oml_representation_residual(rep), 1e-9);
  EXPECT_EQ(oml_representation_points(rep), 33u);
  EXPECT_NEAR(oml_representation_h(rep, 32), 4.0, 1e-9);
  EXPECT_GT(oml_representation_knots(rep), 0u);
  EXPECT_GT(oml_representation_pairs(rep), 0u);
  oml_representation_free(rep);
  oml_grid_free(g);

  ASSERT_EQ(oml_grid_builtin("sumsq", 65, 1.0, &g), OML_OK);
  EXPECT_EQ(oml_grid_extract(g, 0.25, &rep), OML_ERR_PRECONDITION);
  oml_grid_free(g);
  EXPECT_EQ(oml_grid_builtin("nope", 65, 1.0, &g), OML_ERR_INVALID_ARGUMENT);
}

}  // namespace
