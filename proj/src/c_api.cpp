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


#include "omlprob/omlprob.h"

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "oml/cox.hpp"
#include "oml/error.hpp"
#include "oml/formats.hpp"
#include "oml/hilbert.hpp"
#include "oml/lattice.hpp"
#include "oml/states.hpp"

struct oml_lattice {
  oml::OrthoLattice value;
};

struct oml_report {
  oml::LawReport value;
};

struct oml_blocks {
  std::vector<std::vector<oml::Element>> value;
};

struct oml_state {
  oml::State value;
};

struct oml_state_list {
  std::vector<oml_state> value;
};

struct oml_polytope {
  oml::StatePolytope value;
};

struct oml_closure {
  oml::hilbert::ProjectionLattice value;
  oml::hilbert::Tolerances tol;
};

struct oml_grid {
  oml::cox::GridFunction value;
};

struct oml_representation {
  oml::cox::Representation value;
};

namespace {

thread_local std::string last_error;

int set_error(int status, const std::string& message) {
  last_error = message;
  return status;
}

int status_of(oml::ErrorKind kind) { return static_cast<int>(kind) + 1; }

template <typename F>
int guard(F&& body) {
  try {
    last_error.clear();
    body();
    return OML_OK;
  } catch (const oml::Error& e) {
    return set_error(status_of(e.kind()), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(OML_ERR_SIZE, "out of memory");
  } catch (const std::exception& e) {
    return set_error(OML_ERR_INTERNAL, e.what());
  }
}

void require(bool condition, const char* what) {
  if (!condition) oml::fail(oml::ErrorKind::InvalidArgument, what);
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void check_element(const oml::OrthoLattice& lattice, uint32_t e) {
  if (e >= lattice.size()) {
    oml::fail(oml::ErrorKind::OutOfRange, "element " + std::to_string(e) + " outside a lattice of " +
                                              std::to_string(lattice.size()));
  }
}

oml::hilbert::Tolerances tolerances(double tolerance) {
  oml::hilbert::Tolerances tol;
  if (tolerance > 0.0) {
    tol.idempotence = tolerance;
    tol.eigenvalue = tolerance;
    tol.born_clamp = tolerance;
    tol.unit_norm = tolerance;
    tol.rank = tolerance;
  }
  return tol;
}

oml::hilbert::Matrix to_matrix(std::size_t rows, std::size_t cols, const double* re,
                               const double* im) {
  require(re != nullptr, "real part must not be null");
  oml::hilbert::Matrix m(static_cast<Eigen::Index>(rows), static_cast<Eigen::Index>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      const std::size_t k = i * cols + j;
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = {re[k], im ? im[k] : 0.0};
    }
  }
  return m;
}

void from_matrix(const oml::hilbert::Matrix& m, double* re, double* im) {
  require(re != nullptr && im != nullptr, "output buffers must not be null");
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const auto k = static_cast<std::size_t>(i * m.cols() + j);
      re[k] = m(i, j).real();
      im[k] = m(i, j).imag();
    }
  }
}

}  // namespace

extern "C" {

const char* oml_version(void) { return "0.1.0"; }

const char* oml_status_name(int status) {
  if (status == OML_OK) return "ok";
  if (status >= 1 && status <= OML_ERR_INTERNAL) {
    return oml::to_string(static_cast<oml::ErrorKind>(status - 1));
  }
  return "unknown";
}

const char* oml_last_error(void) { return last_error.c_str(); }

void oml_string_free(char* s) { std::free(s); }

// ---- lattices ---------------------------------------------------------------

int oml_lattice_parse(const char* text, size_t length, oml_lattice** out) {
  return guard([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new oml_lattice{oml::parse_any(std::string_view(text, length))};
  });
}

int oml_lattice_gen_boolean(unsigned outcomes, oml_lattice** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    *out = new oml_lattice{oml::gen_boolean(outcomes)};
  });
}

int oml_lattice_gen_mo(unsigned n, oml_lattice** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    *out = new oml_lattice{oml::gen_mo(n)};
  });
}

int oml_lattice_clone(const oml_lattice* lattice, oml_lattice** out) {
  return guard([&] {
    require(lattice != nullptr && out != nullptr, "null argument");
    *out = new oml_lattice{lattice->value};
  });
}

void oml_lattice_free(oml_lattice* lattice) { delete lattice; }

int oml_lattice_serialize(const oml_lattice* lattice, char** out) {
  return guard([&] {
    require(lattice != nullptr && out != nullptr, "null argument");
    *out = copy_string(oml::serialize(lattice->value));
  });
}

int oml_lattice_fingerprint(const oml_lattice* lattice, char** out) {
  return guard([&] {
    require(lattice != nullptr && out != nullptr, "null argument");
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(oml::lattice_fingerprint(lattice->value)));
    *out = copy_string(buf);
  });
}

int oml_lattice_equal(const oml_lattice* lhs, const oml_lattice* rhs, int* out) {
  return guard([&] {
    require(lhs != nullptr && rhs != nullptr && out != nullptr, "null argument");
    *out = lhs->value == rhs->value ? 1 : 0;
  });
}

size_t oml_lattice_size(const oml_lattice* lattice) { return lattice ? lattice->value.size() : 0; }
uint32_t oml_lattice_bottom(const oml_lattice* lattice) { return lattice ? lattice->value.bottom() : 0; }
uint32_t oml_lattice_top(const oml_lattice* lattice) { return lattice ? lattice->value.top() : 0; }

int oml_lattice_leq(const oml_lattice* lattice, uint32_t a, uint32_t b, int* out) {
  return guard([&] {
    require(lattice != nullptr && out != nullptr, "null argument");
    check_element(lattice->value, a);
    check_element(lattice->value, b);
    *out = lattice->value.leq(a, b) ? 1 : 0;
  });
}

int oml_lattice_meet(const oml_lattice* lattice, uint32_t a, uint32_t b, uint32_t* out) {
  return guard([&] {
    require(lattice != nullptr && out != nullptr, "null argument");
    check_element(lattice->value, a);
    check_element(lattice->value, b);
    *out = lattice->value.meet(a, b);
  });
}

int oml_lattice_join(const oml_lattice* lattice, uint32_t a, uint32_t b, uint32_t* out) {
  return guard([&] {
    require(lattice != nullptr && out != nullptr, "null argument");
    check_element(lattice->value, a);
    check_element(lattice->value, b);
    *out = lattice->value.join(a, b);
  });
}

int oml_lattice_ortho(const oml_lattice* lattice, uint32_t a, uint32_t* out) {
  return guard([&] {
    require(lattice != nullptr && out != nullptr, "null argument");
    check_element(lattice->value, a);
    *out = lattice->value.ortho(a);
  });
}

int oml_lattice_label(const oml_lattice* lattice, uint32_t a, char** out) {
  return guard([&] {
    require(lattice != nullptr && out != nullptr, "null argument");
    check_element(lattice->value, a);
    *out = copy_string(lattice->value.label(a));
  });
}

int oml_lattice_find(const oml_lattice* lattice, const char* name, uint32_t* out) {
  return guard([&] {
    require(lattice != nullptr && name != nullptr && out != nullptr, "null argument");
    auto found = lattice->value.find(name);
    if (!found) oml::fail(oml::ErrorKind::MissingElement, std::string("no element named '") + name + "'");
    *out = *found;
  });
}

// ---- law reports ------------------------------------------------------------

int oml_check_law(const oml_lattice* lattice, int law, oml_report** out) {
  return guard([&] {
    require(lattice != nullptr && out != nullptr, "null argument");
    const auto& l = lattice->value;
    switch (law) {
      case OML_LAW_ORTHOMODULAR:
        *out = new oml_report{oml::is_orthomodular(l)};
        return;
      case OML_LAW_MODULAR:
        *out = new oml_report{oml::is_modular(l)};
        return;
      case OML_LAW_DISTRIBUTIVE:
        *out = new oml_report{oml::is_distributive(l)};
        return;
      default:
        break;
    }
    if (law < OML_LAW_PARTIAL_ORDER || law > OML_LAW_COMPLEMENT_MEET) {
      oml::fail(oml::ErrorKind::InvalidArgument, "law " + std::to_string(law) + " is not a lattice law");
    }
    auto reports = oml::validate_ortholattice(l);
    *out = new oml_report{reports.at(static_cast<std::size_t>(law))};
  });
}

void oml_report_free(oml_report* report) { delete report; }
int oml_report_holds(const oml_report* report) { return report && report->value.holds ? 1 : 0; }
int oml_report_law(const oml_report* report) { return report ? static_cast<int>(report->value.law) : -1; }

const char* oml_law_name(int law) {
  if (law < OML_LAW_PARTIAL_ORDER || law > OML_LAW_COX_FAMILY_ADDITIVITY) return "unknown";
  return oml::to_string(static_cast<oml::Law>(law));
}

size_t oml_report_witness_size(const oml_report* report) {
  return report ? report->value.witness.size() : 0;
}

const uint32_t* oml_report_witness(const oml_report* report) {
  return report ? report->value.witness.data() : nullptr;
}

const char* oml_report_detail(const oml_report* report) {
  return report ? report->value.detail.c_str() : "";
}

// ---- blocks -----------------------------------------------------------------

int oml_lattice_blocks(const oml_lattice* lattice, oml_blocks** out) {
  return guard([&] {
    require(lattice != nullptr && out != nullptr, "null argument");
    *out = new oml_blocks{oml::blocks(lattice->value)};
  });
}

void oml_blocks_free(oml_blocks* blocks) { delete blocks; }
size_t oml_blocks_count(const oml_blocks* blocks) { return blocks ? blocks->value.size() : 0; }

size_t oml_blocks_size(const oml_blocks* blocks, size_t index) {
  return blocks && index < blocks->value.size() ? blocks->value[index].size() : 0;
}

const uint32_t* oml_blocks_elements(const oml_blocks* blocks, size_t index) {
  return blocks && index < blocks->value.size() ? blocks->value[index].data() : nullptr;
}

// ---- states -----------------------------------------------------------------

int oml_state_new(const char* const* values, size_t count, int approximate, oml_state** out) {
  return guard([&] {
    require(out != nullptr && (values != nullptr || count == 0), "null argument");
    oml::State s;
    s.approximate = approximate != 0;
    for (size_t i = 0; i < count; ++i) {
      require(values[i] != nullptr, "null value");
      s.values.push_back(oml::parse_rational(values[i]));
    }
    *out = new oml_state{std::move(s)};
  });
}

int oml_state_clone(const oml_state* state, oml_state** out) {
  return guard([&] {
    require(state != nullptr && out != nullptr, "null argument");
    *out = new oml_state{state->value};
  });
}

void oml_state_free(oml_state* state) { delete state; }
size_t oml_state_size(const oml_state* state) { return state ? state->value.values.size() : 0; }
int oml_state_approximate(const oml_state* state) { return state && state->value.approximate ? 1 : 0; }

int oml_state_value(const oml_state* state, uint32_t element, char** out) {
  return guard([&] {
    require(state != nullptr && out != nullptr, "null argument");
    if (element >= state->value.values.size()) oml::fail(oml::ErrorKind::OutOfRange, "element out of range");
    *out = copy_string(oml::format_rational(state->value.values[element]));
  });
}

int oml_state_value_double(const oml_state* state, uint32_t element, double* out) {
  return guard([&] {
    require(state != nullptr && out != nullptr, "null argument");
    if (element >= state->value.values.size()) oml::fail(oml::ErrorKind::OutOfRange, "element out of range");
    *out = state->value.values[element].get_d();
  });
}

int oml_state_parse(const oml_lattice* lattice, const char* text, size_t length, oml_state** out) {
  return guard([&] {
    require(lattice != nullptr && text != nullptr && out != nullptr, "null argument");
    *out = new oml_state{oml::parse_state(lattice->value, std::string_view(text, length))};
  });
}

int oml_state_format(const oml_lattice* lattice, const oml_state* state, char** out) {
  return guard([&] {
    require(lattice != nullptr && state != nullptr && out != nullptr, "null argument");
    *out = copy_string(oml::format_state(lattice->value, state->value));
  });
}

int oml_kolmogorov_from_weights(const char* const* weights, size_t count, oml_state** out) {
  return guard([&] {
    require(weights != nullptr && out != nullptr, "null argument");
    oml::RationalVector w;
    for (size_t i = 0; i < count; ++i) w.push_back(oml::parse_rational(weights[i]));
    *out = new oml_state{oml::kolmogorov_from_weights(w)};
  });
}

int oml_state_validate(const oml_lattice* lattice, const oml_state* state, oml_report** out) {
  return guard([&] {
    require(lattice != nullptr && state != nullptr && out != nullptr, "null argument");
    *out = new oml_report{oml::validate_state_auto(lattice->value, state->value)};
  });
}

int oml_cox_rules_check(const oml_lattice* lattice, const oml_state* state, oml_report** out) {
  return guard([&] {
    require(lattice != nullptr && state != nullptr && out != nullptr, "null argument");
    *out = new oml_report{oml::cox::cox_rules_check(lattice->value, state->value)};
  });
}

void oml_state_list_free(oml_state_list* list) { delete list; }
size_t oml_state_list_size(const oml_state_list* list) { return list ? list->value.size() : 0; }

const oml_state* oml_state_list_at(const oml_state_list* list, size_t index) {
  return list && index < list->value.size() ? &list->value[index] : nullptr;
}

int oml_state_list_format(const oml_lattice* lattice, const oml_state_list* list, char** out) {
  return guard([&] {
    require(lattice != nullptr && list != nullptr && out != nullptr, "null argument");
    std::vector<oml::State> states;
    for (const auto& s : list->value) states.push_back(s.value);
    *out = copy_string(oml::format_states(lattice->value, states));
  });
}

// ---- state polytope ---------------------------------------------------------

int oml_polytope_new(const oml_lattice* lattice, oml_polytope** out) {
  return guard([&] {
    require(lattice != nullptr && out != nullptr, "null argument");
    *out = new oml_polytope{oml::state_constraints(lattice->value)};
  });
}

void oml_polytope_free(oml_polytope* polytope) { delete polytope; }

size_t oml_polytope_equalities(const oml_polytope* polytope) {
  return polytope ? polytope->value.equalities().size() : 0;
}

long oml_polytope_dimension(const oml_polytope* polytope) {
  if (!polytope) return -1;
  try {
    return polytope->value.equality_dimension();
  } catch (...) {
    return -1;
  }
}

int oml_polytope_vertices(const oml_polytope* polytope, oml_state_list** out) {
  return guard([&] {
    require(polytope != nullptr && out != nullptr, "null argument");
    auto list = std::make_unique<oml_state_list>();
    for (const auto& v : polytope->value.vertices()) list->value.push_back(oml_state{v});
    *out = list.release();
  });
}

int oml_admits_state(const oml_lattice* lattice, int* feasible, oml_state** state, char** farkas,
                     int* certificate_ok) {
  return guard([&] {
    require(lattice != nullptr && feasible != nullptr, "null argument");
    auto result = oml::admits_state(lattice->value);
    *feasible = result.feasible ? 1 : 0;
    if (result.feasible) {
      if (state) *state = new oml_state{*result.state};
      return;
    }
    if (farkas) {
      std::string text;
      for (std::size_t i = 0; i < result.farkas.size(); ++i) {
        if (i) text += ' ';
        text += oml::format_rational(result.farkas[i]);
      }
      *farkas = copy_string(text);
    }
    if (certificate_ok) {
      *certificate_ok = oml::verify_farkas(result.system, result.system_rhs, result.farkas) ? 1 : 0;
    }
  });
}

int oml_random_state(const oml_lattice* lattice, uint64_t seed, oml_state** out) {
  return guard([&] {
    require(lattice != nullptr && out != nullptr, "null argument");
    *out = new oml_state{oml::random_state(lattice->value, seed)};
  });
}

// ---- defects ----------------------------------------------------------------

int oml_defect(const oml_lattice* lattice, const oml_state* state, int kind, uint32_t a, uint32_t b,
               char** defect, char** left, char** right) {
  return guard([&] {
    require(lattice != nullptr && state != nullptr && defect != nullptr, "null argument");
    check_element(lattice->value, a);
    check_element(lattice->value, b);
    oml::DefectReport report;
    if (kind == OML_DEFECT_INCLUSION_EXCLUSION) {
      report = oml::inclusion_exclusion_defect(lattice->value, state->value, a, b);
    } else if (kind == OML_DEFECT_TOTAL_PROBABILITY) {
      report = oml::total_probability_defect(lattice->value, state->value, a, b);
    } else {
      oml::fail(oml::ErrorKind::InvalidArgument, "unknown defect kind");
    }
    std::string d = oml::format_rational(report.defect);
    std::string l = oml::format_rational(report.left);
    std::string r = oml::format_rational(report.right);
    *defect = copy_string(d);
    if (left) *left = copy_string(l);
    if (right) *right = copy_string(r);
  });
}

int oml_superadditivity_witness(const oml_lattice* lattice, int* found, uint32_t* a, uint32_t* b,
                                char** defect, oml_state** state) {
  return guard([&] {
    require(lattice != nullptr && found != nullptr, "null argument");
    auto witness = oml::superadditivity_witness(lattice->value);
    *found = witness ? 1 : 0;
    if (!witness) return;
    if (a) *a = witness->a;
    if (b) *b = witness->b;
    if (defect) *defect = copy_string(oml::format_rational(witness->report.defect));
    if (state) *state = new oml_state{witness->state};
  });
}

// ---- Hilbert space ----------------------------------------------------------

int oml_random_density(size_t dimension, uint64_t seed, double* re, double* im) {
  return guard([&] { from_matrix(oml::hilbert::random_density(dimension, seed).matrix(), re, im); });
}

int oml_random_unitary(size_t dimension, uint64_t seed, double* re, double* im) {
  return guard([&] { from_matrix(oml::hilbert::random_unitary(dimension, seed), re, im); });
}

int oml_born(size_t dimension, const double* rho_re, const double* rho_im, const double* p_re,
             const double* p_im, double tolerance, double* out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    const auto tol = tolerances(tolerance);
    oml::hilbert::DensityMatrix rho(to_matrix(dimension, dimension, rho_re, rho_im), tol);
    oml::hilbert::Projection p(to_matrix(dimension, dimension, p_re, p_im), tol);
    *out = oml::hilbert::born(rho, p, tol);
  });
}

int oml_born_resolution(size_t dimension, const double* rho_re, const double* rho_im,
                        const double* u_re, const double* u_im, double tolerance,
                        double* probabilities) {
  return guard([&] {
    require(probabilities != nullptr, "null argument");
    const auto tol = tolerances(tolerance);
    oml::hilbert::DensityMatrix rho(to_matrix(dimension, dimension, rho_re, rho_im), tol);
    const auto u = to_matrix(dimension, dimension, u_re, u_im);
    for (size_t j = 0; j < dimension; ++j) {
      const auto basis = oml::hilbert::SubspaceBasis(u.col(static_cast<Eigen::Index>(j)), tol);
      probabilities[j] = oml::hilbert::born(rho, oml::hilbert::projector_from_basis(basis, tol), tol);
    }
  });
}

int oml_matrix_format(size_t rows, size_t cols, const double* re, const double* im, char** out) {
  return guard([&] {
    require(out != nullptr, "null argument");
    *out = copy_string(oml::hilbert::format_matrix(to_matrix(rows, cols, re, im)));
  });
}

int oml_closure_new(size_t dimension, size_t count, const double* re, const double* im, size_t cap,
                    double tolerance, oml_closure** out) {
  return guard([&] {
    require(out != nullptr && re != nullptr, "null argument");
    const auto tol = tolerances(tolerance);
    std::vector<oml::hilbert::SubspaceBasis> seeds;
    for (size_t k = 0; k < count; ++k) {
      oml::hilbert::Vector v(static_cast<Eigen::Index>(dimension));
      for (size_t i = 0; i < dimension; ++i) {
        v(static_cast<Eigen::Index>(i)) = {re[k * dimension + i], im ? im[k * dimension + i] : 0.0};
      }
      seeds.push_back(oml::hilbert::SubspaceBasis::line(v));
    }
    auto closure = oml::hilbert::generate_projection_lattice(
        seeds, cap == 0 ? oml::hilbert::kDefaultClosureCap : cap, tol);
    *out = new oml_closure{std::move(closure), tol};
  });
}

void oml_closure_free(oml_closure* closure) { delete closure; }

int oml_closure_lattice(const oml_closure* closure, oml_lattice** out) {
  return guard([&] {
    require(closure != nullptr && out != nullptr, "null argument");
    *out = new oml_lattice{closure->value.lattice};
  });
}

size_t oml_closure_dimension(const oml_closure* closure) {
  return closure && !closure->value.embedding.empty() ? closure->value.embedding.front().dimension() : 0;
}

int oml_closure_rank(const oml_closure* closure, uint32_t element, size_t* out) {
  return guard([&] {
    require(closure != nullptr && out != nullptr, "null argument");
    check_element(closure->value.lattice, element);
    *out = closure->value.embedding[element].rank();
  });
}

int oml_closure_born_state(const oml_closure* closure, const double* rho_re, const double* rho_im,
                           oml_state** out) {
  return guard([&] {
    require(closure != nullptr && out != nullptr, "null argument");
    const std::size_t d = oml_closure_dimension(closure);
    oml::hilbert::DensityMatrix rho(to_matrix(d, d, rho_re, rho_im), closure->tol);
    *out = new oml_state{oml::hilbert::born_state_on_lattice(rho, closure->value, closure->tol)};
  });
}

// ---- Cox engine -------------------------------------------------------------

int oml_grid_builtin(const char* name, size_t points, double x_max, oml_grid** out) {
  return guard([&] {
    require(name != nullptr && out != nullptr, "null argument");
    *out = new oml_grid{oml::cox::GridFunction::builtin(
        name, points == 0 ? oml::cox::kDefaultGridPoints : points, x_max)};
  });
}

int oml_grid_parse(const char* text, size_t length, oml_grid** out) {
  return guard([&] {
    require(text != nullptr && out != nullptr, "null argument");
    *out = new oml_grid{oml::cox::parse_grid(std::string_view(text, length))};
  });
}

int oml_grid_format(const oml_grid* grid, char** out) {
  return guard([&] {
    require(grid != nullptr && out != nullptr, "null argument");
    *out = copy_string(oml::cox::format_grid(grid->value));
  });
}

void oml_grid_free(oml_grid* grid) { delete grid; }
size_t oml_grid_points(const oml_grid* grid) { return grid ? grid->value.points() : 0; }
double oml_grid_x_max(const oml_grid* grid) { return grid ? grid->value.x_max() : 0.0; }

double oml_grid_value(const oml_grid* grid, size_t i, size_t j) {
  if (!grid || i >= grid->value.points() || j >= grid->value.points()) return 0.0;
  return grid->value.at(i, j);
}

int oml_grid_residual(const oml_grid* grid, double* residual, size_t* admissible, size_t* skipped,
                      size_t* worst) {
  return guard([&] {
    require(grid != nullptr && residual != nullptr, "null argument");
    const auto report = oml::cox::associativity_residual(grid->value);
    *residual = report.residual;
    if (admissible) *admissible = report.admissible;
    if (skipped) *skipped = report.skipped;
    if (worst) {
      for (int k = 0; k < 3; ++k) worst[k] = report.worst[static_cast<std::size_t>(k)];
    }
  });
}

int oml_grid_transport(const oml_grid* grid, const char* map, oml_grid** out) {
  return guard([&] {
    require(grid != nullptr && map != nullptr && out != nullptr, "null argument");
    const std::string name(map);
    auto parameter = [&](std::size_t prefix) {
      std::size_t used = 0;
      double value = 0.0;
      try {
        value = std::stod(name.substr(prefix), &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != name.size() - prefix) {
        oml::fail(oml::ErrorKind::InvalidArgument, "malformed map '" + name + "'");
      }
      return value;
    };
    std::optional<oml::cox::MonotoneMap> g;
    if (name == "identity") {
      g = oml::cox::MonotoneMap::identity();
    } else if (name == "double") {
      g = oml::cox::MonotoneMap::scale(2.0);
    } else if (name == "square") {
      g = oml::cox::MonotoneMap::power(2.0);
    } else if (name.rfind("scale:", 0) == 0) {
      g = oml::cox::MonotoneMap::scale(parameter(6));
    } else if (name.rfind("power:", 0) == 0) {
      g = oml::cox::MonotoneMap::power(parameter(6));
    } else {
      oml::fail(oml::ErrorKind::InvalidArgument, "unknown map '" + name + "'");
    }
    *out = new oml_grid{oml::cox::rescaling_transport(grid->value, *g)};
  });
}

int oml_grid_extract(const oml_grid* grid, double unit, oml_representation** out) {
  return guard([&] {
    require(grid != nullptr && out != nullptr, "null argument");
    *out = new oml_representation{oml::cox::extract_additive_representation(grid->value, unit)};
  });
}

void oml_representation_free(oml_representation* rep) { delete rep; }
double oml_representation_residual(const oml_representation* rep) { return rep ? rep->value.residual : 0.0; }
size_t oml_representation_pairs(const oml_representation* rep) { return rep ? rep->value.pairs : 0; }
size_t oml_representation_points(const oml_representation* rep) { return rep ? rep->value.h.size() : 0; }

double oml_representation_h(const oml_representation* rep, size_t i) {
  return rep && i < rep->value.h.size() ? rep->value.h[i] : 0.0;
}

size_t oml_representation_knots(const oml_representation* rep) {
  return rep ? rep->value.knots.size() : 0;
}

}  // extern "C"
