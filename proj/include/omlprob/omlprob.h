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


/* C interface to omlprob: finite orthomodular lattices, exact state
 * polytopes, Born-rule states on projection lattices and the Cox
 * functional-equation engine.
 *
 * Every fallible call returns an oml_status; on failure the message of the
 * calling thread is available from oml_last_error(). Objects are opaque and
 * released with the matching *_free function. Strings returned through
 * `char**` are owned by the caller and released with oml_string_free.
 * Rationals travel as "p/q" strings. */

#ifndef OMLPROB_OMLPROB_H_
#define OMLPROB_OMLPROB_H_

#include <stddef.h>
#include <stdint.h>

#if defined(OMLPROB_BUILDING)
#define OMLPROB_API __attribute__((visibility("default")))
#else
#define OMLPROB_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum oml_status {
  OML_OK = 0,
  OML_ERR_INVALID_ARGUMENT = 1,
  OML_ERR_OUT_OF_RANGE = 2,
  OML_ERR_PARSE = 3,
  OML_ERR_DANGLING_REFERENCE = 4,
  OML_ERR_NOT_A_LATTICE = 5,
  OML_ERR_VALIDATION = 6,
  OML_ERR_DIAGRAM = 7,
  OML_ERR_PASTING_INVALID = 8,
  OML_ERR_SIZE = 9,
  OML_ERR_MISSING_ELEMENT = 10,
  OML_ERR_NORMALIZATION = 11,
  OML_ERR_NO_STATE = 12,
  OML_ERR_DIMENSION_MISMATCH = 13,
  OML_ERR_INVALID_MATRIX = 14,
  OML_ERR_ILL_CONDITIONED = 15,
  OML_ERR_CLOSURE_OVERFLOW = 16,
  OML_ERR_PRECONDITION = 17,
  OML_ERR_DOMAIN = 18,
  OML_ERR_INTERNAL = 19
} oml_status;

/* Laws reported by the checks, in a stable numbering. */
typedef enum oml_law {
  OML_LAW_PARTIAL_ORDER = 0,
  OML_LAW_BOUNDS,
  OML_LAW_UNIQUE_MEET,
  OML_LAW_UNIQUE_JOIN,
  OML_LAW_ORTHO_INVOLUTION,
  OML_LAW_ORTHO_ORDER_REVERSING,
  OML_LAW_COMPLEMENT_JOIN,
  OML_LAW_COMPLEMENT_MEET,
  OML_LAW_ORTHOMODULAR,
  OML_LAW_MODULAR,
  OML_LAW_DISTRIBUTIVE,
  OML_LAW_STATE_BOTTOM,
  OML_LAW_STATE_TOP,
  OML_LAW_STATE_ADDITIVITY,
  OML_LAW_STATE_COMPLEMENT,
  OML_LAW_STATE_RANGE,
  OML_LAW_STATE_MONOTONE,
  OML_LAW_COX_NONNEGATIVE,
  OML_LAW_COX_ORDER_PRESERVING,
  OML_LAW_COX_NULLITY,
  OML_LAW_COX_COMPLEMENT,
  OML_LAW_COX_FAMILY_ADDITIVITY
} oml_law;

typedef enum oml_defect_kind {
  OML_DEFECT_INCLUSION_EXCLUSION = 0,
  OML_DEFECT_TOTAL_PROBABILITY = 1
} oml_defect_kind;

typedef struct oml_lattice oml_lattice;
typedef struct oml_report oml_report;
typedef struct oml_blocks oml_blocks;
typedef struct oml_state oml_state;
typedef struct oml_state_list oml_state_list;
typedef struct oml_polytope oml_polytope;
typedef struct oml_closure oml_closure;
typedef struct oml_grid oml_grid;
typedef struct oml_representation oml_representation;

/* ---- general ---------------------------------------------------------- */

OMLPROB_API const char* oml_version(void);
OMLPROB_API const char* oml_status_name(int status);
/* Message of the last failed call on this thread; "" when none. */
OMLPROB_API const char* oml_last_error(void);
OMLPROB_API void oml_string_free(char* s);

/* ---- lattices --------------------------------------------------------- */

/* Parses `.oml` or `.gre` text, dispatching on the header line. */
OMLPROB_API int oml_lattice_parse(const char* text, size_t length, oml_lattice** out);
OMLPROB_API int oml_lattice_gen_boolean(unsigned outcomes, oml_lattice** out);
OMLPROB_API int oml_lattice_gen_mo(unsigned n, oml_lattice** out);
OMLPROB_API int oml_lattice_clone(const oml_lattice* lattice, oml_lattice** out);
OMLPROB_API void oml_lattice_free(oml_lattice* lattice);

OMLPROB_API int oml_lattice_serialize(const oml_lattice* lattice, char** out);
/* 16 lowercase hex digits. */
OMLPROB_API int oml_lattice_fingerprint(const oml_lattice* lattice, char** out);
OMLPROB_API int oml_lattice_equal(const oml_lattice* lhs, const oml_lattice* rhs, int* out);

OMLPROB_API size_t oml_lattice_size(const oml_lattice* lattice);
OMLPROB_API uint32_t oml_lattice_bottom(const oml_lattice* lattice);
OMLPROB_API uint32_t oml_lattice_top(const oml_lattice* lattice);
OMLPROB_API int oml_lattice_leq(const oml_lattice* lattice, uint32_t a, uint32_t b, int* out);
OMLPROB_API int oml_lattice_meet(const oml_lattice* lattice, uint32_t a, uint32_t b, uint32_t* out);
OMLPROB_API int oml_lattice_join(const oml_lattice* lattice, uint32_t a, uint32_t b, uint32_t* out);
OMLPROB_API int oml_lattice_ortho(const oml_lattice* lattice, uint32_t a, uint32_t* out);
OMLPROB_API int oml_lattice_label(const oml_lattice* lattice, uint32_t a, char** out);
/* Resolves a label or a decimal index; OML_ERR_MISSING_ELEMENT if neither. */
OMLPROB_API int oml_lattice_find(const oml_lattice* lattice, const char* name, uint32_t* out);

/* ---- law reports ------------------------------------------------------ */

/* Any oml_law except the state and Cox laws. The ortholattice laws are
 * re-checked on the stored lattice. */
OMLPROB_API int oml_check_law(const oml_lattice* lattice, int law, oml_report** out);
OMLPROB_API void oml_report_free(oml_report* report);
OMLPROB_API int oml_report_holds(const oml_report* report);
OMLPROB_API int oml_report_law(const oml_report* report);
OMLPROB_API const char* oml_law_name(int law);
OMLPROB_API size_t oml_report_witness_size(const oml_report* report);
OMLPROB_API const uint32_t* oml_report_witness(const oml_report* report);
OMLPROB_API const char* oml_report_detail(const oml_report* report);

/* ---- blocks ----------------------------------------------------------- */

OMLPROB_API int oml_lattice_blocks(const oml_lattice* lattice, oml_blocks** out);
OMLPROB_API void oml_blocks_free(oml_blocks* blocks);
OMLPROB_API size_t oml_blocks_count(const oml_blocks* blocks);
OMLPROB_API size_t oml_blocks_size(const oml_blocks* blocks, size_t index);
OMLPROB_API const uint32_t* oml_blocks_elements(const oml_blocks* blocks, size_t index);

/* ---- states ----------------------------------------------------------- */

/* `values` holds one "p/q" (or integer) string per element. */
OMLPROB_API int oml_state_new(const char* const* values, size_t count, int approximate,
                              oml_state** out);
OMLPROB_API int oml_state_clone(const oml_state* state, oml_state** out);
OMLPROB_API void oml_state_free(oml_state* state);
OMLPROB_API size_t oml_state_size(const oml_state* state);
OMLPROB_API int oml_state_approximate(const oml_state* state);
OMLPROB_API int oml_state_value(const oml_state* state, uint32_t element, char** out);
OMLPROB_API int oml_state_value_double(const oml_state* state, uint32_t element, double* out);

OMLPROB_API int oml_state_parse(const oml_lattice* lattice, const char* text, size_t length,
                                oml_state** out);
OMLPROB_API int oml_state_format(const oml_lattice* lattice, const oml_state* state, char** out);
OMLPROB_API int oml_kolmogorov_from_weights(const char* const* weights, size_t count,
                                            oml_state** out);

OMLPROB_API int oml_state_validate(const oml_lattice* lattice, const oml_state* state,
                                   oml_report** out);
OMLPROB_API int oml_cox_rules_check(const oml_lattice* lattice, const oml_state* state,
                                    oml_report** out);

OMLPROB_API void oml_state_list_free(oml_state_list* list);
OMLPROB_API size_t oml_state_list_size(const oml_state_list* list);
/* Borrowed; valid while the list lives. */
OMLPROB_API const oml_state* oml_state_list_at(const oml_state_list* list, size_t index);
OMLPROB_API int oml_state_list_format(const oml_lattice* lattice, const oml_state_list* list,
                                      char** out);

/* ---- state polytope --------------------------------------------------- */

OMLPROB_API int oml_polytope_new(const oml_lattice* lattice, oml_polytope** out);
OMLPROB_API void oml_polytope_free(oml_polytope* polytope);
OMLPROB_API size_t oml_polytope_equalities(const oml_polytope* polytope);
/* Dimension of the equality solution set; -1 when inconsistent. */
OMLPROB_API long oml_polytope_dimension(const oml_polytope* polytope);
OMLPROB_API int oml_polytope_vertices(const oml_polytope* polytope, oml_state_list** out);

/* `state` (nullable) receives a state when feasible; `farkas` (nullable)
 * receives the space-separated certificate when infeasible, and
 * `certificate_ok` (nullable) whether it verifies. */
OMLPROB_API int oml_admits_state(const oml_lattice* lattice, int* feasible, oml_state** state,
                                 char** farkas, int* certificate_ok);
OMLPROB_API int oml_random_state(const oml_lattice* lattice, uint64_t seed, oml_state** out);

/* ---- defects ---------------------------------------------------------- */

/* `left` and `right` are nullable. */
OMLPROB_API int oml_defect(const oml_lattice* lattice, const oml_state* state, int kind, uint32_t a,
                           uint32_t b, char** defect, char** left, char** right);
/* `found` = 0 leaves the other outputs untouched. */
OMLPROB_API int oml_superadditivity_witness(const oml_lattice* lattice, int* found, uint32_t* a,
                                            uint32_t* b, char** defect, oml_state** state);

/* ---- Hilbert space ---------------------------------------------------- */

/* Row-major complex matrices are passed as separate real and imaginary
 * arrays of dimension*dimension doubles. `tolerance` <= 0 keeps the
 * defaults; otherwise it replaces the validity tolerances (1e-9). */

OMLPROB_API int oml_random_density(size_t dimension, uint64_t seed, double* re, double* im);
OMLPROB_API int oml_random_unitary(size_t dimension, uint64_t seed, double* re, double* im);
OMLPROB_API int oml_born(size_t dimension, const double* rho_re, const double* rho_im,
                         const double* p_re, const double* p_im, double tolerance, double* out);
/* tr(rho P_j) for the rank-one projectors onto the columns of a unitary. */
OMLPROB_API int oml_born_resolution(size_t dimension, const double* rho_re, const double* rho_im,
                                    const double* u_re, const double* u_im, double tolerance,
                                    double* probabilities);
/* Text in the `mat <rows> <cols>` format. */
OMLPROB_API int oml_matrix_format(size_t rows, size_t cols, const double* re, const double* im,
                                  char** out);

/* Closure of the lines spanned by `count` vectors of length `dimension`
 * (vector k at offset k*dimension). `cap` = 0 uses the default of 512. */
OMLPROB_API int oml_closure_new(size_t dimension, size_t count, const double* re, const double* im,
                                size_t cap, double tolerance, oml_closure** out);
OMLPROB_API void oml_closure_free(oml_closure* closure);
OMLPROB_API int oml_closure_lattice(const oml_closure* closure, oml_lattice** out);
OMLPROB_API size_t oml_closure_dimension(const oml_closure* closure);
OMLPROB_API int oml_closure_rank(const oml_closure* closure, uint32_t element, size_t* out);
OMLPROB_API int oml_closure_born_state(const oml_closure* closure, const double* rho_re,
                                       const double* rho_im, oml_state** out);

/* ---- Cox engine ------------------------------------------------------- */

/* "sum", "sumprod" or "sumsq"; `points` = 0 uses 1025. */
OMLPROB_API int oml_grid_builtin(const char* name, size_t points, double x_max, oml_grid** out);
OMLPROB_API int oml_grid_parse(const char* text, size_t length, oml_grid** out);
OMLPROB_API int oml_grid_format(const oml_grid* grid, char** out);
OMLPROB_API void oml_grid_free(oml_grid* grid);
OMLPROB_API size_t oml_grid_points(const oml_grid* grid);
OMLPROB_API double oml_grid_x_max(const oml_grid* grid);
OMLPROB_API double oml_grid_value(const oml_grid* grid, size_t i, size_t j);

/* `worst` (nullable) receives the grid indices of the worst triple. */
OMLPROB_API int oml_grid_residual(const oml_grid* grid, double* residual, size_t* admissible,
                                  size_t* skipped, size_t* worst);

/* `map` is "identity", "double" (t -> 2t), "square" (t -> t^2),
 * "scale:<c>" or "power:<p>". */
OMLPROB_API int oml_grid_transport(const oml_grid* grid, const char* map, oml_grid** out);

OMLPROB_API int oml_grid_extract(const oml_grid* grid, double unit, oml_representation** out);
OMLPROB_API void oml_representation_free(oml_representation* rep);
OMLPROB_API double oml_representation_residual(const oml_representation* rep);
OMLPROB_API size_t oml_representation_pairs(const oml_representation* rep);
OMLPROB_API size_t oml_representation_points(const oml_representation* rep);
/* h at grid point i. */
OMLPROB_API double oml_representation_h(const oml_representation* rep, size_t i);
OMLPROB_API size_t oml_representation_knots(const oml_representation* rep);

#ifdef __cplusplus
}
#endif

#endif  // OMLPROB_OMLPROB_H_
