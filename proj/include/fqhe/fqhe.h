// Copyright 2026 The fqhe Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the fqhe library: construction of Laughlin and hierarchical
 * quantum Hall states in the lowest-Landau-level Fock basis and their
 * single-particle entanglement.
 *
 * All functions are thread-safe. Objects are opaque handles owned by the
 * caller and released with the matching *_destroy function. Functions
 * return FQHE_OK on success; on failure a human-readable message for the
 * calling thread is available from fqhe_last_error().
 */

#ifndef FQHE_FQHE_H_
#define FQHE_FQHE_H_

#include <stddef.h>

#if defined(_WIN32)
#  if defined(FQHE_BUILDING_LIBRARY)
#    define FQHE_API __declspec(dllexport)
#  else
#    define FQHE_API __declspec(dllimport)
#  endif
#else
#  define FQHE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fqhe_status {
  FQHE_OK = 0,
  FQHE_ERR_INVALID_ARGUMENT = 1,
  FQHE_ERR_ZERO_WAVEFUNCTION = 2,
  FQHE_ERR_NOT_ANTISYMMETRIC = 3,
  FQHE_ERR_ZERO_STATE = 4,
  FQHE_ERR_NOT_TWO_FERMION = 5,
  FQHE_ERR_DIMENSION_NOT_FOUR = 6,
  FQHE_ERR_SINGULAR_MATRIX = 7,
  FQHE_ERR_OUT_OF_RANGE = 8,
  FQHE_ERR_BUFFER_TOO_SMALL = 9,
  FQHE_ERR_INTERNAL = 10
} fqhe_status;

typedef enum fqhe_family {
  FQHE_FAMILY_LAUGHLIN = 0,
  FQHE_FAMILY_HIERARCHICAL_PHI = 1,
  FQHE_FAMILY_CHI = 2
} fqhe_family;

typedef struct fqhe_state fqhe_state;

typedef struct fqhe_report {
  int has_family;      /* 0 for states built from explicit amplitudes */
  fqhe_family family;
  int n;               /* particle number */
  int m;
  double t;            /* (m - 1) / 2 */
  double entropy_nats; /* -tr(rho ln rho) */
  double measure_nats; /* entropy - ln N, floored at 0 */
  double measure_bits;
} fqhe_report;

typedef struct fqhe_pair {
  int mode_a;
  int mode_b;
  double weight;
} fqhe_pair;

/* Pass as max_n to use the library default particle limit. */
#define FQHE_DEFAULT_MAX_N 0

FQHE_API const char* fqhe_version(void);
FQHE_API const char* fqhe_status_string(fqhe_status status);
FQHE_API const char* fqhe_last_error(void);

FQHE_API fqhe_status fqhe_family_parse(const char* name, fqhe_family* out);
FQHE_API const char* fqhe_family_name(fqhe_family family);

/* Family states. Returns FQHE_ERR_ZERO_WAVEFUNCTION for chi with m > 2N+1. */
FQHE_API fqhe_status fqhe_state_create(fqhe_family family, int n, int m, int max_n,
                                       fqhe_state** out);

/*
 * State from explicit configurations. `orbitals` holds count*n strictly
 * increasing orbital indices, `signs` holds count values of +1/-1 and
 * `weights` holds count non-negative rationals ("p" or "p/q") proportional
 * to the squared magnitudes. The result is normalized exactly.
 */
FQHE_API fqhe_status fqhe_state_from_weights(int n, int dim, size_t count, const int* orbitals,
                                             const int* signs, const char* const* weights,
                                             fqhe_state** out);

FQHE_API void fqhe_state_destroy(fqhe_state* state);

FQHE_API fqhe_status fqhe_state_shape(const fqhe_state* state, int* n, int* dim, size_t* count);

/* Terms are in ascending configuration order; `orbitals` must hold n ints. */
FQHE_API fqhe_status fqhe_state_term(const fqhe_state* state, size_t index, int* orbitals,
                                     int* sign, double* magnitude_sq);
/* Exact squared magnitude of term `index` as "p/q". */
FQHE_API fqhe_status fqhe_state_term_exact(const fqhe_state* state, size_t index, char* buf,
                                           size_t len);
/* Squared-amplitude ratio of term `index`, cleared to smallest integers. */
FQHE_API fqhe_status fqhe_state_pattern(const fqhe_state* state, size_t index, char* buf,
                                        size_t len);

FQHE_API fqhe_status fqhe_state_measure(const fqhe_state* state, fqhe_report* out);

/* Writes dim occupation numbers rho_{mu mu}; *is_diagonal is set to 1 when
 * no off-diagonal contraction exists. */
FQHE_API fqhe_status fqhe_state_density(const fqhe_state* state, double* diagonal, size_t len,
                                        int* is_diagonal);

/* Two-fermion standard form. *count receives the number of pairs; pairs are
 * written up to `capacity`. */
FQHE_API fqhe_status fqhe_state_pairing(const fqhe_state* state, int spectral, fqhe_pair* pairs,
                                        size_t capacity, size_t* count);

FQHE_API fqhe_status fqhe_state_eta(const fqhe_state* state, double* out);

FQHE_API fqhe_status fqhe_compute(fqhe_family family, int n, int m, int max_n, fqhe_report* out);

FQHE_API fqhe_status fqhe_closed_form_laughlin2(int m, double* out);

FQHE_API fqhe_status fqhe_two_qubit_consistency(long alpha_sq_num, long alpha_sq_den,
                                                double* out);

/* k is row-major (K11, K12, K21, K22); the charge vector is (1, 0). */
FQHE_API fqhe_status fqhe_filling_fraction(const long k[4], long* num, long* den);

/* Two-quasihole condensate with p = relative exponent. Writes the primitive
 * polynomial and the scale ("r*pi^k") as text. */
FQHE_API fqhe_status fqhe_condense(int n, int p, char* poly, size_t poly_len, char* scale,
                                   size_t scale_len);

FQHE_API int fqhe_vanishes(int n, int p);

typedef void (*fqhe_verify_sink)(const char* name, int passed, int informational,
                                 const char* detail, void* user);

/* Runs the built-in verification suite; full != 0 widens the (N, m) range. */
FQHE_API fqhe_status fqhe_verify(int full, fqhe_verify_sink sink, void* user, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* FQHE_FQHE_H_ */
