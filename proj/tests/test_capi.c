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

#include "fqhe/fqhe.h"

#include <math.h>
#include <stdio.h>
#include <string.h>

static int failures = 0;

#define EXPECT(cond)                                                 \
  do {                                                               \
    if (!(cond)) {                                                   \
      fprintf(stderr, "%s:%d: EXPECT(%s) failed\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                    \
    }                                                                \
  } while (0)

static void test_version_and_names(void) {
  fqhe_family f;
  EXPECT(strlen(fqhe_version()) > 0);
  EXPECT(strcmp(fqhe_status_string(FQHE_ERR_ZERO_WAVEFUNCTION), "zero wavefunction") == 0);
  EXPECT(fqhe_family_parse("hierarchical_phi", &f) == FQHE_OK && f == FQHE_FAMILY_HIERARCHICAL_PHI);
  EXPECT(fqhe_family_parse("chi", &f) == FQHE_OK && f == FQHE_FAMILY_CHI);
  EXPECT(fqhe_family_parse("bogus", &f) == FQHE_ERR_INVALID_ARGUMENT);
  EXPECT(strcmp(fqhe_family_name(FQHE_FAMILY_LAUGHLIN), "laughlin") == 0);
}

static void test_compute(void) {
  fqhe_report r;
  const double anchor = 2 * log(2.0) - 0.75 * log(3.0);
  EXPECT(fqhe_compute(FQHE_FAMILY_LAUGHLIN, 2, 3, FQHE_DEFAULT_MAX_N, &r) == FQHE_OK);
  EXPECT(r.has_family && r.family == FQHE_FAMILY_LAUGHLIN && r.n == 2 && r.m == 3);
  EXPECT(r.t == 1.0);
  EXPECT(fabs(r.measure_nats - anchor) < 1e-12);
  EXPECT(fabs(r.measure_bits - anchor / log(2.0)) < 1e-12);

  EXPECT(fqhe_compute(FQHE_FAMILY_CHI, 2, 7, FQHE_DEFAULT_MAX_N, &r) == FQHE_ERR_ZERO_WAVEFUNCTION);
  EXPECT(strstr(fqhe_last_error(), "m > 2N+1") != NULL);
  EXPECT(fqhe_compute(FQHE_FAMILY_LAUGHLIN, 2, 4, FQHE_DEFAULT_MAX_N, &r) == FQHE_ERR_INVALID_ARGUMENT);
  EXPECT(fqhe_compute(FQHE_FAMILY_LAUGHLIN, 6, 1, FQHE_DEFAULT_MAX_N, &r) == FQHE_ERR_INVALID_ARGUMENT);
  EXPECT(fqhe_compute(FQHE_FAMILY_LAUGHLIN, 6, 1, 6, &r) == FQHE_OK && r.measure_nats == 0.0);
  EXPECT(fqhe_compute(FQHE_FAMILY_LAUGHLIN, 2, 3, FQHE_DEFAULT_MAX_N, NULL) == FQHE_ERR_INVALID_ARGUMENT);
}

static void test_state(void) {
  fqhe_state* s = NULL;
  int n = 0, dim = 0, orbitals[2], sign = 0, diag_flag = 0;
  size_t count = 0;
  double mag = 0, diag[4], eta = 0;
  char buf[64];
  char tiny[2];
  fqhe_pair pairs[4];

  EXPECT(fqhe_state_create(FQHE_FAMILY_LAUGHLIN, 2, 3, 0, &s) == FQHE_OK);
  EXPECT(fqhe_state_shape(s, &n, &dim, &count) == FQHE_OK && n == 2 && dim == 4 && count == 2);
  EXPECT(fqhe_state_term(s, 0, orbitals, &sign, &mag) == FQHE_OK);
  EXPECT(orbitals[0] == 0 && orbitals[1] == 3 && mag == 0.25);
  EXPECT(fqhe_state_term_exact(s, 1, buf, sizeof buf) == FQHE_OK && strcmp(buf, "3/4") == 0);
  EXPECT(fqhe_state_term_exact(s, 1, tiny, sizeof tiny) == FQHE_ERR_BUFFER_TOO_SMALL);
  EXPECT(fqhe_state_pattern(s, 1, buf, sizeof buf) == FQHE_OK && strcmp(buf, "3") == 0);
  EXPECT(fqhe_state_term(s, 2, orbitals, &sign, &mag) == FQHE_ERR_OUT_OF_RANGE);
  EXPECT(fqhe_state_density(s, diag, 4, &diag_flag) == FQHE_OK && diag_flag == 1);
  EXPECT(diag[0] == 0.125 && diag[1] == 0.375);
  EXPECT(fqhe_state_density(s, diag, 2, &diag_flag) == FQHE_ERR_BUFFER_TOO_SMALL);
  EXPECT(fqhe_state_pairing(s, 0, pairs, 4, &count) == FQHE_OK && count == 2);
  EXPECT(pairs[0].mode_a == 0 && pairs[0].mode_b == 3 && fabs(pairs[0].weight - 0.5) < 1e-15);
  EXPECT(fqhe_state_eta(s, &eta) == FQHE_OK && fabs(eta - sqrt(3.0) / 2) < 1e-15);
  fqhe_state_destroy(s);

  s = NULL;
  EXPECT(fqhe_state_create(FQHE_FAMILY_CHI, 2, 7, 0, &s) == FQHE_ERR_ZERO_WAVEFUNCTION && s == NULL);
  EXPECT(fqhe_state_create(FQHE_FAMILY_LAUGHLIN, 3, 3, 0, &s) == FQHE_OK);
  EXPECT(fqhe_state_pairing(s, 0, pairs, 4, &count) == FQHE_ERR_NOT_TWO_FERMION);
  fqhe_state_destroy(s);
  fqhe_state_destroy(NULL);
}

static void test_from_weights(void) {
  const int orbitals[] = {0, 1, 2, 3};
  const int signs[] = {1, -1};
  const char* equal[] = {"1", "1"};
  const char* bad[] = {"1", "x"};
  const char* zero[] = {"0", "0"};
  const int unsorted[] = {1, 0, 2, 3};
  fqhe_state* s = NULL;
  fqhe_report r;
  double eta = -1;

  EXPECT(fqhe_state_from_weights(2, 4, 2, orbitals, signs, equal, &s) == FQHE_OK);
  EXPECT(fqhe_state_eta(s, &eta) == FQHE_OK && eta == 1.0);
  EXPECT(fqhe_state_measure(s, &r) == FQHE_OK && r.has_family == 0);
  EXPECT(fabs(r.measure_nats - log(2.0)) < 1e-12);
  fqhe_state_destroy(s);

  EXPECT(fqhe_state_from_weights(2, 4, 2, orbitals, signs, bad, &s) == FQHE_ERR_INVALID_ARGUMENT);
  EXPECT(fqhe_state_from_weights(2, 4, 2, orbitals, signs, zero, &s) == FQHE_ERR_ZERO_STATE);
  EXPECT(fqhe_state_from_weights(2, 4, 2, unsorted, signs, equal, &s) == FQHE_ERR_INVALID_ARGUMENT);
  EXPECT(fqhe_state_from_weights(2, 5, 2, orbitals, signs, equal, &s) == FQHE_OK);
  EXPECT(fqhe_state_eta(s, &eta) == FQHE_ERR_DIMENSION_NOT_FOUR);
  fqhe_state_destroy(s);
}

static void test_scalars(void) {
  double v = 0;
  long num = 0, den = 0;
  const long k[4] = {3, 1, 1, -2};
  const long singular[4] = {1, 1, 1, 1};
  char poly[128], scale[64];

  EXPECT(fqhe_closed_form_laughlin2(3, &v) == FQHE_OK && fabs(v - (2 * log(2.0) - 0.75 * log(3.0))) < 1e-14);
  EXPECT(fqhe_closed_form_laughlin2(2, &v) == FQHE_ERR_INVALID_ARGUMENT);
  EXPECT(fqhe_two_qubit_consistency(1, 2, &v) == FQHE_OK && fabs(v - log(2.0)) < 1e-12);
  EXPECT(fqhe_two_qubit_consistency(3, 2, &v) == FQHE_ERR_OUT_OF_RANGE);
  EXPECT(fqhe_two_qubit_consistency(1, 0, &v) == FQHE_ERR_INVALID_ARGUMENT);
  EXPECT(fqhe_filling_fraction(k, &num, &den) == FQHE_OK && num == 2 && den == 7);
  EXPECT(fqhe_filling_fraction(singular, &num, &den) == FQHE_ERR_SINGULAR_MATRIX);
  EXPECT(fqhe_condense(2, 2, poly, sizeof poly, scale, sizeof scale) == FQHE_OK);
  EXPECT(strcmp(poly, "z1^2 + z2^2") == 0);
  EXPECT(strcmp(scale, "-162*pi^2") == 0);
  EXPECT(fqhe_vanishes(2, 6) == 1 && fqhe_vanishes(2, 4) == 0);
}

static void count_sink(const char* name, int passed, int informational, const char* detail,
                       void* user) {
  (void)name;
  (void)detail;
  (void)informational;
  if (passed) ++*(int*)user;
}

static void test_verify(void) {
  int passed = 0, failed = -1;
  EXPECT(fqhe_verify(0, count_sink, &passed, &failed) == FQHE_OK);
  EXPECT(failed == 0);
  EXPECT(passed > 10);
}

int main(void) {
  test_version_and_names();
  test_compute();
  test_state();
  test_from_weights();
  test_scalars();
  test_verify();
  if (failures) {
    fprintf(stderr, "%d expectation(s) failed\n", failures);
    return 1;
  }
  puts("C API: all expectations passed");
  return 0;
}
