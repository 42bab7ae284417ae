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

#include "fqhe/entangle.hpp"
#include "fqhe/lll.hpp"
#include "fqhe/quasihole.hpp"
#include "fqhe/states.hpp"
#include "fqhe/verify.hpp"

#include <cstring>
#include <iterator>
#include <optional>
#include <string>

struct fqhe_state {
  fqhe::FockVector vector;
  std::optional<fqhe::FamilySpec> spec;
};

namespace {

thread_local std::string last_error;

fqhe_status to_status(fqhe::ErrorKind kind) {
  using fqhe::ErrorKind;
  switch (kind) {
    case ErrorKind::kInvalidArgument:
    case ErrorKind::kMismatchedVariables:
      return FQHE_ERR_INVALID_ARGUMENT;
    case ErrorKind::kNotAntisymmetric:
      return FQHE_ERR_NOT_ANTISYMMETRIC;
    case ErrorKind::kZeroState:
      return FQHE_ERR_ZERO_STATE;
    case ErrorKind::kZeroWavefunction:
      return FQHE_ERR_ZERO_WAVEFUNCTION;
    case ErrorKind::kNotTwoFermion:
      return FQHE_ERR_NOT_TWO_FERMION;
    case ErrorKind::kDimensionNotFour:
      return FQHE_ERR_DIMENSION_NOT_FOUR;
    case ErrorKind::kSingularMatrix:
      return FQHE_ERR_SINGULAR_MATRIX;
    case ErrorKind::kOutOfRange:
      return FQHE_ERR_OUT_OF_RANGE;
  }
  return FQHE_ERR_INTERNAL;
}

fqhe_status fail(fqhe_status status, const std::string& message) {
  last_error = message;
  return status;
}

template <class F>
fqhe_status guarded(F&& body) {
  try {
    last_error.clear();
    return body();
  } catch (const fqhe::Error& e) {
    return fail(to_status(e.kind()), e.what());
  } catch (const std::exception& e) {
    return fail(FQHE_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(FQHE_ERR_INTERNAL, "unknown exception");
  }
}

fqhe_status copy_string(const std::string& s, char* buf, size_t len) {
  if (buf == nullptr || len < s.size() + 1) {
    return fail(FQHE_ERR_BUFFER_TOO_SMALL, "buffer needs " + std::to_string(s.size() + 1) + " bytes");
  }
  std::memcpy(buf, s.c_str(), s.size() + 1);
  return FQHE_OK;
}

int resolve_max_n(int max_n) { return max_n <= 0 ? fqhe::kDefaultMaxParticles : max_n; }

bool valid_family(fqhe_family family) {
  return family == FQHE_FAMILY_LAUGHLIN || family == FQHE_FAMILY_HIERARCHICAL_PHI ||
         family == FQHE_FAMILY_CHI;
}

fqhe::Family to_family(fqhe_family family) { return static_cast<fqhe::Family>(family); }

void fill_report(const fqhe::EntanglementReport& r, fqhe_report* out) {
  *out = fqhe_report{};
  out->n = r.particles;
  out->entropy_nats = r.entropy_nats;
  out->measure_nats = r.measure_nats;
  out->measure_bits = r.measure_bits;
  if (r.spec) {
    out->has_family = 1;
    out->family = static_cast<fqhe_family>(r.spec->family);
    out->m = r.spec->m;
    out->t = r.spec->t();
  }
}

const fqhe::FockVector::Terms::value_type* term_at(const fqhe_state* state, size_t index) {
  const auto& terms = state->vector.terms();
  if (index >= terms.size()) return nullptr;
  return &*std::next(terms.begin(), static_cast<std::ptrdiff_t>(index));
}

}  // namespace

extern "C" {

const char* fqhe_version(void) { return "1.0.0"; }

const char* fqhe_status_string(fqhe_status status) {
  switch (status) {
    case FQHE_OK:
      return "ok";
    case FQHE_ERR_INVALID_ARGUMENT:
      return "invalid argument";
    case FQHE_ERR_ZERO_WAVEFUNCTION:
      return "zero wavefunction";
    case FQHE_ERR_NOT_ANTISYMMETRIC:
      return "polynomial is not antisymmetric";
    case FQHE_ERR_ZERO_STATE:
      return "zero state";
    case FQHE_ERR_NOT_TWO_FERMION:
      return "not a two-fermion state";
    case FQHE_ERR_DIMENSION_NOT_FOUR:
      return "single-particle dimension is not four";
    case FQHE_ERR_SINGULAR_MATRIX:
      return "singular matrix";
    case FQHE_ERR_OUT_OF_RANGE:
      return "value out of range";
    case FQHE_ERR_BUFFER_TOO_SMALL:
      return "buffer too small";
    case FQHE_ERR_INTERNAL:
      return "internal error";
  }
  return "unknown status";
}

const char* fqhe_last_error(void) { return last_error.c_str(); }

fqhe_status fqhe_family_parse(const char* name, fqhe_family* out) {
  if (name == nullptr || out == nullptr) return fail(FQHE_ERR_INVALID_ARGUMENT, "null argument");
  const auto family = fqhe::parse_family(name);
  if (!family) return fail(FQHE_ERR_INVALID_ARGUMENT, std::string("unknown family: ") + name);
  *out = static_cast<fqhe_family>(*family);
  return FQHE_OK;
}

const char* fqhe_family_name(fqhe_family family) {
  if (!valid_family(family)) return "unknown";
  return fqhe::family_name(to_family(family)).data();
}

fqhe_status fqhe_state_create(fqhe_family family, int n, int m, int max_n, fqhe_state** out) {
  if (out == nullptr) return fail(FQHE_ERR_INVALID_ARGUMENT, "null output handle");
  *out = nullptr;
  if (!valid_family(family)) return fail(FQHE_ERR_INVALID_ARGUMENT, "unknown family");
  return guarded([&] {
    const fqhe::FamilySpec spec{to_family(family), n, m};
    *out = new fqhe_state{fqhe::build_state(spec, resolve_max_n(max_n)), spec};
    return FQHE_OK;
  });
}

fqhe_status fqhe_state_from_weights(int n, int dim, size_t count, const int* orbitals,
                                    const int* signs, const char* const* weights,
                                    fqhe_state** out) {
  if (out == nullptr) return fail(FQHE_ERR_INVALID_ARGUMENT, "null output handle");
  *out = nullptr;
  if (count > 0 && (orbitals == nullptr || signs == nullptr || weights == nullptr)) {
    return fail(FQHE_ERR_INVALID_ARGUMENT, "null input array");
  }
  return guarded([&] {
    fqhe::FockVector::Terms terms;
    for (size_t i = 0; i < count; ++i) {
      std::vector<int> config(orbitals + i * n, orbitals + (i + 1) * n);
      fqhe::Rational weight;
      try {
        weight = fqhe::Rational(weights[i]);
      } catch (const std::exception&) {
        throw fqhe::Error(fqhe::ErrorKind::kInvalidArgument,
                          std::string("cannot parse weight: ") + weights[i]);
      }
      auto [it, inserted] =
          terms.emplace(fqhe::FockConfig(std::move(config)), fqhe::Amplitude{signs[i], weight});
      if (!inserted) throw fqhe::Error(fqhe::ErrorKind::kInvalidArgument, "duplicate configuration");
    }
    *out = new fqhe_state{fqhe::FockVector::normalize(n, dim, std::move(terms)), std::nullopt};
    return FQHE_OK;
  });
}

void fqhe_state_destroy(fqhe_state* state) { delete state; }

fqhe_status fqhe_state_shape(const fqhe_state* state, int* n, int* dim, size_t* count) {
  if (state == nullptr) return fail(FQHE_ERR_INVALID_ARGUMENT, "null state");
  if (n) *n = state->vector.particles();
  if (dim) *dim = state->vector.dim();
  if (count) *count = state->vector.size();
  return FQHE_OK;
}

fqhe_status fqhe_state_term(const fqhe_state* state, size_t index, int* orbitals, int* sign,
                            double* magnitude_sq) {
  if (state == nullptr) return fail(FQHE_ERR_INVALID_ARGUMENT, "null state");
  const auto* term = term_at(state, index);
  if (term == nullptr) return fail(FQHE_ERR_OUT_OF_RANGE, "term index out of range");
  if (orbitals) std::copy(term->first.orbitals().begin(), term->first.orbitals().end(), orbitals);
  if (sign) *sign = term->second.sign;
  if (magnitude_sq) *magnitude_sq = fqhe::to_double(term->second.magnitude_sq);
  return FQHE_OK;
}

fqhe_status fqhe_state_term_exact(const fqhe_state* state, size_t index, char* buf, size_t len) {
  if (state == nullptr) return fail(FQHE_ERR_INVALID_ARGUMENT, "null state");
  const auto* term = term_at(state, index);
  if (term == nullptr) return fail(FQHE_ERR_OUT_OF_RANGE, "term index out of range");
  return copy_string(term->second.magnitude_sq.str(), buf, len);
}

fqhe_status fqhe_state_pattern(const fqhe_state* state, size_t index, char* buf, size_t len) {
  if (state == nullptr) return fail(FQHE_ERR_INVALID_ARGUMENT, "null state");
  return guarded([&] {
    const auto pattern = fqhe::amplitude_pattern(state->vector);
    if (index >= pattern.size()) return fail(FQHE_ERR_OUT_OF_RANGE, "term index out of range");
    return copy_string(pattern[index].second.str(), buf, len);
  });
}

fqhe_status fqhe_state_measure(const fqhe_state* state, fqhe_report* out) {
  if (state == nullptr || out == nullptr) return fail(FQHE_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    fqhe::EntanglementReport report = fqhe::modified_measure(state->vector);
    report.spec = state->spec;
    fill_report(report, out);
    return FQHE_OK;
  });
}

fqhe_status fqhe_state_density(const fqhe_state* state, double* diagonal, size_t len,
                               int* is_diagonal) {
  if (state == nullptr) return fail(FQHE_ERR_INVALID_ARGUMENT, "null state");
  if (diagonal == nullptr || len < static_cast<size_t>(state->vector.dim())) {
    return fail(FQHE_ERR_BUFFER_TOO_SMALL, "diagonal buffer shorter than dim");
  }
  return guarded([&] {
    const auto rho = fqhe::one_body_density(state->vector);
    for (int mu = 0; mu < rho.dim(); ++mu) diagonal[mu] = fqhe::to_double(rho.diagonal()[mu]);
    if (is_diagonal) *is_diagonal = rho.is_diagonal() ? 1 : 0;
    return FQHE_OK;
  });
}

fqhe_status fqhe_state_pairing(const fqhe_state* state, int spectral, fqhe_pair* pairs,
                               size_t capacity, size_t* count) {
  if (state == nullptr) return fail(FQHE_ERR_INVALID_ARGUMENT, "null state");
  return guarded([&] {
    const auto pairing = fqhe::slater_pairing(
        state->vector, spectral ? fqhe::PairingMethod::kSpectral : fqhe::PairingMethod::kAuto);
    if (count) *count = pairing.pairs.size();
    if (pairs == nullptr || capacity < pairing.pairs.size()) {
      return fail(FQHE_ERR_BUFFER_TOO_SMALL, "pair buffer too small");
    }
    for (size_t i = 0; i < pairing.pairs.size(); ++i) {
      const auto& p = pairing.pairs[i];
      pairs[i] = fqhe_pair{p.mode_a, p.mode_b, p.weight};
    }
    return FQHE_OK;
  });
}

fqhe_status fqhe_state_eta(const fqhe_state* state, double* out) {
  if (state == nullptr || out == nullptr) return fail(FQHE_ERR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    *out = fqhe::schliemann_eta(state->vector);
    return FQHE_OK;
  });
}

fqhe_status fqhe_compute(fqhe_family family, int n, int m, int max_n, fqhe_report* out) {
  if (out == nullptr) return fail(FQHE_ERR_INVALID_ARGUMENT, "null report");
  if (!valid_family(family)) return fail(FQHE_ERR_INVALID_ARGUMENT, "unknown family");
  return guarded([&] {
    fill_report(fqhe::modified_measure(fqhe::FamilySpec{to_family(family), n, m},
                                       resolve_max_n(max_n)),
                out);
    return FQHE_OK;
  });
}

fqhe_status fqhe_closed_form_laughlin2(int m, double* out) {
  if (out == nullptr) return fail(FQHE_ERR_INVALID_ARGUMENT, "null output");
  return guarded([&] {
    *out = fqhe::closed_form_sf_laughlin2(m);
    return FQHE_OK;
  });
}

fqhe_status fqhe_two_qubit_consistency(long alpha_sq_num, long alpha_sq_den, double* out) {
  if (out == nullptr) return fail(FQHE_ERR_INVALID_ARGUMENT, "null output");
  if (alpha_sq_den == 0) return fail(FQHE_ERR_INVALID_ARGUMENT, "zero denominator");
  return guarded([&] {
    *out = fqhe::two_qubit_consistency(fqhe::make_rational(alpha_sq_num, alpha_sq_den));
    return FQHE_OK;
  });
}

fqhe_status fqhe_filling_fraction(const long k[4], long* num, long* den) {
  if (k == nullptr || num == nullptr || den == nullptr) {
    return fail(FQHE_ERR_INVALID_ARGUMENT, "null argument");
  }
  return guarded([&] {
    const fqhe::Rational nu = fqhe::filling_fraction({{k[0], k[1], k[2], k[3]}});
    *num = boost::multiprecision::numerator(nu).convert_to<long>();
    *den = boost::multiprecision::denominator(nu).convert_to<long>();
    return FQHE_OK;
  });
}

fqhe_status fqhe_condense(int n, int p, char* poly, size_t poly_len, char* scale,
                          size_t scale_len) {
  return guarded([&] {
    const fqhe::ScaledPoly result = fqhe::condense({n, p});
    fqhe_status status = copy_string(result.poly.to_string(), poly, poly_len);
    if (status != FQHE_OK) return status;
    return copy_string(result.scale.to_string(), scale, scale_len);
  });
}

int fqhe_vanishes(int n, int p) { return fqhe::vanishes(n, p) ? 1 : 0; }

fqhe_status fqhe_verify(int full, fqhe_verify_sink sink, void* user, int* failures) {
  return guarded([&] {
    const auto results =
        fqhe::run_verification(full ? fqhe::VerifyLevel::kFull : fqhe::VerifyLevel::kFast);
    int failed = 0;
    for (const auto& r : results) {
      if (!r.passed) ++failed;
      if (sink) sink(r.name.c_str(), r.passed ? 1 : 0, r.informational ? 1 : 0, r.detail.c_str(), user);
    }
    if (failures) *failures = failed;
    return FQHE_OK;
  });
}

}  // extern "C"
