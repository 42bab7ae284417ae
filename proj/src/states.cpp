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

#include "fqhe/states.hpp"

#include "fqhe/quasihole.hpp"

namespace fqhe {

std::string_view family_name(Family family) {
  switch (family) {
    case Family::kLaughlin:
      return "laughlin";
    case Family::kHierarchicalPhi:
      return "hierarchical_phi";
    case Family::kChi:
      return "chi";
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
  if (name == "laughlin" || name == "psi") return Family::kLaughlin;
  if (name == "hierarchical_phi" || name == "phi") return Family::kHierarchicalPhi;
  if (name == "chi") return Family::kChi;
  return std::nullopt;
}

void validate(const FamilySpec& spec, int max_particles) {
  if (spec.m < 1 || spec.m % 2 == 0) {
    throw Error(ErrorKind::kInvalidArgument,
                "m must be a positive odd integer (got " + std::to_string(spec.m) + ")");
  }
  if (spec.particles < 2) {
    throw Error(ErrorKind::kInvalidArgument, "entanglement needs N >= 2");
  }
  if (spec.particles > max_particles) {
    throw Error(ErrorKind::kInvalidArgument, "N = " + std::to_string(spec.particles) +
                                                 " exceeds the configured limit " +
                                                 std::to_string(max_particles));
  }
}

MultiPoly family_polynomial(const FamilySpec& spec, int max_particles) {
  validate(spec, max_particles);
  const int n = spec.particles;
  switch (spec.family) {
    case Family::kLaughlin:
      return vandermonde_power(n, spec.m);
    case Family::kHierarchicalPhi:
      // The condensate prefactor is dropped; only the polynomial shape matters.
      return multiply(vandermonde_power(n, spec.m), condense({n, 2}).poly);
    case Family::kChi: {
      const int p = spec.m - 1;
      ScaledPoly condensate = vanishes(n, p) ? ScaledPoly{MultiPoly(n), {}} : condense({n, p});
      if (condensate.poly.is_zero()) {
        throw Error(ErrorKind::kZeroWavefunction, "zero wavefunction: m > 2N+1");
      }
      return multiply(vandermonde_power(n, 1), condensate.poly);
    }
  }
  throw Error(ErrorKind::kInvalidArgument, "unknown family");
}

FockVector build_state(const FamilySpec& spec, int max_particles) {
  return to_fock(slater_project(family_polynomial(spec, max_particles)));
}

FockVector laughlin(int particles, int m, int max_particles) {
  return build_state({Family::kLaughlin, particles, m}, max_particles);
}

FockVector hierarchical_phi(int particles, int m, int max_particles) {
  return build_state({Family::kHierarchicalPhi, particles, m}, max_particles);
}

FockVector chi(int particles, int m, int max_particles) {
  return build_state({Family::kChi, particles, m}, max_particles);
}

Rational filling_fraction(const KMatrix& k) {
  const auto [k11, k12, k21, k22] = k.entries;
  if (k12 != k21) throw Error(ErrorKind::kInvalidArgument, "K-matrix must be symmetric");
  const BigInt det = BigInt(k11) * k22 - BigInt(k12) * k21;
  if (det == 0) throw Error(ErrorKind::kSingularMatrix, "K-matrix is singular");
  const BigInt t1 = k.charge[0];
  const BigInt t2 = k.charge[1];
  // t^T adj(K) t / det(K)
  const BigInt numerator = t1 * t1 * k22 - t1 * t2 * (k12 + k21) + t2 * t2 * k11;
  return make_rational(numerator, det);
}

}  // namespace fqhe
