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

// Single-particle entanglement of fermionic states.

#pragma once

#include "fqhe/lll.hpp"
#include "fqhe/states.hpp"
#include "fqhe/types.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fqhe {

/// Values below this are treated as zero entanglement.
inline constexpr double kMeasureFloor = 1e-12;

/// rho_{mu nu} = <a^+_mu a_nu> / N. Diagonal entries are exact; off-diagonal
/// entries are stored only where some fermionic contraction contributes.
class OneBodyDensityMatrix {
 public:
  OneBodyDensityMatrix(std::vector<Rational> diagonal,
                       std::map<std::pair<int, int>, double> off_diagonal);

  int dim() const { return static_cast<int>(diagonal_.size()); }
  const std::vector<Rational>& diagonal() const { return diagonal_; }
  const std::map<std::pair<int, int>, double>& off_diagonal() const { return off_diagonal_; }
  bool is_diagonal() const { return off_diagonal_.empty(); }
  Rational trace() const;
  double entry(int mu, int nu) const;

 private:
  std::vector<Rational> diagonal_;
  std::map<std::pair<int, int>, double> off_diagonal_;
};

OneBodyDensityMatrix one_body_density(const FockVector& v);

/// Eigenvalues of rho: the exact diagonal when rho is diagonal, otherwise a
/// symmetric eigensolver. Sorted descending.
std::vector<double> occupation_spectrum(const OneBodyDensityMatrix& rho);

/// -tr(rho ln rho) in nats with 0 ln 0 = 0.
double von_neumann(const OneBodyDensityMatrix& rho);

struct EntanglementReport {
  std::optional<FamilySpec> spec;
  int particles = 0;
  double entropy_nats = 0.0;  // -tr(rho ln rho)
  double measure_nats = 0.0;  // entropy - ln N, floored at 0
  double measure_bits = 0.0;
};

/// -tr(rho ln rho) - ln N. Exactly 0 for single-configuration states.
EntanglementReport modified_measure(const FockVector& v);
EntanglementReport modified_measure(const FamilySpec& spec,
                                    int max_particles = kDefaultMaxParticles);

/// S_f of the N=2 Laughlin state:
/// (m-1) ln 2 - 2^{-(m-1)} sum_{k=0}^{(m-1)/2} C(m,k) ln C(m,k).
double closed_form_sf_laughlin2(int m);

struct SlaterPair {
  int mode_a = 0;
  int mode_b = 0;
  double weight = 0.0;  // |z_k|
};

/// Standard form sum_k z_k f^+_{a(k)} f^+_{b(k)} |0> of a two-fermion state.
/// When `orbital_modes` is false the mode indices label eigenvectors of
/// w w^T rather than the original orbitals.
struct SlaterPairing {
  std::vector<SlaterPair> pairs;
  int residual = 0;
  bool orbital_modes = true;

  /// -sum_k |z_k|^2 ln |z_k|^2, i.e. the modified measure recomputed from the
  /// pairing weights.
  double measure_nats() const;
};

enum class PairingMethod {
  kAuto,      // read pairs off the configs when no orbital repeats
  kSpectral,  // always pair degenerate eigenvalues of w w^T
};

SlaterPairing slater_pairing(const FockVector& v, PairingMethod method = PairingMethod::kAuto);

/// |<dual(psi)|psi>| for two fermions in four orbitals.
double schliemann_eta(const FockVector& v);

/// Runs the modified measure on (alpha a^+ b^+ + beta c^+ d^+)|0>.
double two_qubit_consistency(const Rational& alpha_sq);

}  // namespace fqhe
