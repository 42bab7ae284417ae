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

// Lowest-Landau-level orbitals f_i(z) = A_i z^i exp(-|z|^2/4) and the map from
// Slater expansions to normalized second-quantized states.

#pragma once

#include "fqhe/expand.hpp"
#include "fqhe/types.hpp"

#include <map>
#include <utility>
#include <vector>

namespace fqhe {

/// A_i^{-2} = pi * 2^{i+1} * i!.
PiScalar orbital_norm_sq(int i);

/// Occupied orbitals mu_1 < ... < mu_N, i.e. a^+_{mu_1} ... a^+_{mu_N} |0>.
class FockConfig {
 public:
  FockConfig() = default;
  explicit FockConfig(std::vector<int> orbitals);
  FockConfig(std::initializer_list<int> orbitals);

  int size() const { return static_cast<int>(orbitals_.size()); }
  int operator[](int i) const { return orbitals_[i]; }
  const std::vector<int>& orbitals() const { return orbitals_; }
  bool contains(int orbital) const;
  /// Number of occupied orbitals strictly below `orbital`.
  int count_below(int orbital) const;
  int angular_momentum() const;
  std::string to_string() const;

  auto operator<=>(const FockConfig&) const = default;

 private:
  std::vector<int> orbitals_;
};

struct Amplitude {
  int sign = 1;
  Rational magnitude_sq{0};

  double value() const;
};

/// Normalized N-fermion state over `dim` orbitals. The squared magnitudes
/// sum to exactly 1 and zero-weight configurations are never stored.
class FockVector {
 public:
  using Terms = std::map<FockConfig, Amplitude>;

  /// Validates and stores an already-normalized state.
  static FockVector from_normalized(int particles, int dim, Terms terms);
  /// Rescales arbitrary non-negative weights to unit norm.
  static FockVector normalize(int particles, int dim, Terms terms);

  int particles() const { return particles_; }
  int dim() const { return dim_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  const Amplitude* find(const FockConfig& config) const;

 private:
  FockVector(int particles, int dim, Terms terms);
  static void validate_shape(int particles, int dim, const Terms& terms);

  int particles_;
  int dim_;
  Terms terms_;
};

/// Expresses sum_lambda c_lambda det(z_i^{lambda_j}) in the normalized
/// orbital basis. dim is the polynomial degree plus one.
FockVector to_fock(const SlaterExpansion& s);

/// Squared-amplitude ratios cleared to the smallest integers, in ascending
/// config order.
std::vector<std::pair<FockConfig, BigInt>> amplitude_pattern(const FockVector& v);

/// |c_lambda| before division by the orbital norms, keyed by the sorted config.
std::vector<std::pair<FockConfig, BigInt>> coefficient_pattern(const SlaterExpansion& s);

}  // namespace fqhe
