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

#pragma once

#include "fqhe/expand.hpp"
#include "fqhe/lll.hpp"
#include "fqhe/types.hpp"

#include <array>
#include <optional>
#include <string>
#include <string_view>

namespace fqhe {

enum class Family { kLaughlin, kHierarchicalPhi, kChi };

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

struct FamilySpec {
  Family family = Family::kLaughlin;
  int particles = 2;
  int m = 1;

  double t() const { return (m - 1) / 2.0; }
};

inline constexpr int kDefaultMaxParticles = 5;

/// Checks m odd and positive, 2 <= N <= max_particles.
void validate(const FamilySpec& spec, int max_particles = kDefaultMaxParticles);

/// The electron polynomial of a family member with the Gaussian factor and
/// any condensate prefactor stripped. Throws kZeroWavefunction for chi with
/// m > 2N+1.
MultiPoly family_polynomial(const FamilySpec& spec,
                            int max_particles = kDefaultMaxParticles);

FockVector build_state(const FamilySpec& spec, int max_particles = kDefaultMaxParticles);

FockVector laughlin(int particles, int m, int max_particles = kDefaultMaxParticles);
FockVector hierarchical_phi(int particles, int m, int max_particles = kDefaultMaxParticles);
FockVector chi(int particles, int m, int max_particles = kDefaultMaxParticles);

/// 2x2 symmetric K-matrix with charge vector t.
struct KMatrix {
  std::array<long, 4> entries{1, 0, 0, 1};  // row-major (K11, K12, K21, K22)
  std::array<long, 2> charge{1, 0};
};

/// t^T K^{-1} t.
Rational filling_fraction(const KMatrix& k);

}  // namespace fqhe
