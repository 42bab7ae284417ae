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

// Two-quasihole condensate integrals
//
//   I(z) = \int d^2xi_1 d^2xi_2  prod_i (xi_1 - z_i)(xi_2 - z_i)
//          * (xi_1^* - xi_2^*)^p * exp(-alpha (|xi_1|^2 + |xi_2|^2))
//
// evaluated exactly by expanding in xi-monomials and integrating each one
// with the Gaussian moment identity.

#pragma once

#include "fqhe/expand.hpp"
#include "fqhe/types.hpp"

namespace fqhe {

struct CondensateKernel {
  int electrons = 2;
  int relative_exponent = 2;  // p, the power of (xi_1^* - xi_2^*)
  Rational alpha{1, 3};
};

/// poly * scale. poly is primitive with a positive leading coefficient (in
/// descending lexicographic order) unless it is zero, in which case scale is 0.
struct ScaledPoly {
  MultiPoly poly;
  PiScalar scale;
};

/// \int d^2xi xi^a (xi^*)^b exp(-alpha |xi|^2) = delta_ab * pi * a! * alpha^{-(a+1)}.
PiScalar gaussian_moment(int a, int b, const Rational& alpha);

ScaledPoly condense(const CondensateKernel& kernel);

/// The condensate vanishes identically iff p is odd or p > 2N.
bool vanishes(int electrons, int relative_exponent);

}  // namespace fqhe
