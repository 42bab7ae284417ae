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

#include "fqhe/quasihole.hpp"

#include <map>

namespace fqhe {

namespace mp = boost::multiprecision;

PiScalar gaussian_moment(int a, int b, const Rational& alpha) {
  if (alpha <= 0) throw Error(ErrorKind::kInvalidArgument, "gaussian_moment needs alpha > 0");
  if (a < 0 || b < 0) throw Error(ErrorKind::kInvalidArgument, "negative moment order");
  if (a != b) return {};
  // pi * a! * alpha^{-(a+1)}
  Rational inv_alpha = 1 / alpha;
  Rational value = Rational(factorial(a));
  for (int i = 0; i <= a; ++i) value *= inv_alpha;
  return {value, 1};
}

ScaledPoly condense(const CondensateKernel& kernel) {
  const int n = kernel.electrons;
  const int p = kernel.relative_exponent;
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "condense needs N >= 1");
  if (p < 0) throw Error(ErrorKind::kInvalidArgument, "condense needs p >= 0");

  // prod_i (xi - z_i) = sum_a xi^a (-1)^{N-a} e_{N-a}(z).
  std::vector<MultiPoly> holomorphic;
  holomorphic.reserve(n + 1);
  for (int a = 0; a <= n; ++a) {
    MultiPoly e = elementary_symmetric(n, n - a);
    holomorphic.push_back((n - a) % 2 == 0 ? e : -e);
  }

  // (xi_1^* - xi_2^*)^p = sum_b C(p,b) (xi_1^*)^b (-xi_2^*)^{p-b}. Only the
  // monomial xi_1^{a1} xi_2^{a2} (xi_1^*)^b (xi_2^*)^{p-b} with a1 = b and
  // a2 = p - b survives the angular integration.
  std::map<ExponentTuple, Rational, std::greater<>> accumulated;
  int pi_power = 0;
  for (int a1 = 0; a1 <= n; ++a1) {
    for (int a2 = 0; a2 <= n; ++a2) {
      for (int b = 0; b <= p; ++b) {
        const PiScalar m1 = gaussian_moment(a1, b, kernel.alpha);
        const PiScalar m2 = gaussian_moment(a2, p - b, kernel.alpha);
        const PiScalar moment = m1 * m2;
        if (moment.is_zero()) continue;
        pi_power = moment.pi_power;
        Rational weight = moment.coefficient * Rational(binomial(p, b));
        if ((p - b) % 2 != 0) weight = -weight;
        const MultiPoly product = multiply(holomorphic[a1], holomorphic[a2]);
        for (const auto& [e, c] : product.terms()) {
          Rational& slot = accumulated[e];
          slot += weight * Rational(c);
        }
      }
    }
  }

  // Clear denominators, then split off the content as the scale.
  BigInt common_den = 1;
  for (const auto& [e, c] : accumulated) common_den = mp::lcm(common_den, mp::denominator(c));
  MultiPoly integer_poly(n);
  for (const auto& [e, c] : accumulated) {
    integer_poly.add_term(e, mp::numerator(c) * (common_den / mp::denominator(c)));
  }
  if (integer_poly.is_zero()) return {std::move(integer_poly), PiScalar{}};

  BigInt content = integer_poly.content();
  if (integer_poly.terms().begin()->second < 0) content = -content;
  ScaledPoly out{integer_poly.divided(content), PiScalar{make_rational(content, common_den), pi_power}};
  return out;
}

bool vanishes(int electrons, int relative_exponent) {
  // Odd p: the integrand is odd under xi_1 <-> xi_2.
  // p > 2N: p = a1 + a2 with a1, a2 <= N has no solution.
  return relative_exponent % 2 != 0 || relative_exponent > 2 * electrons;
}

}  // namespace fqhe
