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
#include "oracles/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <numeric>

namespace fqhe {
namespace {

const Rational kThird{1, 3};

TEST_CASE("gaussian_moment", "[quasihole]") {
  CHECK(gaussian_moment(0, 0, kThird) == PiScalar{3, 1});
  CHECK(gaussian_moment(1, 0, kThird).is_zero());
  CHECK(gaussian_moment(2, 2, kThird) == PiScalar{54, 1});
  CHECK(gaussian_moment(1, 1, Rational(1)) == PiScalar{1, 1});
  CHECK(gaussian_moment(3, 3, Rational(2)) == PiScalar{Rational(6, 16), 1});
  CHECK_THROWS_AS(gaussian_moment(0, 0, Rational(0)), Error);
  CHECK_THROWS_AS(gaussian_moment(0, 0, Rational(-1)), Error);
}

TEST_CASE("moments vanish off the diagonal", "[quasihole][property]") {
  for (int a = 0; a <= 8; ++a) {
    for (int b = 0; b <= 8; ++b) {
      if (a != b) CHECK(gaussian_moment(a, b, kThird).is_zero());
    }
  }
}

TEST_CASE("two-electron condensate with p = 2", "[quasihole]") {
  const ScaledPoly r = condense({2, 2});
  CHECK(r.poly == MultiPoly::monomial({2, 0}, 1) + MultiPoly::monomial({0, 2}, 1));
  CHECK(r.scale == PiScalar{-162, 2});
}

TEST_CASE("three-electron condensate with p = 2", "[quasihole]") {
  const ScaledPoly r = condense({3, 2});
  CHECK(r.poly == MultiPoly::monomial({2, 2, 0}, 1) + MultiPoly::monomial({2, 0, 2}, 1) +
                      MultiPoly::monomial({0, 2, 2}, 1));
  CHECK(r.scale.pi_power == 2);
}

TEST_CASE("condensate vanishes beyond 2N", "[quasihole]") {
  const ScaledPoly r = condense({2, 6});
  CHECK(r.poly.is_zero());
  CHECK(r.scale.is_zero());
  CHECK_FALSE(vanishes(2, 4));
  CHECK(vanishes(2, 5));
  CHECK_FALSE(vanishes(4, 8));
}

TEST_CASE("odd relative exponents vanish by exchange antisymmetry", "[quasihole]") {
  for (int n = 1; n <= 4; ++n) {
    for (int p = 1; p <= 2 * n; p += 2) {
      CHECK(vanishes(n, p));
      CHECK(condense({n, p}).poly.is_zero());
    }
  }
}

TEST_CASE("p = 0 condensate is the square of the product of coordinates", "[quasihole]") {
  const ScaledPoly r = condense({4, 0});
  CHECK(r.poly == MultiPoly::monomial({2, 2, 2, 2}, 1));
  CHECK(r.scale == PiScalar{9, 2});
}

TEST_CASE("condense matches full integrand expansion", "[quasihole][oracle]") {
  for (int n = 1; n <= 3; ++n) {
    for (int p = 0; p <= 7; ++p) {
      INFO("N=" << n << " p=" << p);
      const ScaledPoly r = condense({n, p});
      const oracle::Poly expected = oracle::condensate_by_integrand(n, p);
      if (expected.empty()) {
        CHECK(r.poly.is_zero());
        continue;
      }
      REQUIRE(r.scale.pi_power == 2);
      MultiPoly scaled(n);
      for (const auto& [e, c] : r.poly.terms()) {
        const Rational v = Rational(c) * r.scale.coefficient;
        REQUIRE(boost::multiprecision::denominator(v) == 1);
        scaled.add_term(e, boost::multiprecision::numerator(v));
      }
      MultiPoly oracle_poly(n);
      for (const auto& [e, c] : expected) oracle_poly.add_term(ExponentTuple(e), c);
      CHECK(scaled == oracle_poly);
    }
  }
}

TEST_CASE("condensate properties", "[quasihole][property]") {
  for (int n = 1; n <= 4; ++n) {
    for (int p = 0; p <= 10; ++p) {
      INFO("N=" << n << " p=" << p);
      const ScaledPoly r = condense({n, p});
      CHECK(r.poly.is_zero() == vanishes(n, p));
      if (r.poly.is_zero()) continue;
      CHECK(r.poly.is_homogeneous());
      CHECK(r.poly.degree() == 2 * n - p);
      // Symmetric under every permutation of the electrons.
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      do {
        MultiPoly permuted(n);
        for (const auto& [e, c] : r.poly.terms()) {
          std::vector<int> moved(n);
          for (int i = 0; i < n; ++i) moved[perm[i]] = e[i];
          permuted.add_term(ExponentTuple(moved), c);
        }
        CHECK(permuted == r.poly);
      } while (std::next_permutation(perm.begin(), perm.end()));
      // Primitive with a positive leading coefficient.
      CHECK(r.poly.content() == 1);
      CHECK(r.poly.terms().begin()->second > 0);
    }
  }
}

TEST_CASE("condense rejects invalid kernels", "[quasihole]") {
  CHECK_THROWS_AS(condense({0, 2}), Error);
  CHECK_THROWS_AS(condense({2, -1}), Error);
}

}  // namespace
}  // namespace fqhe
