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

#include "fqhe/expand.hpp"
#include "fqhe/lll.hpp"
#include "fqhe/states.hpp"
#include "oracles/oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

namespace fqhe {
namespace {

using Pattern = std::vector<std::pair<FockConfig, BigInt>>;

FockVector fock_of(const MultiPoly& p) { return to_fock(slater_project(p)); }

// Random antisymmetric polynomial of fixed degree: Vandermonde times a random
// combination of products of elementary symmetric polynomials.
MultiPoly random_antisymmetric(std::mt19937& rng, int n, int extra_degree) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<int> pick(1, n);
  MultiPoly sym(n);
  for (int trial = 0; trial < 3; ++trial) {
    MultiPoly term = MultiPoly::constant(n, coeff(rng));
    int remaining = extra_degree;
    while (remaining > 0) {
      const int k = std::min(pick(rng), remaining);
      term = multiply(term, elementary_symmetric(n, k));
      remaining -= k;
    }
    sym += term;
  }
  if (sym.is_zero()) sym = MultiPoly::constant(n, 1);
  if (extra_degree > 0 && sym.degree() != extra_degree) sym = elementary_symmetric(n, 1);
  return multiply(vandermonde_power(n, 1), sym);
}

TEST_CASE("orbital_norm_sq", "[lll]") {
  CHECK(orbital_norm_sq(0) == PiScalar{2, 1});
  CHECK(orbital_norm_sq(1) == PiScalar{4, 1});
  CHECK(orbital_norm_sq(3) == PiScalar{96, 1});
  CHECK_THROWS_AS(orbital_norm_sq(-1), Error);
  for (int i = 0; i < 20; ++i) CHECK(orbital_norm_sq(i).coefficient > 0);
}

TEST_CASE("FockConfig", "[lll]") {
  const FockConfig c{0, 3, 6};
  CHECK(c.size() == 3);
  CHECK(c.contains(3));
  CHECK_FALSE(c.contains(4));
  CHECK(c.count_below(4) == 2);
  CHECK(c.angular_momentum() == 9);
  CHECK(c.to_string() == "{0,3,6}");
  CHECK_THROWS_AS(FockConfig({1, 1}), Error);
  CHECK_THROWS_AS(FockConfig({2, 1}), Error);
  CHECK_THROWS_AS(FockConfig({-1, 1}), Error);
  CHECK(FockConfig{0, 3} < FockConfig{1, 2});
}

TEST_CASE("to_fock two-electron examples", "[lll]") {
  const FockVector psi3 = fock_of(vandermonde_power(2, 3));
  CHECK(psi3.particles() == 2);
  CHECK(psi3.dim() == 4);
  REQUIRE(psi3.size() == 2);
  CHECK(psi3.find({0, 3})->magnitude_sq == Rational(1, 4));
  CHECK(psi3.find({1, 2})->magnitude_sq == Rational(3, 4));
  // (3,0) reverses to {0,3} with one transposition.
  CHECK(psi3.find({0, 3})->sign == -1);
  CHECK(psi3.find({1, 2})->sign == 1);

  const FockVector phi1 = fock_of(multiply(
      vandermonde_power(2, 1), MultiPoly::monomial({2, 0}, 1) + MultiPoly::monomial({0, 2}, 1)));
  CHECK(phi1.find({0, 3})->magnitude_sq == Rational(3, 4));
  CHECK(phi1.find({1, 2})->magnitude_sq == Rational(1, 4));

  const FockVector psi1 = fock_of(vandermonde_power(2, 1));
  REQUIRE(psi1.size() == 1);
  CHECK(psi1.find({0, 1})->magnitude_sq == 1);
  CHECK(psi1.dim() == 2);
}

TEST_CASE("to_fock rejects the empty expansion", "[lll]") {
  try {
    to_fock(SlaterExpansion{2, {}});
    FAIL("expected ZeroState");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kZeroState);
  }
}

TEST_CASE("FockVector constructors validate", "[lll]") {
  FockVector::Terms half{{FockConfig{0, 1}, {1, Rational(1, 2)}}, {FockConfig{2, 3}, {-1, Rational(1, 2)}}};
  const FockVector v = FockVector::from_normalized(2, 4, half);
  CHECK(v.size() == 2);
  CHECK(v.find({0, 2}) == nullptr);

  FockVector::Terms unnormalized{{FockConfig{0, 1}, {1, Rational(1)}}, {FockConfig{2, 3}, {1, Rational(3)}}};
  CHECK_THROWS_AS(FockVector::from_normalized(2, 4, unnormalized), Error);
  const FockVector n = FockVector::normalize(2, 4, unnormalized);
  CHECK(n.find({2, 3})->magnitude_sq == Rational(3, 4));

  FockVector::Terms zero{{FockConfig{0, 1}, {1, Rational(0)}}};
  try {
    FockVector::normalize(2, 4, zero);
    FAIL("expected ZeroState");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kZeroState);
  }
  FockVector::Terms too_wide{{FockConfig{0, 4}, {1, Rational(1)}}};
  CHECK_THROWS_AS(FockVector::normalize(2, 4, too_wide), Error);
  FockVector::Terms wrong_length{{FockConfig{0, 1, 2}, {1, Rational(1)}}};
  CHECK_THROWS_AS(FockVector::normalize(2, 4, wrong_length), Error);
  FockVector::Terms bad_sign{{FockConfig{0, 1}, {0, Rational(1)}}};
  CHECK_THROWS_AS(FockVector::normalize(2, 4, bad_sign), Error);
  CHECK_THROWS_AS(FockVector::normalize(3, 2, {}), Error);
}

TEST_CASE("amplitude_pattern", "[lll]") {
  CHECK(amplitude_pattern(laughlin(2, 5)) ==
        Pattern{{FockConfig{0, 5}, 1}, {FockConfig{1, 4}, 5}, {FockConfig{2, 3}, 10}});
  CHECK(amplitude_pattern(laughlin(2, 1)) == Pattern{{FockConfig{0, 1}, 1}});
}

TEST_CASE("coefficient_pattern of the three-electron m=3 state", "[lll]") {
  const Pattern p = coefficient_pattern(slater_project(vandermonde_power(3, 3)));
  CHECK(p == Pattern{{FockConfig{0, 3, 6}, 1},
                     {FockConfig{0, 4, 5}, 3},
                     {FockConfig{1, 2, 6}, 3},
                     {FockConfig{1, 3, 5}, 6},
                     {FockConfig{2, 3, 4}, 15}});
}

TEST_CASE("two-electron binomial closure", "[lll][property]") {
  for (int m = 1; m <= 13; m += 2) {
    INFO("m=" << m);
    const FockVector v = fock_of(vandermonde_power(2, m));
    CHECK(static_cast<int>(v.size()) == (m + 1) / 2);
    for (int k = 0; k <= (m - 1) / 2; ++k) {
      const Amplitude* a = v.find({k, m - k});
      REQUIRE(a != nullptr);
      CHECK(a->magnitude_sq == make_rational(binomial(m, k), BigInt(1) << (m - 1)));
    }
  }
}

TEST_CASE("to_fock weights match the orbital-norm oracle", "[lll][oracle]") {
  for (int n = 2; n <= 3; ++n) {
    for (int m = 1; m <= 5; m += 2) {
      INFO("N=" << n << " m=" << m);
      const auto slater = oracle::slater_coefficients(oracle::vandermonde_by_choices(n, m));
      oracle::Int total = 0;
      std::map<std::vector<int>, oracle::Int> weight;
      for (const auto& [e, c] : slater) {
        oracle::Int w = c * c;
        for (int l : e) w *= oracle::fact(l) << (l + 1);
        weight[e] = w;
        total += w;
      }
      const FockVector v = fock_of(vandermonde_power(n, m));
      CHECK(v.size() == slater.size());
      for (const auto& [e, w] : weight) {
        std::vector<int> sorted(e.rbegin(), e.rend());
        const Amplitude* a = v.find(FockConfig(sorted));
        REQUIRE(a != nullptr);
        CHECK(a->magnitude_sq == Rational(w, total));
      }
    }
  }
}

TEST_CASE("random antisymmetric polynomials map to exact normalized homogeneous states",
          "[lll][property]") {
  std::mt19937 rng(20261017);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 3;
    const int extra = trial % 4;
    const MultiPoly p = random_antisymmetric(rng, n, extra);
    INFO("trial " << trial << ": " << p.to_string());
    const FockVector v = fock_of(p);
    Rational sum = 0;
    for (const auto& [config, amp] : v.terms()) {
      sum += amp.magnitude_sq;
      CHECK(amp.magnitude_sq > 0);
      CHECK(config.angular_momentum() == p.degree());
      CHECK(config[n - 1] < v.dim());
      CHECK(config[n - 1] <= p.degree());
    }
    CHECK(sum == 1);
  }
}

}  // namespace
}  // namespace fqhe
