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

#include "fqhe/lll.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace fqhe {

namespace mp = boost::multiprecision;

PiScalar orbital_norm_sq(int i) {
  if (i < 0) throw Error(ErrorKind::kInvalidArgument, "orbital index must be non-negative");
  return {Rational(BigInt(factorial(i)) << (i + 1)), 1};
}

FockConfig::FockConfig(std::vector<int> orbitals) : orbitals_(std::move(orbitals)) {
  for (std::size_t i = 0; i < orbitals_.size(); ++i) {
    if (orbitals_[i] < 0) throw Error(ErrorKind::kInvalidArgument, "negative orbital index");
    if (i > 0 && orbitals_[i] <= orbitals_[i - 1]) {
      throw Error(ErrorKind::kInvalidArgument, "FockConfig orbitals must be strictly increasing");
    }
  }
}

FockConfig::FockConfig(std::initializer_list<int> orbitals)
    : FockConfig(std::vector<int>(orbitals)) {}

bool FockConfig::contains(int orbital) const {
  return std::binary_search(orbitals_.begin(), orbitals_.end(), orbital);
}

int FockConfig::count_below(int orbital) const {
  return static_cast<int>(std::lower_bound(orbitals_.begin(), orbitals_.end(), orbital) -
                          orbitals_.begin());
}

int FockConfig::angular_momentum() const {
  return std::accumulate(orbitals_.begin(), orbitals_.end(), 0);
}

std::string FockConfig::to_string() const {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < orbitals_.size(); ++i) os << (i ? "," : "") << orbitals_[i];
  os << "}";
  return os.str();
}

double Amplitude::value() const { return sign * std::sqrt(to_double(magnitude_sq)); }

FockVector::FockVector(int particles, int dim, Terms terms)
    : particles_(particles), dim_(dim), terms_(std::move(terms)) {}

void FockVector::validate_shape(int particles, int dim, const Terms& terms) {
  if (particles < 1) throw Error(ErrorKind::kInvalidArgument, "FockVector needs N >= 1");
  if (dim < particles) throw Error(ErrorKind::kInvalidArgument, "FockVector dim smaller than N");
  for (const auto& [config, amp] : terms) {
    if (config.size() != particles) {
      throw Error(ErrorKind::kInvalidArgument, "config " + config.to_string() + " has wrong length");
    }
    if (config[config.size() - 1] >= dim) {
      throw Error(ErrorKind::kInvalidArgument, "config " + config.to_string() + " exceeds dim");
    }
    if (amp.magnitude_sq < 0) throw Error(ErrorKind::kInvalidArgument, "negative squared magnitude");
    if (amp.sign != 1 && amp.sign != -1) throw Error(ErrorKind::kInvalidArgument, "sign must be +-1");
  }
}

FockVector FockVector::from_normalized(int particles, int dim, Terms terms) {
  validate_shape(particles, dim, terms);
  std::erase_if(terms, [](const auto& t) { return t.second.magnitude_sq == 0; });
  Rational total = 0;
  for (const auto& [config, amp] : terms) total += amp.magnitude_sq;
  if (total != 1) throw Error(ErrorKind::kInvalidArgument, "FockVector is not normalized");
  return FockVector(particles, dim, std::move(terms));
}

FockVector FockVector::normalize(int particles, int dim, Terms terms) {
  validate_shape(particles, dim, terms);
  std::erase_if(terms, [](const auto& t) { return t.second.magnitude_sq == 0; });
  if (terms.empty()) throw Error(ErrorKind::kZeroState, "state has no nonzero amplitudes");
  Rational total = 0;
  for (const auto& [config, amp] : terms) total += amp.magnitude_sq;
  for (auto& [config, amp] : terms) amp.magnitude_sq /= total;
  return FockVector(particles, dim, std::move(terms));
}

const Amplitude* FockVector::find(const FockConfig& config) const {
  auto it = terms_.find(config);
  return it == terms_.end() ? nullptr : &it->second;
}

FockVector to_fock(const SlaterExpansion& s) {
  if (s.empty()) throw Error(ErrorKind::kZeroState, "to_fock of an empty Slater expansion");
  const int n = s.nvars;
  // A decreasing lambda is reversed into an increasing config; the reversal
  // permutation has sign (-1)^{N(N-1)/2}.
  const int reversal_sign = ((n * (n - 1) / 2) % 2 == 0) ? 1 : -1;
  int degree = 0;
  FockVector::Terms terms;
  for (const auto& [lambda, c] : s.terms) {
    degree = std::max(degree, lambda.total_degree());
    std::vector<int> orbitals(lambda.exponents().rbegin(), lambda.exponents().rend());
    // |c / prod A_j|^2 = c^2 prod (2^{mu+1} mu!), with the common pi^N dropped.
    BigInt weight = c * c;
    for (int mu : orbitals) weight *= orbital_norm_sq(mu).coefficient.convert_to<BigInt>();
    const int sign = (c > 0 ? 1 : -1) * reversal_sign;
    terms.emplace(FockConfig(std::move(orbitals)), Amplitude{sign, Rational(weight)});
  }
  const int dim = std::max(degree + 1, n);
  return FockVector::normalize(n, dim, std::move(terms));
}

namespace {

std::vector<std::pair<FockConfig, BigInt>> clear_to_integers(
    const std::vector<std::pair<FockConfig, Rational>>& values) {
  BigInt den = 1;
  for (const auto& [config, q] : values) den = mp::lcm(den, mp::denominator(q));
  BigInt g = 0;
  std::vector<std::pair<FockConfig, BigInt>> out;
  for (const auto& [config, q] : values) {
    BigInt v = mp::numerator(q) * (den / mp::denominator(q));
    g = mp::gcd(g, v);
    out.emplace_back(config, v);
  }
  if (g != 0) {
    for (auto& [config, v] : out) v /= g;
  }
  return out;
}

}  // namespace

std::vector<std::pair<FockConfig, BigInt>> amplitude_pattern(const FockVector& v) {
  std::vector<std::pair<FockConfig, Rational>> values;
  for (const auto& [config, amp] : v.terms()) values.emplace_back(config, amp.magnitude_sq);
  return clear_to_integers(values);
}

std::vector<std::pair<FockConfig, BigInt>> coefficient_pattern(const SlaterExpansion& s) {
  std::vector<std::pair<FockConfig, BigInt>> out;
  for (const auto& [lambda, c] : s.terms) {
    std::vector<int> orbitals(lambda.exponents().rbegin(), lambda.exponents().rend());
    out.emplace_back(FockConfig(std::move(orbitals)), mp::abs(c));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace fqhe
