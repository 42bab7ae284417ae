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

// Exact multivariate polynomials in the electron coordinates z_1..z_N and
// their projection onto Slater-determinant monomials.

#pragma once

#include "fqhe/types.hpp"

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <vector>

namespace fqhe {

/// Exponents (a_1, ..., a_N) of the monomial z_1^{a_1} ... z_N^{a_N}.
class ExponentTuple {
 public:
  ExponentTuple() = default;
  explicit ExponentTuple(std::vector<int> exponents);
  ExponentTuple(std::initializer_list<int> exponents);

  int size() const { return static_cast<int>(exponents_.size()); }
  int operator[](int i) const { return exponents_[i]; }
  const std::vector<int>& exponents() const { return exponents_; }
  int total_degree() const;
  bool strictly_decreasing() const;

  ExponentTuple swapped(int i, int j) const;
  ExponentTuple operator+(const ExponentTuple& other) const;

  auto operator<=>(const ExponentTuple&) const = default;

 private:
  std::vector<int> exponents_;
};

/// Sparse polynomial with big-integer coefficients. Zero coefficients are
/// never stored; iteration order is lexicographically descending.
class MultiPoly {
 public:
  using Terms = std::map<ExponentTuple, BigInt, std::greater<>>;

  explicit MultiPoly(int nvars);

  static MultiPoly constant(int nvars, const BigInt& value);
  static MultiPoly monomial(const ExponentTuple& exponents, const BigInt& coefficient);
  /// z_i (0-based variable index).
  static MultiPoly variable(int nvars, int i);

  int nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Adds coefficient * z^exponents, merging with any existing term.
  void add_term(const ExponentTuple& exponents, const BigInt& coefficient);
  BigInt coefficient(const ExponentTuple& exponents) const;

  /// True when every term has the same total degree (the zero polynomial counts).
  bool is_homogeneous() const;
  /// Largest total degree; -1 for the zero polynomial.
  int degree() const;
  /// Largest exponent of any single variable; -1 for the zero polynomial.
  int max_exponent() const;

  MultiPoly swapped(int i, int j) const;
  /// gcd of all coefficients (0 for the zero polynomial).
  BigInt content() const;
  MultiPoly scaled(const BigInt& factor) const;
  /// Exact division of every coefficient; throws if not exact.
  MultiPoly divided(const BigInt& divisor) const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  friend MultiPoly operator+(MultiPoly lhs, const MultiPoly& rhs) { return lhs += rhs; }
  friend MultiPoly operator-(MultiPoly lhs, const MultiPoly& rhs) { return lhs += -rhs; }
  friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

  std::string to_string() const;

 private:
  int nvars_;
  Terms terms_;
};

/// Antisymmetric polynomial written as sum_lambda c_lambda det(z_i^{lambda_j})
/// with every lambda strictly decreasing.
struct SlaterExpansion {
  int nvars = 0;
  std::map<ExponentTuple, BigInt, std::greater<>> terms;

  bool empty() const { return terms.empty(); }
};

MultiPoly multiply(const MultiPoly& p, const MultiPoly& q);

/// prod_{j<k} (z_j - z_k)^m.
MultiPoly vandermonde_power(int n, int m);

/// e_k(z_1, ..., z_n).
MultiPoly elementary_symmetric(int n, int k);

bool is_antisymmetric(const MultiPoly& p);

/// Throws Error(kNotAntisymmetric) unless is_antisymmetric(p).
SlaterExpansion slater_project(const MultiPoly& p);

/// sum_lambda c_lambda det(z_i^{lambda_j}), expanded over all permutations.
MultiPoly reconstruct(const SlaterExpansion& s);

}  // namespace fqhe
