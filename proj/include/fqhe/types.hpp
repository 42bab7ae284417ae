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

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace fqhe {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

enum class ErrorKind {
  kInvalidArgument,
  kMismatchedVariables,
  kNotAntisymmetric,
  kZeroState,
  kZeroWavefunction,
  kNotTwoFermion,
  kDimensionNotFour,
  kSingularMatrix,
  kOutOfRange,
};

/// Every contract violation in the library is reported as an Error carrying
/// a machine-readable kind; the C API maps kinds onto status codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// An exact scalar of the form coefficient * pi^pi_power.
struct PiScalar {
  Rational coefficient{0};
  int pi_power = 0;

  bool is_zero() const { return coefficient == 0; }
  double to_double() const;
  std::string to_string() const;

  friend bool operator==(const PiScalar&, const PiScalar&) = default;
};

PiScalar operator*(const PiScalar& lhs, const PiScalar& rhs);

/// num/den for any nonzero den (the two-argument cpp_rational constructor
/// rejects negative denominators).
Rational make_rational(BigInt num, BigInt den);

BigInt factorial(int n);
BigInt binomial(int n, int k);

/// Rational -> double without overflow for huge numerators/denominators.
double to_double(const Rational& q);

}  // namespace fqhe
