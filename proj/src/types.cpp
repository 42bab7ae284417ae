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

#include "fqhe/types.hpp"

#include <cmath>
#include <sstream>

namespace fqhe {

namespace mp = boost::multiprecision;

double to_double(const Rational& q) {
  if (q == 0) return 0.0;
  BigInt num = mp::numerator(q);
  const BigInt den = mp::denominator(q);
  const bool negative = num < 0;
  if (negative) num = -num;
  // Keep ~62 significant bits in the integer quotient, then rescale.
  const long shift = static_cast<long>(mp::msb(num)) - static_cast<long>(mp::msb(den)) - 62;
  BigInt quotient = shift >= 0 ? BigInt(num / (den << shift)) : BigInt((num << -shift) / den);
  const double value = std::ldexp(quotient.convert_to<double>(), static_cast<int>(shift));
  return negative ? -value : value;
}

double PiScalar::to_double() const {
  return fqhe::to_double(coefficient) * std::pow(M_PI, pi_power);
}

std::string PiScalar::to_string() const {
  std::ostringstream os;
  os << coefficient;
  if (pi_power == 1) {
    os << "*pi";
  } else if (pi_power != 0) {
    os << "*pi^" << pi_power;
  }
  return os.str();
}

PiScalar operator*(const PiScalar& lhs, const PiScalar& rhs) {
  PiScalar out{lhs.coefficient * rhs.coefficient, lhs.pi_power + rhs.pi_power};
  if (out.coefficient == 0) out.pi_power = 0;
  return out;
}

Rational make_rational(BigInt num, BigInt den) {
  if (den == 0) throw Error(ErrorKind::kInvalidArgument, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(num, den);
}

BigInt factorial(int n) {
  if (n < 0) throw Error(ErrorKind::kOutOfRange, "factorial of negative number");
  BigInt out = 1;
  for (int i = 2; i <= n; ++i) out *= i;
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

}  // namespace fqhe
