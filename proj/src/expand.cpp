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

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fqhe {

namespace mp = boost::multiprecision;

ExponentTuple::ExponentTuple(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw Error(ErrorKind::kInvalidArgument, "negative exponent");
  }
}

ExponentTuple::ExponentTuple(std::initializer_list<int> exponents)
    : ExponentTuple(std::vector<int>(exponents)) {}

int ExponentTuple::total_degree() const {
  return std::accumulate(exponents_.begin(), exponents_.end(), 0);
}

bool ExponentTuple::strictly_decreasing() const {
  return std::adjacent_find(exponents_.begin(), exponents_.end(), std::less_equal<>()) ==
         exponents_.end();
}

ExponentTuple ExponentTuple::swapped(int i, int j) const {
  ExponentTuple out = *this;
  std::swap(out.exponents_[i], out.exponents_[j]);
  return out;
}

ExponentTuple ExponentTuple::operator+(const ExponentTuple& other) const {
  ExponentTuple out = *this;
  for (std::size_t i = 0; i < exponents_.size(); ++i) out.exponents_[i] += other.exponents_[i];
  return out;
}

MultiPoly::MultiPoly(int nvars) : nvars_(nvars) {
  if (nvars < 1) throw Error(ErrorKind::kInvalidArgument, "polynomial needs at least one variable");
}

MultiPoly MultiPoly::constant(int nvars, const BigInt& value) {
  MultiPoly out(nvars);
  out.add_term(ExponentTuple(std::vector<int>(nvars, 0)), value);
  return out;
}

MultiPoly MultiPoly::monomial(const ExponentTuple& exponents, const BigInt& coefficient) {
  MultiPoly out(exponents.size());
  out.add_term(exponents, coefficient);
  return out;
}

MultiPoly MultiPoly::variable(int nvars, int i) {
  std::vector<int> e(nvars, 0);
  e.at(i) = 1;
  return monomial(ExponentTuple(std::move(e)), 1);
}

void MultiPoly::add_term(const ExponentTuple& exponents, const BigInt& coefficient) {
  if (exponents.size() != nvars_) {
    throw Error(ErrorKind::kMismatchedVariables, "exponent tuple length differs from nvars");
  }
  if (coefficient == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponents, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second == 0) terms_.erase(it);
  }
}

BigInt MultiPoly::coefficient(const ExponentTuple& exponents) const {
  auto it = terms_.find(exponents);
  return it == terms_.end() ? BigInt(0) : it->second;
}

bool MultiPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = terms_.begin()->first.total_degree();
  return std::all_of(terms_.begin(), terms_.end(),
                     [d](const auto& t) { return t.first.total_degree() == d; });
}

int MultiPoly::degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, e.total_degree());
  return d;
}

int MultiPoly::max_exponent() const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    for (int x : e.exponents()) d = std::max(d, x);
  }
  return d;
}

MultiPoly MultiPoly::swapped(int i, int j) const {
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e.swapped(i, j), c);
  return out;
}

BigInt MultiPoly::content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) g = mp::gcd(g, c);
  return mp::abs(g);
}

MultiPoly MultiPoly::scaled(const BigInt& factor) const {
  MultiPoly out(nvars_);
  if (factor == 0) return out;
  for (const auto& [e, c] : terms_) out.terms_.emplace_hint(out.terms_.end(), e, c * factor);
  return out;
}

MultiPoly MultiPoly::divided(const BigInt& divisor) const {
  if (divisor == 0) throw Error(ErrorKind::kInvalidArgument, "division by zero");
  MultiPoly out(nvars_);
  for (const auto& [e, c] : terms_) {
    if (c % divisor != 0) throw Error(ErrorKind::kInvalidArgument, "inexact polynomial division");
    out.terms_.emplace_hint(out.terms_.end(), e, c / divisor);
  }
  return out;
}

MultiPoly MultiPoly::operator-() const { return scaled(-1); }

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  if (other.nvars_ != nvars_) {
    throw Error(ErrorKind::kMismatchedVariables, "adding polynomials in different variable counts");
  }
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt magnitude = mp::abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    bool printed = false;
    if (magnitude != 1 || e.total_degree() == 0) {
      os << magnitude;
      printed = true;
    }
    for (int i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (printed) os << "*";
      os << "z" << (i + 1);
      if (e[i] > 1) os << "^" << e[i];
      printed = true;
    }
  }
  return os.str();
}

MultiPoly multiply(const MultiPoly& p, const MultiPoly& q) {
  if (p.nvars() != q.nvars()) {
    throw Error(ErrorKind::kMismatchedVariables, "multiplying polynomials in different variable counts");
  }
  MultiPoly out(p.nvars());
  for (const auto& [ep, cp] : p.terms()) {
    for (const auto& [eq, cq] : q.terms()) out.add_term(ep + eq, cp * cq);
  }
  return out;
}

namespace {

// (z_j - z_k)^m by the binomial theorem.
MultiPoly pair_power(int n, int j, int k, int m) {
  MultiPoly out(n);
  for (int l = 0; l <= m; ++l) {
    std::vector<int> e(n, 0);
    e[j] = m - l;
    e[k] = l;
    BigInt c = binomial(m, l);
    out.add_term(ExponentTuple(std::move(e)), (l % 2 == 0) ? c : BigInt(-c));
  }
  return out;
}

}  // namespace

MultiPoly vandermonde_power(int n, int m) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "vandermonde_power needs N >= 1");
  if (m < 1) throw Error(ErrorKind::kInvalidArgument, "vandermonde_power needs m >= 1");
  MultiPoly out = MultiPoly::constant(n, 1);
  for (int j = 0; j < n; ++j) {
    for (int k = j + 1; k < n; ++k) out = multiply(out, pair_power(n, j, k, m));
  }
  return out;
}

MultiPoly elementary_symmetric(int n, int k) {
  if (n < 1) throw Error(ErrorKind::kInvalidArgument, "elementary_symmetric needs N >= 1");
  if (k < 0 || k > n) throw Error(ErrorKind::kOutOfRange, "elementary_symmetric index out of range");
  MultiPoly out(n);
  // Each k-subset corresponds to a 0/1 exponent vector with k ones.
  std::vector<int> e(n, 0);
  std::fill(e.begin(), e.begin() + k, 1);
  do {
    out.add_term(ExponentTuple(e), 1);
  } while (std::prev_permutation(e.begin(), e.end()));
  return out;
}

bool is_antisymmetric(const MultiPoly& p) {
  const int n = p.nvars();
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      for (const auto& [e, c] : p.terms()) {
        if (p.coefficient(e.swapped(i, j)) != -c) return false;
      }
    }
  }
  return true;
}

SlaterExpansion slater_project(const MultiPoly& p) {
  if (!is_antisymmetric(p)) {
    throw Error(ErrorKind::kNotAntisymmetric, "slater_project requires an antisymmetric polynomial");
  }
  SlaterExpansion out;
  out.nvars = p.nvars();
  for (const auto& [e, c] : p.terms()) {
    if (e.strictly_decreasing()) out.terms.emplace_hint(out.terms.end(), e, c);
  }
  return out;
}

MultiPoly reconstruct(const SlaterExpansion& s) {
  MultiPoly out(s.nvars);
  std::vector<int> perm(s.nvars);
  for (const auto& [lambda, c] : s.terms) {
    std::iota(perm.begin(), perm.end(), 0);
    do {
      int inversions = 0;
      for (int a = 0; a < s.nvars; ++a) {
        for (int b = a + 1; b < s.nvars; ++b) inversions += perm[a] > perm[b];
      }
      std::vector<int> e(s.nvars);
      for (int i = 0; i < s.nvars; ++i) e[i] = lambda[perm[i]];
      out.add_term(ExponentTuple(std::move(e)), inversions % 2 == 0 ? c : BigInt(-c));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return out;
}

}  // namespace fqhe
