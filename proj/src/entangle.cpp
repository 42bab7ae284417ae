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

#include "fqhe/entangle.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <set>

namespace fqhe {

OneBodyDensityMatrix::OneBodyDensityMatrix(std::vector<Rational> diagonal,
                                           std::map<std::pair<int, int>, double> off_diagonal)
    : diagonal_(std::move(diagonal)), off_diagonal_(std::move(off_diagonal)) {}

Rational OneBodyDensityMatrix::trace() const {
  Rational total = 0;
  for (const auto& d : diagonal_) total += d;
  return total;
}

double OneBodyDensityMatrix::entry(int mu, int nu) const {
  if (mu == nu) return to_double(diagonal_.at(mu));
  auto it = off_diagonal_.find({mu, nu});
  return it == off_diagonal_.end() ? 0.0 : it->second;
}

OneBodyDensityMatrix one_body_density(const FockVector& v) {
  const int n = v.particles();
  std::vector<Rational> diagonal(v.dim(), Rational(0));
  std::map<std::pair<int, int>, double> off;
  for (const auto& [config, amp] : v.terms()) {
    for (int mu : config.orbitals()) diagonal[mu] += amp.magnitude_sq;
  }
  for (auto& d : diagonal) d /= n;

  // a^+_mu a_nu |c> for nu in c, mu not in c.
  for (const auto& [config, amp] : v.terms()) {
    for (int nu : config.orbitals()) {
      std::vector<int> removed;
      removed.reserve(config.size() - 1);
      for (int o : config.orbitals()) {
        if (o != nu) removed.push_back(o);
      }
      const int sign_nu = config.count_below(nu) % 2 == 0 ? 1 : -1;
      for (int mu = 0; mu < v.dim(); ++mu) {
        if (config.contains(mu)) continue;
        const auto pos = std::lower_bound(removed.begin(), removed.end(), mu);
        const int sign_mu = (pos - removed.begin()) % 2 == 0 ? 1 : -1;
        std::vector<int> target = removed;
        target.insert(target.begin() + (pos - removed.begin()), mu);
        const Amplitude* other = v.find(FockConfig(std::move(target)));
        if (other == nullptr) continue;
        off[{mu, nu}] += sign_mu * sign_nu * other->value() * amp.value() / n;
      }
    }
  }
  return OneBodyDensityMatrix(std::move(diagonal), std::move(off));
}

std::vector<double> occupation_spectrum(const OneBodyDensityMatrix& rho) {
  std::vector<double> out;
  if (rho.is_diagonal()) {
    for (const auto& d : rho.diagonal()) out.push_back(to_double(d));
  } else {
    Eigen::MatrixXd dense(rho.dim(), rho.dim());
    for (int mu = 0; mu < rho.dim(); ++mu) {
      for (int nu = 0; nu < rho.dim(); ++nu) dense(mu, nu) = rho.entry(mu, nu);
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(dense, Eigen::EigenvaluesOnly);
    const auto& values = solver.eigenvalues();
    out.assign(values.data(), values.data() + values.size());
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

double von_neumann(const OneBodyDensityMatrix& rho) {
  double entropy = 0.0;
  for (double lambda : occupation_spectrum(rho)) {
    if (lambda > 0.0) entropy -= lambda * std::log(lambda);
  }
  return entropy;
}

EntanglementReport modified_measure(const FockVector& v) {
  EntanglementReport report;
  report.particles = v.particles();
  report.entropy_nats = von_neumann(one_body_density(v));
  double measure = report.entropy_nats - std::log(static_cast<double>(v.particles()));
  if (v.size() == 1 || measure < kMeasureFloor) measure = 0.0;
  report.measure_nats = measure;
  report.measure_bits = measure / std::log(2.0);
  return report;
}

EntanglementReport modified_measure(const FamilySpec& spec, int max_particles) {
  EntanglementReport report = modified_measure(build_state(spec, max_particles));
  report.spec = spec;
  return report;
}

double closed_form_sf_laughlin2(int m) {
  if (m < 1 || m % 2 == 0) {
    throw Error(ErrorKind::kInvalidArgument, "closed form needs a positive odd m");
  }
  const double ln2 = std::log(2.0);
  double sum = 0.0;
  for (int k = 0; k <= (m - 1) / 2; ++k) {
    const double ln_binom = std::lgamma(m + 1.0) - std::lgamma(k + 1.0) - std::lgamma(m - k + 1.0);
    sum += std::exp(ln_binom - (m - 1) * ln2) * ln_binom;
  }
  return (m - 1) * ln2 - sum;
}

double SlaterPairing::measure_nats() const {
  double out = 0.0;
  for (const auto& pair : pairs) {
    const double w2 = pair.weight * pair.weight;
    if (w2 > 0.0) out -= w2 * std::log(w2);
  }
  return out < kMeasureFloor ? 0.0 : out;
}

namespace {

void require_two_fermions(const FockVector& v) {
  if (v.particles() != 2) {
    throw Error(ErrorKind::kNotTwoFermion, "operation is defined for two-fermion states only");
  }
}

bool orbitals_disjoint(const FockVector& v) {
  std::set<int> seen;
  for (const auto& [config, amp] : v.terms()) {
    for (int o : config.orbitals()) {
      if (!seen.insert(o).second) return false;
    }
  }
  return true;
}

SlaterPairing spectral_pairing(const FockVector& v) {
  const int dim = v.dim();
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(dim, dim);
  for (const auto& [config, amp] : v.terms()) {
    w(config[0], config[1]) = amp.value();
    w(config[1], config[0]) = -amp.value();
  }
  // w w^T has each |z_k|^2 as a doubly degenerate eigenvalue.
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(w * w.transpose(), Eigen::EigenvaluesOnly);
  std::vector<double> values(solver.eigenvalues().data(),
                             solver.eigenvalues().data() + dim);
  std::sort(values.begin(), values.end(), std::greater<>());

  SlaterPairing out;
  out.orbital_modes = false;
  for (int k = 0; k + 1 < dim; k += 2) {
    const double z2 = 0.5 * (values[k] + values[k + 1]);
    if (z2 <= kMeasureFloor * kMeasureFloor) break;
    out.pairs.push_back({k, k + 1, std::sqrt(z2)});
  }
  out.residual = dim - 2 * static_cast<int>(out.pairs.size());
  return out;
}

// Exact test for sum_i sign_i * sqrt(radicand_i) == 0 with at most three terms.
struct Surd {
  int sign;
  Rational radicand;
};

bool surd_sum_is_zero(std::vector<Surd> terms) {
  std::erase_if(terms, [](const Surd& s) { return s.radicand == 0; });
  if (terms.empty()) return true;
  if (terms.size() == 1) return false;
  if (terms.size() == 2) {
    return terms[0].radicand == terms[1].radicand && terms[0].sign == -terms[1].sign;
  }
  if (terms.size() != 3) throw Error(ErrorKind::kInvalidArgument, "surd test supports three terms");
  const auto& [s1, r1] = terms[0];
  const auto& [s2, r2] = terms[1];
  const auto& [s3, r3] = terms[2];
  // Sign of s1 sqrt(r1) + s2 sqrt(r2) must be -s3.
  int lhs_sign;
  if (s1 == s2) {
    lhs_sign = s1;
  } else if (r1 == r2) {
    return false;
  } else {
    lhs_sign = r1 > r2 ? s1 : s2;
  }
  if (lhs_sign != -s3) return false;
  // Squaring: r1 + r2 + 2 s1 s2 sqrt(r1 r2) = r3.
  const Rational d = (r3 - r1 - r2) / 2;
  if ((d > 0 ? 1 : -1) != s1 * s2 || d == 0) return false;
  return d * d == r1 * r2;
}

}  // namespace

SlaterPairing slater_pairing(const FockVector& v, PairingMethod method) {
  require_two_fermions(v);
  if (method == PairingMethod::kAuto && orbitals_disjoint(v)) {
    SlaterPairing out;
    for (const auto& [config, amp] : v.terms()) {
      out.pairs.push_back({config[0], config[1], std::sqrt(to_double(amp.magnitude_sq))});
    }
    out.residual = v.dim() - 2 * static_cast<int>(out.pairs.size());
    return out;
  }
  return spectral_pairing(v);
}

double schliemann_eta(const FockVector& v) {
  require_two_fermions(v);
  if (v.dim() != 4) {
    throw Error(ErrorKind::kDimensionNotFour, "eta is defined in four single-particle modes only");
  }
  auto amp = [&v](int a, int b) {
    const Amplitude* x = v.find(FockConfig{a, b});
    return x ? *x : Amplitude{1, Rational(0)};
  };
  // <dual|psi> = 2 Pf(x) for x_ab the normalized amplitudes with a < b:
  // Pf(x) = x01 x23 - x02 x13 + x03 x12.
  const std::array<std::array<int, 4>, 3> pairings{{{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}}};
  const std::array<int, 3> pairing_sign{1, -1, 1};
  std::vector<Surd> surds;
  double pfaffian = 0.0;
  for (int i = 0; i < 3; ++i) {
    const auto [a, b, c, d] = pairings[i];
    const Amplitude x = amp(a, b);
    const Amplitude y = amp(c, d);
    const Surd term{pairing_sign[i] * x.sign * y.sign, x.magnitude_sq * y.magnitude_sq};
    pfaffian += term.sign * std::sqrt(to_double(term.radicand));
    surds.push_back(term);
  }
  if (surd_sum_is_zero(surds)) return 0.0;
  return std::min(1.0, 2.0 * std::abs(pfaffian));
}

double two_qubit_consistency(const Rational& alpha_sq) {
  if (alpha_sq < 0 || alpha_sq > 1) {
    throw Error(ErrorKind::kOutOfRange, "alpha^2 must lie in [0, 1]");
  }
  // alpha|00> + beta|11>  ->  (alpha a^+ b^+ + beta c^+ d^+)|0>
  FockVector::Terms terms;
  terms.emplace(FockConfig{0, 1}, Amplitude{1, alpha_sq});
  terms.emplace(FockConfig{2, 3}, Amplitude{1, 1 - alpha_sq});
  return modified_measure(FockVector::from_normalized(2, 4, std::move(terms))).measure_nats;
}

}  // namespace fqhe
