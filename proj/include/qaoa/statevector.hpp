// Copyright 2026 The qaoa-lab Authors.
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

#ifndef QAOA_LAB_STATEVECTOR_HPP
#define QAOA_LAB_STATEVECTOR_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

namespace qaoa {

// Dense state on num_qubits qubits.  Basis index bit q holds qubit q
// (qubit 0 = least significant bit), matching the vertex/spin mask layout.
struct StateVector {
  int num_qubits = 0;
  std::vector<std::complex<double>> amps;

  uint64_t dim() const { return amps.size(); }

  static StateVector uniform(int n) {
    StateVector s;
    s.num_qubits = n;
    const uint64_t d = uint64_t(1) << n;
    s.amps.assign(d, std::complex<double>(1.0 / std::sqrt(double(d)), 0.0));
    return s;
  }

  static StateVector basis(int n, uint64_t index) {
    StateVector s;
    s.num_qubits = n;
    s.amps.assign(uint64_t(1) << n, {0.0, 0.0});
    s.amps.at(index) = 1.0;
    return s;
  }
};

inline double norm(const StateVector& s) {
  double t = 0.0;
  for (const auto& a : s.amps) t += std::norm(a);
  return std::sqrt(t);
}

// amps[y] *= exp(-i * gamma * diag[y])
inline void apply_phase_diagonal(StateVector& s, const std::vector<double>& diag,
                                 double gamma) {
  if (diag.size() != s.amps.size()) throw std::invalid_argument("diagonal size mismatch");
  for (uint64_t y = 0; y < s.dim(); ++y) {
    double phi = gamma * diag[y];
    s.amps[y] *= std::complex<double>(std::cos(phi), -std::sin(phi));
  }
}

// exp(-i * beta * X) on one qubit.
inline void apply_rx(StateVector& s, int q, double beta) {
  const double c = std::cos(beta), sn = std::sin(beta);
  const std::complex<double> mis(0.0, -sn);
  const uint64_t step = uint64_t(1) << q;
  for (uint64_t base = 0; base < s.dim(); base += 2 * step)
    for (uint64_t off = 0; off < step; ++off) {
      const uint64_t i0 = base + off, i1 = i0 + step;
      const auto a0 = s.amps[i0], a1 = s.amps[i1];
      s.amps[i0] = c * a0 + mis * a1;
      s.amps[i1] = mis * a0 + c * a1;
    }
}

// exp(-i * beta * sum_q X_q): the transverse-field mixer layer.
inline void apply_x_mixer(StateVector& s, double beta) {
  for (int q = 0; q < s.num_qubits; ++q) apply_rx(s, q, beta);
}

// exp(-i * phi * Z_i Z_j)
inline void apply_zz(StateVector& s, int i, int j, double phi) {
  const std::complex<double> plus(std::cos(phi), -std::sin(phi));
  const std::complex<double> minus = std::conj(plus);
  for (uint64_t y = 0; y < s.dim(); ++y) {
    const bool same = (((y >> i) ^ (y >> j)) & 1) == 0;
    s.amps[y] *= same ? plus : minus;
  }
}

// exp(-i * phi * X_i X_j)
inline void apply_xx(StateVector& s, int i, int j, double phi) {
  const double c = std::cos(phi), sn = std::sin(phi);
  const std::complex<double> mis(0.0, -sn);
  const uint64_t mask = (uint64_t(1) << i) | (uint64_t(1) << j);
  for (uint64_t y = 0; y < s.dim(); ++y) {
    const uint64_t z = y ^ mask;
    if (y >= z) continue;
    const auto a0 = s.amps[y], a1 = s.amps[z];
    s.amps[y] = c * a0 + mis * a1;
    s.amps[z] = mis * a0 + c * a1;
  }
}

// exp(-i * phi * Y_i Y_j).  Y_i Y_j |y> = mu(y) |y ^ mask> with mu = -1 when
// bits i and j agree and +1 when they differ; mu is constant on each pair.
inline void apply_yy(StateVector& s, int i, int j, double phi) {
  const double c = std::cos(phi), sn = std::sin(phi);
  const uint64_t mask = (uint64_t(1) << i) | (uint64_t(1) << j);
  for (uint64_t y = 0; y < s.dim(); ++y) {
    const uint64_t z = y ^ mask;
    if (y >= z) continue;
    const bool same = (((y >> i) ^ (y >> j)) & 1) == 0;
    const std::complex<double> mis(0.0, same ? sn : -sn);
    const auto a0 = s.amps[y], a1 = s.amps[z];
    s.amps[y] = c * a0 + mis * a1;
    s.amps[z] = mis * a0 + c * a1;
  }
}

inline double expectation_diagonal(const StateVector& s, const std::vector<double>& diag) {
  if (diag.size() != s.amps.size()) throw std::invalid_argument("diagonal size mismatch");
  double e = 0.0;
  for (uint64_t y = 0; y < s.dim(); ++y) e += std::norm(s.amps[y]) * diag[y];
  return e;
}

// <Z_k Z_l>
inline double zz_correlation(const StateVector& s, int k, int l) {
  if (k == l) throw std::invalid_argument("correlation needs two distinct qubits");
  if (k < 0 || l < 0 || k >= s.num_qubits || l >= s.num_qubits)
    throw std::invalid_argument("qubit index out of range");
  double e = 0.0;
  for (uint64_t y = 0; y < s.dim(); ++y) {
    const bool same = (((y >> k) ^ (y >> l)) & 1) == 0;
    e += (same ? 1.0 : -1.0) * std::norm(s.amps[y]);
  }
  return e;
}

// <X_k X_l>
inline double xx_correlation(const StateVector& s, int k, int l) {
  if (k == l) throw std::invalid_argument("correlation needs two distinct qubits");
  const uint64_t mask = (uint64_t(1) << k) | (uint64_t(1) << l);
  std::complex<double> e = 0.0;
  for (uint64_t y = 0; y < s.dim(); ++y) e += std::conj(s.amps[y]) * s.amps[y ^ mask];
  return e.real();
}

// <Y_k Y_l>
inline double yy_correlation(const StateVector& s, int k, int l) {
  if (k == l) throw std::invalid_argument("correlation needs two distinct qubits");
  const uint64_t mask = (uint64_t(1) << k) | (uint64_t(1) << l);
  std::complex<double> e = 0.0;
  for (uint64_t y = 0; y < s.dim(); ++y) {
    const bool same = (((y >> k) ^ (y >> l)) & 1) == 0;
    e += (same ? -1.0 : 1.0) * std::conj(s.amps[y]) * s.amps[y ^ mask];
  }
  return e.real();
}

// Draws basis-state indices from |amps|^2.  Deterministic for a fixed seed.
inline std::vector<uint64_t> sample_bitstrings(const StateVector& s, int shots,
                                               uint64_t seed) {
  if (shots < 0) throw std::invalid_argument("shot count must be nonnegative");
  std::vector<double> cdf(s.dim());
  double acc = 0.0;
  for (uint64_t y = 0; y < s.dim(); ++y) {
    acc += std::norm(s.amps[y]);
    cdf[y] = acc;
  }
  if (acc <= 0.0) throw std::domain_error("cannot sample from a zero state");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, acc);
  std::vector<uint64_t> out;
  out.reserve(shots);
  for (int t = 0; t < shots; ++t) {
    const double r = unif(rng);
    const auto it = std::lower_bound(cdf.begin(), cdf.end(), r);
    out.push_back(static_cast<uint64_t>(it - cdf.begin()));
  }
  return out;
}

}  // namespace qaoa

#endif  // QAOA_LAB_STATEVECTOR_HPP
