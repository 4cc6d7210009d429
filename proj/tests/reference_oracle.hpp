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

#ifndef QAOA_LAB_TESTS_REFERENCE_ORACLE_HPP
#define QAOA_LAB_TESTS_REFERENCE_ORACLE_HPP

// Slow reference implementations the test suite checks the library against.
// Every operator here is materialized as a dense 2^n x 2^n matrix built from
// Kronecker products and applied by full matrix-vector multiplication, with
// no code shared with the library's gate kernels.  Usable only for small n,
// which is the point.

#include <complex>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <vector>

#include "qaoa/hva.hpp"
#include "qaoa/ising.hpp"
#include "qaoa/qaoa.hpp"
#include "qaoa/statevector.hpp"

namespace oracle {

using Cplx = std::complex<double>;
using Vec = std::vector<Cplx>;
using Mat = std::vector<Vec>;

inline Mat identity(size_t dim) {
  Mat m(dim, Vec(dim, {0.0, 0.0}));
  for (size_t i = 0; i < dim; ++i) m[i][i] = 1.0;
  return m;
}

inline Mat kron(const Mat& a, const Mat& b) {
  const size_t ra = a.size(), rb = b.size();
  Mat m(ra * rb, Vec(ra * rb));
  for (size_t i = 0; i < ra; ++i)
    for (size_t j = 0; j < ra; ++j)
      for (size_t k = 0; k < rb; ++k)
        for (size_t l = 0; l < rb; ++l) m[i * rb + k][j * rb + l] = a[i][j] * b[k][l];
  return m;
}

inline Vec matvec(const Mat& m, const Vec& v) {
  Vec out(m.size(), {0.0, 0.0});
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < v.size(); ++j) out[i] += m[i][j] * v[j];
  return out;
}

inline Mat pauli(char a) {
  const Cplx i(0.0, 1.0);
  switch (a) {
    case 'I': return {{1.0, 0.0}, {0.0, 1.0}};
    case 'X': return {{0.0, 1.0}, {1.0, 0.0}};
    case 'Y': return {{0.0, -i}, {i, 0.0}};
    case 'Z': return {{1.0, 0.0}, {0.0, -1.0}};
  }
  throw std::invalid_argument("unknown Pauli label");
}

// exp(-i beta X) on one qubit.
inline Mat rx_gate(double beta) {
  const Cplx ms(0.0, -std::sin(beta));
  const Cplx c(std::cos(beta), 0.0);
  return {{c, ms}, {ms, c}};
}

// Full operator with the 2x2 gate g on qubit q and identity elsewhere.
// Qubit 0 is the least significant bit, so the full matrix is
// I_{2^(n-1-q)} (x) g (x) I_{2^q}.
inline Mat embed_single(int n, int q, const Mat& g) {
  Mat m = q + 1 < n ? identity(size_t(1) << (n - 1 - q)) : Mat{{Cplx(1.0, 0.0)}};
  m = kron(m, g);
  if (q > 0) m = kron(m, identity(size_t(1) << q));
  return m;
}

// Dense P_i P_j for a Pauli label, same bit convention.
inline Mat embed_pair(int n, int i, int j, char a) {
  Mat m{{Cplx(1.0, 0.0)}};
  for (int q = n - 1; q >= 0; --q) m = kron(m, pauli(q == i || q == j ? a : 'I'));
  return m;
}

// exp(-i phi P_i P_j) = cos(phi) I - i sin(phi) P_i P_j, valid because the
// Pauli pair squares to the identity.
inline Mat exp_pair(int n, int i, int j, char a, double phi) {
  Mat m = embed_pair(n, i, j, a);
  const Cplx c(std::cos(phi), 0.0), ms(0.0, -std::sin(phi));
  const size_t dim = m.size();
  for (size_t r = 0; r < dim; ++r) {
    for (size_t ccol = 0; ccol < dim; ++ccol) m[r][ccol] *= ms;
    m[r][r] += c;
  }
  return m;
}

// Cost of one assignment, recomputed from scratch: cut terms over edges plus
// half the field times the spin value, with bit b mapping to spin 1 - 2b.
inline double cost_of(const qaoa::IsingInstance& inst, uint64_t y) {
  double c = 0.0;
  for (const qaoa::Edge& e : inst.edges)
    if (((y >> e.u) & 1) != ((y >> e.v) & 1)) c += e.w;
  for (int i = 0; i < inst.n; ++i)
    c += 0.5 * inst.fields[i] * (1.0 - 2.0 * double((y >> i) & 1));
  return c;
}

inline Vec uniform_vec(int n) {
  const size_t dim = size_t(1) << n;
  return Vec(dim, Cplx(1.0 / std::sqrt(double(dim)), 0.0));
}

// The full alternating circuit, layer by layer: the cost phase acts
// diagonally with independently recomputed costs, the mixer as a product of
// dense single-qubit rotations.
inline Vec qaoa_state(const qaoa::IsingInstance& inst, const qaoa::ParameterSet& ps) {
  const int n = inst.n;
  Vec v = uniform_vec(n);
  for (int m = 0; m < ps.depth(); ++m) {
    for (size_t y = 0; y < v.size(); ++y)
      v[y] *= std::exp(Cplx(0.0, -ps.gammas[m] * cost_of(inst, y)));
    for (int q = 0; q < n; ++q) v = matvec(embed_single(n, q, rx_gate(ps.betas[m])), v);
  }
  return v;
}

inline double expectation(const qaoa::IsingInstance& inst, const Vec& v) {
  double e = 0.0;
  for (size_t y = 0; y < v.size(); ++y) e += std::norm(v[y]) * cost_of(inst, y);
  return e;
}

// Dense two-body Hamiltonian H = 1/2 sum_e sum_a w^a_e P_a P_a.
inline Mat hva_hamiltonian(const qaoa::HvaInstance& h) {
  const int n = h.graph.n;
  Mat m = identity(size_t(1) << n);
  for (auto& row : m)
    for (auto& x : row) x = 0.0;
  const char labels[3] = {'X', 'Y', 'Z'};
  for (size_t e = 0; e < h.graph.edges.size(); ++e)
    for (int a = 0; a < 3; ++a) {
      if (h.couplings[e][a] == 0.0) continue;
      const Mat term = embed_pair(n, h.graph.edges[e].u, h.graph.edges[e].v, labels[a]);
      for (size_t r = 0; r < m.size(); ++r)
        for (size_t c = 0; c < m.size(); ++c) m[r][c] += 0.5 * h.couplings[e][a] * term[r][c];
    }
  return m;
}

// Mirrors the ansatz ordering: x, y, z sectors edge by edge, then the mixer.
inline Vec hva_state_dense(const qaoa::HvaInstance& h, const std::vector<qaoa::HvaLayer>& layers,
                           Vec v) {
  const int n = h.graph.n;
  const char labels[3] = {'X', 'Y', 'Z'};
  for (const qaoa::HvaLayer& lay : layers) {
    const double thetas[3] = {lay.theta_x, lay.theta_y, lay.theta_z};
    for (int a = 0; a < 3; ++a)
      for (size_t e = 0; e < h.graph.edges.size(); ++e)
        v = matvec(exp_pair(n, h.graph.edges[e].u, h.graph.edges[e].v, labels[a],
                            0.5 * h.couplings[e][a] * thetas[a]),
                   v);
    if (lay.beta != 0.0)
      for (int q = 0; q < n; ++q) v = matvec(embed_single(n, q, rx_gate(lay.beta)), v);
  }
  return v;
}

inline double energy(const Mat& ham, const Vec& v) {
  const Vec hv = matvec(ham, v);
  Cplx e(0.0, 0.0);
  for (size_t i = 0; i < v.size(); ++i) e += std::conj(v[i]) * hv[i];
  return e.real();
}

inline double max_amp_diff(const Vec& a, const qaoa::StateVector& s) {
  if (a.size() != s.amps.size()) throw std::invalid_argument("state size mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - s.amps[i]));
  return m;
}

inline double max_amp_diff(const qaoa::StateVector& a, const qaoa::StateVector& b) {
  if (a.amps.size() != b.amps.size()) throw std::invalid_argument("state size mismatch");
  double m = 0.0;
  for (size_t i = 0; i < a.amps.size(); ++i) m = std::max(m, std::abs(a.amps[i] - b.amps[i]));
  return m;
}

// ----- deterministic random test data --------------------------------------------

struct Rng {
  std::mt19937_64 eng;
  explicit Rng(uint64_t seed) : eng(seed) {}

  double uniform(double lo, double hi) {
    return std::uniform_real_distribution<double>(lo, hi)(eng);
  }
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(eng); }
};

// Random instance on n vertices: each pair becomes an edge with probability
// one half (at least one edge is forced), weights either integers in
// [-3, 3] \ {0} or reals in [-2, 2], optional fields from the same pool.
inline qaoa::IsingInstance random_instance(Rng& rng, int n, bool integer_weights,
                                           bool with_fields) {
  qaoa::IsingInstance inst;
  inst.n = n;
  inst.fields.assign(n, 0.0);
  inst.label = "random";
  auto draw_weight = [&]() -> double {
    if (!integer_weights) return rng.uniform(-2.0, 2.0);
    int w = 0;
    while (w == 0) w = rng.integer(-3, 3);
    return double(w);
  };
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (rng.integer(0, 1) == 1) inst.edges.push_back({u, v, draw_weight()});
  if (inst.edges.empty() && n >= 2) inst.edges.push_back({0, 1, draw_weight()});
  if (with_fields)
    for (int i = 0; i < n; ++i)
      if (rng.integer(0, 1) == 1)
        inst.fields[i] = integer_weights ? double(rng.integer(-2, 2)) : rng.uniform(-1.0, 1.0);
  qaoa::canonicalize_edges(inst);
  return inst;
}

inline qaoa::ParameterSet random_params(Rng& rng, int p) {
  qaoa::ParameterSet ps;
  for (int i = 0; i < p; ++i) {
    ps.gammas.push_back(rng.uniform(-qaoa::kPi, qaoa::kPi));
    ps.betas.push_back(rng.uniform(-qaoa::kPi / 4, qaoa::kPi / 4));
  }
  return ps;
}

}  // namespace oracle

#endif  // QAOA_LAB_TESTS_REFERENCE_ORACLE_HPP
