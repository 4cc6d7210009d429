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

#ifndef QAOA_LAB_HVA_HPP
#define QAOA_LAB_HVA_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qaoa/graphgen.hpp"
#include "qaoa/ising.hpp"
#include "qaoa/qaoa.hpp"
#include "qaoa/statevector.hpp"

namespace qaoa {

// Two-body Heisenberg-type Hamiltonian over a graph,
//
//   H = (1/2) sum_{(i,j) in E} (w^x_ij XX + w^y_ij YY + w^z_ij ZZ),
//
// with one coupling triple (w^x, w^y, w^z) per edge, aligned with
// graph.edges.  The graph's own edge weights are ignored here; only its
// topology is used.
struct HvaInstance {
  IsingInstance graph;
  std::vector<std::array<double, 3>> couplings;
};

// Ring of n spins with uniform exchange constants (J_x, J_y, J_z); the edge
// couplings are w^a = 2 J_a, so unit exchange gives even per-vertex coupling
// sums in every Pauli sector.
inline HvaInstance make_xyz_ring(int n, double jx, double jy, double jz) {
  HvaInstance h;
  h.graph = make_cycle(n);
  h.couplings.assign(h.graph.edges.size(), {2.0 * jx, 2.0 * jy, 2.0 * jz});
  return h;
}

inline void validate_hva(const HvaInstance& h) {
  validate_instance(h.graph);
  if (h.couplings.size() != h.graph.edges.size())
    throw std::invalid_argument("need one coupling triple per edge");
}

// One ansatz layer: the three two-body sectors applied in fixed x, y, z
// order, each as prod_e exp(-i (w^a_e / 2) theta_a P_a P_a), followed by a
// transverse-field mixer angle (0 skips the mixer).
struct HvaLayer {
  double theta_x = 0.0;
  double theta_y = 0.0;
  double theta_z = 0.0;
  double beta = 0.0;
};

inline StateVector hva_state(const HvaInstance& h, const std::vector<HvaLayer>& layers,
                             std::optional<StateVector> initial = std::nullopt,
                             int qubit_cap = kDefaultQubitCap) {
  validate_hva(h);
  if (h.graph.n > qubit_cap)
    throw std::invalid_argument("instance exceeds the exact-simulation qubit cap");
  StateVector s = initial ? std::move(*initial) : StateVector::uniform(h.graph.n);
  if (s.num_qubits != h.graph.n) throw std::invalid_argument("initial state size mismatch");
  for (const HvaLayer& lay : layers) {
    for (size_t e = 0; e < h.graph.edges.size(); ++e)
      apply_xx(s, h.graph.edges[e].u, h.graph.edges[e].v, 0.5 * h.couplings[e][0] * lay.theta_x);
    for (size_t e = 0; e < h.graph.edges.size(); ++e)
      apply_yy(s, h.graph.edges[e].u, h.graph.edges[e].v, 0.5 * h.couplings[e][1] * lay.theta_y);
    for (size_t e = 0; e < h.graph.edges.size(); ++e)
      apply_zz(s, h.graph.edges[e].u, h.graph.edges[e].v, 0.5 * h.couplings[e][2] * lay.theta_z);
    if (lay.beta != 0.0) apply_x_mixer(s, lay.beta);
  }
  return s;
}

inline double hva_energy(const HvaInstance& h, const StateVector& s) {
  validate_hva(h);
  double e = 0.0;
  for (size_t k = 0; k < h.graph.edges.size(); ++k) {
    const Edge& ed = h.graph.edges[k];
    if (h.couplings[k][0] != 0.0)
      e += 0.5 * h.couplings[k][0] * xx_correlation(s, ed.u, ed.v);
    if (h.couplings[k][1] != 0.0)
      e += 0.5 * h.couplings[k][1] * yy_correlation(s, ed.u, ed.v);
    if (h.couplings[k][2] != 0.0)
      e += 0.5 * h.couplings[k][2] * zz_correlation(s, ed.u, ed.v);
  }
  return e;
}

inline double hva_expectation(const HvaInstance& h, const std::vector<HvaLayer>& layers,
                              std::optional<StateVector> initial = std::nullopt,
                              int qubit_cap = kDefaultQubitCap) {
  return hva_energy(h, hva_state(h, layers, std::move(initial), qubit_cap));
}

}  // namespace qaoa

#endif  // QAOA_LAB_HVA_HPP
