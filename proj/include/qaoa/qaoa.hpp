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

#ifndef QAOA_LAB_QAOA_HPP
#define QAOA_LAB_QAOA_HPP

#include <numbers>
#include <stdexcept>
#include <vector>

#include "qaoa/ising.hpp"
#include "qaoa/maxcut.hpp"
#include "qaoa/statevector.hpp"

namespace qaoa {

inline constexpr double kPi = std::numbers::pi;

// Exact simulation is capped here by default; memory and time are
// O(2^n) per layer.
inline constexpr int kDefaultQubitCap = 22;

// Depth-p angle schedule: layer m applies the phase separator with gammas[m]
// and then the transverse-field mixer with betas[m].
struct ParameterSet {
  std::vector<double> gammas;
  std::vector<double> betas;

  ParameterSet() = default;
  ParameterSet(std::vector<double> g, std::vector<double> b)
      : gammas(std::move(g)), betas(std::move(b)) {}

  int depth() const { return static_cast<int>(gammas.size()); }

  bool operator==(const ParameterSet& o) const {
    return gammas == o.gammas && betas == o.betas;
  }
};

inline void validate_params(const ParameterSet& params) {
  if (params.gammas.size() != params.betas.size())
    throw std::invalid_argument("parameter set needs one beta per gamma");
}

// Cost of every basis state, indexed by mask (bit i = 1 means x_i = -1).
inline std::vector<double> cost_diagonal(const IsingInstance& inst) {
  const uint64_t dim = uint64_t(1) << inst.n;
  std::vector<double> diag(dim, 0.0);
  for (const Edge& e : inst.edges) {
    const uint64_t bu = uint64_t(1) << e.u, bv = uint64_t(1) << e.v;
    for (uint64_t y = 0; y < dim; ++y)
      if (((y & bu) != 0) != ((y & bv) != 0)) diag[y] += e.w;
  }
  for (int i = 0; i < inst.n; ++i) {
    if (inst.fields[i] == 0.0) continue;
    const uint64_t bi = uint64_t(1) << i;
    const double half = 0.5 * inst.fields[i];
    for (uint64_t y = 0; y < dim; ++y) diag[y] += (y & bi) ? -half : half;
  }
  return diag;
}

// Instance prepared for repeated circuit evaluations: the cost diagonal is
// built once and shared across parameter points.
struct CircuitContext {
  int n = 0;
  std::vector<double> diag;

  CircuitContext() = default;
  explicit CircuitContext(const IsingInstance& inst, int qubit_cap = kDefaultQubitCap)
      : n(inst.n) {
    if (inst.n > qubit_cap)
      throw std::invalid_argument("instance exceeds the exact-simulation qubit cap");
    diag = cost_diagonal(inst);
  }
};

inline StateVector prepare_state(const CircuitContext& ctx, const ParameterSet& params) {
  validate_params(params);
  StateVector s = StateVector::uniform(ctx.n);
  for (int m = 0; m < params.depth(); ++m) {
    apply_phase_diagonal(s, ctx.diag, params.gammas[m]);
    apply_x_mixer(s, params.betas[m]);
  }
  return s;
}

inline StateVector prepare_state(const IsingInstance& inst, const ParameterSet& params,
                                 int qubit_cap = kDefaultQubitCap) {
  return prepare_state(CircuitContext(inst, qubit_cap), params);
}

inline double expectation_cost(const CircuitContext& ctx, const ParameterSet& params) {
  const StateVector s = prepare_state(ctx, params);
  return expectation_diagonal(s, ctx.diag);
}

inline double expectation_cost(const IsingInstance& inst, const ParameterSet& params,
                               int qubit_cap = kDefaultQubitCap) {
  return expectation_cost(CircuitContext(inst, qubit_cap), params);
}

}  // namespace qaoa

#endif  // QAOA_LAB_QAOA_HPP
