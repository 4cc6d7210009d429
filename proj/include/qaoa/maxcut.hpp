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

#ifndef QAOA_LAB_MAXCUT_HPP
#define QAOA_LAB_MAXCUT_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaoa/ising.hpp"

namespace qaoa {

// Spin assignments use x_i in {-1,+1}.  Basis-state masks use bit i of the
// index for vertex/qubit i (bit 0 = vertex 0), with bit value 1 meaning
// x_i = -1.
inline std::vector<int> spins_from_mask(uint64_t mask, int n) {
  std::vector<int> x(n);
  for (int i = 0; i < n; ++i) x[i] = (mask >> i) & 1 ? -1 : +1;
  return x;
}

inline uint64_t mask_from_spins(const std::vector<int>& x) {
  uint64_t mask = 0;
  for (size_t i = 0; i < x.size(); ++i)
    if (x[i] < 0) mask |= uint64_t(1) << i;
  return mask;
}

// Vertex-indexed 0/1 string (vertex 0 first); 1 marks spin -1.
inline std::string bitstring_from_mask(uint64_t mask, int n) {
  std::string s(n, '0');
  for (int i = 0; i < n; ++i)
    if ((mask >> i) & 1) s[i] = '1';
  return s;
}

// Total weight of edges crossing the partition induced by x.
inline double cut_value(const IsingInstance& inst, const std::vector<int>& x) {
  double c = 0.0;
  for (const Edge& e : inst.edges) c += e.w * (1 - x[e.u] * x[e.v]) * 0.5;
  return c;
}

// The maximized objective: cut value plus half the field term,
//   C(x) = sum_ij w_ij (1 - x_i x_j)/2 + sum_i h_i x_i / 2.
inline double cost_value(const IsingInstance& inst, const std::vector<int>& x) {
  double c = cut_value(inst, x);
  for (int i = 0; i < inst.n; ++i) c += 0.5 * inst.fields[i] * x[i];
  return c;
}

struct CutExtremes {
  double c_max = 0.0;
  double c_min = 0.0;
  uint64_t argmax = 0;  // one maximizing assignment, as a mask
  // c_max / |E|; the usual normalization constant for unweighted graphs,
  // where it lies in (1/2, 1] on connected graphs.
  double edge_fraction = 0.0;
};

// Exact extremes of the cost over all assignments, by Gray-code enumeration
// with O(deg) incremental updates per visited assignment.  For field-free
// instances only one representative per global-flip pair is enumerated.
inline CutExtremes brute_force_extremes(const IsingInstance& inst) {
  if (inst.n > 30) throw std::invalid_argument("brute force capped at 30 vertices");
  validate_instance(inst);
  std::vector<std::vector<std::pair<int, double>>> adj(inst.n);
  for (const Edge& e : inst.edges) {
    adj[e.u].push_back({e.v, e.w});
    adj[e.v].push_back({e.u, e.w});
  }
  const bool has_fields = !inst.is_maxcut();
  const int nb = has_fields ? inst.n : inst.n - 1;  // free bits to enumerate

  std::vector<int> x(inst.n, +1);
  double c = cost_value(inst, x);
  CutExtremes ext;
  ext.c_max = ext.c_min = c;
  ext.argmax = 0;
  uint64_t mask = 0;
  const uint64_t total = nb >= 0 ? (uint64_t(1) << nb) : 1;
  for (uint64_t i = 1; i < total; ++i) {
    const int k = std::countr_zero(i);
    // Flipping x_k changes the cost by x_k * (sum_j w_kj x_j - h_k).
    double dot = 0.0;
    for (const auto& [j, w] : adj[k]) dot += w * x[j];
    c += x[k] * (dot - inst.fields[k]);
    x[k] = -x[k];
    mask ^= uint64_t(1) << k;
    if (c > ext.c_max) {
      ext.c_max = c;
      ext.argmax = mask;
    }
    if (c < ext.c_min) ext.c_min = c;
  }
  if (!inst.edges.empty()) ext.edge_fraction = ext.c_max / inst.num_edges();
  return ext;
}

// (C - C_min) / (C_max - C_min); callers report the raw value and clamp only
// for display.
inline double approximation_ratio(double cost, const CutExtremes& ext) {
  if (ext.c_max == ext.c_min)
    throw std::domain_error("approximation ratio undefined: constant cost landscape");
  return (cost - ext.c_min) / (ext.c_max - ext.c_min);
}

}  // namespace qaoa

#endif  // QAOA_LAB_MAXCUT_HPP
