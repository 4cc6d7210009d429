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

#ifndef QAOA_LAB_ISING_HPP
#define QAOA_LAB_ISING_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <optional>
#include <queue>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace qaoa {

// Weighted undirected edge, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  double w = 1.0;
};

// An Ising / MaxCut problem instance: a weighted graph plus optional local
// fields.  The cost function maximized throughout the library is
//
//   C(x) = sum_{(i,j) in E} w_ij * (1 - x_i x_j) / 2  +  sum_i h_i x_i / 2
//
// over spin assignments x in {-1,+1}^n.  With all fields zero this is the
// weighted cut value, so MaxCut instances are simply instances with h = 0.
struct IsingInstance {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<double> fields;  // size n; all zeros for MaxCut
  std::string label;

  int num_edges() const { return static_cast<int>(edges.size()); }

  double total_weight() const {
    double s = 0.0;
    for (const Edge& e : edges) s += e.w;
    return s;
  }

  double average_degree() const {
    return n > 0 ? 2.0 * static_cast<double>(edges.size()) / n : 0.0;
  }

  bool is_maxcut() const {
    for (double h : fields)
      if (h != 0.0) return false;
    return true;
  }
};

namespace detail {

// True when x holds an exactly representable integer value.
inline bool is_exact_integer(double x) {
  return std::nearbyint(x) == x && std::fabs(x) < 9.007199254740992e15;
}

inline long long as_integer(double x) { return static_cast<long long>(x); }

}  // namespace detail

// True when every weight and field is an exactly integral value.  Parity
// arguments only apply to such instances, and all parity arithmetic is done
// in integer types after this check.
inline bool is_integer_valued(const IsingInstance& inst) {
  for (const Edge& e : inst.edges)
    if (!detail::is_exact_integer(e.w)) return false;
  for (double h : inst.fields)
    if (!detail::is_exact_integer(h)) return false;
  return true;
}

// Structural validation: endpoint ranges, no self-loops, no duplicate edges,
// field vector sized to n.  Throws std::invalid_argument on violation.
inline void validate_instance(const IsingInstance& inst) {
  if (inst.n < 1) throw std::invalid_argument("instance needs at least one vertex");
  if (inst.fields.size() != static_cast<size_t>(inst.n))
    throw std::invalid_argument("field vector size must equal vertex count");
  std::vector<std::pair<int, int>> seen;
  seen.reserve(inst.edges.size());
  for (const Edge& e : inst.edges) {
    if (e.u < 0 || e.v < 0 || e.u >= inst.n || e.v >= inst.n)
      throw std::invalid_argument("edge endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument("self-loops are not allowed");
    int a = std::min(e.u, e.v), b = std::max(e.u, e.v);
    seen.emplace_back(a, b);
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
    throw std::invalid_argument("duplicate edge");
}

// Reorders each edge so u < v and sorts the edge list lexicographically.
// Builders and parsers call this so instances compare and iterate stably.
inline void canonicalize_edges(IsingInstance& inst) {
  for (Edge& e : inst.edges)
    if (e.u > e.v) std::swap(e.u, e.v);
  std::sort(inst.edges.begin(), inst.edges.end(), [](const Edge& a, const Edge& b) {
    return std::make_pair(a.u, a.v) < std::make_pair(b.u, b.v);
  });
}

// Parameter-landscape symmetry class of an instance.  The class is decided
// by the per-vertex sums s_k = sum_{j ~ k} w_jk + h_k:
//   Ews: every s_k even   -> gamma shifts by pi leave the landscape invariant
//   Ows: every s_k odd    -> gamma shifts by pi combine with sign flips of
//                            the mixer angles from the shifted layer onward
//   IntegerGeneral: integral weights, mixed parities (only the 2*pi gamma
//                   and pi/2 beta periodicities plus time reversal remain)
//   RealGeneral: non-integral weights (only time reversal remains)
enum class SymmetryClass { Ews, Ows, IntegerGeneral, RealGeneral };

inline const char* to_string(SymmetryClass c) {
  switch (c) {
    case SymmetryClass::Ews: return "EWS";
    case SymmetryClass::Ows: return "OWS";
    case SymmetryClass::IntegerGeneral: return "integer-general";
    case SymmetryClass::RealGeneral: return "real-general";
  }
  return "?";
}

struct SymmetryInfo {
  SymmetryClass cls = SymmetryClass::RealGeneral;
  bool integer = false;
  // s_k = sum of incident weights plus field, per vertex; only populated for
  // integer-valued instances.
  std::vector<long long> vertex_sums;
};

inline SymmetryInfo classify_symmetry(const IsingInstance& inst) {
  SymmetryInfo info;
  info.integer = is_integer_valued(inst);
  if (!info.integer) {
    info.cls = SymmetryClass::RealGeneral;
    return info;
  }
  info.vertex_sums.assign(inst.n, 0);
  for (const Edge& e : inst.edges) {
    long long w = detail::as_integer(e.w);
    info.vertex_sums[e.u] += w;
    info.vertex_sums[e.v] += w;
  }
  for (int i = 0; i < inst.n; ++i) info.vertex_sums[i] += detail::as_integer(inst.fields[i]);
  bool all_even = true, all_odd = true;
  for (long long s : info.vertex_sums) {
    if (s % 2 == 0)
      all_odd = false;
    else
      all_even = false;
  }
  if (all_even)
    info.cls = SymmetryClass::Ews;
  else if (all_odd)
    info.cls = SymmetryClass::Ows;
  else
    info.cls = SymmetryClass::IntegerGeneral;
  return info;
}

inline SymmetryClass symmetry_class(const IsingInstance& inst) {
  return classify_symmetry(inst).cls;
}

// Length of a shortest cycle, or nullopt for forests.  BFS from every vertex;
// the first non-tree edge seen from a root closes a shortest cycle through
// that root.  O(n * m), fine at library scale.
inline std::optional<int> girth(const IsingInstance& inst) {
  std::vector<std::vector<int>> adj(inst.n);
  for (const Edge& e : inst.edges) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(inst.n), parent(inst.n);
  for (int root = 0; root < inst.n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(parent.begin(), parent.end(), -1);
    std::queue<int> q;
    dist[root] = 0;
    q.push(root);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : adj[u]) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          q.push(v);
        } else if (v != parent[u] && (parent[v] != u)) {
          best = std::min(best, dist[u] + dist[v] + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

// ----- plain-text graph files ------------------------------------------------
//
// Format:
//   n m
//   i j w        (m edge lines)
//   i h_i        (optional trailing field lines, one per nonzero field)
//
// Whitespace-separated; weights round-trip through "%.17g".

inline std::string format_weight(double w) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", w);
  return buf;
}

inline void write_graph(std::ostream& os, const IsingInstance& inst) {
  os << inst.n << ' ' << inst.edges.size() << '\n';
  for (const Edge& e : inst.edges)
    os << e.u << ' ' << e.v << ' ' << format_weight(e.w) << '\n';
  for (int i = 0; i < inst.n; ++i)
    if (inst.fields[i] != 0.0) os << i << ' ' << format_weight(inst.fields[i]) << '\n';
}

inline void write_graph_file(const std::string& path, const IsingInstance& inst) {
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  write_graph(f, inst);
}

inline IsingInstance read_graph(std::istream& is, const std::string& label = "") {
  IsingInstance inst;
  inst.label = label;
  long long n = 0, m = 0;
  if (!(is >> n >> m)) throw std::runtime_error("graph file: missing 'n m' header");
  if (n < 1 || m < 0) throw std::runtime_error("graph file: bad header values");
  inst.n = static_cast<int>(n);
  inst.fields.assign(inst.n, 0.0);
  for (long long k = 0; k < m; ++k) {
    Edge e;
    if (!(is >> e.u >> e.v >> e.w)) throw std::runtime_error("graph file: truncated edge list");
    inst.edges.push_back(e);
  }
  int i;
  double h;
  while (is >> i >> h) {
    if (i < 0 || i >= inst.n) throw std::runtime_error("graph file: field index out of range");
    inst.fields[i] = h;
  }
  canonicalize_edges(inst);
  validate_instance(inst);
  return inst;
}

inline IsingInstance read_graph_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open graph file: " + path);
  return read_graph(f, path);
}

}  // namespace qaoa

#endif  // QAOA_LAB_ISING_HPP
