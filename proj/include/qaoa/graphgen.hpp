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

#ifndef QAOA_LAB_GRAPHGEN_HPP
#define QAOA_LAB_GRAPHGEN_HPP

#include <cstdint>
#include <functional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaoa/ising.hpp"

namespace qaoa {

namespace detail {

// Stateless seed mixer, used to derive independent per-point seeds from a
// master seed so experiment points stay reproducible under any scheduling.
inline uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

inline uint64_t mix_seed(uint64_t seed, uint64_t a, uint64_t b = 0, uint64_t c = 0) {
  uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ a);
  h = splitmix64(h ^ b);
  h = splitmix64(h ^ c);
  return h;
}

}  // namespace detail

// ----- deterministic families ------------------------------------------------

inline IsingInstance make_complete(int n, double w = 1.0) {
  IsingInstance g;
  g.n = n;
  g.fields.assign(n, 0.0);
  g.label = "K" + std::to_string(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.edges.push_back({i, j, w});
  validate_instance(g);
  return g;
}

inline IsingInstance make_cycle(int n, double w = 1.0) {
  if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
  IsingInstance g;
  g.n = n;
  g.fields.assign(n, 0.0);
  g.label = "C" + std::to_string(n);
  for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n, w});
  canonicalize_edges(g);
  validate_instance(g);
  return g;
}

inline IsingInstance make_path(int n, double w = 1.0) {
  if (n < 2) throw std::invalid_argument("path needs n >= 2");
  IsingInstance g;
  g.n = n;
  g.fields.assign(n, 0.0);
  g.label = "P" + std::to_string(n);
  for (int i = 0; i + 1 < n; ++i) g.edges.push_back({i, i + 1, w});
  validate_instance(g);
  return g;
}

inline IsingInstance make_complete_bipartite(int a, int b, double w = 1.0) {
  if (a < 1 || b < 1) throw std::invalid_argument("bipartite sides must be nonempty");
  IsingInstance g;
  g.n = a + b;
  g.fields.assign(g.n, 0.0);
  g.label = "K" + std::to_string(a) + "," + std::to_string(b);
  for (int i = 0; i < a; ++i)
    for (int j = 0; j < b; ++j) g.edges.push_back({i, a + j, w});
  canonicalize_edges(g);
  validate_instance(g);
  return g;
}

// Hypercube graph on 2^dim vertices; vertices adjacent iff their indices
// differ in exactly one bit.
inline IsingInstance make_hypercube(int dim, double w = 1.0) {
  if (dim < 1 || dim > 20) throw std::invalid_argument("hypercube dim out of range");
  IsingInstance g;
  g.n = 1 << dim;
  g.fields.assign(g.n, 0.0);
  g.label = "Q" + std::to_string(dim);
  for (int v = 0; v < g.n; ++v)
    for (int b = 0; b < dim; ++b) {
      int u = v ^ (1 << b);
      if (v < u) g.edges.push_back({v, u, w});
    }
  canonicalize_edges(g);
  validate_instance(g);
  return g;
}

// Depth-p neighborhood of a single edge in the infinite d-regular tree: two
// roots joined by the central edge, each interior vertex extended to degree d
// until the leaves sit p steps from the roots.  The central edge is edge 0.
// Vertex count is 2 * sum_{t=0..p} (d-1)^t.
inline IsingInstance make_tree_subgraph(int d, int p, double w = 1.0) {
  if (d < 1) throw std::invalid_argument("tree degree must be >= 1");
  if (p < 0) throw std::invalid_argument("tree depth must be >= 0");
  IsingInstance g;
  g.fields.clear();
  g.label = "tree(d=" + std::to_string(d) + ",p=" + std::to_string(p) + ")";
  g.edges.push_back({0, 1, w});
  int next = 2;
  struct Item {
    int v;
    int depth;
  };
  std::vector<Item> frontier = {{0, 0}, {1, 0}};
  for (size_t idx = 0; idx < frontier.size(); ++idx) {
    Item it = frontier[idx];
    if (it.depth >= p) continue;
    for (int c = 0; c < d - 1; ++c) {
      int child = next++;
      g.edges.push_back({it.v, child, w});
      frontier.push_back({child, it.depth + 1});
    }
  }
  g.n = next;
  g.fields.assign(g.n, 0.0);
  validate_instance(g);
  return g;
}

// ----- weight schemes ----------------------------------------------------------

enum class WeightScheme { Unit, PmOne };

inline const char* to_string(WeightScheme s) {
  return s == WeightScheme::Unit ? "unit" : "pm_one";
}

// Draws weights edge by edge in the canonical (sorted) edge order, so the
// weighted instance is a deterministic function of the seed.
inline void assign_weights(IsingInstance& g, WeightScheme scheme, std::mt19937_64& rng) {
  if (scheme == WeightScheme::Unit) {
    for (Edge& e : g.edges) e.w = 1.0;
    return;
  }
  std::uniform_int_distribution<int> coin(0, 1);
  for (Edge& e : g.edges) e.w = coin(rng) ? 1.0 : -1.0;
}

// ----- random graph models -----------------------------------------------------

// Uniform-ish d-regular graph via stub pairing with rejection: all n*d stubs
// are shuffled and paired; samples containing self-loops or repeated pairs
// are discarded and redrawn.
inline IsingInstance generate_regular(int n, int d, WeightScheme scheme, uint64_t seed) {
  if (n < 1 || d < 1) throw std::invalid_argument("regular graph needs n >= 1, d >= 1");
  if (d >= n) throw std::invalid_argument("regular graph needs d < n");
  if ((static_cast<long long>(n) * d) % 2 != 0)
    throw std::invalid_argument("regular graph needs n*d even");
  std::mt19937_64 rng(seed);
  std::vector<int> stubs;
  stubs.reserve(static_cast<size_t>(n) * d);
  const int max_attempts = 200000;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    stubs.clear();
    for (int v = 0; v < n; ++v)
      for (int k = 0; k < d; ++k) stubs.push_back(v);
    std::shuffle(stubs.begin(), stubs.end(), rng);
    std::set<std::pair<int, int>> pairs;
    bool ok = true;
    for (size_t i = 0; i < stubs.size(); i += 2) {
      int a = stubs[i], b = stubs[i + 1];
      if (a == b) {
        ok = false;
        break;
      }
      auto pr = std::minmax(a, b);
      if (!pairs.emplace(pr.first, pr.second).second) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    IsingInstance g;
    g.n = n;
    g.fields.assign(n, 0.0);
    g.label = "regular(n=" + std::to_string(n) + ",d=" + std::to_string(d) + ")";
    for (const auto& pr : pairs) g.edges.push_back({pr.first, pr.second, 1.0});
    canonicalize_edges(g);
    assign_weights(g, scheme, rng);
    validate_instance(g);
    return g;
  }
  throw std::runtime_error("regular graph sampling did not produce a simple graph");
}

// Erdos-Renyi G(n, q): each pair present independently with probability q.
inline IsingInstance generate_er(int n, double q, WeightScheme scheme, uint64_t seed) {
  if (n < 1) throw std::invalid_argument("ER graph needs n >= 1");
  if (q < 0.0 || q > 1.0) throw std::invalid_argument("ER edge probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  IsingInstance g;
  g.n = n;
  g.fields.assign(n, 0.0);
  g.label = "er(n=" + std::to_string(n) + ")";
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (unif(rng) < q) g.edges.push_back({i, j, 1.0});
  assign_weights(g, scheme, rng);
  validate_instance(g);
  return g;
}

// Preferential attachment: a star on m+1 vertices seeds the process, then
// each new vertex attaches to m distinct existing vertices chosen with
// probability proportional to degree.
inline IsingInstance generate_ba(int n, int m, WeightScheme scheme, uint64_t seed) {
  if (m < 1) throw std::invalid_argument("BA attachment count must be >= 1");
  if (n < m + 1) throw std::invalid_argument("BA graph needs n >= m+1");
  std::mt19937_64 rng(seed);
  IsingInstance g;
  g.n = n;
  g.fields.assign(n, 0.0);
  g.label = "ba(n=" + std::to_string(n) + ",m=" + std::to_string(m) + ")";
  // Urn of edge endpoints; sampling an element is degree-proportional.
  std::vector<int> urn;
  for (int leaf = 1; leaf <= m; ++leaf) {
    g.edges.push_back({0, leaf, 1.0});
    urn.push_back(0);
    urn.push_back(leaf);
  }
  for (int v = m + 1; v < n; ++v) {
    std::set<int> targets;
    while (static_cast<int>(targets.size()) < m) {
      std::uniform_int_distribution<size_t> pick(0, urn.size() - 1);
      targets.insert(urn[pick(rng)]);
    }
    for (int t : targets) {
      g.edges.push_back({t, v, 1.0});
      urn.push_back(t);
      urn.push_back(v);
    }
  }
  canonicalize_edges(g);
  assign_weights(g, scheme, rng);
  validate_instance(g);
  return g;
}

// Watts-Strogatz ring rewiring.  k must be even; each vertex starts joined to
// its k/2 nearest neighbours on each side, then every lattice edge (i, i+j)
// is rewired with probability rewire to a uniformly random endpoint, skipping
// moves that would create self-loops or duplicates.
inline IsingInstance generate_ws(int n, int k, double rewire, WeightScheme scheme,
                                 uint64_t seed) {
  if (k < 2 || k % 2 != 0) throw std::invalid_argument("WS degree k must be even and >= 2");
  if (k >= n) throw std::invalid_argument("WS graph needs k < n");
  if (rewire < 0.0 || rewire > 1.0)
    throw std::invalid_argument("WS rewiring probability must lie in [0,1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::set<std::pair<int, int>> edges;
  auto key = [](int a, int b) { return std::pair<int, int>(std::min(a, b), std::max(a, b)); };
  for (int j = 1; j <= k / 2; ++j)
    for (int i = 0; i < n; ++i) edges.insert(key(i, (i + j) % n));
  for (int j = 1; j <= k / 2; ++j)
    for (int i = 0; i < n; ++i) {
      auto cur = key(i, (i + j) % n);
      if (!edges.count(cur)) continue;  // already rewired away
      if (unif(rng) >= rewire) continue;
      std::uniform_int_distribution<int> pick(0, n - 1);
      int t = pick(rng);
      if (t == i || edges.count(key(i, t))) continue;
      edges.erase(cur);
      edges.insert(key(i, t));
    }
  IsingInstance g;
  g.n = n;
  g.fields.assign(n, 0.0);
  g.label = "ws(n=" + std::to_string(n) + ",k=" + std::to_string(k) + ")";
  for (const auto& pr : edges) g.edges.push_back({pr.first, pr.second, 1.0});
  canonicalize_edges(g);
  assign_weights(g, scheme, rng);
  validate_instance(g);
  return g;
}

}  // namespace qaoa

#endif  // QAOA_LAB_GRAPHGEN_HPP
