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

#include <catch2/catch_amalgamated.hpp>

#include "qaoa/graphgen.hpp"
#include "qaoa/maxcut.hpp"
#include "reference_oracle.hpp"

using namespace qaoa;

namespace {

// Plain full enumeration over all 2^n assignments, no shortcuts.
CutExtremes naive_extremes(const IsingInstance& inst) {
  CutExtremes ext;
  ext.c_max = -1e300;
  ext.c_min = 1e300;
  for (uint64_t y = 0; y < (uint64_t(1) << inst.n); ++y) {
    const double c = oracle::cost_of(inst, y);
    if (c > ext.c_max) {
      ext.c_max = c;
      ext.argmax = y;
    }
    ext.c_min = std::min(ext.c_min, c);
  }
  ext.edge_fraction = inst.edges.empty() ? 0.0 : ext.c_max / double(inst.num_edges());
  return ext;
}

}  // namespace

TEST_CASE("mask and spin encodings agree and invert each other") {
  const std::vector<int> spins = spins_from_mask(0b0101, 4);
  REQUIRE(spins.size() == 4);
  // Bit 0 is the least significant bit; a set bit means spin -1.
  CHECK(spins[0] == -1);
  CHECK(spins[1] == +1);
  CHECK(spins[2] == -1);
  CHECK(spins[3] == +1);
  CHECK(mask_from_spins(spins) == 0b0101);
  for (uint64_t mask = 0; mask < 32; ++mask)
    CHECK(mask_from_spins(spins_from_mask(mask, 5)) == mask);
  CHECK(bitstring_from_mask(0b0011, 4) == "1100");  // printed bit 0 first
}

TEST_CASE("cut and cost values match hand-computed cases") {
  const IsingInstance tri = make_complete(3);
  CHECK(cut_value(tri, {+1, +1, +1}) == 0.0);
  CHECK(cut_value(tri, {-1, +1, +1}) == 2.0);
  CHECK(cost_value(tri, {-1, +1, +1}) == 2.0);

  SECTION("fields add half the spin-weighted sum") {
    IsingInstance g;
    g.n = 2;
    g.edges = {{0, 1, 1.0}};
    g.fields = {1.0, -1.0};
    // Cut contributes 1, fields contribute (1*1 + (-1)*(-1))/2 = 1.
    CHECK(cost_value(g, {+1, -1}) == 2.0);
    CHECK(cost_value(g, {-1, +1}) == 0.0);
    CHECK(cost_value(g, {+1, +1}) == 0.0);
  }
  SECTION("weights scale linearly") {
    IsingInstance g = make_path(3);
    g.edges[0].w = 2.0;
    g.edges[1].w = -3.0;
    CHECK(cut_value(g, {+1, -1, -1}) == 2.0);
    CHECK(cut_value(g, {+1, -1, +1}) == -1.0);
  }
}

TEST_CASE("exact extremes match naive enumeration on random instances") {
  oracle::Rng rng(2024);
  for (int trial = 0; trial < 25; ++trial) {
    const int n = rng.integer(2, 10);
    const bool integer = trial % 2 == 0;
    const bool fields = trial % 3 == 0;
    const IsingInstance inst = oracle::random_instance(rng, n, integer, fields);
    const CutExtremes fast = brute_force_extremes(inst);
    const CutExtremes slow = naive_extremes(inst);
    INFO("trial " << trial << " n=" << n);
    CHECK(fast.c_max == Catch::Approx(slow.c_max).margin(1e-12));
    CHECK(fast.c_min == Catch::Approx(slow.c_min).margin(1e-12));
    CHECK(oracle::cost_of(inst, fast.argmax) == Catch::Approx(fast.c_max).margin(1e-12));
  }
}

TEST_CASE("known optima of standard graphs") {
  CHECK(brute_force_extremes(make_cycle(5)).c_max == 4.0);
  CHECK(brute_force_extremes(make_cycle(6)).c_max == 6.0);
  CHECK(brute_force_extremes(make_complete(5)).c_max == 6.0);
  CHECK(brute_force_extremes(make_complete_bipartite(3, 3)).c_max == 9.0);
  CHECK(brute_force_extremes(make_hypercube(3)).c_max == 12.0);
  CHECK(brute_force_extremes(make_cycle(6)).c_min == 0.0);
  CHECK(brute_force_extremes(make_complete(4)).c_min == 0.0);
  CHECK(brute_force_extremes(make_complete_bipartite(4, 4)).edge_fraction == 1.0);
}

TEST_CASE("field-free extremes are global-flip symmetric") {
  oracle::Rng rng(77);
  const IsingInstance inst = oracle::random_instance(rng, 8, true, false);
  const CutExtremes ext = brute_force_extremes(inst);
  std::vector<int> flipped = spins_from_mask(ext.argmax, inst.n);
  for (int& s : flipped) s = -s;
  CHECK(cost_value(inst, flipped) == Catch::Approx(ext.c_max).margin(1e-12));
}

TEST_CASE("approximation ratio normalizes between the extremes") {
  CutExtremes ext;
  ext.c_min = 2.0;
  ext.c_max = 10.0;
  CHECK(approximation_ratio(10.0, ext) == 1.0);
  CHECK(approximation_ratio(2.0, ext) == 0.0);
  CHECK(approximation_ratio(6.0, ext) == 0.5);
  CutExtremes flat;
  flat.c_min = flat.c_max = 3.0;
  CHECK_THROWS(approximation_ratio(3.0, flat));
}

TEST_CASE("size guard rejects oversized enumerations") {
  IsingInstance g;
  g.n = 31;
  g.fields.assign(31, 0.0);
  g.edges = {{0, 1, 1.0}};
  CHECK_THROWS(brute_force_extremes(g));
}
