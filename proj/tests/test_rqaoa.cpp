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
#include <sstream>

#include "json.hpp"
#include "qaoa/graphgen.hpp"
#include "qaoa/analytic.hpp"
#include "qaoa/rqaoa.hpp"
#include "reference_oracle.hpp"

using namespace qaoa;

namespace {

// Exhaustive check of the contraction identity: for every assignment of the
// reduced instance, lifting through x_l = sign * x_k must reproduce the
// original cost minus the released constant.
void check_contract_identity(const IsingInstance& inst, int k, int l, int sign) {
  const ContractResult res = contract(inst, k, l, sign);
  REQUIRE(res.instance.n == inst.n - 1);
  for (uint64_t y = 0; y < (uint64_t(1) << res.instance.n); ++y) {
    const std::vector<int> reduced = spins_from_mask(y, res.instance.n);
    std::vector<int> lifted(inst.n);
    for (int v = 0; v < inst.n; ++v)
      lifted[v] = v == l ? sign * reduced[res.new_index[k]] : reduced[res.new_index[v]];
    INFO("k=" << k << " l=" << l << " sign=" << sign << " y=" << y);
    REQUIRE(cost_value(res.instance, reduced) + res.offset ==
            Catch::Approx(cost_value(inst, lifted)).margin(1e-9));
  }
}

}  // namespace

TEST_CASE("contraction folds weights, fields, and constants exactly") {
  IsingInstance path;
  path.n = 3;
  path.edges = {{0, 1, 2.0}, {1, 2, 3.0}};
  path.fields = {0.0, 0.0, 0.0};

  SECTION("aligned substitution") {
    const ContractResult res = contract(path, 0, 1, +1);
    CHECK(res.offset == 0.0);
    REQUIRE(res.instance.edges.size() == 1);
    CHECK(res.instance.edges[0].w == 3.0);
    CHECK(res.survivor_new_index == 0);
    check_contract_identity(path, 0, 1, +1);
  }
  SECTION("anti-aligned substitution releases the incident weight") {
    const ContractResult res = contract(path, 0, 1, -1);
    CHECK(res.offset == 5.0);
    REQUIRE(res.instance.edges.size() == 1);
    CHECK(res.instance.edges[0].w == -3.0);
    check_contract_identity(path, 0, 1, -1);
  }
  SECTION("parallel edges cancel when they sum to zero") {
    IsingInstance tri = make_complete(3);
    tri.edges[1].w = -1.0;  // edge (0,2)
    // Contracting 1 into 2... vertex 2 merges into 1: edges (0,1) w 1 and
    // (0,2) w -1 fold onto (0,1) and cancel.
    const ContractResult res = contract(tri, 1, 2, +1);
    CHECK(res.instance.n == 2);
    CHECK(res.instance.edges.empty());
    check_contract_identity(tri, 1, 2, +1);
  }
  SECTION("fields fold with the sign") {
    IsingInstance g = path;
    g.fields = {1.0, 2.0, -1.0};
    const ContractResult plus = contract(g, 0, 1, +1);
    CHECK(plus.instance.fields[0] == 3.0);
    const ContractResult minus = contract(g, 0, 1, -1);
    CHECK(minus.instance.fields[0] == -1.0);
    check_contract_identity(g, 0, 1, +1);
    check_contract_identity(g, 0, 1, -1);
  }
  SECTION("invalid contractions are rejected") {
    CHECK_THROWS(contract(path, 0, 2, +1));  // not adjacent
    CHECK_THROWS(contract(path, 0, 0, +1));
    CHECK_THROWS(contract(path, 0, 1, 0));
    CHECK_THROWS(contract(path, 0, 5, -1));
  }
}

TEST_CASE("contraction identity holds on random instances") {
  oracle::Rng rng(90210);
  int checked = 0;
  while (checked < 30) {
    const int n = rng.integer(3, 7);
    const IsingInstance inst =
        oracle::random_instance(rng, n, checked % 2 == 0, checked % 3 == 0);
    if (inst.edges.empty()) continue;
    const Edge& e = inst.edges[size_t(rng.integer(0, inst.num_edges() - 1))];
    check_contract_identity(inst, e.u, e.v, rng.integer(0, 1) == 0 ? +1 : -1);
    ++checked;
  }
}

TEST_CASE("contraction preserves the even class") {
  // Both endpoints even: the merged sum stays even for either sign, and all
  // bystander sums keep their parity.
  const IsingInstance g = make_complete(5);
  REQUIRE(symmetry_class(g) == SymmetryClass::Ews);
  for (int sign : {+1, -1}) {
    const ContractResult res = contract(g, 0, 1, sign);
    INFO("sign " << sign);
    CHECK(symmetry_class(res.instance) == SymmetryClass::Ews);
  }
}

TEST_CASE("contraction breaks the odd class") {
  const IsingInstance g = make_complete(4);
  REQUIRE(symmetry_class(g) == SymmetryClass::Ows);
  for (int sign : {+1, -1}) {
    const ContractResult res = contract(g, 0, 1, sign);
    INFO("sign " << sign);
    CHECK(symmetry_class(res.instance) != SymmetryClass::Ows);
  }
}

TEST_CASE("merged vertex sums obey the exact bookkeeping identity") {
  oracle::Rng rng(444);
  for (int trial = 0; trial < 10; ++trial) {
    const IsingInstance inst = oracle::random_instance(rng, 6, true, trial % 2 == 0);
    if (inst.edges.empty()) continue;
    const SymmetryInfo before = classify_symmetry(inst);
    REQUIRE(before.integer);
    const Edge& e = inst.edges[size_t(rng.integer(0, inst.num_edges() - 1))];
    const int sign = rng.integer(0, 1) == 0 ? +1 : -1;
    const ContractResult res = contract(inst, e.u, e.v, sign);
    const SymmetryInfo after = classify_symmetry(res.instance);
    REQUIRE(after.integer);

    const long long w_kl = static_cast<long long>(e.w);
    const long long expected =
        before.vertex_sums[e.u] + sign * before.vertex_sums[e.v] - (1 + sign) * w_kl;
    INFO("trial " << trial << " edge (" << e.u << "," << e.v << ") sign " << sign);
    CHECK(after.vertex_sums[res.survivor_new_index] == expected);

    // Bystanders keep their parity even when parallel edges merge.
    for (int v = 0; v < inst.n; ++v) {
      if (v == e.u || v == e.v) continue;
      const int nv = res.new_index[v];
      CHECK(((after.vertex_sums[nv] - before.vertex_sums[v]) % 2 + 2) % 2 == 0);
    }
  }
}

TEST_CASE("the iterated scheme solves small instances exactly") {
  SECTION("even ring") {
    const RqaoaResult res = rqaoa_run(make_cycle(6));
    CHECK(res.best_cost == 6.0);
    CHECK(res.steps.size() == 4);
    CHECK(res.assignment.size() == 6);
    for (int s : res.assignment) CHECK((s == 1 || s == -1));
  }
  SECTION("complete graph on four vertices") {
    const RqaoaResult res = rqaoa_run(make_complete(4));
    CHECK(res.best_cost == 4.0);
    CHECK(res.initial_class == SymmetryClass::Ows);
  }
  SECTION("odd ring") {
    const RqaoaResult res = rqaoa_run(make_cycle(5));
    CHECK(res.best_cost == 4.0);
  }
}

TEST_CASE("class trajectory of the complete graph run") {
  const RqaoaResult res = rqaoa_run(make_complete(4));
  REQUIRE(res.steps.size() == 2);
  CHECK(res.initial_class == SymmetryClass::Ows);
  CHECK(res.steps[0].class_after == SymmetryClass::IntegerGeneral);
  CHECK(res.steps[1].class_after == SymmetryClass::Ews);
}

TEST_CASE("cost bookkeeping is exact across random integer runs") {
  oracle::Rng rng(31337);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.integer(4, 8);
    const IsingInstance inst = oracle::random_instance(rng, n, true, trial % 4 == 0);
    RqaoaConfig cfg;
    cfg.optimizer.max_iterations = 200;
    const RqaoaResult res = rqaoa_run(inst, cfg);
    INFO("trial " << trial << " n=" << n);
    // Integer arithmetic throughout, so the identities hold with no slack.
    CHECK(res.best_cost == cost_value(inst, res.assignment));
    CHECK(res.reduced_cost + res.total_offset == res.best_cost);
    CHECK(res.assignment.size() == size_t(inst.n));
    const AuditResult audit = audit_symmetry_chain(inst, res.steps);
    CHECK(audit.ok);
  }
}

TEST_CASE("stopping size is honored") {
  const IsingInstance g = generate_regular(10, 3, WeightScheme::Unit, 8);
  RqaoaConfig cfg;
  cfg.stop_at = 5;
  const RqaoaResult res = rqaoa_run(g, cfg);
  CHECK(res.final_instance.n == 5);
  CHECK(res.steps.size() == 5);
  CHECK_THROWS(rqaoa_run(g, RqaoaConfig{.p = 1, .stop_at = 1}));
  CHECK_THROWS(rqaoa_run(g, RqaoaConfig{.p = 0, .stop_at = 2}));
}

TEST_CASE("audit detects tampered chains") {
  const IsingInstance g = make_cycle(6);
  const RqaoaResult res = rqaoa_run(g);
  REQUIRE(audit_symmetry_chain(g, res.steps).ok);

  SECTION("offset forgery") {
    auto steps = res.steps;
    steps[1].offset += 1.0;
    CHECK_FALSE(audit_symmetry_chain(g, steps).ok);
  }
  SECTION("sign forgery") {
    auto steps = res.steps;
    steps[0].sign = -steps[0].sign;
    CHECK_FALSE(audit_symmetry_chain(g, steps).ok);
  }
  SECTION("class forgery") {
    auto steps = res.steps;
    steps[0].class_after = SymmetryClass::RealGeneral;
    CHECK_FALSE(audit_symmetry_chain(g, steps).ok);
  }
}

TEST_CASE("step log emits one parseable object per reduction") {
  const RqaoaResult res = rqaoa_run(make_cycle(6));
  const std::string jsonl = rqaoa_steps_jsonl(res);
  std::istringstream lines(jsonl);
  std::string line;
  size_t count = 0;
  while (std::getline(lines, line)) {
    const nlohmann::json j = nlohmann::json::parse(line);
    CHECK(j.contains("iteration"));
    CHECK(j.contains("eliminated"));
    CHECK(j.contains("sign"));
    CHECK(j.contains("offset"));
    CHECK(j.contains("class"));
    ++count;
  }
  CHECK(count == res.steps.size());
}

TEST_CASE("correlation pick prefers magnitude with deterministic ties") {
  // At the ring optimum every edge has the same negative correlation, so the
  // sorted-first edge wins.
  const CorrelationPick pick =
      max_correlation_edge(make_cycle(4), tree_optimum(2).params());
  CHECK(pick.u == 0);
  CHECK(pick.v == 1);
  CHECK(pick.correlation < 0.0);

  IsingInstance skew = make_path(3);
  skew.edges[1].w = 4.0;  // stronger coupling dominates the correlation
  const CorrelationPick strong = max_correlation_edge(skew, ParameterSet{{0.2}, {0.2}});
  CHECK(strong.u == 1);
  CHECK(strong.v == 2);

  IsingInstance edgeless;
  edgeless.n = 2;
  edgeless.fields = {0.0, 0.0};
  CHECK_THROWS(max_correlation_edge(edgeless, ParameterSet{{0.1}, {0.1}}));
}
