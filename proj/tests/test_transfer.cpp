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
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qaoa/analytic.hpp"
#include "qaoa/transfer.hpp"

using namespace qaoa;

TEST_CASE("single-instance transfer report") {
  const IsingInstance receiver = make_cycle(4);
  const ParameterSet opt = tree_optimum(2).params();  // exact optimum for a ring
  const TransferReport rep = transfer_error(receiver, opt, opt, "self");
  CHECK(rep.r_opt == Catch::Approx(0.75).margin(1e-9));
  CHECK(rep.delta == Catch::Approx(0.0).margin(1e-12));
  CHECK(rep.donor_domain == "U1");
  CHECK(rep.edge_fraction == 1.0);
  CHECK(rep.random_guess_ref == Catch::Approx(0.25).margin(1e-9));

  SECTION("a mismatched donor shows a positive loss") {
    const TransferReport cross = transfer_error(receiver, tree_optimum(9).params(), opt);
    CHECK(cross.delta > 0.01);
    CHECK(cross.r_donor < cross.r_opt);
  }
  SECTION("depth mismatch is rejected") {
    CHECK_THROWS(transfer_error(receiver, ParameterSet{{0.1, 0.2}, {0.1, 0.2}}, opt));
  }
}

TEST_CASE("donor factory produces canonical and shifted schedules") {
  SECTION("first-box donors are the stationary points themselves") {
    const auto donors = make_tree_donors({3, 4}, DonorDomain::U1);
    REQUIRE(donors.size() == 2);
    CHECK(donors[0].d_prime == 3);
    CHECK(donors[0].domain == "U1");
    CHECK(donors[0].params.gammas[0] == Catch::Approx(tree_optimum(3).gamma_star));
    CHECK(domain_tag(donors[0].params) == "U1");
    CHECK(domain_tag(donors[1].params) == "U1");
  }
  SECTION("shifted donors leave both canonical boxes") {
    const auto donors = make_tree_donors({3, 4}, DonorDomain::NonU);
    for (const DonorSpec& d : donors) {
      INFO(d.id);
      CHECK(d.domain == "non-U");
      CHECK(domain_tag(d.params) == "A");
    }
    // The odd-degree shift flips the mixer sign, the even-degree one does not.
    CHECK(donors[0].params.betas[0] == Catch::Approx(-kPi / 8));
    CHECK(donors[1].params.betas[0] == Catch::Approx(kPi / 8));
  }
}

TEST_CASE("degree scan on a small ensemble") {
  ScanPlan plan;
  plan.model = GraphModel::Regular;
  plan.n = 10;
  plan.degrees = {3};
  plan.instances = 3;
  plan.seed = 5;
  plan.p = 1;
  const ScanOutput out = scan_degrees(plan, make_tree_donors({3}, DonorDomain::U1));
  REQUIRE(out.rows.size() == 1);
  CHECK(out.warnings.empty());
  const ScanRow& row = out.rows[0];
  CHECK(row.model == "regular");
  CHECK(row.d == 3);
  CHECK(row.d_prime == 3);
  REQUIRE(row.reports.size() == 3);
  // Donors double as warm starts, so the measured optimum dominates them.
  for (const TransferReport& rep : row.reports) CHECK(rep.delta >= -1e-9);
  CHECK(row.p25 <= row.p75);
  CHECK(row.mean_delta >= -1e-9);

  SECTION("the scan is reproducible") {
    const ScanOutput again = scan_degrees(plan, make_tree_donors({3}, DonorDomain::U1));
    CHECK(scan_csv(again.rows) == scan_csv(out.rows));
  }
}

TEST_CASE("infeasible grid points are skipped with a warning") {
  ScanPlan plan;
  plan.model = GraphModel::Regular;
  plan.n = 10;
  plan.degrees = {11, 3};  // the first degree exceeds the vertex count
  plan.instances = 2;
  plan.p = 1;
  const ScanOutput out = scan_degrees(plan, make_tree_donors({3}, DonorDomain::U1));
  REQUIRE(out.rows.size() == 1);
  CHECK(out.rows[0].d == 3);
  REQUIRE_FALSE(out.warnings.empty());
  CHECK(out.warnings[0].find("d=11") != std::string::npos);
}

TEST_CASE("plan validation") {
  ScanPlan plan;
  plan.degrees = {3};
  plan.instances = 0;
  CHECK_THROWS(scan_degrees(plan, make_tree_donors({3}, DonorDomain::U1)));
  plan.instances = 1;
  CHECK_THROWS(scan_degrees(plan, {}));  // no donors
  plan.p = 2;
  CHECK_THROWS(scan_degrees(plan, make_tree_donors({3}, DonorDomain::U1)));  // depth mismatch
  ScanPlan ws;
  ws.model = GraphModel::WattsStrogatz;
  ws.degrees = {4};
  ws.n = 10;
  ws.instances = 1;
  // No rewiring probability set.
  const ScanOutput out = scan_degrees(ws, make_tree_donors({4}, DonorDomain::U1));
  CHECK(out.rows.empty());
  CHECK_FALSE(out.warnings.empty());
}

TEST_CASE("other receiver models draw valid instances") {
  for (GraphModel model : {GraphModel::ErdosRenyi, GraphModel::BarabasiAlbert}) {
    ScanPlan plan;
    plan.model = model;
    plan.n = 10;
    plan.degrees = {4};
    plan.instances = 2;
    plan.p = 1;
    INFO(to_string(model));
    const ScanOutput out = scan_degrees(plan, make_tree_donors({4}, DonorDomain::U1));
    REQUIRE(out.rows.size() == 1);
    CHECK(out.rows[0].reports.size() == 2);
  }
}

TEST_CASE("percentiles interpolate linearly") {
  CHECK(detail::percentile({4.0, 1.0, 3.0, 2.0}, 0.0) == 1.0);
  CHECK(detail::percentile({4.0, 1.0, 3.0, 2.0}, 1.0) == 4.0);
  CHECK(detail::percentile({4.0, 1.0, 3.0, 2.0}, 0.25) == Catch::Approx(1.75));
  CHECK(detail::percentile({4.0, 1.0, 3.0, 2.0}, 0.5) == Catch::Approx(2.5));
  CHECK(detail::percentile({7.0}, 0.5) == 7.0);
  CHECK_THROWS(detail::percentile({}, 0.5));
}

TEST_CASE("worker cap honors the environment override") {
  setenv("QAOA_LAB_THREADS", "3", 1);
  CHECK(detail::thread_cap() == 3);
  setenv("QAOA_LAB_THREADS", "garbage", 1);
  CHECK(detail::thread_cap() >= 1);
  unsetenv("QAOA_LAB_THREADS");
  CHECK(detail::thread_cap() >= 1);
}

TEST_CASE("csv and json emission") {
  ScanPlan plan;
  plan.model = GraphModel::Regular;
  plan.n = 8;
  plan.degrees = {3};
  plan.instances = 2;
  plan.p = 1;
  const ScanOutput out = scan_degrees(plan, make_tree_donors({3}, DonorDomain::U1));

  const std::string csv = scan_csv(out.rows);
  std::istringstream lines(csv);
  std::string header;
  std::getline(lines, header);
  CHECK(header == kScanCsvHeader);
  std::string row;
  REQUIRE(std::getline(lines, row));
  CHECK(std::count(row.begin(), row.end(), ',') == 9);
  CHECK(row.rfind("regular,8,3,3,1,U1,", 0) == 0);

  const nlohmann::json j = scan_json(out, plan);
  CHECK(j["plan"]["n"] == 8);
  CHECK(j["plan"]["model"] == "regular");
  REQUIRE(j["rows"].size() == 1);
  CHECK(j["rows"][0]["d_prime"] == 3);
  CHECK(j["rows"][0]["instances"].size() == 2);
  CHECK(j["rows"][0]["instances"][0].contains("donor_params"));

  SECTION("text files round-trip") {
    const std::string path = "/tmp/qaoa_lab_test_scan.csv";
    write_text_file(path, csv);
    std::ifstream f(path);
    std::stringstream buf;
    buf << f.rdbuf();
    CHECK(buf.str() == csv);
    std::remove(path.c_str());
  }
}
