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

#ifndef QAOA_LAB_TRANSFER_HPP
#define QAOA_LAB_TRANSFER_HPP

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "qaoa/analytic.hpp"
#include "qaoa/graphgen.hpp"
#include "qaoa/maxcut.hpp"
#include "qaoa/optimize.hpp"
#include "qaoa/qaoa.hpp"
#include "qaoa/symmetry.hpp"

namespace qaoa {

// ----- single-instance transfer ---------------------------------------------------

// Outcome of donating one parameter set to one receiver instance.  delta is
// the approximation-ratio loss r(receiver optimum) - r(donated parameters);
// raw values are stored unclamped.
struct TransferReport {
  std::string receiver_id;
  std::string donor_id;
  ParameterSet donor_params;
  ParameterSet receiver_opt;
  double r_opt = 0.0;
  double r_donor = 0.0;
  double delta = 0.0;
  std::string donor_domain;
  std::string opt_domain;
  double edge_fraction = 0.0;
  double random_guess_ref = 0.0;  // r_opt minus the uniform-guessing ratio
};

inline TransferReport transfer_error(const IsingInstance& receiver,
                                     const ParameterSet& donor_params,
                                     const ParameterSet& receiver_opt,
                                     const std::string& donor_id = "donor") {
  validate_params(donor_params);
  validate_params(receiver_opt);
  if (donor_params.depth() != receiver_opt.depth())
    throw std::invalid_argument("donor and receiver-optimal depths must match");
  const CircuitContext ctx(receiver);
  const CutExtremes ext = brute_force_extremes(receiver);
  TransferReport rep;
  rep.receiver_id = receiver.label.empty() ? "receiver" : receiver.label;
  rep.donor_id = donor_id;
  rep.donor_params = donor_params;
  rep.receiver_opt = receiver_opt;
  rep.r_opt = approximation_ratio(expectation_cost(ctx, receiver_opt), ext);
  rep.r_donor = approximation_ratio(expectation_cost(ctx, donor_params), ext);
  rep.delta = rep.r_opt - rep.r_donor;
  rep.donor_domain = domain_tag(wrap_to_A(donor_params));
  rep.opt_domain = domain_tag(wrap_to_A(receiver_opt));
  rep.edge_fraction = ext.edge_fraction;
  rep.random_guess_ref = random_guess_reference(rep.r_opt, receiver, ext);
  return rep;
}

// ----- degree-scan experiment -------------------------------------------------------

enum class GraphModel { Regular, ErdosRenyi, BarabasiAlbert, WattsStrogatz };

inline const char* to_string(GraphModel m) {
  switch (m) {
    case GraphModel::Regular: return "regular";
    case GraphModel::ErdosRenyi: return "er";
    case GraphModel::BarabasiAlbert: return "ba";
    case GraphModel::WattsStrogatz: return "ws";
  }
  return "?";
}

// Receiver ensemble: `degrees` is the exact degree for the regular model and
// the target average degree for the random models.  The Watts-Strogatz
// rewiring probability has no sensible default, so it must be set whenever
// that model is selected.
struct ScanPlan {
  GraphModel model = GraphModel::Regular;
  int n = 16;
  std::vector<int> degrees;
  WeightScheme weights = WeightScheme::Unit;
  int instances = 10;
  uint64_t seed = 1;
  int p = 1;
  std::optional<double> ws_rewire;
  OptimizerConfig optimizer;
};

// One donated parameter set, tagged for reporting.
struct DonorSpec {
  std::string id;
  int d_prime = 0;
  ParameterSet params;
  std::string domain;
};

enum class DonorDomain { U1, NonU };

// Depth-1 tree-optimum donors.  For the U1 selector the donor is the optimum
// itself; for NonU the class-matching pi shift (odd degrees flip the mixer
// sign, even degrees do not) lands the donor outside both canonical boxes.
inline std::vector<DonorSpec> make_tree_donors(const std::vector<int>& degrees,
                                               DonorDomain domain) {
  std::vector<DonorSpec> donors;
  for (int d : degrees) {
    const TreeOptimum opt = tree_optimum(d);
    DonorSpec spec;
    spec.d_prime = d;
    if (domain == DonorDomain::U1) {
      spec.id = "tree-opt(d=" + std::to_string(d) + ")";
      spec.params = opt.params();
      spec.domain = "U1";
    } else {
      const TransformKind shift = d % 2 == 1 ? TransformKind::OwsGammaShift
                                             : TransformKind::EwsGammaShift;
      spec.id = "tree-opt(d=" + std::to_string(d) + ")-shifted";
      spec.params = wrap_to_A(apply_transform(opt.params(), {shift, 0, -1}));
      spec.domain = "non-U";
    }
    donors.push_back(std::move(spec));
  }
  return donors;
}

// Aggregated scan point: one receiver degree paired with one donor.
struct ScanRow {
  std::string model;
  int n = 0;
  int d = 0;
  int d_prime = 0;
  int p = 1;
  std::string domain;
  double mean_delta = 0.0;
  double p25 = 0.0;
  double p75 = 0.0;
  double random_guess_ref = 0.0;
  std::vector<TransferReport> reports;
};

struct ScanOutput {
  std::vector<ScanRow> rows;
  std::vector<std::string> warnings;
};

namespace detail {

// Worker-thread cap: QAOA_LAB_THREADS when set to a positive integer,
// otherwise the hardware concurrency.
inline int thread_cap() {
  if (const char* env = std::getenv("QAOA_LAB_THREADS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? static_cast<int>(hw) : 1;
}

// Runs fn(0..total-1) across up to thread_cap() workers.  Tasks write to
// disjoint slots, so results do not depend on the schedule.
inline void parallel_for(int total, const std::function<void(int)>& fn) {
  const int workers = std::min(thread_cap(), total);
  if (workers <= 1) {
    for (int i = 0; i < total; ++i) fn(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next.fetch_add(1); i < total; i = next.fetch_add(1)) fn(i);
    });
  for (std::thread& t : pool) t.join();
}

// Linear-interpolation percentile of an unsorted sample, t in [0,1].
inline double percentile(std::vector<double> v, double t) {
  if (v.empty()) throw std::invalid_argument("percentile of empty sample");
  std::sort(v.begin(), v.end());
  const double pos = t * (v.size() - 1);
  const size_t i = static_cast<size_t>(pos);
  if (i + 1 >= v.size()) return v.back();
  const double frac = pos - i;
  return v[i] + frac * (v[i + 1] - v[i]);
}

inline IsingInstance make_receiver(const ScanPlan& plan, int d, int idx) {
  const uint64_t seed =
      mix_seed(plan.seed, static_cast<uint64_t>(plan.model), uint64_t(d), uint64_t(idx));
  switch (plan.model) {
    case GraphModel::Regular:
      return generate_regular(plan.n, d, plan.weights, seed);
    case GraphModel::ErdosRenyi: {
      const double q = std::min(1.0, double(d) / double(plan.n - 1));
      return generate_er(plan.n, q, plan.weights, seed);
    }
    case GraphModel::BarabasiAlbert: {
      const int m = std::max(1, (d + 1) / 2);
      return generate_ba(plan.n, m, plan.weights, seed);
    }
    case GraphModel::WattsStrogatz:
      if (!plan.ws_rewire)
        throw std::invalid_argument("Watts-Strogatz plans must set the rewiring probability");
      return generate_ws(plan.n, d, *plan.ws_rewire, plan.weights, seed);
  }
  throw std::logic_error("unknown graph model");
}

}  // namespace detail

// Runs the full grid: for every requested receiver degree, draws the planned
// number of instances, finds each receiver's multistart optimum once, and
// evaluates every donor against it.  The donor schedules are fed in as warm
// starts, so the per-instance optimum always dominates every donated point
// and the reported deltas stay nonnegative up to convergence error.
// Infeasible grid points are skipped with a warning instead of aborting.
inline ScanOutput scan_degrees(const ScanPlan& plan, const std::vector<DonorSpec>& donors) {
  if (plan.instances < 1) throw std::invalid_argument("plan needs at least one instance");
  if (plan.p < 1) throw std::invalid_argument("plan needs depth >= 1");
  if (donors.empty()) throw std::invalid_argument("plan needs at least one donor");
  std::vector<ParameterSet> warm_starts;
  for (const DonorSpec& donor : donors) {
    if (donor.params.depth() != plan.p)
      throw std::invalid_argument("donor depth does not match plan depth");
    warm_starts.push_back(donor.params);
  }

  ScanOutput out;
  struct PointResult {
    std::vector<TransferReport> by_donor;  // one per donor
    bool ok = false;
    std::string warning;
  };

  for (int d : plan.degrees) {
    // Probe feasibility once per degree so an impossible point yields a
    // single warning rather than one per instance.
    try {
      detail::make_receiver(plan, d, 0);
    } catch (const std::exception& e) {
      out.warnings.push_back("skipping d=" + std::to_string(d) + ": " + e.what());
      continue;
    }

    std::vector<PointResult> results(plan.instances);
    detail::parallel_for(plan.instances, [&](int idx) {
      PointResult& res = results[idx];
      try {
        IsingInstance receiver = detail::make_receiver(plan, d, idx);
        receiver.label += "#" + std::to_string(idx);
        const CircuitContext ctx(receiver);
        const CutExtremes ext = brute_force_extremes(receiver);
        if (ext.c_max == ext.c_min) {
          res.warning = receiver.label + ": constant cost landscape, skipped";
          return;
        }
        const OptimizeResult opt =
            optimize_multistart(ctx, plan.p, plan.optimizer, warm_starts);
        const double r_opt = approximation_ratio(opt.cost, ext);
        for (const DonorSpec& donor : donors) {
          TransferReport rep;
          rep.receiver_id = receiver.label;
          rep.donor_id = donor.id;
          rep.donor_params = donor.params;
          rep.receiver_opt = opt.params;
          rep.r_opt = r_opt;
          rep.r_donor = approximation_ratio(expectation_cost(ctx, donor.params), ext);
          rep.delta = rep.r_opt - rep.r_donor;
          rep.donor_domain = donor.domain;
          rep.opt_domain = domain_tag(wrap_to_A(opt.params));
          rep.edge_fraction = ext.edge_fraction;
          rep.random_guess_ref = random_guess_reference(r_opt, receiver, ext);
          res.by_donor.push_back(std::move(rep));
        }
        res.ok = true;
      } catch (const std::exception& e) {
        res.warning = "instance " + std::to_string(idx) + ": " + e.what();
      }
    });

    for (const PointResult& res : results)
      if (!res.warning.empty()) out.warnings.push_back(res.warning);

    for (size_t di = 0; di < donors.size(); ++di) {
      ScanRow row;
      row.model = to_string(plan.model);
      row.n = plan.n;
      row.d = d;
      row.d_prime = donors[di].d_prime;
      row.p = plan.p;
      row.domain = donors[di].domain;
      for (const PointResult& res : results)
        if (res.ok) row.reports.push_back(res.by_donor[di]);
      if (row.reports.empty()) {
        out.warnings.push_back("no usable instances at d=" + std::to_string(d));
        continue;
      }
      std::vector<double> deltas;
      double dsum = 0.0, rsum = 0.0;
      for (const TransferReport& rep : row.reports) {
        deltas.push_back(rep.delta);
        dsum += rep.delta;
        rsum += rep.random_guess_ref;
      }
      row.mean_delta = dsum / deltas.size();
      row.p25 = detail::percentile(deltas, 0.25);
      row.p75 = detail::percentile(deltas, 0.75);
      row.random_guess_ref = rsum / row.reports.size();
      out.rows.push_back(std::move(row));
    }
  }
  return out;
}

// ----- emission -------------------------------------------------------------------

namespace detail {

inline std::string format_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

}  // namespace detail

inline constexpr const char* kScanCsvHeader =
    "model,n,d,d_prime,p,domain,mean_delta,p25,p75,random_guess_ref";

inline std::string scan_csv(const std::vector<ScanRow>& rows) {
  std::string out = std::string(kScanCsvHeader) + "\n";
  for (const ScanRow& r : rows) {
    out += r.model + "," + std::to_string(r.n) + "," + std::to_string(r.d) + "," +
           std::to_string(r.d_prime) + "," + std::to_string(r.p) + "," + r.domain + "," +
           detail::format_double(r.mean_delta) + "," + detail::format_double(r.p25) + "," +
           detail::format_double(r.p75) + "," + detail::format_double(r.random_guess_ref) +
           "\n";
  }
  return out;
}

inline nlohmann::json params_json(const ParameterSet& ps) {
  return {{"gammas", ps.gammas}, {"betas", ps.betas}};
}

inline nlohmann::json scan_json(const ScanOutput& out, const ScanPlan& plan) {
  nlohmann::json j;
  j["plan"] = {{"model", to_string(plan.model)},
               {"n", plan.n},
               {"degrees", plan.degrees},
               {"weights", to_string(plan.weights)},
               {"instances", plan.instances},
               {"seed", plan.seed},
               {"p", plan.p}};
  if (plan.ws_rewire) j["plan"]["ws_rewire"] = *plan.ws_rewire;
  j["rows"] = nlohmann::json::array();
  for (const ScanRow& r : out.rows) {
    nlohmann::json row = {{"model", r.model},
                          {"n", r.n},
                          {"d", r.d},
                          {"d_prime", r.d_prime},
                          {"p", r.p},
                          {"domain", r.domain},
                          {"mean_delta", r.mean_delta},
                          {"p25", r.p25},
                          {"p75", r.p75},
                          {"random_guess_ref", r.random_guess_ref}};
    row["instances"] = nlohmann::json::array();
    for (const TransferReport& rep : r.reports)
      row["instances"].push_back({{"receiver", rep.receiver_id},
                                  {"donor", rep.donor_id},
                                  {"delta", rep.delta},
                                  {"r_opt", rep.r_opt},
                                  {"r_donor", rep.r_donor},
                                  {"donor_domain", rep.donor_domain},
                                  {"opt_domain", rep.opt_domain},
                                  {"edge_fraction", rep.edge_fraction},
                                  {"random_guess_ref", rep.random_guess_ref},
                                  {"donor_params", params_json(rep.donor_params)},
                                  {"receiver_opt", params_json(rep.receiver_opt)}});
    j["rows"].push_back(std::move(row));
  }
  j["warnings"] = out.warnings;
  return j;
}

inline void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open for writing: " + path);
  f << content;
}

}  // namespace qaoa

#endif  // QAOA_LAB_TRANSFER_HPP
