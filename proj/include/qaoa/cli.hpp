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

#ifndef QAOA_LAB_CLI_HPP
#define QAOA_LAB_CLI_HPP

#include <algorithm>
#include <cctype>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "qaoa/analytic.hpp"
#include "qaoa/fixtures.hpp"
#include "qaoa/graphgen.hpp"
#include "qaoa/hva.hpp"
#include "qaoa/ising.hpp"
#include "qaoa/maxcut.hpp"
#include "qaoa/optimize.hpp"
#include "qaoa/qaoa.hpp"
#include "qaoa/rqaoa.hpp"
#include "qaoa/symmetry.hpp"
#include "qaoa/transfer.hpp"

namespace qaoa::cli {

// Exit codes: 0 success, 1 usage error, 2 infeasible configuration,
// 3 certification failure.
inline constexpr int kOk = 0;
inline constexpr int kUsage = 1;
inline constexpr int kInfeasible = 2;
inline constexpr int kCertification = 3;

// ----- small parsers -------------------------------------------------------------

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

// Angles are plain radians ("0.5", "-1e-3") or multiples of pi with a "pi"
// suffix ("0.177pi", "-pi").
inline double parse_angle(std::string s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(0, 1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  bool pi = false;
  if (s.size() >= 2 && s.substr(s.size() - 2) == "pi") {
    pi = true;
    s.resize(s.size() - 2);
  }
  if (pi && (s.empty() || s == "+")) s = "1";
  if (pi && s == "-") s = "-1";
  try {
    size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return pi ? v * kPi : v;
  } catch (const std::exception&) {
    throw std::invalid_argument("cannot parse angle: '" + s + "'");
  }
}

// Interleaved angle list "g1,b1[,g2,b2,...]", or a fixture name such as
// "tree3-p2:3".
inline ParameterSet parse_params(const std::string& s) {
  if (s.rfind("tree3-p2", 0) == 0) return fixture_params(s);
  const std::vector<std::string> parts = split(s, ',');
  if (parts.size() < 2 || parts.size() % 2 != 0)
    throw std::invalid_argument("parameters must be an even-length list g1,b1,g2,b2,...");
  ParameterSet ps;
  for (size_t i = 0; i < parts.size(); i += 2) {
    ps.gammas.push_back(parse_angle(parts[i]));
    ps.betas.push_back(parse_angle(parts[i + 1]));
  }
  return ps;
}

namespace detail_cli {

inline bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char c) { return std::isdigit(c) != 0; });
}

}  // namespace detail_cli

// Accepts named families (K5, K3,4, C8, P4, Q3, tree:3,2,
// regular:n,d,seed[,pm1]) or a path to a graph file.
inline IsingInstance parse_graph(const std::string& spec) {
  using detail_cli::all_digits;
  if (spec.rfind("tree:", 0) == 0) {
    const auto parts = split(spec.substr(5), ',');
    if (parts.size() == 2 && all_digits(parts[0]) && all_digits(parts[1]))
      return make_tree_subgraph(std::stoi(parts[0]), std::stoi(parts[1]));
    throw std::invalid_argument("tree spec must be tree:<degree>,<depth>");
  }
  if (spec.rfind("regular:", 0) == 0) {
    auto parts = split(spec.substr(8), ',');
    WeightScheme scheme = WeightScheme::Unit;
    if (!parts.empty() && parts.back() == "pm1") {
      scheme = WeightScheme::PmOne;
      parts.pop_back();
    }
    if (parts.size() == 3 && all_digits(parts[0]) && all_digits(parts[1]) &&
        all_digits(parts[2]))
      return generate_regular(std::stoi(parts[0]), std::stoi(parts[1]), scheme,
                              std::stoull(parts[2]));
    throw std::invalid_argument("regular spec must be regular:<n>,<d>,<seed>[,pm1]");
  }
  if (spec.size() >= 2) {
    const char fam = spec[0];
    const std::string rest = spec.substr(1);
    if (fam == 'K') {
      const auto parts = split(rest, ',');
      if (parts.size() == 2 && all_digits(parts[0]) && all_digits(parts[1]))
        return make_complete_bipartite(std::stoi(parts[0]), std::stoi(parts[1]));
      if (parts.size() == 1 && all_digits(parts[0])) return make_complete(std::stoi(parts[0]));
    }
    if (fam == 'C' && all_digits(rest)) return make_cycle(std::stoi(rest));
    if (fam == 'P' && all_digits(rest)) return make_path(std::stoi(rest));
    if (fam == 'Q' && all_digits(rest)) return make_hypercube(std::stoi(rest));
  }
  return read_graph_file(spec);
}

// ----- formatting -----------------------------------------------------------------

inline std::string format_angle_pi(double x) { return detail::format_double(x / kPi) + "pi"; }

// Interleaved, re-ingestible by parse_params.
inline std::string format_params(const ParameterSet& ps) {
  std::string out;
  for (int i = 0; i < ps.depth(); ++i) {
    if (i) out += ",";
    out += format_angle_pi(ps.gammas[i]) + "," + format_angle_pi(ps.betas[i]);
  }
  return out;
}

// ----- subcommand handlers ----------------------------------------------------------

namespace handlers {

struct CommonGraphOback {
  std::string graph;
  int qubit_cap = kDefaultQubitCap;
};

inline void print_graph_banner(std::ostream& out, const IsingInstance& g) {
  out << "graph: " << (g.label.empty() ? "(unnamed)" : g.label) << " (n=" << g.n
      << ", m=" << g.num_edges() << ")\n";
  out << "class: " << to_string(symmetry_class(g)) << "\n";
}

inline int simulate(std::ostream& out, const std::string& graph_spec,
                    const std::string& params_spec, int shots, uint64_t seed, int cap) {
  const IsingInstance g = parse_graph(graph_spec);
  const ParameterSet ps = parse_params(params_spec);
  const CircuitContext ctx(g, cap);
  const StateVector state = prepare_state(ctx, ps);
  const double e = expectation_diagonal(state, ctx.diag);
  print_graph_banner(out, g);
  out << "depth: " << ps.depth() << "\n";
  out << "expectation: " << detail::format_double(e) << "\n";
  if (g.n <= 30) {
    const CutExtremes ext = brute_force_extremes(g);
    out << "c_max: " << detail::format_double(ext.c_max)
        << "  c_min: " << detail::format_double(ext.c_min) << "\n";
    if (ext.c_max != ext.c_min)
      out << "ratio: " << detail::format_double(approximation_ratio(e, ext)) << "\n";
  }
  if (shots > 0) {
    const auto samples = sample_bitstrings(state, shots, seed);
    std::map<uint64_t, int> counts;
    for (uint64_t y : samples) counts[y]++;
    std::vector<std::pair<uint64_t, int>> top(counts.begin(), counts.end());
    std::sort(top.begin(), top.end(), [](const auto& a, const auto& b) {
      return a.second != b.second ? a.second > b.second : a.first < b.first;
    });
    out << "samples (top " << std::min<size_t>(8, top.size()) << " of " << counts.size()
        << " outcomes, " << shots << " shots):\n";
    for (size_t i = 0; i < top.size() && i < 8; ++i)
      out << "  " << bitstring_from_mask(top[i].first, g.n) << "  " << top[i].second << "\n";
  }
  return kOk;
}

inline int optimize(std::ostream& out, const std::string& graph_spec, int p,
                    const std::string& start_spec, const std::string& method, int cap) {
  const IsingInstance g = parse_graph(graph_spec);
  const CircuitContext ctx(g, cap);
  OptimizerConfig cfg;
  if (method == "grad")
    cfg.method = OptimizeMethod::GradientAscent;
  else if (method != "coord")
    throw std::invalid_argument("method must be coord or grad");
  OptimizeResult best;
  if (!start_spec.empty()) {
    const ParameterSet start = parse_params(start_spec);
    if (start.depth() != p) throw std::invalid_argument("start depth does not match --p");
    best = optimize_local(ctx, start, cfg);
  } else {
    best = optimize_multistart(ctx, p, cfg);
  }
  print_graph_banner(out, g);
  out << "depth: " << p << "\n";
  out << "best_params: " << format_params(wrap_to_A(best.params)) << "\n";
  out << "expectation: " << detail::format_double(best.cost) << "\n";
  out << "domain: " << domain_tag(wrap_to_A(best.params)) << "\n";
  out << "converged: " << (best.converged ? "yes" : "no")
      << "  evaluations: " << best.evaluations << "\n";
  if (g.n <= 30) {
    const CutExtremes ext = brute_force_extremes(g);
    if (ext.c_max != ext.c_min)
      out << "ratio: " << detail::format_double(approximation_ratio(best.cost, ext)) << "\n";
  }
  const SymmetryClass cls = symmetry_class(g);
  if (cls == SymmetryClass::Ews || cls == SymmetryClass::Ows) {
    const CanonicalizeResult canon = canonicalize_to_U(best.params, cls);
    if (canon.params)
      out << "canonical (" << canon.domain << "): " << format_params(*canon.params) << "\n";
  }
  return kOk;
}

inline int symmetry_check(std::ostream& out, const std::string& graph_spec, int p, int trials,
                          double tol, uint64_t seed, int cap) {
  const IsingInstance g = parse_graph(graph_spec);
  print_graph_banner(out, g);
  out << "depth: " << p << "  trials: " << trials << "  tol: " << detail::format_double(tol)
      << "\n";
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dg(-kPi, kPi), db(-kPi / 4, kPi / 4);
  bool all_ok = true;
  for (TransformKind kind : applicable_transforms(g)) {
    int violations = 0;
    double max_cost_err = 0.0, max_dist_err = 0.0;
    for (int t = 0; t < trials; ++t) {
      ParameterSet ps;
      for (int i = 0; i < p; ++i) {
        ps.gammas.push_back(dg(rng));
        ps.betas.push_back(db(rng));
      }
      const int layers = kind == TransformKind::TimeReversal ? 1 : p;
      for (int layer = 0; layer < layers; ++layer)
        for (int sign : {+1, -1}) {
          const VerifyResult r = verify_symmetry(g, ps, {kind, layer, sign}, tol, cap);
          max_cost_err = std::max(max_cost_err, r.cost_err);
          max_dist_err = std::max(max_dist_err, r.dist_err);
          if (!r.ok) ++violations;
          if (kind == TransformKind::TimeReversal) break;  // sign is immaterial
        }
    }
    if (violations > 0) all_ok = false;
    out << to_string(kind) << ": "
        << (violations == 0 ? "certified" : "VIOLATED (" + std::to_string(violations) + ")")
        << "  max_cost_err=" << detail::format_double(max_cost_err)
        << "  max_dist_err=" << detail::format_double(max_dist_err) << "\n";
  }
  out << (all_ok ? "all applicable symmetries certified\n" : "certification FAILED\n");
  return all_ok ? kOk : kCertification;
}

inline int orbit(std::ostream& out, const std::string& params_spec, std::string cls_name,
                 const std::string& graph_spec) {
  const ParameterSet ps = parse_params(params_spec);
  SymmetryClass cls;
  if (!graph_spec.empty()) {
    cls = symmetry_class(parse_graph(graph_spec));
    if (cls != SymmetryClass::Ews && cls != SymmetryClass::Ows)
      throw std::invalid_argument("instance class " + std::string(to_string(cls)) +
                                  " has no shift orbit");
  } else {
    std::transform(cls_name.begin(), cls_name.end(), cls_name.begin(), ::toupper);
    if (cls_name == "EWS")
      cls = SymmetryClass::Ews;
    else if (cls_name == "OWS")
      cls = SymmetryClass::Ows;
    else
      throw std::invalid_argument("--class must be EWS or OWS (or pass --graph)");
  }
  const Orbit orb = enumerate_orbit(ps, cls);
  out << "class: " << to_string(cls) << "\n";
  out << "orbit size: " << orb.members.size()
      << (orb.degenerate ? " (degenerate)" : "") << "\n";
  for (const ParameterSet& m : orb.members)
    out << "  " << format_params(m) << "  [" << domain_tag(m) << "]\n";
  const CanonicalizeResult canon = canonicalize_to_U(ps, cls);
  if (canon.params)
    out << "canonical (" << canon.domain << "): " << format_params(*canon.params) << "\n";
  else
    out << "canonical: none (no orbit member lies in U1 or U2)\n";
  return kOk;
}

inline int transfer_scan(std::ostream& out, std::ostream& err, const ScanPlan& plan,
                         const std::vector<int>& donor_degrees,
                         const std::string& donor_domain, const std::vector<int>& fixture_sets,
                         const std::string& csv_path, const std::string& json_path) {
  std::vector<DonorSpec> donors;
  if (!donor_degrees.empty()) {
    if (plan.p != 1)
      throw std::invalid_argument("tree-optimum donors are depth-1; use fixture sets for p=2");
    DonorDomain dom;
    if (donor_domain == "U1")
      dom = DonorDomain::U1;
    else if (donor_domain == "nonU")
      dom = DonorDomain::NonU;
    else
      throw std::invalid_argument("--donor-domain must be U1 or nonU");
    for (const DonorSpec& d : make_tree_donors(donor_degrees, dom)) donors.push_back(d);
  }
  if (!fixture_sets.empty()) {
    if (plan.p != 2) throw std::invalid_argument("fixture donors are depth-2; set --p 2");
    for (const DonorSpec& d : make_fixture_donors(fixture_sets)) donors.push_back(d);
  }
  if (donors.empty())
    throw std::invalid_argument("no donors: pass --donor-degrees or --fixture-sets");

  const ScanOutput result = scan_degrees(plan, donors);
  for (const std::string& w : result.warnings) err << "warning: " << w << "\n";
  if (result.rows.empty()) throw std::invalid_argument("scan produced no usable rows");
  const std::string csv = scan_csv(result.rows);
  if (csv_path.empty())
    out << csv;
  else
    write_text_file(csv_path, csv);
  if (!json_path.empty()) write_text_file(json_path, scan_json(result, plan).dump(2) + "\n");
  out << "rows: " << result.rows.size() << "  instances/point: " << plan.instances << "\n";
  if (!csv_path.empty()) out << "csv: " << csv_path << "\n";
  if (!json_path.empty()) out << "json: " << json_path << "\n";
  return kOk;
}

inline int analytic(std::ostream& out, int d_min, int d_max, const std::vector<int>& d_primes,
                    double k, const std::string& csv_path) {
  if (d_min < 1 || d_max < d_min) throw std::invalid_argument("need 1 <= d-min <= d-max");
  if (d_primes.empty()) throw std::invalid_argument("need at least one --d-prime");
  std::string csv = "d,d_prime,delta,random_guess_ref\n";
  for (int d = d_min; d <= d_max; ++d)
    for (int dp : d_primes)
      csv += std::to_string(d) + "," + std::to_string(dp) + "," +
             detail::format_double(transfer_error_closed_form(d, dp, k)) + "," +
             detail::format_double(analytic_random_guess_reference(d, k)) + "\n";
  if (csv_path.empty())
    out << csv;
  else {
    write_text_file(csv_path, csv);
    out << "csv: " << csv_path << "\n";
  }
  return kOk;
}

inline int rqaoa(std::ostream& out, const std::string& graph_spec, int p, int stop_at,
                 const std::string& log_path, int cap) {
  const IsingInstance g = parse_graph(graph_spec);
  RqaoaConfig cfg;
  cfg.p = p;
  cfg.stop_at = stop_at;
  cfg.qubit_cap = cap;
  const RqaoaResult res = rqaoa_run(g, cfg);
  print_graph_banner(out, g);
  for (const ReductionStep& s : res.steps)
    out << "step " << s.iteration << ": eliminate " << s.eliminated << " -> " << s.survivor
        << "  sign=" << (s.sign > 0 ? "+1" : "-1")
        << "  corr=" << detail::format_double(s.correlation) << "  class="
        << to_string(s.class_after) << "  offset=" << detail::format_double(s.offset) << "\n";
  out << "assignment: " << bitstring_from_mask(mask_from_spins(res.assignment), g.n) << "\n";
  out << "cost: " << detail::format_double(res.best_cost) << "\n";
  if (g.n <= 30) {
    const CutExtremes ext = brute_force_extremes(g);
    out << "optimal: " << detail::format_double(ext.c_max) << "\n";
    if (ext.c_max != ext.c_min)
      out << "ratio: " << detail::format_double(approximation_ratio(res.best_cost, ext))
          << "\n";
  }
  const AuditResult audit = audit_symmetry_chain(g, res.steps);
  out << "audit: " << (audit.ok ? "ok" : "FAILED") << "\n";
  if (!log_path.empty()) {
    write_text_file(log_path, rqaoa_steps_jsonl(res));
    out << "log: " << log_path << "\n";
  }
  return audit.ok ? kOk : kCertification;
}

}  // namespace handlers

// ----- entry point ---------------------------------------------------------------

inline int run(const std::vector<std::string>& args, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"QAOA parameter-symmetry laboratory"};
  app.require_subcommand(1);

  // simulate
  auto* sim = app.add_subcommand("simulate", "Evaluate a depth-p circuit on an instance");
  std::string sim_graph, sim_params;
  int sim_shots = 0, sim_cap = kDefaultQubitCap;
  uint64_t sim_seed = 1;
  sim->add_option("--graph", sim_graph, "named family or graph file")->required();
  sim->add_option("--params", sim_params, "g1,b1[,g2,b2,...] or fixture name")->required();
  sim->add_option("--shots", sim_shots, "also draw this many samples");
  sim->add_option("--seed", sim_seed, "sampling seed");
  sim->add_option("--qubit-cap", sim_cap, "exact-simulation size cap");

  // optimize
  auto* opt = app.add_subcommand("optimize", "Locally optimize the angle schedule");
  std::string opt_graph, opt_start, opt_method = "coord";
  int opt_p = 1, opt_cap = kDefaultQubitCap;
  opt->add_option("--graph", opt_graph, "named family or graph file")->required();
  opt->add_option("--p", opt_p, "circuit depth");
  opt->add_option("--start", opt_start, "start parameters (default: multistart grid)");
  opt->add_option("--method", opt_method, "coord or grad");
  opt->add_option("--qubit-cap", opt_cap, "exact-simulation size cap");

  // symmetry-check
  auto* sym = app.add_subcommand("symmetry-check",
                                 "Certify the applicable landscape symmetries numerically");
  std::string sym_graph;
  int sym_p = 1, sym_trials = 100, sym_cap = kDefaultQubitCap;
  double sym_tol = 1e-10;
  uint64_t sym_seed = 7;
  sym->add_option("--graph", sym_graph, "named family or graph file")->required();
  sym->add_option("--p", sym_p, "circuit depth");
  sym->add_option("--trials", sym_trials, "random parameter draws");
  sym->add_option("--tol", sym_tol, "certification tolerance");
  sym->add_option("--seed", sym_seed, "draw seed");
  sym->add_option("--qubit-cap", sym_cap, "exact-simulation size cap");

  // orbit
  auto* orb = app.add_subcommand("orbit", "Enumerate a parameter orbit and canonicalize");
  std::string orb_params, orb_class, orb_graph;
  orb->add_option("--params", orb_params, "g1,b1[,g2,b2,...] or fixture name")->required();
  orb->add_option("--class", orb_class, "EWS or OWS");
  orb->add_option("--graph", orb_graph, "infer the class from an instance instead");

  // transfer-scan
  auto* scan = app.add_subcommand("transfer-scan",
                                  "Transfer donors across a receiver ensemble, emit CSV/JSON");
  std::string scan_model = "regular", scan_weights = "unit", scan_domain = "U1";
  std::string scan_csv_path, scan_json_path;
  std::vector<int> scan_degrees, scan_donor_degrees, scan_fixture_sets;
  int scan_n = 16, scan_instances = 10, scan_p = 1;
  uint64_t scan_seed = 1;
  double scan_ws_rewire = -1.0;
  scan->add_option("--model", scan_model, "regular | er | ba | ws");
  scan->add_option("--n", scan_n, "receiver vertex count");
  scan->add_option("--degrees", scan_degrees, "receiver degrees")
      ->required()
      ->delimiter(',');
  scan->add_option("--weights", scan_weights, "unit | pm1");
  scan->add_option("--instances", scan_instances, "instances per grid point");
  scan->add_option("--seed", scan_seed, "master seed");
  scan->add_option("--p", scan_p, "circuit depth");
  scan->add_option("--ws-rewire", scan_ws_rewire, "rewiring probability (ws model)");
  scan->add_option("--donor-degrees", scan_donor_degrees, "tree-optimum donor degrees (p=1)")
      ->delimiter(',');
  scan->add_option("--donor-domain", scan_domain, "U1 | nonU");
  scan->add_option("--fixture-sets", scan_fixture_sets, "tree3-p2 donor sets 1..8 (p=2)")
      ->delimiter(',');
  scan->add_option("--out", scan_csv_path, "CSV output path (default: stdout)");
  scan->add_option("--json", scan_json_path, "JSON mirror output path");

  // analytic
  auto* ana = app.add_subcommand("analytic", "Closed-form transfer-error curves as CSV");
  int ana_dmin = 2, ana_dmax = 0;
  std::vector<int> ana_dprimes;
  double ana_k = 1.0;
  std::string ana_csv_path;
  ana->add_option("--d-min", ana_dmin, "smallest receiver degree");
  ana->add_option("--d-max", ana_dmax, "largest receiver degree")->required();
  ana->add_option("--d-prime", ana_dprimes, "donor degrees")->required()->delimiter(',');
  ana->add_option("--k", ana_k, "receiver cut fraction C_max/|E|");
  ana->add_option("--out", ana_csv_path, "CSV output path (default: stdout)");

  // rqaoa
  auto* rq = app.add_subcommand("rqaoa", "Iterated correlation-driven contraction");
  std::string rq_graph, rq_log;
  int rq_p = 1, rq_stop = 2, rq_cap = kDefaultQubitCap;
  rq->add_option("--graph", rq_graph, "named family or graph file")->required();
  rq->add_option("--p", rq_p, "circuit depth per iteration");
  rq->add_option("--stop-at", rq_stop, "solve exactly at this size");
  rq->add_option("--log", rq_log, "JSON-lines step log path");
  rq->add_option("--qubit-cap", rq_cap, "exact-simulation size cap");

  // CLI11 wants argc/argv including the program name.
  std::vector<const char*> argv;
  argv.push_back("qaoa-lab");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsage;
  }

  try {
    if (sim->parsed())
      return handlers::simulate(out, sim_graph, sim_params, sim_shots, sim_seed, sim_cap);
    if (opt->parsed())
      return handlers::optimize(out, opt_graph, opt_p, opt_start, opt_method, opt_cap);
    if (sym->parsed())
      return handlers::symmetry_check(out, sym_graph, sym_p, sym_trials, sym_tol, sym_seed,
                                      sym_cap);
    if (orb->parsed()) return handlers::orbit(out, orb_params, orb_class, orb_graph);
    if (scan->parsed()) {
      ScanPlan plan;
      if (scan_model == "regular")
        plan.model = GraphModel::Regular;
      else if (scan_model == "er")
        plan.model = GraphModel::ErdosRenyi;
      else if (scan_model == "ba")
        plan.model = GraphModel::BarabasiAlbert;
      else if (scan_model == "ws")
        plan.model = GraphModel::WattsStrogatz;
      else
        throw std::invalid_argument("--model must be regular, er, ba, or ws");
      if (scan_weights == "unit")
        plan.weights = WeightScheme::Unit;
      else if (scan_weights == "pm1")
        plan.weights = WeightScheme::PmOne;
      else
        throw std::invalid_argument("--weights must be unit or pm1");
      plan.n = scan_n;
      plan.degrees = scan_degrees;
      plan.instances = scan_instances;
      plan.seed = scan_seed;
      plan.p = scan_p;
      if (scan_ws_rewire >= 0.0) plan.ws_rewire = scan_ws_rewire;
      return handlers::transfer_scan(out, err, plan, scan_donor_degrees, scan_domain,
                                     scan_fixture_sets, scan_csv_path, scan_json_path);
    }
    if (ana->parsed())
      return handlers::analytic(out, ana_dmin, ana_dmax, ana_dprimes, ana_k, ana_csv_path);
    if (rq->parsed()) return handlers::rqaoa(out, rq_graph, rq_p, rq_stop, rq_log, rq_cap);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kInfeasible;
  }
  return kUsage;
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace qaoa::cli

#endif  // QAOA_LAB_CLI_HPP
