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

#ifndef QAOA_LAB_RQAOA_HPP
#define QAOA_LAB_RQAOA_HPP

#include <cmath>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"
#include "qaoa/maxcut.hpp"
#include "qaoa/optimize.hpp"
#include "qaoa/qaoa.hpp"
#include "qaoa/statevector.hpp"
#include "qaoa/symmetry.hpp"

namespace qaoa {

// ----- correlation-driven edge choice ---------------------------------------------

struct CorrelationPick {
  int u = 0;
  int v = 0;
  double correlation = 0.0;
};

// Edge with the largest |<Z_u Z_v>| in the depth-p state.  Near-exact ties
// (within 1e-12) resolve to the lexicographically smallest edge so runs are
// reproducible on symmetric instances.
inline CorrelationPick max_correlation_edge(const IsingInstance& inst,
                                            const ParameterSet& params,
                                            int qubit_cap = kDefaultQubitCap) {
  if (inst.edges.empty()) throw std::invalid_argument("instance has no edges to pick from");
  const CircuitContext ctx(inst, qubit_cap);
  const StateVector s = prepare_state(ctx, params);
  CorrelationPick best;
  double best_abs = -1.0;
  for (const Edge& e : inst.edges) {  // edges iterate in sorted order
    const double m = zz_correlation(s, e.u, e.v);
    if (std::fabs(m) > best_abs + 1e-12) {
      best = {e.u, e.v, m};
      best_abs = std::fabs(m);
    }
  }
  return best;
}

// ----- one contraction ---------------------------------------------------------------

struct ContractResult {
  IsingInstance instance;
  double offset = 0.0;           // constant absorbed by the substitution
  std::vector<int> new_index;    // old label -> new label; -1 for the eliminated vertex
  int survivor_new_index = 0;
};

// Imposes x_l = sign * x_k and eliminates vertex l.  Edge weights incident to
// l fold into k's (w_jk += sign * w_jl), the field folds as h_k += sign * h_l,
// cancelled (exactly zero) edges are dropped, and the constant released by
// the substitution is returned so that for every assignment x of the reduced
// instance
//
//   cost_reduced(x) + offset == cost_original(lift(x)),
//
// with offset = (1 - sign)/2 * sum_{j ~ l} w_jl.  All arithmetic on integer
// instances stays exact (integers are represented exactly in doubles here).
inline ContractResult contract(const IsingInstance& inst, int k, int l, int sign) {
  validate_instance(inst);
  if (sign != 1 && sign != -1) throw std::invalid_argument("contraction sign must be +1 or -1");
  if (k == l || k < 0 || l < 0 || k >= inst.n || l >= inst.n)
    throw std::invalid_argument("contraction needs two distinct vertices in range");
  bool adjacent = false;
  for (const Edge& e : inst.edges)
    if ((e.u == std::min(k, l)) && (e.v == std::max(k, l))) adjacent = true;
  if (!adjacent) throw std::invalid_argument("contraction endpoints must share an edge");
  if (inst.n < 2) throw std::invalid_argument("cannot contract a single-vertex instance");

  ContractResult res;
  std::map<int, double> merged;  // neighbor of the merged vertex -> weight
  std::vector<Edge> rest;
  double weighted_degree_l = 0.0;
  for (const Edge& e : inst.edges) {
    const bool tl = e.u == l || e.v == l;
    const bool tk = e.u == k || e.v == k;
    if (tl) {
      weighted_degree_l += e.w;
      const int other = e.u == l ? e.v : e.u;
      if (other != k) merged[other] += sign * e.w;
    } else if (tk) {
      const int other = e.u == k ? e.v : e.u;
      merged[other] += e.w;
    } else {
      rest.push_back(e);
    }
  }
  for (const auto& [j, w] : merged)
    if (w != 0.0) rest.push_back({std::min(k, j), std::max(k, j), w});
  res.offset = sign == -1 ? weighted_degree_l : 0.0;

  res.new_index.assign(inst.n, -1);
  for (int v = 0, next = 0; v < inst.n; ++v)
    if (v != l) res.new_index[v] = next++;
  res.survivor_new_index = res.new_index[k];

  IsingInstance& out = res.instance;
  out.n = inst.n - 1;
  out.label = inst.label.empty() ? "contracted" : inst.label + "/c";
  out.fields.assign(out.n, 0.0);
  for (int v = 0; v < inst.n; ++v)
    if (v != l) out.fields[res.new_index[v]] = inst.fields[v];
  out.fields[res.survivor_new_index] += sign * inst.fields[l];
  for (const Edge& e : rest)
    out.edges.push_back({res.new_index[e.u], res.new_index[e.v], e.w});
  canonicalize_edges(out);
  validate_instance(out);
  return res;
}

// ----- the iterated scheme --------------------------------------------------------------

struct ReductionStep {
  int iteration = 0;
  int survivor = 0;     // labels in the instance the step was applied to
  int eliminated = 0;
  int sign = +1;
  int n_after = 0;
  double correlation = 0.0;
  double offset = 0.0;
  SymmetryClass class_after = SymmetryClass::RealGeneral;
  ParameterSet params;  // angles the correlations were measured at
};

struct RqaoaConfig {
  int p = 1;
  int stop_at = 2;  // contract until this many vertices remain, then solve exactly
  OptimizerConfig optimizer;
  int qubit_cap = kDefaultQubitCap;
};

struct RqaoaResult {
  std::vector<int> assignment;  // +-1 per original vertex
  double best_cost = 0.0;       // cost of that assignment on the original instance
  double reduced_cost = 0.0;    // exact optimum of the final reduced instance
  double total_offset = 0.0;
  SymmetryClass initial_class = SymmetryClass::RealGeneral;
  std::vector<ReductionStep> steps;
  IsingInstance final_instance;
};

// Iterated contraction: at each round optimize the depth-p angles (warm
// starting from the previous round's canonical representative when the class
// admits one), contract the strongest-correlation edge with the sign of its
// correlation (ties and zero both round toward +1), and finally solve the
// remaining instance by enumeration and lift the assignment back through the
// recorded substitutions.
inline RqaoaResult rqaoa_run(const IsingInstance& inst, const RqaoaConfig& cfg = {}) {
  validate_instance(inst);
  if (cfg.stop_at < 2 || cfg.stop_at > 30)
    throw std::invalid_argument("stop_at must lie in [2, 30]");
  if (cfg.p < 1) throw std::invalid_argument("depth must be >= 1");

  RqaoaResult res;
  res.initial_class = symmetry_class(inst);
  // Lift table: original vertex -> (current label, sign relative to it).
  std::vector<int> rep(inst.n), rel_sign(inst.n, +1);
  for (int v = 0; v < inst.n; ++v) rep[v] = v;

  IsingInstance current = inst;
  canonicalize_edges(current);
  ParameterSet warm;
  int iteration = 0;
  while (current.n > cfg.stop_at && !current.edges.empty()) {
    const CircuitContext ctx(current, cfg.qubit_cap);
    std::vector<ParameterSet> warm_starts;
    if (warm.depth() == cfg.p) warm_starts.push_back(warm);
    const OptimizeResult opt = optimize_multistart(ctx, cfg.p, cfg.optimizer, warm_starts);

    const CorrelationPick pick = max_correlation_edge(current, opt.params, cfg.qubit_cap);
    const int sign = pick.correlation >= 0.0 ? +1 : -1;
    const int k = std::min(pick.u, pick.v);  // lower label survives
    const int l = std::max(pick.u, pick.v);
    ContractResult c = contract(current, k, l, sign);

    ReductionStep step;
    step.iteration = iteration++;
    step.survivor = k;
    step.eliminated = l;
    step.sign = sign;
    step.n_after = c.instance.n;
    step.correlation = pick.correlation;
    step.offset = c.offset;
    step.class_after = symmetry_class(c.instance);
    step.params = opt.params;
    res.steps.push_back(step);
    res.total_offset += c.offset;

    for (int v = 0; v < inst.n; ++v) {
      if (rep[v] == l) {
        rep[v] = k;
        rel_sign[v] *= sign;
      }
      rep[v] = c.new_index[rep[v]];
    }

    // Warm start the next round from the canonical representative when the
    // class supports one; otherwise reuse the raw optimum.
    const SymmetryClass cls = step.class_after;
    if (cls == SymmetryClass::Ews || cls == SymmetryClass::Ows) {
      const CanonicalizeResult canon = canonicalize_to_U(opt.params, cls);
      warm = canon.params ? *canon.params : wrap_to_A(opt.params);
    } else {
      warm = wrap_to_A(opt.params);
    }
    current = std::move(c.instance);
  }

  const CutExtremes ext = brute_force_extremes(current);
  res.reduced_cost = ext.c_max;
  const std::vector<int> reduced_spins = spins_from_mask(ext.argmax, current.n);
  res.assignment.resize(inst.n);
  for (int v = 0; v < inst.n; ++v) res.assignment[v] = rel_sign[v] * reduced_spins[rep[v]];
  res.best_cost = cost_value(inst, res.assignment);
  res.final_instance = std::move(current);
  return res;
}

// ----- chain auditing ---------------------------------------------------------------------

struct AuditResult {
  bool ok = false;
  std::vector<SymmetryClass> classes;  // initial class, then one per step
  std::vector<std::string> violations;
};

// Replays a recorded contraction chain structurally: offsets are recomputed,
// and on integer instances the per-vertex sums must obey
//
//   s'(k) = s(k) + sign * s(l) - (1 + sign) * w_kl     (merged vertex, exact)
//   s'(j) = s(j) mod 2                                 (every other vertex)
//
// which is what keeps even-sum instances even-sum under any contraction.
inline AuditResult audit_symmetry_chain(const IsingInstance& original,
                                        const std::vector<ReductionStep>& steps) {
  AuditResult audit;
  IsingInstance cur = original;
  canonicalize_edges(cur);
  SymmetryInfo info = classify_symmetry(cur);
  audit.classes.push_back(info.cls);
  for (size_t si = 0; si < steps.size(); ++si) {
    const ReductionStep& step = steps[si];
    const std::string where = "step " + std::to_string(si) + ": ";
    ContractResult c;
    try {
      c = contract(cur, step.survivor, step.eliminated, step.sign);
    } catch (const std::exception& e) {
      audit.violations.push_back(where + e.what());
      break;
    }
    if (c.offset != step.offset)
      audit.violations.push_back(where + "recorded offset does not match the contraction");
    const SymmetryInfo next = classify_symmetry(c.instance);
    if (next.cls != step.class_after)
      audit.violations.push_back(where + "recorded symmetry class does not match");
    if (info.integer && next.integer) {
      long long w_kl = 0;
      for (const Edge& e : cur.edges)
        if (e.u == std::min(step.survivor, step.eliminated) &&
            e.v == std::max(step.survivor, step.eliminated))
          w_kl = detail::as_integer(e.w);
      const long long sk = info.vertex_sums[step.survivor];
      const long long sl = info.vertex_sums[step.eliminated];
      const long long expect = sk + step.sign * sl - (1 + step.sign) * w_kl;
      const long long got = next.vertex_sums[c.survivor_new_index];
      if (got != expect)
        audit.violations.push_back(where + "merged-vertex sum identity violated");
      for (int v = 0; v < cur.n; ++v) {
        if (v == step.eliminated || v == step.survivor) continue;
        const long long before = info.vertex_sums[v];
        const long long after = next.vertex_sums[c.new_index[v]];
        if (((before - after) % 2) != 0)
          audit.violations.push_back(where + "vertex sum parity changed for vertex " +
                                     std::to_string(v));
      }
    }
    if (info.cls == SymmetryClass::Ews && next.cls != SymmetryClass::Ews)
      audit.violations.push_back(where + "even-sum class was not preserved");
    audit.classes.push_back(next.cls);
    cur = std::move(c.instance);
    info = next;
  }
  audit.ok = audit.violations.empty();
  return audit;
}

// One compact JSON object per reduction step, newline separated.
inline std::string rqaoa_steps_jsonl(const RqaoaResult& res) {
  std::string out;
  for (const ReductionStep& s : res.steps) {
    nlohmann::json j = {{"iteration", s.iteration},
                        {"survivor", s.survivor},
                        {"eliminated", s.eliminated},
                        {"sign", s.sign},
                        {"n_after", s.n_after},
                        {"correlation", s.correlation},
                        {"offset", s.offset},
                        {"class", to_string(s.class_after)},
                        {"gammas", s.params.gammas},
                        {"betas", s.params.betas}};
    out += j.dump();
    out += '\n';
  }
  return out;
}

}  // namespace qaoa

#endif  // QAOA_LAB_RQAOA_HPP
