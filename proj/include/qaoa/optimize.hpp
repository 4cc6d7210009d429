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

#ifndef QAOA_LAB_OPTIMIZE_HPP
#define QAOA_LAB_OPTIMIZE_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "qaoa/qaoa.hpp"
#include "qaoa/symmetry.hpp"

namespace qaoa {

enum class OptimizeMethod { CoordinateSearch, GradientAscent };

struct OptimizerConfig {
  OptimizeMethod method = OptimizeMethod::CoordinateSearch;
  int max_iterations = 2000;
  double initial_step = 0.1;   // radians
  double step_tol = 1e-7;      // coordinate search stops below this step
  double fd_step = 1e-5;       // central-difference half-step
  double learning_rate = 0.05;
  double grad_tol = 1e-8;
  uint64_t seed = 0;  // reserved for jittered multistarts
};

struct OptimizeResult {
  ParameterSet params;
  double cost = 0.0;
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

namespace detail {

using Objective = std::function<double(const ParameterSet&)>;

inline OptimizeResult coordinate_search(const Objective& f, const ParameterSet& start,
                                        const OptimizerConfig& cfg) {
  OptimizeResult r;
  r.params = start;
  r.cost = f(start);
  r.evaluations = 1;
  double step = cfg.initial_step;
  const int p = start.depth();
  auto coord = [&](ParameterSet& ps, int c) -> double& {
    return c < p ? ps.gammas[c] : ps.betas[c - p];
  };
  for (r.iterations = 0; r.iterations < cfg.max_iterations; ++r.iterations) {
    bool improved = false;
    for (int c = 0; c < 2 * p; ++c)
      for (int dir : {+1, -1}) {
        ParameterSet trial = r.params;
        coord(trial, c) += dir * step;
        const double val = f(trial);
        ++r.evaluations;
        if (val > r.cost) {
          r.cost = val;
          r.params = trial;
          improved = true;
          break;  // keep scanning remaining coordinates at this step size
        }
      }
    if (!improved) {
      step *= 0.5;
      if (step < cfg.step_tol) {
        r.converged = true;
        break;
      }
    }
  }
  return r;
}

inline OptimizeResult gradient_ascent(const Objective& f, const ParameterSet& start,
                                      const OptimizerConfig& cfg) {
  OptimizeResult r;
  r.params = start;
  r.cost = f(start);
  r.evaluations = 1;
  const int p = start.depth();
  auto coord = [&](ParameterSet& ps, int c) -> double& {
    return c < p ? ps.gammas[c] : ps.betas[c - p];
  };
  for (r.iterations = 0; r.iterations < cfg.max_iterations; ++r.iterations) {
    std::vector<double> grad(2 * p);
    double gmax = 0.0;
    for (int c = 0; c < 2 * p; ++c) {
      ParameterSet hi = r.params, lo = r.params;
      coord(hi, c) += cfg.fd_step;
      coord(lo, c) -= cfg.fd_step;
      grad[c] = (f(hi) - f(lo)) / (2.0 * cfg.fd_step);
      r.evaluations += 2;
      gmax = std::max(gmax, std::fabs(grad[c]));
    }
    if (gmax < cfg.grad_tol) {
      r.converged = true;
      break;
    }
    // Backtracking line search along the gradient.
    double t = cfg.learning_rate;
    bool accepted = false;
    while (t > 1e-12) {
      ParameterSet trial = r.params;
      for (int c = 0; c < 2 * p; ++c) coord(trial, c) += t * grad[c];
      const double val = f(trial);
      ++r.evaluations;
      if (val > r.cost) {
        r.cost = val;
        r.params = trial;
        accepted = true;
        break;
      }
      t *= 0.5;
    }
    if (!accepted) {
      r.converged = true;  // no ascent direction at line-search resolution
      break;
    }
  }
  return r;
}

}  // namespace detail

// Local maximization of an arbitrary objective over a depth-p angle schedule.
// Deterministic; the result's cost never falls below the start's value.
inline OptimizeResult optimize_local(const detail::Objective& f, const ParameterSet& start,
                                     const OptimizerConfig& cfg = {}) {
  validate_params(start);
  if (start.depth() < 1) throw std::invalid_argument("optimization needs depth >= 1");
  return cfg.method == OptimizeMethod::CoordinateSearch
             ? detail::coordinate_search(f, start, cfg)
             : detail::gradient_ascent(f, start, cfg);
}

inline OptimizeResult optimize_local(const CircuitContext& ctx, const ParameterSet& start,
                                     const OptimizerConfig& cfg = {}) {
  return optimize_local([&ctx](const ParameterSet& ps) { return expectation_cost(ctx, ps); },
                        start, cfg);
}

inline OptimizeResult optimize_local(const IsingInstance& inst, const ParameterSet& start,
                                     const OptimizerConfig& cfg = {}) {
  const CircuitContext ctx(inst);
  return optimize_local(ctx, start, cfg);
}

// Default multistart grid: the centers of the 2^(p+1) symmetry cells of the
// reference box (each gamma at +-pi/2, betas at pi/8 with a shared sign).
inline std::vector<ParameterSet> multistart_cells(int p) {
  if (p < 1) throw std::invalid_argument("multistart grid needs depth >= 1");
  std::vector<ParameterSet> starts;
  for (int s : {+1, -1})
    for (unsigned mask = 0; mask < (1u << p); ++mask) {
      ParameterSet ps;
      ps.gammas.resize(p);
      ps.betas.assign(p, s * kPi / 8.0);
      for (int i = 0; i < p; ++i) ps.gammas[i] = (mask >> i) & 1 ? -kPi / 2.0 : kPi / 2.0;
      starts.push_back(ps);
    }
  return starts;
}

// Best local optimum over the cell-center starts plus any caller-supplied
// warm starts (tried first).  Ties keep the earliest start, so the outcome
// is deterministic.
inline OptimizeResult optimize_multistart(const CircuitContext& ctx, int p,
                                          const OptimizerConfig& cfg = {},
                                          const std::vector<ParameterSet>& warm_starts = {}) {
  std::vector<ParameterSet> starts = warm_starts;
  for (ParameterSet& ps : multistart_cells(p)) starts.push_back(std::move(ps));
  OptimizeResult best;
  bool first = true;
  for (const ParameterSet& start : starts) {
    OptimizeResult r = optimize_local(ctx, start, cfg);
    if (first || r.cost > best.cost) {
      best = std::move(r);
      first = false;
    }
  }
  return best;
}

}  // namespace qaoa

#endif  // QAOA_LAB_OPTIMIZE_HPP
