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

#ifndef QAOA_LAB_ANALYTIC_HPP
#define QAOA_LAB_ANALYTIC_HPP

#include <cmath>
#include <stdexcept>

#include "qaoa/maxcut.hpp"
#include "qaoa/qaoa.hpp"

namespace qaoa {

namespace detail {

// ((d-1)/d)^(e), evaluated as exp(e*log1p(-1/d)) so it stays accurate for
// degrees up to 10^4 and beyond.
inline double degree_ratio_pow(double d, double e) {
  if (e == 0.0) return 1.0;
  return std::exp(e * std::log1p(-1.0 / d));
}

}  // namespace detail

// Depth-1 cost expectation on an unweighted d-regular triangle-free graph
// with m edges:
//   C(gamma, beta) = (m/2) * (1 + sin(4 beta) sin(gamma) cos^(d-1)(gamma)).
inline double triangle_free_cost(int d, int m, double gamma, double beta) {
  if (d < 1 || m < 0) throw std::invalid_argument("need degree >= 1 and edge count >= 0");
  return 0.5 * m *
         (1.0 + std::sin(4.0 * beta) * std::sin(gamma) * std::pow(std::cos(gamma), d - 1));
}

// The depth-1 optimum of the cost above inside U1:
//   gamma* = arctan(1/sqrt(d-1)),  beta* = pi/8.
struct TreeOptimum {
  int degree = 0;
  double gamma_star = 0.0;
  double beta_star = 0.0;

  ParameterSet params() const { return {{gamma_star}, {beta_star}}; }
};

inline TreeOptimum tree_optimum(int d) {
  if (d < 2)
    throw std::invalid_argument("tree optimum needs degree >= 2 (d = 1 is degenerate)");
  return {d, std::atan(1.0 / std::sqrt(double(d - 1))), kPi / 8.0};
}

// Optimal depth-1 cost on the same family:
//   C*(d) = (m/2) * (1 + (1/sqrt(d)) ((d-1)/d)^((d-1)/2)).
inline double optimal_cost(int d, int m) {
  if (d < 1 || m < 0) throw std::invalid_argument("need degree >= 1 and edge count >= 0");
  return 0.5 * m *
         (1.0 + detail::degree_ratio_pow(d, 0.5 * (d - 1)) / std::sqrt(double(d)));
}

// Optimal depth-1 approximation ratio C*(d) / (k m) for a receiver with
// maximum-cut fraction k = C_max / m.
inline double optimal_ratio(int d, double k) {
  if (k <= 0.0) throw std::invalid_argument("cut fraction k must be positive");
  return optimal_cost(d, 1) / k;
}

// Closed-form approximation-ratio loss when the depth-1 tree optimum of
// degree d' drives a d-regular receiver of girth above 3 and cut fraction k:
//
//   delta(d <- d') = 1/(2 k sqrt(d)) * [ ((d-1)/d)^((d-1)/2)
//                                        - sqrt(d/d') ((d'-1)/d')^((d-1)/2) ].
//
// Exact for girth > 3 receivers; for graphs with triangles it is a guide
// only.  Stable for degrees up to at least 10^4.
inline double transfer_error_closed_form(int d, int d_prime, double k) {
  if (d < 1 || d_prime < 1) throw std::invalid_argument("degrees must be >= 1");
  if (k <= 0.0) throw std::invalid_argument("cut fraction k must be positive");
  const double e = 0.5 * (d - 1);
  const double own = detail::degree_ratio_pow(double(d), e);
  const double borrowed =
      std::sqrt(double(d) / double(d_prime)) * detail::degree_ratio_pow(double(d_prime), e);
  return (own - borrowed) / (2.0 * k * std::sqrt(double(d)));
}

// Ratio achieved by the uniform superposition (equivalently uniform random
// guessing): every edge is cut with probability 1/2 and fields average out.
inline double uniform_state_ratio(const IsingInstance& inst, const CutExtremes& ext) {
  if (ext.c_max == ext.c_min)
    throw std::domain_error("ratio undefined: constant cost landscape");
  return (0.5 * inst.total_weight() - ext.c_min) / (ext.c_max - ext.c_min);
}

// Headroom of a ratio r* over random guessing, r* - r_uniform; reduces to
// r* - 1/(2k) on unweighted instances with zero minimum cut.
inline double random_guess_reference(double r_star, const IsingInstance& inst,
                                     const CutExtremes& ext) {
  return r_star - uniform_state_ratio(inst, ext);
}

// Analytic version of the same reference for the closed-form family.
inline double analytic_random_guess_reference(int d, double k) {
  return optimal_ratio(d, k) - 0.5 / k;
}

}  // namespace qaoa

#endif  // QAOA_LAB_ANALYTIC_HPP
