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

#ifndef QAOA_LAB_SYMMETRY_HPP
#define QAOA_LAB_SYMMETRY_HPP

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "qaoa/ising.hpp"
#include "qaoa/qaoa.hpp"

namespace qaoa {

// ----- angle domains -----------------------------------------------------------
//
// All intervals are half-open [lo, hi); boundary angles always belong to the
// low end after wrapping.  The reference box per layer is
//   A:  gamma in [-pi, pi),    beta in [-pi/4, pi/4)
// and the two canonical sub-boxes are
//   U1: gamma in [0, pi/2),    beta in [0, pi/4)
//   U2: gamma in [-pi/2, 0),   beta in [-pi/4, 0).

struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return x >= lo && x < hi; }
};

struct Domain {
  std::string name;
  std::vector<Interval> gamma;
  std::vector<Interval> beta;

  static Domain A(int p) {
    return {"A", std::vector<Interval>(p, {-kPi, kPi}),
            std::vector<Interval>(p, {-kPi / 4, kPi / 4})};
  }
  static Domain U1(int p) {
    return {"U1", std::vector<Interval>(p, {0.0, kPi / 2}),
            std::vector<Interval>(p, {0.0, kPi / 4})};
  }
  static Domain U2(int p) {
    return {"U2", std::vector<Interval>(p, {-kPi / 2, 0.0}),
            std::vector<Interval>(p, {-kPi / 4, 0.0})};
  }
};

inline bool in_domain(const ParameterSet& params, const Domain& d) {
  validate_params(params);
  if (d.gamma.size() != params.gammas.size() || d.beta.size() != params.betas.size())
    throw std::invalid_argument("domain depth does not match parameter depth");
  for (size_t i = 0; i < params.gammas.size(); ++i)
    if (!d.gamma[i].contains(params.gammas[i])) return false;
  for (size_t i = 0; i < params.betas.size(); ++i)
    if (!d.beta[i].contains(params.betas[i])) return false;
  return true;
}

// "U1", "U2", "A" (in the reference box but not a canonical sub-box), or
// "outside-A".
inline std::string domain_tag(const ParameterSet& params) {
  const int p = params.depth();
  if (in_domain(params, Domain::U1(p))) return "U1";
  if (in_domain(params, Domain::U2(p))) return "U2";
  if (in_domain(params, Domain::A(p))) return "A";
  return "outside-A";
}

namespace detail {

inline double wrap_half_open(double x, double lo, double hi) {
  const double period = hi - lo;
  double y = std::fmod(x - lo, period);
  if (y < 0.0) y += period;
  if (y >= period) y = 0.0;  // guards the fmod edge where y rounds up to period
  return lo + y;
}

}  // namespace detail

// Maps every layer into the reference box A.  This identifies parameters
// that differ by whole periods, which preserves the cost landscape only for
// integer-valued instances; the returned flag records that condition.
struct WrapResult {
  ParameterSet params;
  bool cost_preserving = false;
};

inline ParameterSet wrap_to_A(const ParameterSet& params) {
  validate_params(params);
  ParameterSet out = params;
  for (double& g : out.gammas) g = detail::wrap_half_open(g, -kPi, kPi);
  for (double& b : out.betas) b = detail::wrap_half_open(b, -kPi / 4, kPi / 4);
  return out;
}

inline WrapResult wrap_to_A(const ParameterSet& params, SymmetryClass cls) {
  return {wrap_to_A(params), cls != SymmetryClass::RealGeneral};
}

// ----- landscape transforms ------------------------------------------------------

enum class TransformKind {
  EwsGammaShift,  // gamma_i -> gamma_i + sign*pi (even vertex sums)
  OwsGammaShift,  // gamma_i -> gamma_i + sign*pi, beta_j -> -beta_j for j >= i
  TimeReversal,   // (gamma, beta) -> (-gamma, -beta)
  GammaPeriod,    // gamma_i -> gamma_i + sign*2*pi (integer instances)
  BetaPeriod,     // beta_i -> beta_i + sign*pi/2 (integer field-free instances)
};

inline const char* to_string(TransformKind k) {
  switch (k) {
    case TransformKind::EwsGammaShift: return "ews-gamma-shift";
    case TransformKind::OwsGammaShift: return "ows-gamma-shift";
    case TransformKind::TimeReversal: return "time-reversal";
    case TransformKind::GammaPeriod: return "gamma-period";
    case TransformKind::BetaPeriod: return "beta-period";
  }
  return "?";
}

struct SymmetryTransform {
  TransformKind kind = TransformKind::TimeReversal;
  int layer = 0;  // 0-based; unused by TimeReversal
  int sign = +1;  // shift direction, +1 or -1
};

// Applies the transform without wrapping, so callers can see the raw shifted
// angles; compose with wrap_to_A to stay inside the reference box.
inline ParameterSet apply_transform(const ParameterSet& params, const SymmetryTransform& t) {
  validate_params(params);
  if (t.sign != 1 && t.sign != -1) throw std::invalid_argument("transform sign must be +1 or -1");
  ParameterSet out = params;
  const int p = params.depth();
  const bool needs_layer = t.kind != TransformKind::TimeReversal;
  if (needs_layer && (t.layer < 0 || t.layer >= p))
    throw std::invalid_argument("transform layer out of range");
  switch (t.kind) {
    case TransformKind::EwsGammaShift:
      out.gammas[t.layer] += t.sign * kPi;
      break;
    case TransformKind::OwsGammaShift:
      out.gammas[t.layer] += t.sign * kPi;
      for (int j = t.layer; j < p; ++j) out.betas[j] = -out.betas[j];
      break;
    case TransformKind::TimeReversal:
      for (double& g : out.gammas) g = -g;
      for (double& b : out.betas) b = -b;
      break;
    case TransformKind::GammaPeriod:
      out.gammas[t.layer] += t.sign * 2.0 * kPi;
      break;
    case TransformKind::BetaPeriod:
      out.betas[t.layer] += t.sign * kPi / 2.0;
      break;
  }
  return out;
}

// Transforms whose invariance a given instance is entitled to.
inline std::vector<TransformKind> applicable_transforms(const IsingInstance& inst) {
  const SymmetryInfo info = classify_symmetry(inst);
  std::vector<TransformKind> kinds = {TransformKind::TimeReversal};
  if (info.integer) {
    kinds.push_back(TransformKind::GammaPeriod);
    if (inst.is_maxcut()) kinds.push_back(TransformKind::BetaPeriod);
  }
  if (info.cls == SymmetryClass::Ews) kinds.push_back(TransformKind::EwsGammaShift);
  if (info.cls == SymmetryClass::Ows) kinds.push_back(TransformKind::OwsGammaShift);
  return kinds;
}

// ----- orbits and canonical representatives ------------------------------------

struct Orbit {
  std::vector<ParameterSet> members;  // wrapped into A, sorted, deduplicated
  // True when coincidences shrank the orbit below 2^(p+1) members.
  bool degenerate = false;
};

namespace detail {

inline std::vector<double> interleaved(const ParameterSet& ps) {
  std::vector<double> v;
  v.reserve(2 * ps.gammas.size());
  for (size_t i = 0; i < ps.gammas.size(); ++i) {
    v.push_back(ps.gammas[i]);
    v.push_back(ps.betas[i]);
  }
  return v;
}

inline bool params_close(const ParameterSet& a, const ParameterSet& b, double tol) {
  const auto va = interleaved(a), vb = interleaved(b);
  if (va.size() != vb.size()) return false;
  for (size_t i = 0; i < va.size(); ++i)
    if (std::fabs(va[i] - vb[i]) > tol) return false;
  return true;
}

}  // namespace detail

// The full landscape orbit of a parameter set under its class symmetries:
// every subset of per-layer pi shifts, with and without time reversal, all
// wrapped into A.  Generic parameters produce exactly 2^(p+1) members;
// coincidences (for instance beta = 0 or boundary gammas) produce fewer and
// set the degenerate flag.
inline Orbit enumerate_orbit(const ParameterSet& params, SymmetryClass cls,
                             double dedupe_tol = 1e-12) {
  validate_params(params);
  if (cls != SymmetryClass::Ews && cls != SymmetryClass::Ows)
    throw std::invalid_argument("orbit enumeration needs an EWS or OWS class");
  const int p = params.depth();
  if (p < 1) throw std::invalid_argument("orbit enumeration needs depth >= 1");
  const TransformKind shift =
      cls == SymmetryClass::Ews ? TransformKind::EwsGammaShift : TransformKind::OwsGammaShift;

  std::vector<ParameterSet> raw;
  for (unsigned subset = 0; subset < (1u << p); ++subset) {
    ParameterSet shifted = params;
    for (int layer = 0; layer < p; ++layer)
      if (subset & (1u << layer)) shifted = apply_transform(shifted, {shift, layer, +1});
    raw.push_back(wrap_to_A(shifted));
    raw.push_back(wrap_to_A(apply_transform(shifted, {TransformKind::TimeReversal, 0, +1})));
  }

  Orbit orbit;
  for (const ParameterSet& cand : raw) {
    bool dup = false;
    for (const ParameterSet& kept : orbit.members)
      if (detail::params_close(cand, kept, dedupe_tol)) {
        dup = true;
        break;
      }
    if (!dup) orbit.members.push_back(cand);
  }
  std::sort(orbit.members.begin(), orbit.members.end(),
            [](const ParameterSet& a, const ParameterSet& b) {
              return detail::interleaved(a) < detail::interleaved(b);
            });
  orbit.degenerate = orbit.members.size() < (size_t(1) << (p + 1));
  return orbit;
}

struct CanonicalizeResult {
  std::optional<ParameterSet> params;
  std::string domain;  // "U1", "U2", or "none" when no member is representable
};

// Picks the orbit member inside U1^p (preferring it over U2^p).  Generic
// optima have exactly one member per canonical sub-box; when several qualify
// the lexicographically smallest is returned so the choice is deterministic.
inline CanonicalizeResult canonicalize_to_U(const ParameterSet& params, SymmetryClass cls) {
  const Orbit orbit = enumerate_orbit(params, cls);
  const int p = params.depth();
  for (const char* name : {"U1", "U2"}) {
    const Domain dom = name == std::string("U1") ? Domain::U1(p) : Domain::U2(p);
    for (const ParameterSet& m : orbit.members)
      if (in_domain(m, dom)) return {m, name};
  }
  return {std::nullopt, "none"};
}

// ----- numerical certification ----------------------------------------------------

struct VerifyResult {
  bool ok = false;
  double cost_err = 0.0;
  double dist_err = 0.0;        // max entrywise probability difference
  bool checked_dist = false;    // beta periods permute outcomes, so skip there
};

// Checks that a transform leaves the cost expectation invariant on the given
// instance, and (for everything except beta periods, which complement the
// sampled bitstrings) that the full output distribution is invariant too.
inline VerifyResult verify_symmetry(const IsingInstance& inst, const ParameterSet& params,
                                    const SymmetryTransform& t, double tol = 1e-10,
                                    int qubit_cap = kDefaultQubitCap) {
  const CircuitContext ctx(inst, qubit_cap);
  const StateVector s0 = prepare_state(ctx, params);
  const StateVector s1 = prepare_state(ctx, apply_transform(params, t));
  VerifyResult r;
  r.cost_err = std::fabs(expectation_diagonal(s0, ctx.diag) - expectation_diagonal(s1, ctx.diag));
  r.checked_dist = t.kind != TransformKind::BetaPeriod;
  if (r.checked_dist) {
    for (uint64_t y = 0; y < s0.dim(); ++y)
      r.dist_err = std::max(r.dist_err, std::fabs(std::norm(s0.amps[y]) - std::norm(s1.amps[y])));
  }
  r.ok = r.cost_err <= tol && r.dist_err <= tol;
  return r;
}

}  // namespace qaoa

#endif  // QAOA_LAB_SYMMETRY_HPP
