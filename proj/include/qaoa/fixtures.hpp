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

#ifndef QAOA_LAB_FIXTURES_HPP
#define QAOA_LAB_FIXTURES_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "qaoa/qaoa.hpp"
#include "qaoa/symmetry.hpp"
#include "qaoa/transfer.hpp"

namespace qaoa {

// The eight depth-2 optima of the degree-3 tree neighborhood, interleaved as
// (gamma_1, beta_1, gamma_2, beta_2) in units of pi.  Set 1 is the canonical
// representative in U1^2; sets 2..8 are its images under the odd-sum pi
// shifts and time reversal.  Fixture name: "tree3-p2".
inline const std::vector<std::vector<double>>& tree3_p2_raw() {
  static const std::vector<std::vector<double>> data = {
      {0.156, 0.177, 0.286, 0.0933},    {0.156, 0.177, -0.714, -0.0933},
      {0.844, 0.177, 0.714, -0.0933},   {0.844, 0.177, -0.286, 0.0933},
      {-0.844, -0.177, 0.286, -0.0933}, {-0.844, -0.177, -0.714, 0.0933},
      {-0.156, -0.177, 0.714, 0.0933},  {-0.156, -0.177, -0.286, -0.0933},
  };
  return data;
}

// set is 1-based (1..8).
inline ParameterSet tree3_p2_set(int set) {
  if (set < 1 || set > 8) throw std::invalid_argument("tree3-p2 has sets 1..8");
  const auto& row = tree3_p2_raw()[set - 1];
  return {{row[0] * kPi, row[2] * kPi}, {row[1] * kPi, row[3] * kPi}};
}

inline std::vector<ParameterSet> tree3_p2_sets() {
  std::vector<ParameterSet> out;
  for (int s = 1; s <= 8; ++s) out.push_back(tree3_p2_set(s));
  return out;
}

// Donor specs for the fixture sets, for depth-2 transfer scans.
inline std::vector<DonorSpec> make_fixture_donors(const std::vector<int>& sets) {
  std::vector<DonorSpec> donors;
  for (int s : sets) {
    DonorSpec spec;
    spec.id = "tree3-p2:" + std::to_string(s);
    spec.d_prime = 3;
    spec.params = tree3_p2_set(s);
    spec.domain = "set" + std::to_string(s);
    donors.push_back(std::move(spec));
  }
  return donors;
}

// Looks up "tree3-p2" (set 1) or "tree3-p2:N".
inline ParameterSet fixture_params(const std::string& name) {
  const std::string prefix = "tree3-p2";
  if (name == prefix) return tree3_p2_set(1);
  if (name.rfind(prefix + ":", 0) == 0) {
    const std::string idx = name.substr(prefix.size() + 1);
    try {
      return tree3_p2_set(std::stoi(idx));
    } catch (const std::invalid_argument&) {
      throw std::invalid_argument("bad fixture set index: " + idx);
    }
  }
  throw std::invalid_argument("unknown parameter fixture: " + name);
}

}  // namespace qaoa

#endif  // QAOA_LAB_FIXTURES_HPP
