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

// Runs the iterated contraction scheme on a random 3-regular graph and
// prints the step log together with the structural audit.

#include <cstdio>

#include "qaoa/graphgen.hpp"
#include "qaoa/maxcut.hpp"
#include "qaoa/rqaoa.hpp"

int main() {
  using namespace qaoa;

  const IsingInstance g = generate_regular(12, 3, WeightScheme::Unit, 5);
  RqaoaConfig cfg;
  cfg.stop_at = 4;
  const RqaoaResult res = rqaoa_run(g, cfg);

  std::printf("instance %s, initial class %s\n", g.label.c_str(),
              to_string(res.initial_class));
  std::printf("%s", rqaoa_steps_jsonl(res).c_str());
  const CutExtremes ext = brute_force_extremes(g);
  std::printf("cost %.1f of optimal %.1f\n", res.best_cost, ext.c_max);

  const AuditResult audit = audit_symmetry_chain(g, res.steps);
  std::printf("audit: %s\n", audit.ok ? "ok" : "FAILED");
  return audit.ok ? 0 : 1;
}
