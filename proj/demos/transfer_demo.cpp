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

// Donates the depth-1 tree optimum of degree 3 to a 4-regular bipartite
// receiver and compares the measured ratio loss with the closed form, then
// runs a small degree scan.

#include <cstdio>

#include "qaoa/analytic.hpp"
#include "qaoa/graphgen.hpp"
#include "qaoa/transfer.hpp"

int main() {
  using namespace qaoa;

  const IsingInstance receiver = make_complete_bipartite(4, 4);
  const TransferReport rep =
      transfer_error(receiver, tree_optimum(3).params(), tree_optimum(4).params(),
                     "tree-opt(d=3)");
  const double closed = transfer_error_closed_form(4, 3, 1.0);
  std::printf("receiver %s: delta = %.9f, closed form = %.9f\n", rep.receiver_id.c_str(),
              rep.delta, closed);

  ScanPlan plan;
  plan.model = GraphModel::Regular;
  plan.n = 12;
  plan.degrees = {3, 4, 5};
  plan.instances = 3;
  plan.seed = 11;
  const ScanOutput scan = scan_degrees(plan, make_tree_donors({3}, DonorDomain::U1));
  std::printf("%s", scan_csv(scan.rows).c_str());
  return 0;
}
