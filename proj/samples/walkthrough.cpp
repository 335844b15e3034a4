// Copyright 2026 The Cathedral Authors.
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

// Saturates the path on four vertices, decomposes the closure and builds it
// back from its foundation and towers.

#include <iostream>

#include "cathedral/cathedral.hpp"
#include "cathedral/canonical.hpp"
#include "cathedral/graph.hpp"

int main() {
  using namespace cathedral;

  const Graph path = Graph::on_range(4, {{0, 1}, {1, 2}, {2, 3}});
  const auto comps = factor_components(path);
  std::cout << "components of the path:";
  for (const auto& c : comps.components) std::cout << " " << to_string(c);
  std::cout << "\nsaturated: " << (is_saturated(path) ? "yes" : "no") << "\n";

  const auto closure = saturate(path);
  std::cout << "closure adds:";
  for (const Edge& e : closure.added) std::cout << " " << e.u << "-" << e.v;
  std::cout << "\n" << render_edge_list(closure.graph);

  const CathedralTree tree = decompose(closure.graph);
  std::cout << "foundation " << to_string(tree.foundation.vertices()) << "\n";
  for (const auto& slot : tree.classes) {
    std::cout << "  class " << to_string(slot.cls) << " carries "
              << (slot.tower ? to_string(slot.tower->vertices()) : "nothing")
              << "\n";
  }

  const Graph rebuilt = construct(tree);
  std::cout << "round trip " << (rebuilt == closure.graph ? "exact" : "differs")
            << "\n";
  return rebuilt == closure.graph ? 0 : 1;
}
