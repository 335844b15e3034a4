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

#ifndef CATHEDRAL_TESTS_FIXTURES_HPP_
#define CATHEDRAL_TESTS_FIXTURES_HPP_

#include <cstddef>
#include <string>
#include <vector>

#include "cathedral/graph.hpp"
#include "cathedral/verifier/config.hpp"

namespace fixtures {

using cathedral::Graph;

// Triangle 0-1-2 with a pendant vertex 3 on 2.
inline Graph t() { return Graph::on_range(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}}); }
inline Graph p4() { return Graph::on_range(4, {{0, 1}, {1, 2}, {2, 3}}); }
inline Graph c4() { return Graph::on_range(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
inline Graph c4_chord() {
  return Graph::on_range(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
}
inline Graph k4() {
  return Graph::on_range(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}
inline Graph k2() { return Graph::on_range(2, {{0, 1}}); }

// Random factorizable graphs spread over several densities.
inline std::vector<Graph> random_corpus(std::size_t count, int max_n,
                                        std::uint64_t seed) {
  static const double kDensities[] = {0.15, 0.3, 0.5, 0.75};
  std::vector<Graph> out;
  for (std::size_t i = 0; i < count; ++i) {
    auto rng = cathedral::verifier::trial_rng(seed, i);
    const int n = static_cast<int>(2 * (1 + rng() % static_cast<unsigned>(max_n / 2)));
    out.push_back(cathedral::verifier::random_factorizable_graph(
        n, kDensities[i % 4], rng));
  }
  return out;
}

}  // namespace fixtures

#endif  // CATHEDRAL_TESTS_FIXTURES_HPP_
