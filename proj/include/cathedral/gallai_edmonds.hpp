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

#ifndef CATHEDRAL_GALLAI_EDMONDS_HPP_
#define CATHEDRAL_GALLAI_EDMONDS_HPP_

#include <vector>

#include "cathedral/graph.hpp"
#include "cathedral/matching.hpp"

namespace cathedral {

struct GEPartition {
  VertexSet d;  // exposed by some maximum matching
  VertexSet a;  // neighbors of d outside d
  VertexSet c;  // everything else

  friend bool operator==(const GEPartition&, const GEPartition&) = default;
};

// D is computed from its definition: v is in D iff nu(G - v) == nu(G).
inline GEPartition gallai_edmonds(const Graph& g) {
  const std::size_t nu = matching_number(g);
  std::vector<Vertex> d;
  for (Vertex v : g.vertices()) {
    std::vector<char> removed(g.order(), 0);
    removed[*g.index_of(v)] = 1;
    auto adj = detail::adjacency_without(g, removed);
    if (detail::matching_size(detail::blossom_mates(adj)) == nu) d.push_back(v);
  }
  GEPartition p;
  p.d = VertexSet(std::move(d));
  p.a = neighbors(g, p.d);
  p.c = g.vertices().minus(p.d).minus(p.a);
  return p;
}

}  // namespace cathedral

#endif  // CATHEDRAL_GALLAI_EDMONDS_HPP_
