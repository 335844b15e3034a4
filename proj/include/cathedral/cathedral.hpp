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

// Saturated graphs and the cathedral construction.
//
// A factorizable graph is saturated when adding any complement edge creates a
// new perfect matching. Every saturated graph is built from a saturated
// elementary foundation G0 by attaching, for each canonical class S of G0, a
// saturated tower G_S whose vertices are all joined to all of S. `decompose`
// recovers that structure (recursively, towers are again cathedrals) and
// `construct` performs the join.

#ifndef CATHEDRAL_CATHEDRAL_HPP_
#define CATHEDRAL_CATHEDRAL_HPP_

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cathedral/canonical.hpp"
#include "cathedral/error.hpp"
#include "cathedral/gallai_edmonds.hpp"
#include "cathedral/graph.hpp"
#include "cathedral/matching.hpp"

namespace cathedral {

// A complement pair xy creates a new perfect matching iff G - x - y is
// factorizable. The empty graph is saturated.
inline bool is_saturated(const Graph& g) {
  detail::require_factorizable(g);
  for (const Edge& p : complement_pairs(g)) {
    if (!is_factorizable_without(g, VertexSet{p.u, p.v})) return false;
  }
  return true;
}

enum class ScanOrder { kAscending, kDescending };

struct SaturationResult {
  Graph graph;
  std::vector<Edge> added;  // in insertion order
};

// Adds complement pairs that create no new perfect matching until none is
// left. Pairs are scanned in lexicographic order (or its reverse) and the scan
// restarts after every addition. Different orders can yield different
// closures; all of them share G's perfect matchings.
inline SaturationResult saturate(const Graph& g,
                                 ScanOrder order = ScanOrder::kAscending) {
  detail::require_factorizable(g);
  SaturationResult r{g, {}};
  for (;;) {
    auto pairs = complement_pairs(r.graph);
    if (order == ScanOrder::kDescending) std::reverse(pairs.begin(), pairs.end());
    auto it = std::find_if(pairs.begin(), pairs.end(), [&](const Edge& p) {
      return !is_factorizable_without(r.graph, VertexSet{p.u, p.v});
    });
    if (it == pairs.end()) return r;
    r.graph = add_edges(r.graph, {*it});
    r.added.push_back(*it);
  }
}

struct CathedralTree {
  struct Slot {
    VertexSet cls;
    std::shared_ptr<const CathedralTree> tower;  // null: empty tower
  };

  Graph foundation;
  std::vector<Slot> classes;  // canonical classes of the foundation, in order

  // All vertices of the foundation and every tower, recursively.
  VertexSet vertices() const {
    VertexSet out = foundation.vertices();
    for (const auto& s : classes) {
      if (s.tower) out = out.unite(s.tower->vertices());
    }
    return out;
  }

  friend bool operator==(const CathedralTree& a, const CathedralTree& b) {
    if (!(a.foundation == b.foundation) || a.classes.size() != b.classes.size()) {
      return false;
    }
    for (std::size_t i = 0; i < a.classes.size(); ++i) {
      const auto& x = a.classes[i];
      const auto& y = b.classes[i];
      if (x.cls != y.cls || bool(x.tower) != bool(y.tower)) return false;
      if (x.tower && !(*x.tower == *y.tower)) return false;
    }
    return true;
  }
};

struct ConstructionSpec {
  Graph foundation;
  std::map<VertexSet, Graph> towers;  // one entry per canonical class
};

// Joins every tower to its class. Checks the inputs, then checks that the
// result is saturated with the foundation as its minimum factor-connected
// component (the latter only when the component count is within `limit`).
inline Graph construct(const ConstructionSpec& spec,
                       std::size_t limit = kDefaultComponentLimit) {
  const Graph& f = spec.foundation;
  if (f.empty()) {
    if (!spec.towers.empty()) {
      fail(Errc::kClassKeyMismatch, "an empty foundation has no classes");
    }
    return f;
  }
  if (!is_factorizable(f) || factor_components(f).size() != 1) {
    fail(Errc::kFoundationNotElementary, "foundation is not elementary");
  }
  if (!is_saturated(f)) {
    fail(Errc::kFoundationNotSaturated, "foundation is not saturated");
  }
  const auto classes = canonical_partition(f).classes;
  if (spec.towers.size() != classes.size() ||
      !std::all_of(classes.begin(), classes.end(),
                   [&](const VertexSet& c) { return spec.towers.count(c); })) {
    fail(Errc::kClassKeyMismatch,
         "tower keys differ from the foundation's canonical classes");
  }
  VertexSet used = f.vertices();
  std::vector<Edge> edges = f.edges();
  for (const auto& [cls, tower] : spec.towers) {
    if (!is_factorizable(tower) || !is_saturated(tower)) {
      fail(Errc::kTowerNotSaturated,
           "tower for class " + to_string(cls) + " is not saturated");
    }
    if (used.intersects(tower.vertices())) {
      fail(Errc::kVertexIdCollision,
           "tower for class " + to_string(cls) + " reuses vertex ids");
    }
    used = used.unite(tower.vertices());
    edges.insert(edges.end(), tower.edges().begin(), tower.edges().end());
    for (Vertex s : cls) {
      for (Vertex t : tower.vertices()) edges.emplace_back(s, t);
    }
  }
  Graph g(used, std::move(edges));

  if (!is_saturated(g)) {
    fail(Errc::kConstructionNotSaturated, "constructed graph is not saturated");
  }
  const auto comps = factor_components(g);
  const auto base = std::find(comps.components.begin(), comps.components.end(),
                              f.vertices());
  if (base == comps.components.end()) {
    fail(Errc::kFoundationNotMinimum,
         "foundation is not a factor-connected component of the result");
  }
  if (comps.size() <= limit) {
    auto poset = component_poset(g, limit);
    auto min = minimum_component(poset);
    if (!min || poset.components.components[*min] != f.vertices()) {
      fail(Errc::kFoundationNotMinimum,
           "foundation is not the minimum factor-connected component");
    }
  }
  return g;
}

// Builds the graph described by a (recursive) tree.
inline Graph construct(const CathedralTree& tree,
                       std::size_t limit = kDefaultComponentLimit) {
  ConstructionSpec spec;
  spec.foundation = tree.foundation;
  for (const auto& s : tree.classes) {
    spec.towers.emplace(s.cls, s.tower ? construct(*s.tower, limit) : Graph());
  }
  return construct(spec, limit);
}

// Recovers foundation and towers of a saturated graph. Each fact the
// recovery relies on is checked; a failure is reported as an internal error
// because it cannot happen for correct saturated input.
inline CathedralTree decompose(const Graph& g,
                               std::size_t limit = kDefaultComponentLimit) {
  detail::require_factorizable(g);
  if (!is_saturated(g)) fail(Errc::kNotSaturated, "input is not saturated");
  CathedralTree tree;
  if (g.empty()) return tree;

  const auto poset = component_poset(g, limit);
  const auto min = minimum_component(poset);
  if (!min) {
    fail(Errc::kMinimumMissing,
         "component order of a saturated graph has no minimum");
  }
  const VertexSet& base = poset.components.components[*min];
  tree.foundation = induced_subgraph(g, base);

  const auto own = canonical_partition(tree.foundation).classes;
  if (canonical_partition(g, poset.components).classes_within(base) != own) {
    fail(Errc::kPartitionMismatch,
         "canonical classes of the foundation differ inside and outside G");
  }
  if (!is_saturated(tree.foundation)) {
    fail(Errc::kDecomposedPartNotSaturated, "foundation is not saturated");
  }
  if (!is_factor_critical(contract(g, base).graph)) {
    fail(Errc::kNotFactorCritical,
         "contracting the foundation does not give a factor-critical graph");
  }
  for (const auto& cls : own) tree.classes.push_back({cls, nullptr});

  for (const VertexSet& k : connected_components(remove_vertices(g, base))) {
    const VertexSet touch = neighbors(g, k);
    auto slot = std::find_if(
        tree.classes.begin(), tree.classes.end(),
        [&](const CathedralTree::Slot& s) { return touch.is_subset_of(s.cls); });
    if (touch.empty() || slot == tree.classes.end()) {
      fail(Errc::kTowerAssignment,
           "component " + to_string(k) + " attaches to no single class");
    }
    if (slot->tower) {
      fail(Errc::kMultipleTowersPerClass,
           "class " + to_string(slot->cls) + " carries two towers");
    }
    for (Vertex u : k) {
      for (Vertex v : slot->cls) {
        if (!g.has_edge(u, v)) {
          fail(Errc::kMissingJoinEdge, "tower vertex " + std::to_string(u) +
                                           " is not joined to class vertex " +
                                           std::to_string(v));
        }
      }
    }
    Graph tower = induced_subgraph(g, k);
    if (!is_factorizable(tower) || !is_saturated(tower)) {
      fail(Errc::kDecomposedPartNotSaturated,
           "tower " + to_string(k) + " is not saturated");
    }
    slot->tower = std::make_shared<const CathedralTree>(decompose(tower, limit));
  }
  return tree;
}

// V(G) minus every C(G - x). Equals the vertex set of the minimum
// factor-connected component whenever one exists.
inline VertexSet foundation_via_ge(const Graph& g,
                                   std::size_t limit = kDefaultComponentLimit) {
  detail::require_factorizable(g);
  if (!minimum_component(component_poset(g, limit))) {
    fail(Errc::kNoMinimum, "component order has no minimum element");
  }
  VertexSet out = g.vertices();
  for (Vertex x : g.vertices()) {
    out = out.minus(gallai_edmonds(remove_vertices(g, VertexSet{x})).c);
  }
  return out;
}

}  // namespace cathedral

#endif  // CATHEDRAL_CATHEDRAL_HPP_
