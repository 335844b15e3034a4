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

// Canonical structures of a factorizable graph:
//
//  * factor-connected components: connected components of the subgraph
//    formed by allowed edges (edges lying in some perfect matching);
//  * the generalized canonical partition: u ~ v iff u and v share a
//    component and G - u - v has no perfect matching (or u == v);
//  * the component order: H1 <= H2 iff some union X of components containing
//    both has G[X]/V(H1) factor-critical. H1 is the lower element.
//
// The order is computed by brute force over component unions; the component
// count is capped (default 16) to bound that enumeration.

#ifndef CATHEDRAL_CANONICAL_HPP_
#define CATHEDRAL_CANONICAL_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cathedral/error.hpp"
#include "cathedral/graph.hpp"
#include "cathedral/matching.hpp"

namespace cathedral {

inline constexpr std::size_t kDefaultComponentLimit = 16;

namespace detail {

inline void require_factorizable(const Graph& g) {
  if (!is_factorizable(g)) {
    fail(Errc::kNotFactorizable, "graph has no perfect matching");
  }
}

}  // namespace detail

// Edges uv with G - u - v factorizable.
inline std::vector<Edge> allowed_edges(const Graph& g) {
  detail::require_factorizable(g);
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (is_factorizable_without(g, VertexSet{e.u, e.v})) out.push_back(e);
  }
  return out;
}

struct FactorComponents {
  std::vector<VertexSet> components;  // ordered by minimum vertex
  std::vector<Edge> allowed;

  std::size_t size() const { return components.size(); }

  std::size_t component_of(Vertex v) const {
    for (std::size_t i = 0; i < components.size(); ++i) {
      if (components[i].contains(v)) return i;
    }
    fail(Errc::kUnknownVertex, "vertex " + std::to_string(v) +
                                   " lies in no factor-connected component");
  }

  // Union of the listed components.
  VertexSet vertices_of(const std::vector<std::size_t>& idx) const {
    VertexSet out;
    for (std::size_t i : idx) out = out.unite(components[i]);
    return out;
  }

  friend bool operator==(const FactorComponents&,
                         const FactorComponents&) = default;
};

inline FactorComponents factor_components(const Graph& g) {
  FactorComponents fc;
  fc.allowed = allowed_edges(g);
  fc.components = connected_components(spanning_subgraph(g, fc.allowed));
  return fc;
}

struct CanonicalPartition {
  std::vector<VertexSet> classes;  // ordered by minimum vertex
  std::map<Vertex, std::size_t> class_of;

  bool equivalent(Vertex u, Vertex v) const {
    return class_of.at(u) == class_of.at(v);
  }

  // The classes contained in `part` (a union of classes), in order.
  std::vector<VertexSet> classes_within(const VertexSet& part) const {
    std::vector<VertexSet> out;
    for (const auto& c : classes) {
      if (c.is_subset_of(part)) out.push_back(c);
    }
    return out;
  }

  friend bool operator==(const CanonicalPartition& a,
                         const CanonicalPartition& b) {
    return a.classes == b.classes;
  }
};

inline CanonicalPartition canonical_partition(const Graph& g,
                                              const FactorComponents& comps) {
  const std::size_t n = g.order();
  const auto& vs = g.vertices();
  std::vector<std::size_t> comp(n);
  for (std::size_t i = 0; i < n; ++i) comp[i] = comps.component_of(vs[i]);

  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    rel[i][i] = 1;
    for (std::size_t j = i + 1; j < n; ++j) {
      if (comp[i] != comp[j]) continue;
      bool related = !is_factorizable_without(g, VertexSet{vs[i], vs[j]});
      rel[i][j] = rel[j][i] = related;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!rel[i][j]) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (rel[j][k] && !rel[i][k]) {
          fail(Errc::kEquivalenceViolation,
               "canonical relation is not transitive on " +
                   std::to_string(vs[i]) + "," + std::to_string(vs[j]) + "," +
                   std::to_string(vs[k]));
        }
      }
    }
  }

  CanonicalPartition p;
  for (std::size_t i = 0; i < n; ++i) {
    if (p.class_of.count(vs[i])) continue;
    std::vector<Vertex> cls;
    for (std::size_t j = i; j < n; ++j) {
      if (rel[i][j]) cls.push_back(vs[j]);
    }
    for (Vertex v : cls) p.class_of[v] = p.classes.size();
    p.classes.emplace_back(std::move(cls));
  }
  return p;
}

inline CanonicalPartition canonical_partition(const Graph& g) {
  return canonical_partition(g, factor_components(g));
}

// X is a (possibly empty) union of factor-connected components.
inline bool is_separating(const Graph& g, const FactorComponents& comps,
                          const VertexSet& x) {
  detail::require_subset(g, x);
  for (const auto& c : comps.components) {
    if (c.intersects(x) && !c.is_subset_of(x)) return false;
  }
  return true;
}

namespace detail {

inline void require_component_limit(const FactorComponents& comps,
                                    std::size_t limit) {
  if (comps.size() > limit) {
    fail(Errc::kTooManyComponents,
         std::to_string(comps.size()) +
             " factor-connected components exceed the brute-force limit of " +
             std::to_string(limit));
  }
}

// G[X]/V(H) for X = V(H) plus the components selected by `mask` over
// `others`.
inline bool contraction_is_factor_critical(const Graph& g,
                                           const FactorComponents& comps,
                                           std::size_t base,
                                           const std::vector<std::size_t>& others,
                                           std::uint64_t mask) {
  VertexSet x = comps.components[base];
  for (std::size_t b = 0; b < others.size(); ++b) {
    if (mask >> b & 1U) x = x.unite(comps.components[others[b]]);
  }
  return is_factor_critical(
      contract(induced_subgraph(g, x), comps.components[base]).graph);
}

}  // namespace detail

// H1 <= H2, by brute force over every union of components containing both.
inline bool component_leq(const Graph& g, const FactorComponents& comps,
                          std::size_t h1, std::size_t h2,
                          std::size_t limit = kDefaultComponentLimit) {
  if (h1 >= comps.size() || h2 >= comps.size()) {
    fail(Errc::kInvalidArgument, "component index out of range");
  }
  if (h1 == h2) return true;
  detail::require_component_limit(comps, limit);
  std::vector<std::size_t> others;
  for (std::size_t k = 0; k < comps.size(); ++k) {
    if (k != h1) others.push_back(k);
  }
  std::size_t h2_bit = 0;
  while (others[h2_bit] != h2) ++h2_bit;
  const std::uint64_t total = std::uint64_t{1} << others.size();
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    if (!(mask >> h2_bit & 1U)) continue;
    if (detail::contraction_is_factor_critical(g, comps, h1, others, mask)) {
      return true;
    }
  }
  return false;
}

// Cover pairs (lower, higher) of a partial order given as a matrix.
inline std::vector<std::pair<std::size_t, std::size_t>> transitive_reduction(
    const std::vector<std::vector<char>>& leq) {
  const std::size_t k = leq.size();
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j || !leq[i][j]) continue;
      bool covered = true;
      for (std::size_t m = 0; m < k && covered; ++m) {
        if (m != i && m != j && leq[i][m] && leq[m][j]) covered = false;
      }
      if (covered) out.emplace_back(i, j);
    }
  }
  return out;
}

struct ComponentPoset {
  FactorComponents components;
  std::vector<std::vector<char>> leq;  // leq[i][j]: component i <= j
  std::vector<std::pair<std::size_t, std::size_t>> hasse;  // (lower, higher)

  std::size_t size() const { return leq.size(); }
  bool le(std::size_t i, std::size_t j) const { return leq[i][j] != 0; }
};

// Full order matrix. Reflexivity, antisymmetry and transitivity are checked
// and reported as kPartialOrderViolation.
inline ComponentPoset component_poset(const Graph& g,
                                      std::size_t limit = kDefaultComponentLimit) {
  ComponentPoset p;
  p.components = factor_components(g);
  const auto& comps = p.components;
  detail::require_component_limit(comps, limit);
  const std::size_t k = comps.size();
  p.leq.assign(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i) {
    p.leq[i][i] = 1;
    std::vector<std::size_t> others;
    for (std::size_t j = 0; j < k; ++j) {
      if (j != i) others.push_back(j);
    }
    const std::uint64_t total = std::uint64_t{1} << others.size();
    for (std::uint64_t mask = 1; mask < total; ++mask) {
      bool gains = false;
      for (std::size_t b = 0; b < others.size(); ++b) {
        if ((mask >> b & 1U) && !p.leq[i][others[b]]) gains = true;
      }
      if (!gains) continue;
      if (detail::contraction_is_factor_critical(g, comps, i, others, mask)) {
        for (std::size_t b = 0; b < others.size(); ++b) {
          if (mask >> b & 1U) p.leq[i][others[b]] = 1;
        }
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && p.leq[i][j] && p.leq[j][i]) {
        fail(Errc::kPartialOrderViolation,
             "component order is not antisymmetric on components " +
                 to_string(comps.components[i]) + " and " +
                 to_string(comps.components[j]));
      }
      for (std::size_t m = 0; m < k; ++m) {
        if (p.leq[i][j] && p.leq[j][m] && !p.leq[i][m]) {
          fail(Errc::kPartialOrderViolation,
               "component order is not transitive");
        }
      }
    }
  }
  p.hasse = transitive_reduction(p.leq);
  return p;
}

// The component below all others, if any.
inline std::optional<std::size_t> minimum_component(const ComponentPoset& p) {
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool below_all = true;
    for (std::size_t j = 0; j < p.size() && below_all; ++j) {
      below_all = p.le(i, j);
    }
    if (below_all) return i;
  }
  return std::nullopt;
}

inline std::vector<std::size_t> minimal_components(const ComponentPoset& p) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    bool minimal = true;
    for (std::size_t j = 0; j < p.size() && minimal; ++j) {
      if (j != i && p.le(j, i)) minimal = false;
    }
    if (minimal) out.push_back(i);
  }
  return out;
}

// Strict upper bounds of a component H, split by the class of H they hang
// from. Each connected component K of G[up(H)] attaches to H inside a single
// class S_K; everything in K is assigned to S_K.
struct UpSets {
  struct ClassUp {
    VertexSet cls;
    std::vector<std::size_t> components;  // up(S)
    VertexSet vertices;                   // vertices of up(S)
  };

  std::size_t base = 0;
  VertexSet base_vertices;
  std::vector<std::size_t> up_star;  // H and its strict upper bounds
  std::vector<ClassUp> per_class;    // one entry per class of H

  const ClassUp& of(const VertexSet& cls) const {
    for (const auto& c : per_class) {
      if (c.cls == cls) return c;
    }
    fail(Errc::kInvalidArgument, to_string(cls) + " is not a class of the base");
  }
  VertexSet up_vertices(const VertexSet& cls) const { return of(cls).vertices; }
  VertexSet up_star_vertices(const VertexSet& cls) const {
    return of(cls).vertices.unite(cls);
  }
  // Vertices of all strict upper bounds.
  VertexSet up_vertices() const {
    VertexSet out;
    for (const auto& c : per_class) out = out.unite(c.vertices);
    return out;
  }
  VertexSet up_star_vertices() const { return up_vertices().unite(base_vertices); }
};

inline UpSets up_sets(const Graph& g, const ComponentPoset& poset,
                      const CanonicalPartition& partition, std::size_t h) {
  if (h >= poset.size()) fail(Errc::kInvalidArgument, "component index out of range");
  const auto& comps = poset.components;
  UpSets u;
  u.base = h;
  u.base_vertices = comps.components[h];
  std::vector<std::size_t> strict;
  for (std::size_t j = 0; j < poset.size(); ++j) {
    if (poset.le(h, j)) u.up_star.push_back(j);
    if (j != h && poset.le(h, j)) strict.push_back(j);
  }
  for (const auto& cls : partition.classes_within(u.base_vertices)) {
    u.per_class.push_back({cls, {}, {}});
  }
  const VertexSet up = comps.vertices_of(strict);
  for (const VertexSet& k : connected_components(induced_subgraph(g, up))) {
    const VertexSet touch = neighbors(g, k).intersect(u.base_vertices);
    UpSets::ClassUp* owner = nullptr;
    for (auto& c : u.per_class) {
      if (!c.cls.intersects(touch)) continue;
      if (owner) {
        fail(Errc::kUpperSetAttachment,
             "component " + to_string(k) + " of the upper set touches classes " +
                 to_string(owner->cls) + " and " + to_string(c.cls));
      }
      owner = &c;
    }
    if (!owner) {
      fail(Errc::kUpperSetAttachment, "component " + to_string(k) +
                                     " of the upper set does not touch the base");
    }
    owner->vertices = owner->vertices.unite(k);
    for (std::size_t j : strict) {
      if (comps.components[j].is_subset_of(k)) owner->components.push_back(j);
    }
  }
  return u;
}

}  // namespace cathedral

#endif  // CATHEDRAL_CANONICAL_HPP_
