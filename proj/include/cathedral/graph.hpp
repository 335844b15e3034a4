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

// Immutable simple undirected graphs with stable vertex ids.
//
// Every structural operation (induced subgraph, deletion, contraction, edge
// addition) returns a new graph whose vertices keep the ids they had in the
// input. Decomposition trees and round-trip comparisons rely on that.

#ifndef CATHEDRAL_GRAPH_HPP_
#define CATHEDRAL_GRAPH_HPP_

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cathedral/error.hpp"

namespace cathedral {

using Vertex = int;

// Unordered vertex pair, stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(std::min(a, b)), v(std::max(a, b)) {}

  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge&, const Edge&) = default;
};

// Sorted set of distinct vertex ids.
class VertexSet {
 public:
  using const_iterator = std::vector<Vertex>::const_iterator;

  VertexSet() = default;
  VertexSet(std::initializer_list<Vertex> ids) : ids_(ids) { normalize(); }
  explicit VertexSet(std::vector<Vertex> ids) : ids_(std::move(ids)) {
    normalize();
  }

  // Vertices 0..n-1.
  static VertexSet range(int n) {
    std::vector<Vertex> ids(static_cast<std::size_t>(std::max(n, 0)));
    for (int i = 0; i < n; ++i) ids[static_cast<std::size_t>(i)] = i;
    VertexSet s;
    s.ids_ = std::move(ids);
    return s;
  }

  bool contains(Vertex v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
  }
  bool empty() const { return ids_.empty(); }
  std::size_t size() const { return ids_.size(); }
  Vertex front() const { return ids_.front(); }
  Vertex back() const { return ids_.back(); }
  Vertex operator[](std::size_t i) const { return ids_[i]; }
  const_iterator begin() const { return ids_.begin(); }
  const_iterator end() const { return ids_.end(); }
  const std::vector<Vertex>& ids() const { return ids_; }

  bool is_subset_of(const VertexSet& other) const {
    return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(),
                         ids_.end());
  }
  bool intersects(const VertexSet& other) const {
    auto a = ids_.begin();
    auto b = other.ids_.begin();
    while (a != ids_.end() && b != other.ids_.end()) {
      if (*a < *b) {
        ++a;
      } else if (*b < *a) {
        ++b;
      } else {
        return true;
      }
    }
    return false;
  }

  VertexSet unite(const VertexSet& other) const {
    VertexSet r;
    std::set_union(ids_.begin(), ids_.end(), other.ids_.begin(),
                   other.ids_.end(), std::back_inserter(r.ids_));
    return r;
  }
  VertexSet intersect(const VertexSet& other) const {
    VertexSet r;
    std::set_intersection(ids_.begin(), ids_.end(), other.ids_.begin(),
                          other.ids_.end(), std::back_inserter(r.ids_));
    return r;
  }
  VertexSet minus(const VertexSet& other) const {
    VertexSet r;
    std::set_difference(ids_.begin(), ids_.end(), other.ids_.begin(),
                        other.ids_.end(), std::back_inserter(r.ids_));
    return r;
  }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;
  friend auto operator<=>(const VertexSet& a, const VertexSet& b) {
    return a.ids_ <=> b.ids_;
  }

 private:
  void normalize() {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
  }

  std::vector<Vertex> ids_;
};

inline std::string to_string(const VertexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s[i]);
  }
  return out + "}";
}

class Graph {
 public:
  Graph() = default;

  // Throws Error(kSelfLoop | kDuplicateEdge | kUnknownVertex |
  // kInvalidArgument) when the input violates the simple-graph invariants.
  Graph(VertexSet vertices, std::vector<Edge> edges)
      : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    if (!vertices_.empty() && vertices_.front() < 0) {
      fail(Errc::kInvalidArgument, "vertex ids must be nonnegative");
    }
    for (const Edge& e : edges_) {
      if (e.u == e.v) {
        fail(Errc::kSelfLoop, "self-loop at vertex " + std::to_string(e.u));
      }
      if (!vertices_.contains(e.u) || !vertices_.contains(e.v)) {
        fail(Errc::kUnknownVertex, "edge " + std::to_string(e.u) + " " +
                                       std::to_string(e.v) +
                                       " has an undeclared endpoint");
      }
    }
    std::sort(edges_.begin(), edges_.end());
    auto dup = std::adjacent_find(edges_.begin(), edges_.end());
    if (dup != edges_.end()) {
      fail(Errc::kDuplicateEdge, "duplicate edge " + std::to_string(dup->u) +
                                     " " + std::to_string(dup->v));
    }
    build_adjacency();
  }

  // Graph on vertices 0..n-1.
  static Graph on_range(int n, std::vector<Edge> edges) {
    return Graph(VertexSet::range(n), std::move(edges));
  }

  const VertexSet& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  std::size_t order() const { return vertices_.size(); }
  std::size_t size() const { return edges_.size(); }
  bool empty() const { return vertices_.empty(); }

  bool has_vertex(Vertex v) const { return vertices_.contains(v); }

  std::optional<std::size_t> index_of(Vertex v) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
    if (it == vertices_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vertices_.begin());
  }

  // Sorted neighbor ids of v. Throws kUnknownVertex.
  std::span<const Vertex> neighbors(Vertex v) const {
    return adjacency_[require_index(v)];
  }

  bool has_edge(Vertex a, Vertex b) const {
    auto i = index_of(a);
    if (!i) return false;
    const auto& n = adjacency_[*i];
    return std::binary_search(n.begin(), n.end(), b);
  }

  // Neighbors by position in `vertices()`; the dense view used by the
  // matching engine.
  const std::vector<std::vector<std::size_t>>& local_adjacency() const {
    return local_;
  }

  std::size_t require_index(Vertex v) const {
    auto i = index_of(v);
    if (!i) fail(Errc::kUnknownVertex, "unknown vertex " + std::to_string(v));
    return *i;
  }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  void build_adjacency() {
    adjacency_.assign(vertices_.size(), {});
    local_.assign(vertices_.size(), {});
    for (const Edge& e : edges_) {
      std::size_t a = *index_of(e.u);
      std::size_t b = *index_of(e.v);
      adjacency_[a].push_back(e.v);
      adjacency_[b].push_back(e.u);
      local_[a].push_back(b);
      local_[b].push_back(a);
    }
    for (auto& n : adjacency_) std::sort(n.begin(), n.end());
    for (auto& n : local_) std::sort(n.begin(), n.end());
  }

  VertexSet vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<std::vector<std::size_t>> local_;
};

struct ContractionResult {
  Graph graph;
  Vertex merged_vertex = 0;
  // New id -> old ids it stands for.
  std::map<Vertex, VertexSet> origin_map;
};

namespace detail {

inline void require_subset(const Graph& g, const VertexSet& x) {
  if (!x.is_subset_of(g.vertices())) {
    fail(Errc::kNotSubset,
         "vertex set " + to_string(x) + " is not a subset of the graph");
  }
}

}  // namespace detail

// G[X].
inline Graph induced_subgraph(const Graph& g, const VertexSet& x) {
  detail::require_subset(g, x);
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    if (x.contains(e.u) && x.contains(e.v)) edges.push_back(e);
  }
  return Graph(x, std::move(edges));
}

// G - X.
inline Graph remove_vertices(const Graph& g, const VertexSet& x) {
  detail::require_subset(g, x);
  return induced_subgraph(g, g.vertices().minus(x));
}

// G/X. The merged vertex reuses min(X); loops and parallel edges vanish.
inline ContractionResult contract(const Graph& g, const VertexSet& x) {
  if (x.empty()) fail(Errc::kEmptySet, "cannot contract an empty vertex set");
  detail::require_subset(g, x);
  const Vertex merged = x.front();
  auto image = [&](Vertex v) { return x.contains(v) ? merged : v; };

  ContractionResult r;
  r.merged_vertex = merged;
  std::vector<Vertex> ids;
  for (Vertex v : g.vertices()) {
    if (!x.contains(v)) {
      ids.push_back(v);
      r.origin_map.emplace(v, VertexSet{v});
    }
  }
  ids.push_back(merged);
  r.origin_map.emplace(merged, x);

  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    Vertex a = image(e.u);
    Vertex b = image(e.v);
    if (a != b) edges.emplace_back(a, b);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  r.graph = Graph(VertexSet(std::move(ids)), std::move(edges));
  return r;
}

// G + e1 + ... + ek; every pair must be a complement edge.
inline Graph add_edges(const Graph& g, std::span<const Edge> pairs) {
  std::vector<Edge> edges = g.edges();
  for (const Edge& p : pairs) {
    if (p.u == p.v) {
      fail(Errc::kSelfLoop, "cannot add self-pair at " + std::to_string(p.u));
    }
    if (!g.has_vertex(p.u) || !g.has_vertex(p.v)) {
      fail(Errc::kUnknownVertex, "pair " + std::to_string(p.u) + " " +
                                     std::to_string(p.v) +
                                     " names an unknown vertex");
    }
    if (g.has_edge(p.u, p.v) ||
        std::find(edges.begin() + static_cast<std::ptrdiff_t>(g.size()),
                  edges.end(), p) != edges.end()) {
      fail(Errc::kEdgeExists, "edge " + std::to_string(p.u) + " " +
                                  std::to_string(p.v) + " already present");
    }
    edges.push_back(p);
  }
  return Graph(g.vertices(), std::move(edges));
}

inline Graph add_edges(const Graph& g, std::initializer_list<Edge> pairs) {
  return add_edges(g, std::span<const Edge>(pairs.begin(), pairs.size()));
}

// Gamma_G(X): vertices outside X adjacent to X.
inline VertexSet neighbors(const Graph& g, const VertexSet& x) {
  detail::require_subset(g, x);
  std::vector<Vertex> out;
  for (Vertex v : x) {
    for (Vertex w : g.neighbors(v)) {
      if (!x.contains(w)) out.push_back(w);
    }
  }
  return VertexSet(std::move(out));
}

// E_G[Y, Z].
inline std::vector<Edge> edges_between(const Graph& g, const VertexSet& y,
                                       const VertexSet& z) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if ((y.contains(e.u) && z.contains(e.v)) ||
        (y.contains(e.v) && z.contains(e.u))) {
      out.push_back(e);
    }
  }
  return out;
}

// delta_G(Y).
inline std::vector<Edge> cut_edges(const Graph& g, const VertexSet& y) {
  std::vector<Edge> out;
  for (const Edge& e : g.edges()) {
    if (y.contains(e.u) != y.contains(e.v)) out.push_back(e);
  }
  return out;
}

// Connectivity classes, each sorted, ordered by minimum id.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  const auto& adj = g.local_adjacency();
  std::vector<char> seen(g.order(), 0);
  std::vector<VertexSet> out;
  std::vector<std::size_t> stack;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp;
    stack.push_back(s);
    seen[s] = 1;
    while (!stack.empty()) {
      std::size_t a = stack.back();
      stack.pop_back();
      comp.push_back(g.vertices()[a]);
      for (std::size_t b : adj[a]) {
        if (!seen[b]) {
          seen[b] = 1;
          stack.push_back(b);
        }
      }
    }
    out.emplace_back(std::move(comp));
  }
  return out;
}

inline std::vector<Edge> complement_pairs(const Graph& g) {
  std::vector<Edge> out;
  const auto& vs = g.vertices();
  for (std::size_t i = 0; i < vs.size(); ++i) {
    for (std::size_t j = i + 1; j < vs.size(); ++j) {
      if (!g.has_edge(vs[i], vs[j])) out.emplace_back(vs[i], vs[j]);
    }
  }
  return out;
}

// Graph restricted to a sub-edge-set on the same vertices.
inline Graph spanning_subgraph(const Graph& g, std::vector<Edge> edges) {
  return Graph(g.vertices(), std::move(edges));
}

inline bool is_dense(const Graph& g) {
  return g.empty() || g.vertices().back() == static_cast<Vertex>(g.order()) - 1;
}

// Relabels vertices to 0..n-1 preserving their order.
inline Graph relabel_dense(const Graph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.size());
  for (const Edge& e : g.edges()) {
    edges.emplace_back(static_cast<Vertex>(*g.index_of(e.u)),
                       static_cast<Vertex>(*g.index_of(e.v)));
  }
  return Graph::on_range(static_cast<int>(g.order()), std::move(edges));
}

// Edge-list text format:
//
//   # optional comments
//   vertices <n>
//   <u> <v>
//   ...
//
// Blank lines are ignored. Errors carry the 1-based line number.
inline Graph parse_edge_list(std::string_view text) {
  auto parse_int = [](std::string_view tok, int& out) {
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
    return ec == std::errc() && ptr == tok.data() + tok.size();
  };
  auto tokens = [](std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' ||
                                 line[i] == '\r')) {
        ++i;
      }
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' &&
             line[j] != '\r') {
        ++j;
      }
      if (j > i) out.push_back(line.substr(i, j - i));
      i = j;
    }
    return out;
  };

  std::optional<int> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto where = "line " + std::to_string(line_no) + ": ";
    auto toks = tokens(line);
    if (toks.empty() || toks.front().front() == '#') continue;
    if (!n) {
      int count = 0;
      if (toks.size() != 2 || toks[0] != "vertices" ||
          !parse_int(toks[1], count) || count < 0) {
        fail(Errc::kMissingHeader, where + "expected 'vertices <n>'");
      }
      n = count;
      continue;
    }
    int a = 0;
    int b = 0;
    if (toks.size() != 2 || !parse_int(toks[0], a) || !parse_int(toks[1], b)) {
      fail(Errc::kMalformedLine, where + "expected '<u> <v>'");
    }
    if (a < 0 || b < 0 || a >= *n || b >= *n) {
      fail(Errc::kVertexOutOfRange,
           where + "endpoint exceeds declared vertex count");
    }
    if (a == b) fail(Errc::kSelfLoop, where + "self-loop");
    Edge e(a, b);
    if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
      fail(Errc::kDuplicateEdge, where + "duplicate edge");
    }
    edges.push_back(e);
  }
  if (!n) fail(Errc::kMissingHeader, "missing 'vertices <n>' line");
  return Graph::on_range(*n, std::move(edges));
}

// Writes the edge-list format. Requires ids 0..n-1.
inline std::string render_edge_list(const Graph& g) {
  if (!is_dense(g)) {
    fail(Errc::kNonDenseIds, "edge-list output requires vertex ids 0..n-1");
  }
  std::ostringstream out;
  out << "vertices " << g.order() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

}  // namespace cathedral

#endif  // CATHEDRAL_GRAPH_HPP_
