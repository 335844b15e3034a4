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

#ifndef CATHEDRAL_MATCHING_HPP_
#define CATHEDRAL_MATCHING_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cathedral/error.hpp"
#include "cathedral/graph.hpp"

namespace cathedral {

// A set of pairwise vertex-disjoint edges, kept sorted.
struct Matching {
  std::vector<Edge> edges;

  Matching() = default;
  explicit Matching(std::vector<Edge> e) : edges(std::move(e)) {
    std::sort(edges.begin(), edges.end());
  }

  std::size_t size() const { return edges.size(); }
  bool contains(const Edge& e) const {
    return std::binary_search(edges.begin(), edges.end(), e);
  }

  friend auto operator<=>(const Matching&, const Matching&) = default;
};

inline bool is_matching_of(const Graph& g, const Matching& m) {
  std::vector<Vertex> covered;
  for (const Edge& e : m.edges) {
    if (!g.has_edge(e.u, e.v)) return false;
    covered.push_back(e.u);
    covered.push_back(e.v);
  }
  std::sort(covered.begin(), covered.end());
  return std::adjacent_find(covered.begin(), covered.end()) == covered.end();
}

inline bool is_perfect_matching_of(const Graph& g, const Matching& m) {
  return is_matching_of(g, m) && 2 * m.size() == g.order();
}

namespace detail {

// Edmonds' blossom-shrinking augmenting path search on a dense adjacency
// list. Returns mate[v] or -1. Vertices are scanned in ascending order, so
// the result is deterministic.
inline std::vector<int> blossom_mates(
    const std::vector<std::vector<std::size_t>>& adj) {
  const int n = static_cast<int>(adj.size());
  std::vector<int> match(n, -1);
  std::vector<int> parent(n);
  std::vector<int> base(n);
  std::vector<int> queue(n);
  std::vector<char> used(n);
  std::vector<char> in_blossom(n);
  std::vector<char> seen(n);

  auto lca = [&](int a, int b) {
    std::fill(seen.begin(), seen.end(), 0);
    for (;;) {
      a = base[a];
      seen[a] = 1;
      if (match[a] == -1) break;
      a = parent[match[a]];
    }
    for (;;) {
      b = base[b];
      if (seen[b]) return b;
      b = parent[match[b]];
    }
  };
  auto mark_path = [&](int v, int b, int child) {
    while (base[v] != b) {
      in_blossom[base[v]] = in_blossom[base[match[v]]] = 1;
      parent[v] = child;
      child = match[v];
      v = parent[match[v]];
    }
  };
  auto find_path = [&](int root) -> int {
    std::fill(used.begin(), used.end(), 0);
    std::fill(parent.begin(), parent.end(), -1);
    for (int i = 0; i < n; ++i) base[i] = i;
    used[root] = 1;
    int head = 0;
    int tail = 0;
    queue[tail++] = root;
    while (head < tail) {
      int v = queue[head++];
      for (std::size_t t : adj[v]) {
        int to = static_cast<int>(t);
        if (base[v] == base[to] || match[v] == to) continue;
        if (to == root || (match[to] != -1 && parent[match[to]] != -1)) {
          int cur = lca(v, to);
          std::fill(in_blossom.begin(), in_blossom.end(), 0);
          mark_path(v, cur, to);
          mark_path(to, cur, v);
          for (int i = 0; i < n; ++i) {
            if (in_blossom[base[i]]) {
              base[i] = cur;
              if (!used[i]) {
                used[i] = 1;
                queue[tail++] = i;
              }
            }
          }
        } else if (parent[to] == -1) {
          parent[to] = v;
          if (match[to] == -1) return to;
          used[match[to]] = 1;
          queue[tail++] = match[to];
        }
      }
    }
    return -1;
  };

  for (int v = 0; v < n; ++v) {
    if (match[v] != -1) continue;
    int x = find_path(v);
    while (x != -1) {
      int pv = parent[x];
      int next = match[pv];
      match[x] = pv;
      match[pv] = x;
      x = next;
    }
  }
  return match;
}

inline std::size_t matching_size(const std::vector<int>& mates) {
  return static_cast<std::size_t>(
             std::count_if(mates.begin(), mates.end(),
                           [](int m) { return m != -1; })) /
         2;
}

// Dense adjacency of G with the given local indices removed (rows kept, so
// removed vertices simply become isolated).
inline std::vector<std::vector<std::size_t>> adjacency_without(
    const Graph& g, const std::vector<char>& removed) {
  const auto& adj = g.local_adjacency();
  std::vector<std::vector<std::size_t>> out(adj.size());
  for (std::size_t a = 0; a < adj.size(); ++a) {
    if (removed[a]) continue;
    for (std::size_t b : adj[a]) {
      if (!removed[b]) out[a].push_back(b);
    }
  }
  return out;
}

}  // namespace detail

inline Matching maximum_matching(const Graph& g) {
  auto mates = detail::blossom_mates(g.local_adjacency());
  std::vector<Edge> edges;
  for (std::size_t a = 0; a < mates.size(); ++a) {
    if (mates[a] > static_cast<int>(a)) {
      edges.emplace_back(g.vertices()[a],
                         g.vertices()[static_cast<std::size_t>(mates[a])]);
    }
  }
  return Matching(std::move(edges));
}

// nu(G).
inline std::size_t matching_number(const Graph& g) {
  return detail::matching_size(detail::blossom_mates(g.local_adjacency()));
}

// The empty graph counts as factorizable.
inline bool is_factorizable(const Graph& g) {
  if (g.order() % 2 != 0) return false;
  for (const auto& n : g.local_adjacency()) {
    if (n.empty()) return false;
  }
  return 2 * matching_number(g) == g.order();
}

// Equivalent to is_factorizable(remove_vertices(g, removed)) without
// materialising the subgraph.
inline bool is_factorizable_without(const Graph& g, const VertexSet& removed) {
  detail::require_subset(g, removed);
  const std::size_t remaining = g.order() - removed.size();
  if (remaining % 2 != 0) return false;
  std::vector<char> mask(g.order(), 0);
  for (Vertex v : removed) mask[*g.index_of(v)] = 1;
  auto adj = detail::adjacency_without(g, mask);
  for (std::size_t a = 0; a < adj.size(); ++a) {
    if (!mask[a] && adj[a].empty()) return false;
  }
  return 2 * detail::matching_size(detail::blossom_mates(adj)) == remaining;
}

// A single vertex is factor-critical by convention; the empty graph is not.
inline bool is_factor_critical(const Graph& g) {
  if (g.order() == 0 || g.order() % 2 == 0) return false;
  if (g.order() == 1) return true;
  for (Vertex v : g.vertices()) {
    if (!is_factorizable_without(g, VertexSet{v})) return false;
  }
  return true;
}

struct PerfectMatchingList {
  std::vector<Matching> matchings;
  // More than `cap` perfect matchings exist; only the first `cap` are listed.
  bool truncated = false;
};

// All perfect matchings in lexicographic order of their sorted edge lists.
inline PerfectMatchingList enumerate_perfect_matchings(const Graph& g,
                                                       std::size_t cap) {
  if (cap < 1) fail(Errc::kInvalidArgument, "enumeration cap must be >= 1");
  PerfectMatchingList out;
  if (g.order() % 2 != 0) return out;
  const auto& adj = g.local_adjacency();
  const std::size_t n = g.order();
  std::vector<char> used(n, 0);
  std::vector<Edge> current;

  std::function<bool(std::size_t)> extend = [&](std::size_t from) -> bool {
    std::size_t a = from;
    while (a < n && used[a]) ++a;
    if (a == n) {
      if (out.matchings.size() == cap) {
        out.truncated = true;
        return false;
      }
      out.matchings.emplace_back(current);
      return true;
    }
    used[a] = 1;
    for (std::size_t b : adj[a]) {
      if (used[b]) continue;
      used[b] = 1;
      current.emplace_back(g.vertices()[a], g.vertices()[b]);
      bool go_on = extend(a + 1);
      current.pop_back();
      used[b] = 0;
      if (!go_on) {
        used[a] = 0;
        return false;
      }
    }
    used[a] = 0;
    return true;
  };
  extend(0);
  return out;
}

// Balanced paths are directed: a balanced path from u to v starts with a
// matching edge at u and leaves v exposed by the path's matching edges.
// Saturated paths start and end with matching edges; exposed paths start and
// end with non-matching edges.
enum class PathKind { kSaturated, kBalanced, kExposed };

inline constexpr std::string_view to_string(PathKind k) {
  switch (k) {
    case PathKind::kSaturated: return "saturated";
    case PathKind::kBalanced: return "balanced";
    case PathKind::kExposed: return "exposed";
  }
  return "?";
}

// Optional confinement of a path. Every vertex of the path lies in `within`;
// every vertex except the final endpoint lies in `interior`.
struct PathRestriction {
  std::optional<VertexSet> within;
  std::optional<VertexSet> interior;
};

inline constexpr std::uint64_t kDefaultSearchBudget = 200'000'000;

// Exhaustive search over simple M-alternating paths of a fixed (G, M).
// Exponential in the worst case; every call aborts with kBudgetExceeded once
// it has expanded `budget` path prefixes.
class AlternatingSearch {
 public:
  AlternatingSearch(const Graph& g, const Matching& m,
                    std::uint64_t budget = kDefaultSearchBudget)
      : graph_(&g), budget_(budget), mate_(g.order(), -1) {
    if (!is_matching_of(g, m)) {
      fail(Errc::kNotAMatching, "edge set is not a matching of the graph");
    }
    for (const Edge& e : m.edges) {
      auto a = *g.index_of(e.u);
      auto b = *g.index_of(e.v);
      mate_[a] = static_cast<int>(b);
      mate_[b] = static_cast<int>(a);
    }
  }

  // The search keeps a pointer to the graph.
  AlternatingSearch(Graph&&, const Matching&,
                    std::uint64_t = kDefaultSearchBudget) = delete;

  const Graph& graph() const { return *graph_; }

  // Endpoints v for which a path of `kind` from `from` to v exists.
  VertexSet reachable(Vertex from, PathKind kind,
                      const PathRestriction& r = {}) const {
    Walk w = make_walk(from, kind, r);
    std::vector<Vertex> out;
    if (kind == PathKind::kBalanced && w.within[w.start]) out.push_back(from);
    run(w, [&](std::size_t end, const std::vector<std::size_t>&) {
      out.push_back(graph_->vertices()[end]);
      return true;
    });
    return VertexSet(std::move(out));
  }

  bool exists(Vertex from, Vertex to, PathKind kind,
              const PathRestriction& r = {}) const {
    Walk w = make_walk(from, kind, r);
    const std::size_t target = graph_->require_index(to);
    if (from == to) {
      if (kind != PathKind::kBalanced) {
        fail(Errc::kInvalidArgument,
             std::string(to_string(kind)) + " paths need distinct ends");
      }
      return w.within[w.start] != 0;
    }
    bool found = false;
    run(w, [&](std::size_t end, const std::vector<std::size_t>&) {
      if (end == target) found = true;
      return !found;
    });
    return found;
  }

  // Every nontrivial path of `kind` starting at `from`, as vertex sequences.
  // Stops after `limit` paths; `truncated` reports whether more exist.
  std::vector<std::vector<Vertex>> paths(Vertex from, PathKind kind,
                                         std::size_t limit,
                                         bool* truncated = nullptr) const {
    Walk w = make_walk(from, kind, {});
    std::vector<std::vector<Vertex>> out;
    if (truncated) *truncated = false;
    run(w, [&](std::size_t, const std::vector<std::size_t>& seq) {
      if (out.size() == limit) {
        if (truncated) *truncated = true;
        return false;
      }
      std::vector<Vertex> p;
      p.reserve(seq.size());
      for (std::size_t i : seq) p.push_back(graph_->vertices()[i]);
      out.push_back(std::move(p));
      return true;
    });
    return out;
  }

  // Whether some M-alternating circuit passes through the non-matching edge
  // e. Searched directly as a closed walk, not via the path predicates.
  bool circuit_through(const Edge& e) const {
    if (!graph_->has_edge(e.u, e.v)) {
      fail(Errc::kInvalidArgument, "circuit edge is not an edge of the graph");
    }
    const std::size_t x = *graph_->index_of(e.u);
    const std::size_t y = *graph_->index_of(e.v);
    if (mate_[x] == static_cast<int>(y)) {
      fail(Errc::kInvalidArgument, "circuit edge must not be a matching edge");
    }
    std::vector<char> on(graph_->order(), 0);
    on[x] = on[y] = 1;
    std::uint64_t spent = 0;
    // At w the next edge is a matching edge iff `matched`.
    std::function<bool(std::size_t, bool)> go = [&](std::size_t w,
                                                    bool matched) -> bool {
      charge(spent);
      if (matched) {
        int z = mate_[w];
        if (z == -1) return false;
        auto zz = static_cast<std::size_t>(z);
        if (zz == x) return true;
        if (on[zz]) return false;
        on[zz] = 1;
        bool ok = go(zz, false);
        on[zz] = 0;
        return ok;
      }
      for (std::size_t z : graph_->local_adjacency()[w]) {
        if (on[z] || mate_[w] == static_cast<int>(z)) continue;
        on[z] = 1;
        bool ok = go(z, true);
        on[z] = 0;
        if (ok) return true;
      }
      return false;
    };
    return go(y, true);
  }

 private:
  struct Walk {
    std::size_t start = 0;
    bool first_matched = true;
    bool end_matched = true;
    std::vector<char> within;
    std::vector<char> interior;
  };

  Walk make_walk(Vertex from, PathKind kind, const PathRestriction& r) const {
    Walk w;
    w.start = graph_->require_index(from);
    w.first_matched = kind != PathKind::kExposed;
    w.end_matched = kind == PathKind::kSaturated;
    w.within = mask(r.within);
    w.interior = mask(r.interior);
    for (std::size_t i = 0; i < w.within.size(); ++i) {
      w.interior[i] = w.interior[i] && w.within[i];
    }
    return w;
  }

  std::vector<char> mask(const std::optional<VertexSet>& s) const {
    std::vector<char> m(graph_->order(), s ? 0 : 1);
    if (s) {
      for (Vertex v : *s) {
        if (auto i = graph_->index_of(v)) m[*i] = 1;
      }
    }
    return m;
  }

  void charge(std::uint64_t& spent) const {
    if (++spent > budget_) {
      fail(Errc::kBudgetExceeded, "alternating-path search exceeded budget of " +
                                      std::to_string(budget_) + " expansions");
    }
  }

  // Visits every simple alternating path from w.start whose first edge has
  // the requested type and whose last edge has type w.end_matched. The
  // visitor returns false to stop the search.
  template <typename Visit>
  void run(const Walk& w, Visit&& visit) const {
    if (!w.within[w.start] || !w.interior[w.start]) return;
    const auto& adj = graph_->local_adjacency();
    std::vector<char> on(graph_->order(), 0);
    std::vector<std::size_t> seq{w.start};
    on[w.start] = 1;
    std::uint64_t spent = 0;
    bool stop = false;

    std::function<void(std::size_t, bool)> go = [&](std::size_t at,
                                                    bool matched) {
      charge(spent);
      auto step = [&](std::size_t z) {
        if (on[z] || !w.within[z]) return;
        seq.push_back(z);
        if (matched == w.end_matched && !visit(z, seq)) stop = true;
        if (!stop && w.interior[z]) {
          on[z] = 1;
          go(z, !matched);
          on[z] = 0;
        }
        seq.pop_back();
      };
      if (matched) {
        if (mate_[at] != -1) step(static_cast<std::size_t>(mate_[at]));
        return;
      }
      for (std::size_t z : adj[at]) {
        if (stop) return;
        if (mate_[at] == static_cast<int>(z)) continue;
        step(z);
      }
    };
    go(w.start, w.first_matched);
  }

  const Graph* graph_;
  std::uint64_t budget_;
  std::vector<int> mate_;
};

// Convenience wrapper over AlternatingSearch. For kind == kSaturated and a
// perfect matching M this agrees with is_factorizable(G - u - v).
inline bool alternating_path_exists(const Graph& g, const Matching& m,
                                    Vertex u, Vertex v, PathKind kind,
                                    std::uint64_t budget = kDefaultSearchBudget) {
  g.require_index(u);
  g.require_index(v);
  return AlternatingSearch(g, m, budget).exists(u, v, kind);
}

}  // namespace cathedral

#endif  // CATHEDRAL_MATCHING_HPP_
