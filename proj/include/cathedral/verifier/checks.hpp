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

// The conformance checks. Each one restates a structural fact about
// factorizable graphs and tests it on a concrete graph, using the alternating
// path searches and the brute-force constructions as independent witnesses.
// Equivalences are tested in both directions.

#ifndef CATHEDRAL_VERIFIER_CHECKS_HPP_
#define CATHEDRAL_VERIFIER_CHECKS_HPP_

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cathedral/canonical.hpp"
#include "cathedral/cathedral.hpp"
#include "cathedral/gallai_edmonds.hpp"
#include "cathedral/graph.hpp"
#include "cathedral/matching.hpp"
#include "cathedral/verifier/subject.hpp"

namespace cathedral::verifier {

// Raised by a check that does not apply to the graph at hand.
class CheckSkipped : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Requirement { kNone, kMinimum, kSaturated };

struct CheckDef {
  std::string_view id;
  Requirement requirement;
  // Informational checks record an outcome without asserting it.
  bool informational;
  std::string (*run)(Subject&);
};

namespace checks {

inline std::string str(Vertex v) { return std::to_string(v); }
inline std::string str(const Edge& e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}
inline std::string str(const VertexSet& s) { return to_string(s); }
inline std::string str(const Matching& m) {
  std::string out = "{";
  for (std::size_t i = 0; i < m.edges.size(); ++i) {
    if (i) out += ",";
    out += str(m.edges[i]);
  }
  return out + "}";
}

inline std::string counted(std::size_t n, std::string_view what) {
  return std::to_string(n) + " " + std::string(what);
}

// Whether `seq` alternates M, non-M, ..., M along consecutive vertices.
inline bool is_saturated_sequence(const std::vector<Vertex>& seq,
                                  const Matching& m) {
  if (seq.size() < 2 || seq.size() % 2 != 0) return false;
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) {
    if (m.contains(Edge(seq[i], seq[i + 1])) != (i % 2 == 0)) return false;
  }
  return true;
}

struct PathSplit {
  std::string problem;    // empty when both decompositions are as expected
  std::vector<Edge> ears;  // end vertex pairs of the ears found
};

// Splits a saturated path P at X. Each connected piece of P[X] must be a
// saturated path; each piece of P - E(G[X]) avoiding both ends of P must be
// an ear: ends in X, interior outside X, interior saturated.
inline PathSplit split_saturated_path(const std::vector<Vertex>& p,
                                      const VertexSet& x, const Matching& m) {
  PathSplit out;
  const std::size_t n = p.size();
  for (std::size_t i = 0; i < n;) {
    if (!x.contains(p[i])) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && x.contains(p[j])) ++j;
    std::vector<Vertex> run(p.begin() + static_cast<std::ptrdiff_t>(i),
                            p.begin() + static_cast<std::ptrdiff_t>(j));
    if (!is_saturated_sequence(run, m)) {
      out.problem = "piece inside X starting at " + str(p[i]) +
                    " is not a saturated path";
      return out;
    }
    i = j;
  }
  // Edge k joins p[k] and p[k+1]; it is kept unless both ends lie in X.
  auto kept = [&](std::size_t k) {
    return !(x.contains(p[k]) && x.contains(p[k + 1]));
  };
  for (std::size_t k = 0; k + 1 < n;) {
    if (!kept(k)) {
      ++k;
      continue;
    }
    std::size_t l = k;
    while (l + 1 < n && kept(l)) ++l;
    // Kept edges k..l-1 span vertices p[k..l].
    if (k > 0 && l < n - 1) {
      std::vector<Vertex> interior(p.begin() + static_cast<std::ptrdiff_t>(k + 1),
                                   p.begin() + static_cast<std::ptrdiff_t>(l));
      bool ends_in = x.contains(p[k]) && x.contains(p[l]);
      bool interior_out = std::none_of(interior.begin(), interior.end(),
                                       [&](Vertex v) { return x.contains(v); });
      if (!ends_in || !interior_out || !is_saturated_sequence(interior, m)) {
        out.problem = "piece between " + str(p[k]) + " and " + str(p[l]) +
                      " is not an ear";
        return out;
      }
      out.ears.emplace_back(p[k], p[l]);
    }
    k = l;
  }
  return out;
}

inline Matching restrict_matching(const Matching& m, const VertexSet& x) {
  std::vector<Edge> out;
  for (const Edge& e : m.edges) {
    if (x.contains(e.u) && x.contains(e.v)) out.push_back(e);
  }
  return Matching(std::move(out));
}

inline std::set<Edge> edge_union(const std::vector<Matching>& ms) {
  std::set<Edge> out;
  for (const auto& m : ms) out.insert(m.edges.begin(), m.edges.end());
  return out;
}

// Unions of components to split paths at: every nonempty proper union when
// there are few components, single components otherwise.
inline std::vector<VertexSet> separating_sets(const FactorComponents& comps) {
  std::vector<VertexSet> out;
  const std::size_t k = comps.size();
  if (k <= 8) {
    for (std::uint64_t mask = 1; mask + 1 < (std::uint64_t{1} << k); ++mask) {
      std::vector<std::size_t> idx;
      for (std::size_t i = 0; i < k; ++i) {
        if (mask >> i & 1U) idx.push_back(i);
      }
      out.push_back(comps.vertices_of(idx));
    }
  } else {
    out = comps.components;
  }
  return out;
}

// A near-perfect matching M exposing v: G is factor-critical iff every
// vertex has a balanced path to v. Tested on every G - x and on every
// contraction G[X]/V(H) the component order looks at.
inline std::string near_perfect_balanced(Subject& s) {
  const Graph& g = s.g();
  std::size_t cases = 0;
  auto test = [&](const Graph& h, const Matching& m, Vertex exposed,
                  const std::string& label) {
    AlternatingSearch search(h, m, s.cfg().search_budget);
    bool all = true;
    for (Vertex u : h.vertices()) {
      if (!search.exists(u, exposed, PathKind::kBalanced)) {
        all = false;
        break;
      }
    }
    if (all != is_factor_critical(h)) {
      violation(label + ": factor-critical=" + std::to_string(!all) +
                ", balanced paths to " + str(exposed) + " from every vertex=" +
                std::to_string(all));
    }
    ++cases;
  };
  for (const Matching& m : s.sample()) {
    for (Vertex x : g.vertices()) {
      Matching near;
      Vertex mate = x;
      for (const Edge& e : m.edges) {
        if (e.touches(x)) {
          mate = e.other(x);
        } else {
          near.edges.push_back(e);
        }
      }
      test(remove_vertices(g, VertexSet{x}), near, mate,
           "G-" + str(x) + " with " + str(m));
    }
  }
  const auto& comps = s.comps();
  if (comps.size() <= 10) {
    const Matching& m = s.sample().front();
    for (std::size_t h = 0; h < comps.size(); ++h) {
      std::vector<std::size_t> others;
      for (std::size_t j = 0; j < comps.size(); ++j) {
        if (j != h) others.push_back(j);
      }
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << others.size());
           ++mask) {
        std::vector<std::size_t> idx{h};
        for (std::size_t b = 0; b < others.size(); ++b) {
          if (mask >> b & 1U) idx.push_back(others[b]);
        }
        const VertexSet x = comps.vertices_of(idx);
        const VertexSet base = comps.components[h];
        auto c = contract(induced_subgraph(g, x), base);
        // M inside X minus the edges inside the contracted part.
        std::vector<Edge> near;
        for (const Edge& e : restrict_matching(m, x).edges) {
          if (!(base.contains(e.u) && base.contains(e.v))) near.push_back(e);
        }
        test(c.graph, Matching(std::move(near)), c.merged_vertex,
             "G[" + str(x) + "]/" + str(base));
      }
    }
  }
  return counted(cases, "graphs");
}

// Three characterizations of allowed edges, for each non-matching edge e:
// some perfect matching contains e; an M-alternating circuit passes through
// e; a saturated path joins the ends of e.
inline std::string allowed_circuit(Subject& s) {
  const auto allowed = edge_union(s.all_pms());
  std::size_t cases = 0;
  for (std::size_t mi = 0; mi < s.sample().size(); ++mi) {
    const Matching& m = s.sample()[mi];
    const auto& search = s.search(mi);
    const auto& table = s.table(mi);
    for (const Edge& e : s.g().edges()) {
      if (m.contains(e)) continue;
      const bool a = allowed.count(e) > 0;
      const bool c = search.circuit_through(e);
      const bool p = table.saturated.at(e.u).contains(e.v);
      if (a != c || c != p) {
        violation("edge " + str(e) + " with " + str(m) + ": in some PM=" +
                  std::to_string(a) + ", circuit=" + std::to_string(c) +
                  ", saturated path=" + std::to_string(p));
      }
      ++cases;
    }
  }
  return counted(cases, "edges");
}

// A saturated path joins u and v iff G - u - v is factorizable.
inline std::string allowed_saturated_path(Subject& s) {
  const Graph& g = s.g();
  std::size_t cases = 0;
  for (std::size_t mi = 0; mi < s.sample().size(); ++mi) {
    const auto& table = s.table(mi);
    for (Vertex u : g.vertices()) {
      for (Vertex v : g.vertices()) {
        if (u >= v) continue;
        const bool path = table.saturated.at(u).contains(v);
        if (path != table.saturated.at(v).contains(u)) {
          violation("saturated path relation is not symmetric at " + str(u) +
                    "," + str(v));
        }
        const bool fact = is_factorizable(remove_vertices(g, VertexSet{u, v}));
        if (path != fact) {
          violation("pair " + str(u) + "," + str(v) + " with " +
                    str(s.sample()[mi]) + ": saturated path=" +
                    std::to_string(path) + ", G-u-v factorizable=" +
                    std::to_string(fact));
        }
        ++cases;
      }
    }
  }
  return counted(cases, "pairs");
}

// Every listed saturated path splits correctly at every separating set.
inline std::string saturated_path_split(Subject& s) {
  const auto sets = separating_sets(s.comps());
  std::size_t cases = 0;
  for (std::size_t mi = 0; mi < s.sample().size(); ++mi) {
    const auto& list = s.saturated_paths(mi);
    if (list.truncated) {
      fail(Errc::kBudgetExceeded, "saturated path listing truncated at " +
                                      std::to_string(s.cfg().path_limit));
    }
    for (const auto& p : list.paths) {
      for (const auto& x : sets) {
        auto split = split_saturated_path(p, x, s.sample()[mi]);
        if (!split.problem.empty()) {
          std::string seq;
          for (Vertex v : p) seq += (seq.empty() ? "" : " ") + str(v);
          violation("path [" + seq + "] at X=" + str(x) + ": " + split.problem);
        }
        ++cases;
      }
    }
  }
  return counted(cases, "path splits");
}

// For a complement pair xy: G + xy has a new perfect matching, iff xy is
// allowed in G + xy, iff a saturated path joins x and y in G.
inline std::string new_matching_pair(Subject& s) {
  const Graph& g = s.g();
  std::size_t cases = 0;
  for (const Edge& e : complement_pairs(g)) {
    const Graph h = add_edges(g, {e});
    auto pms = enumerate_perfect_matchings(h, s.cfg().enumeration_cap);
    const bool fresh = std::any_of(pms.matchings.begin(), pms.matchings.end(),
                                   [&](const Matching& m) { return m.contains(e); });
    if (!fresh && pms.truncated) {
      fail(Errc::kBudgetExceeded, "perfect matching enumeration truncated");
    }
    const auto allowed = allowed_edges(h);
    const bool in_allowed =
        std::find(allowed.begin(), allowed.end(), e) != allowed.end();
    if (fresh != in_allowed) {
      violation("pair " + str(e) + ": new PM=" + std::to_string(fresh) +
                ", allowed in G+e=" + std::to_string(in_allowed));
    }
    for (std::size_t mi = 0; mi < s.sample().size(); ++mi) {
      const bool path = s.table(mi).saturated.at(e.u).contains(e.v);
      if (path != fresh) {
        violation("pair " + str(e) + " with " + str(s.sample()[mi]) +
                  ": new PM=" + std::to_string(fresh) +
                  ", saturated path=" + std::to_string(path));
      }
    }
    ++cases;
  }
  return counted(cases, "complement pairs");
}

// Gallai-Edmonds classes from paths to the vertices a maximum matching
// exposes: D by balanced paths, A by exposed paths, C otherwise.
inline std::string ge_exposed_paths(Subject& s) {
  const Graph& g = s.g();
  std::vector<std::pair<std::string, Graph>> graphs;
  graphs.emplace_back("G", g);
  for (Vertex x : g.vertices()) {
    graphs.emplace_back("G-" + str(x), remove_vertices(g, VertexSet{x}));
  }
  for (Vertex u : g.vertices()) {
    for (Vertex v : g.vertices()) {
      if (u < v && !is_factorizable_without(g, VertexSet{u, v})) {
        graphs.emplace_back("G-" + str(u) + "-" + str(v),
                            remove_vertices(g, VertexSet{u, v}));
      }
    }
  }
  for (const auto& [label, h] : graphs) {
    const Matching m = maximum_matching(h);
    std::vector<Vertex> covered;
    for (const Edge& e : m.edges) {
      covered.push_back(e.u);
      covered.push_back(e.v);
    }
    const VertexSet exposed = h.vertices().minus(VertexSet(covered));
    AlternatingSearch search(h, m, s.cfg().search_budget);
    std::vector<Vertex> d, a, c;
    for (Vertex u : h.vertices()) {
      if (search.reachable(u, PathKind::kBalanced).intersects(exposed)) {
        d.push_back(u);
      } else if (search.reachable(u, PathKind::kExposed).intersects(exposed)) {
        a.push_back(u);
      } else {
        c.push_back(u);
      }
    }
    GEPartition by_paths{VertexSet(d), VertexSet(a), VertexSet(c)};
    GEPartition direct = gallai_edmonds(h);
    if (!(by_paths == direct)) {
      violation(label + ": by paths D=" + str(by_paths.d) + " A=" +
                str(by_paths.a) + " C=" + str(by_paths.c) + ", direct D=" +
                str(direct.d) + " A=" + str(direct.a) + " C=" + str(direct.c));
    }
  }
  return counted(graphs.size(), "graphs");
}

// Gallai-Edmonds classes of G - x from paths leaving x under a perfect
// matching of G.
inline std::string ge_vertex_deleted_paths(Subject& s) {
  const Graph& g = s.g();
  std::size_t cases = 0;
  for (std::size_t mi = 0; mi < s.sample().size(); ++mi) {
    const auto& table = s.table(mi);
    for (Vertex x : g.vertices()) {
      const auto& ge = s.ge_minus(x);
      const VertexSet& sat = table.saturated.at(x);
      const VertexSet& bal = table.balanced.at(x);
      for (Vertex u : g.vertices()) {
        const bool in_d = ge.d.contains(u);
        const bool in_a = ge.a.contains(u) || u == x;
        const bool in_c = ge.c.contains(u);
        const bool p_sat = sat.contains(u);
        const bool p_bal = bal.contains(u);
        if (in_d != p_sat || in_a != (!p_sat && p_bal) ||
            in_c != (!p_sat && !p_bal)) {
          violation("x=" + str(x) + ", u=" + str(u) + " with " +
                    str(s.sample()[mi]) + ": D/A+x/C membership " +
                    std::to_string(in_d) + std::to_string(in_a) +
                    std::to_string(in_c) + ", saturated=" +
                    std::to_string(p_sat) + ", balanced=" +
                    std::to_string(p_bal));
        }
        ++cases;
      }
    }
  }
  return counted(cases, "vertex pairs");
}

// The cached order matrix agrees with pairwise brute force and is a partial
// order whose Hasse diagram generates it.
inline std::string order_axioms(Subject& s) {
  const auto& poset = s.poset();
  const auto& comps = s.comps();
  const std::size_t k = poset.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      const bool direct =
          component_leq(s.g(), comps, i, j, s.cfg().component_limit);
      if (direct != poset.le(i, j)) {
        violation("order matrix and pairwise test disagree on " +
                  str(comps.components[i]) + " <= " + str(comps.components[j]));
      }
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    if (!poset.le(i, i)) violation("not reflexive");
    for (std::size_t j = 0; j < k; ++j) {
      if (i != j && poset.le(i, j) && poset.le(j, i)) {
        violation("not antisymmetric: " + str(comps.components[i]) + ", " +
                  str(comps.components[j]));
      }
      for (std::size_t l = 0; l < k; ++l) {
        if (poset.le(i, j) && poset.le(j, l) && !poset.le(i, l)) {
          violation("not transitive through " + str(comps.components[j]));
        }
      }
    }
  }
  // Reflexive-transitive closure of the cover pairs must give back leq, and
  // no cover pair may be implied by the others.
  std::vector<std::vector<char>> closure(k, std::vector<char>(k, 0));
  for (std::size_t i = 0; i < k; ++i) closure[i][i] = 1;
  for (const auto& [lo, hi] : poset.hasse) closure[lo][hi] = 1;
  for (std::size_t m = 0; m < k; ++m) {
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        if (closure[i][m] && closure[m][j]) closure[i][j] = 1;
      }
    }
  }
  if (closure != poset.leq) violation("Hasse diagram does not generate the order");
  for (const auto& [lo, hi] : poset.hasse) {
    for (std::size_t m = 0; m < k; ++m) {
      if (m != lo && m != hi && poset.le(lo, m) && poset.le(m, hi)) {
        violation("Hasse pair is not a cover");
      }
    }
  }
  return counted(k, "components");
}

// u ~ v from its definition, through vertex deletion rather than the fast
// factorizability test, is an equivalence whose classes are the partition.
inline std::string class_equivalence(Subject& s) {
  const Graph& g = s.g();
  const auto& comps = s.comps();
  const auto vs = g.vertices().ids();
  const std::size_t n = vs.size();
  std::vector<std::vector<char>> rel(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      rel[i][j] = i == j || (comps.component_of(vs[i]) == comps.component_of(vs[j]) &&
                             !is_factorizable(remove_vertices(g, VertexSet{vs[i], vs[j]})));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j] != rel[j][i]) violation("relation is not symmetric");
      for (std::size_t l = 0; l < n; ++l) {
        if (rel[i][j] && rel[j][l] && !rel[i][l]) {
          violation("relation is not transitive: " + str(vs[i]) + "~" +
                    str(vs[j]) + "~" + str(vs[l]));
        }
      }
    }
  }
  std::set<VertexSet> classes;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vertex> cls;
    for (std::size_t j = 0; j < n; ++j) {
      if (rel[i][j]) cls.push_back(vs[j]);
    }
    classes.insert(VertexSet(std::move(cls)));
  }
  const auto& part = s.part().classes;
  if (std::set<VertexSet>(part.begin(), part.end()) != classes ||
      classes.size() != part.size()) {
    violation("partition differs from the classes of the relation");
  }
  return counted(classes.size(), "classes");
}

// Inside each component H, the partition of G refines that of G[V(H)].
inline std::string class_refinement(Subject& s) {
  std::size_t cases = 0;
  for (const VertexSet& h : s.comps().components) {
    const auto own = canonical_partition(induced_subgraph(s.g(), h));
    for (Vertex u : h) {
      for (Vertex v : h) {
        if (s.part().equivalent(u, v) && !own.equivalent(u, v)) {
          violation(str(u) + "~" + str(v) + " in G but not in G[" + str(h) +
                    "]");
        }
        ++cases;
      }
    }
  }
  return counted(cases, "pairs");
}

// Within a component, u ~ v iff no saturated path joins u and v.
inline std::string class_saturated_paths(Subject& s) {
  const auto& comps = s.comps();
  std::size_t cases = 0;
  for (std::size_t mi = 0; mi < s.sample().size(); ++mi) {
    const auto& table = s.table(mi);
    for (Vertex u : s.g().vertices()) {
      for (Vertex v : s.g().vertices()) {
        if (u == v || comps.component_of(u) != comps.component_of(v)) continue;
        const bool eq = s.part().equivalent(u, v);
        const bool path = table.saturated.at(u).contains(v);
        if (eq == path) {
          violation(str(u) + "," + str(v) + " with " + str(s.sample()[mi]) +
                    ": equivalent=" + std::to_string(eq) +
                    ", saturated path=" + std::to_string(path));
        }
        ++cases;
      }
    }
  }
  return counted(cases, "pairs");
}

// Each connected component of the graph induced by the strict upper bounds
// of H attaches to H inside exactly one class.
inline std::string upper_set_attachment(Subject& s) {
  const auto& poset = s.poset();
  const auto& comps = s.comps();
  std::size_t cases = 0;
  for (std::size_t h = 0; h < poset.size(); ++h) {
    const VertexSet& base = comps.components[h];
    std::vector<std::size_t> strict;
    for (std::size_t j = 0; j < poset.size(); ++j) {
      if (j != h && poset.le(h, j)) strict.push_back(j);
    }
    const auto classes = s.part().classes_within(base);
    const auto& ups = s.ups(h);
    for (const VertexSet& k :
         connected_components(induced_subgraph(s.g(), comps.vertices_of(strict)))) {
      const VertexSet touch = neighbors(s.g(), k).intersect(base);
      std::vector<VertexSet> hit;
      for (const auto& c : classes) {
        if (c.intersects(touch)) hit.push_back(c);
      }
      if (hit.size() != 1) {
        violation("component " + str(k) + " above " + str(base) + " touches " +
                  std::to_string(hit.size()) + " classes");
      }
      if (!k.is_subset_of(ups.up_vertices(hit.front()))) {
        violation("component " + str(k) + " is not assigned to " +
                  str(hit.front()));
      }
      ++cases;
    }
  }
  return counted(cases, "upper components");
}

// The two ends of an ear relative to a component are equivalent.
inline std::string ear_ends_equivalent(Subject& s) {
  std::size_t cases = 0;
  for (std::size_t mi = 0; mi < s.sample().size(); ++mi) {
    const auto& list = s.saturated_paths(mi);
    if (list.truncated) {
      fail(Errc::kBudgetExceeded, "saturated path listing truncated");
    }
    for (const VertexSet& h : s.comps().components) {
      for (const auto& p : list.paths) {
        auto split = split_saturated_path(p, h, s.sample()[mi]);
        if (!split.problem.empty()) violation(split.problem);
        for (const Edge& ear : split.ears) {
          if (!s.part().equivalent(ear.u, ear.v)) {
            violation("ear relative to " + str(h) + " with ends " + str(ear.u) +
                      "," + str(ear.v) + " under " + str(s.sample()[mi]));
          }
          ++cases;
        }
      }
    }
  }
  return counted(cases, "ears");
}

// For a minimal G1 and an incomparable G2, one or two complement edges
// between them keep the components and make G1 <= G2.
inline std::string order_by_added_edges(Subject& s) {
  const Graph& g = s.g();
  const auto& poset = s.poset();
  const auto& comps = s.comps();
  std::size_t pairs = 0;
  for (std::size_t g1 : minimal_components(poset)) {
    for (std::size_t g2 = 0; g2 < poset.size(); ++g2) {
      if (g2 == g1 || poset.le(g1, g2) || poset.le(g2, g1)) continue;
      std::vector<Edge> candidates;
      for (Vertex a : comps.components[g1]) {
        for (Vertex b : comps.components[g2]) {
          if (!g.has_edge(a, b)) candidates.emplace_back(a, b);
        }
      }
      bool found = false;
      for (std::size_t i = 0; i < candidates.size() && !found; ++i) {
        for (std::size_t j = i; j < candidates.size() && !found; ++j) {
          std::vector<Edge> add{candidates[i]};
          if (j != i) add.push_back(candidates[j]);
          const Graph h = add_edges(g, add);
          const auto hc = factor_components(h);
          if (hc.components != comps.components) continue;
          found = component_leq(h, hc, g1, g2, s.cfg().component_limit);
        }
      }
      if (!found) {
        violation("no edge pair makes " + str(comps.components[g1]) + " <= " +
                  str(comps.components[g2]));
      }
      ++pairs;
    }
  }
  return counted(pairs, "incomparable pairs");
}

// Inside an elementary graph every ordered pair has a saturated or a
// balanced path. Applied to each component G[V(H)].
inline std::string elementary_reachability(Subject& s) {
  std::size_t cases = 0;
  for (const VertexSet& hv : s.comps().components) {
    const Graph h = induced_subgraph(s.g(), hv);
    for (const Matching& m : s.sample()) {
      AlternatingSearch search(h, restrict_matching(m, hv),
                               s.cfg().search_budget);
      for (Vertex u : hv) {
        const VertexSet sat = search.reachable(u, PathKind::kSaturated);
        const VertexSet bal = search.reachable(u, PathKind::kBalanced);
        for (Vertex v : hv) {
          if (!sat.contains(v) && !bal.contains(v)) {
            violation("no path from " + str(u) + " to " + str(v) + " in " +
                      str(hv));
          }
          ++cases;
        }
      }
    }
  }
  return counted(cases, "ordered pairs");
}

// Path reachability between a class S of H, the vertices hanging from S,
// and the rest of the upper set of H.
inline std::string upper_set_reach(Subject& s) {
  std::size_t cases = 0;
  for (std::size_t h = 0; h < s.comps().size(); ++h) {
    const auto& ups = s.ups(h);
    const VertexSet all = ups.up_star_vertices();
    for (std::size_t mi = 0; mi < s.sample().size(); ++mi) {
      const auto& search = s.search(mi);
      const auto& table = s.table(mi);
      const std::string where = " under " + str(s.sample()[mi]);
      for (const auto& cu : ups.per_class) {
        const VertexSet& cls = cu.cls;
        const VertexSet up = cu.vertices;
        const VertexSet star = up.unite(cls);
        // Balanced paths from up*(S) into S with all but the end in up(S).
        PathRestriction into{star, up};
        for (Vertex u : star) {
          if (!search.reachable(u, PathKind::kBalanced, into).intersects(cls)) {
            violation("no confined balanced path from " + str(u) + " into " +
                      str(cls) + where);
          }
          ++cases;
        }
        // Saturated paths from S into up*(T) avoiding up(S).
        const VertexSet room = all.minus(up);
        PathRestriction avoid{room, room};
        for (const auto& other : ups.per_class) {
          if (other.cls == cls) continue;
          const VertexSet target = other.vertices.unite(other.cls);
          for (Vertex u : cls) {
            const VertexSet got = search.reachable(u, PathKind::kSaturated, avoid);
            if (!target.is_subset_of(got)) {
              violation("confined saturated paths from " + str(u) + " miss " +
                        str(target.minus(got)) + where);
            }
            ++cases;
          }
        }
        for (Vertex u : cls) {
          const VertexSet& sat = table.saturated.at(u);
          const VertexSet& bal = table.balanced.at(u);
          if (sat.intersects(up) || bal.intersects(up)) {
            violation("path from class vertex " + str(u) + " reaches " +
                      str(up.intersect(sat.unite(bal))) + where);
          }
          for (Vertex v : cls) {
            if (sat.contains(v) || !bal.contains(v)) {
              violation("class pair " + str(u) + "," + str(v) +
                        " misclassified" + where);
            }
          }
          ++cases;
        }
      }
    }
  }
  return counted(cases, "cases");
}

// Unconfined consequences of the reach statements.
inline std::string upper_set_combination(Subject& s) {
  std::size_t cases = 0;
  for (std::size_t h = 0; h < s.comps().size(); ++h) {
    const auto& ups = s.ups(h);
    const VertexSet all = ups.up_star_vertices();
    for (std::size_t mi = 0; mi < s.sample().size(); ++mi) {
      const auto& table = s.table(mi);
      const std::string where = " under " + str(s.sample()[mi]);
      for (const auto& cu : ups.per_class) {
        const VertexSet& cls = cu.cls;
        const VertexSet& up = cu.vertices;
        const VertexSet rest = all.minus(up.unite(cls));
        for (Vertex u : up) {
          const VertexSet& sat = table.saturated.at(u);
          const VertexSet& bal = table.balanced.at(u);
          if (!rest.is_subset_of(sat)) {
            violation("no saturated path from " + str(u) + " to " +
                      str(rest.minus(sat)) + where);
          }
          if (sat.intersects(cls) || !cls.is_subset_of(bal)) {
            violation("paths from " + str(u) + " into " + str(cls) +
                      " misclassified" + where);
          }
          ++cases;
        }
        for (Vertex w : cls) {
          const VertexSet& sat = table.saturated.at(w);
          const VertexSet& bal = table.balanced.at(w);
          if (!rest.is_subset_of(sat)) {
            violation("no saturated path from " + str(w) + " to " +
                      str(rest.minus(sat)) + where);
          }
          if (sat.intersects(cls) || !cls.is_subset_of(bal)) {
            violation("paths inside class " + str(cls) + " misclassified" + where);
          }
          if (sat.intersects(up) || bal.intersects(up)) {
            violation("path from " + str(w) + " reaches its own upper set" +
                      where);
          }
          ++cases;
        }
      }
    }
  }
  return counted(cases, "cases");
}

// With a minimum G0, the Gallai-Edmonds partition of G - x is read off the
// up-sets of the classes of G0.
inline std::string ge_up_sets(Subject& s) {
  const std::size_t min = *s.minimum();
  const auto& ups = s.ups(min);
  const VertexSet all = ups.up_star_vertices();
  std::size_t cases = 0;
  for (const auto& cu : ups.per_class) {
    const VertexSet star = cu.vertices.unite(cu.cls);
    const VertexSet outside = all.minus(star);
    for (Vertex x : cu.vertices) {
      const auto& ge = s.ge_minus(x);
      if (!outside.is_subset_of(ge.d) ||
          !cu.cls.is_subset_of(ge.a.unite(VertexSet{x})) ||
          !ge.c.is_subset_of(cu.vertices)) {
        violation("x=" + str(x) + " above class " + str(cu.cls) + ": D=" +
                  str(ge.d) + " A=" + str(ge.a) + " C=" + str(ge.c));
      }
      ++cases;
    }
    for (Vertex x : cu.cls) {
      const auto& ge = s.ge_minus(x);
      if (ge.d != outside || ge.a.unite(VertexSet{x}) != cu.cls ||
          ge.c != cu.vertices) {
        violation("x=" + str(x) + " in class " + str(cu.cls) + ": D=" +
                  str(ge.d) + " A=" + str(ge.a) + " C=" + str(ge.c));
      }
      ++cases;
    }
  }
  return counted(cases, "deleted vertices");
}

inline VertexSet ge_foundation(Subject& s) {
  VertexSet out = s.g().vertices();
  for (Vertex x : s.g().vertices()) out = out.minus(s.ge_minus(x).c);
  return out;
}

// With a minimum G0, V(G0) is what survives removing every C(G - x).
inline std::string foundation_ge(Subject& s) {
  const VertexSet& base = s.comps().components[*s.minimum()];
  const VertexSet got = ge_foundation(s);
  if (got != base) {
    violation("minimum is " + str(base) + ", Gallai-Edmonds gives " + str(got));
  }
  return "foundation " + str(base);
}

inline std::size_t brute_matching_number(const Graph& g) {
  const auto& e = g.edges();
  std::vector<char> used(g.order(), 0);
  std::size_t best = 0;
  std::function<void(std::size_t, std::size_t)> go = [&](std::size_t i,
                                                          std::size_t size) {
    best = std::max(best, size);
    if (size + (e.size() - i) <= best) return;
    for (std::size_t k = i; k < e.size(); ++k) {
      auto a = *g.index_of(e[k].u);
      auto b = *g.index_of(e[k].v);
      if (used[a] || used[b]) continue;
      used[a] = used[b] = 1;
      go(k + 1, size + 1);
      used[a] = used[b] = 0;
    }
  };
  go(0, 0);
  return best;
}

// Blossom result against edge-subset brute force on G and every G - x.
inline std::string maximum_matching_check(Subject& s) {
  if (s.g().order() > 10) throw CheckSkipped("brute force limited to n <= 10");
  std::vector<Graph> graphs{s.g()};
  for (Vertex x : s.g().vertices()) {
    graphs.push_back(remove_vertices(s.g(), VertexSet{x}));
  }
  for (const Graph& h : graphs) {
    const Matching m = maximum_matching(h);
    const std::size_t want = brute_matching_number(h);
    if (!is_matching_of(h, m) || m.size() != want ||
        matching_number(h) != want) {
      violation("maximum matching of size " + std::to_string(m.size()) +
                ", brute force " + std::to_string(want) + " on " +
                std::to_string(h.order()) + " vertices");
    }
  }
  return counted(graphs.size(), "graphs");
}

// Allowed edges and components against the union of enumerated matchings.
inline std::string allowed_oracle(Subject& s) {
  const auto& pms = s.all_pms();
  for (const auto& m : pms) {
    if (!is_perfect_matching_of(s.g(), m)) {
      violation("enumerated " + str(m) + " is not a perfect matching");
    }
  }
  const auto u = edge_union(pms);
  const auto allowed = allowed_edges(s.g());
  if (std::vector<Edge>(u.begin(), u.end()) != allowed) {
    violation("allowed edges differ from the union of perfect matchings");
  }
  auto via_union = connected_components(
      spanning_subgraph(s.g(), std::vector<Edge>(u.begin(), u.end())));
  if (via_union != s.comps().components) {
    violation("components differ from those of the perfect matching union");
  }
  return counted(pms.size(), "perfect matchings");
}

inline std::vector<Matching> all_matchings_of(const Graph& g, std::size_t cap) {
  auto list = enumerate_perfect_matchings(g, cap);
  if (list.truncated) {
    fail(Errc::kBudgetExceeded, "perfect matching enumeration truncated");
  }
  return list.matchings;
}

// The closure is saturated and every intermediate graph keeps G's perfect
// matchings.
inline std::string closure_preserves_matchings(Subject& s) {
  const auto& want = s.all_pms();
  const auto closure = saturate(s.g());
  if (!is_saturated(closure.graph)) violation("closure is not saturated");
  Graph step = s.g();
  for (const Edge& e : closure.added) {
    if (step.has_edge(e.u, e.v)) violation("closure added an existing edge");
    step = add_edges(step, {e});
    if (all_matchings_of(step, s.cfg().enumeration_cap) != want) {
      violation("adding " + str(e) + " changed the perfect matchings");
    }
  }
  if (!(step == closure.graph)) violation("replayed closure differs");
  return counted(closure.added.size(), "edges added");
}

// Closures under both scan orders; whether they coincide is recorded only.
inline std::string closure_orders(Subject& s) {
  const auto& want = s.all_pms();
  const auto up = saturate(s.g(), ScanOrder::kAscending);
  const auto down = saturate(s.g(), ScanOrder::kDescending);
  for (const auto* c : {&up, &down}) {
    if (!is_saturated(c->graph)) violation("a closure is not saturated");
    if (all_matchings_of(c->graph, s.cfg().enumeration_cap) != want) {
      violation("a closure changed the perfect matchings");
    }
  }
  if (up.graph == down.graph) return "closures coincide";
  return "closures differ (" + counted(up.added.size(), "vs ") +
         std::to_string(down.added.size()) + " edges)";
}

// Whether balanced reachability depends on the perfect matching. Recorded
// only.
inline std::string balanced_across_matchings(Subject& s) {
  if (s.sample().size() < 2) return "single perfect matching";
  const auto& first = s.table(0);
  for (std::size_t mi = 1; mi < s.sample().size(); ++mi) {
    const auto& t = s.table(mi);
    for (Vertex u : s.g().vertices()) {
      if (t.balanced.at(u) != first.balanced.at(u)) {
        return "differs from " + str(u) + " under " + str(s.sample()[mi]);
      }
    }
  }
  return "agrees across " + counted(s.sample().size(), "matchings");
}

// Saturated-only statements.

inline std::string saturated_minimum(Subject& s) {
  if (!s.minimum()) violation("component order has no minimum");
  return "minimum " + str(s.comps().components[*s.minimum()]);
}

inline std::string saturated_class_restriction(Subject& s) {
  for (const VertexSet& h : s.comps().components) {
    if (s.part().classes_within(h) !=
        canonical_partition(induced_subgraph(s.g(), h)).classes) {
      violation("partition restricted to " + str(h) +
                " differs from the partition of G[" + str(h) + "]");
    }
  }
  return counted(s.comps().size(), "components");
}

inline const VertexSet& minimum_vertices(Subject& s) {
  auto min = s.minimum();
  if (!min) violation("component order has no minimum");
  return s.comps().components[*min];
}

inline std::string saturated_parts(Subject& s) {
  const VertexSet& base = minimum_vertices(s);
  if (!is_saturated(induced_subgraph(s.g(), base))) {
    violation("minimum component is not saturated");
  }
  std::map<VertexSet, int> per_class;
  const auto classes = s.part().classes_within(base);
  const auto parts = connected_components(remove_vertices(s.g(), base));
  for (const VertexSet& k : parts) {
    const Graph t = induced_subgraph(s.g(), k);
    if (!is_factorizable(t) || !is_saturated(t)) {
      violation("tower " + str(k) + " is not saturated");
    }
    const VertexSet touch = neighbors(s.g(), k);
    for (const auto& c : classes) {
      if (touch.is_subset_of(c)) ++per_class[c];
    }
  }
  for (const auto& [c, n] : per_class) {
    if (n > 1) violation("class " + str(c) + " carries " + std::to_string(n) + " towers");
  }
  return counted(parts.size(), "towers");
}

inline std::string saturated_join(Subject& s) {
  const VertexSet& base = minimum_vertices(s);
  const auto classes = s.part().classes_within(base);
  std::size_t cases = 0;
  for (const VertexSet& k : connected_components(remove_vertices(s.g(), base))) {
    const VertexSet touch = neighbors(s.g(), k);
    bool placed = false;
    for (const auto& c : classes) {
      if (touch.empty() || !touch.is_subset_of(c)) continue;
      placed = true;
      for (Vertex u : k) {
        for (Vertex v : c) {
          if (!s.g().has_edge(u, v)) {
            violation("tower vertex " + str(u) + " not joined to " + str(v));
          }
          ++cases;
        }
      }
    }
    if (!placed) violation("tower " + str(k) + " attaches to no single class");
  }
  return counted(cases, "join edges");
}

inline std::string saturated_contraction_critical(Subject& s) {
  const VertexSet& base = minimum_vertices(s);
  if (!is_factor_critical(contract(s.g(), base).graph)) {
    violation("G/" + str(base) + " is not factor-critical");
  }
  return "contracted " + str(base);
}

inline std::string saturated_classes_complete(Subject& s) {
  std::size_t cases = 0;
  for (const auto& c : s.part().classes) {
    for (Vertex u : c) {
      for (Vertex v : c) {
        if (u < v && !s.g().has_edge(u, v)) {
          violation("class " + str(c) + " misses edge " + str(u) + "-" + str(v));
        }
        ++cases;
      }
    }
  }
  return counted(cases, "class pairs");
}

inline std::string saturated_connected(Subject& s) {
  const auto parts = connected_components(s.g());
  if (parts.size() > 1) violation(counted(parts.size(), "connected components"));
  return "connected";
}

inline CathedralTree tree_of(Subject& s) {
  return decompose(s.g(), s.cfg().component_limit);
}

inline void collect_parts(const CathedralTree& t, std::vector<Graph>& out) {
  out.push_back(t.foundation);
  for (const auto& slot : t.classes) {
    if (slot.tower) collect_parts(*slot.tower, out);
  }
}

// Allowed edges and perfect matchings of G split along the decomposition.
inline std::string decomposition_allowed_edges(Subject& s) {
  std::vector<Graph> parts;
  collect_parts(tree_of(s), parts);
  std::set<Edge> from_parts;
  std::size_t product = 1;
  for (const Graph& p : parts) {
    for (const Edge& e : allowed_edges(p)) from_parts.insert(e);
    if (!p.empty()) product *= all_matchings_of(p, s.cfg().enumeration_cap).size();
  }
  const auto allowed = allowed_edges(s.g());
  if (std::vector<Edge>(from_parts.begin(), from_parts.end()) != allowed) {
    violation("allowed edges differ from those of foundation and towers");
  }
  const auto& pms = s.all_pms();
  if (pms.size() != product) {
    violation(counted(pms.size(), "perfect matchings, parts give ") +
              std::to_string(product));
  }
  return counted(parts.size(), "parts");
}

inline std::string decomposition_unique(Subject& s) {
  const auto a = tree_of(s);
  const auto b = tree_of(s);
  if (!(a == b)) violation("decomposition is not deterministic");
  const VertexSet ge = foundation_via_ge(s.g(), s.cfg().component_limit);
  if (ge != a.foundation.vertices()) {
    violation("foundation " + str(a.foundation.vertices()) +
              ", Gallai-Edmonds foundation " + str(ge));
  }
  return "foundation " + str(ge);
}

inline std::string decomposition_foundation_ge(Subject& s) {
  const auto t = tree_of(s);
  const VertexSet got = ge_foundation(s);
  if (got != t.foundation.vertices()) {
    violation("foundation " + str(t.foundation.vertices()) +
              " is not V minus every C(G-x) = " + str(got));
  }
  return "foundation " + str(got);
}

inline std::string round_trip(Subject& s) {
  const Graph back = construct(tree_of(s), s.cfg().component_limit);
  if (!(back == s.g())) violation("construct(decompose(G)) differs from G");
  return counted(s.g().size(), "edges reproduced");
}

// Constructions from the foundation keeping every subset of the top-level
// towers (all or none when there are many).
inline std::vector<std::pair<Graph, Graph>> variants(Subject& s) {
  const auto t = tree_of(s);
  std::vector<std::size_t> towers;
  for (std::size_t i = 0; i < t.classes.size(); ++i) {
    if (t.classes[i].tower) towers.push_back(i);
  }
  std::vector<std::uint64_t> masks;
  if (towers.size() <= 6) {
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << towers.size()); ++m) {
      masks.push_back(m);
    }
  } else {
    masks = {0, (std::uint64_t{1} << towers.size()) - 1};
  }
  std::vector<std::pair<Graph, Graph>> out;
  if (t.foundation.empty()) return out;
  for (std::uint64_t mask : masks) {
    ConstructionSpec spec;
    spec.foundation = t.foundation;
    for (const auto& slot : t.classes) spec.towers.emplace(slot.cls, Graph());
    for (std::size_t b = 0; b < towers.size(); ++b) {
      if (mask >> b & 1U) {
        const auto& slot = t.classes[towers[b]];
        spec.towers[slot.cls] = construct(*slot.tower, s.cfg().component_limit);
      }
    }
    out.emplace_back(t.foundation, construct(spec, s.cfg().component_limit));
  }
  return out;
}

inline std::string construction_minimum(Subject& s) {
  const auto vs = variants(s);
  for (const auto& [f, g] : vs) {
    const auto poset = component_poset(g, s.cfg().component_limit);
    const auto min = minimum_component(poset);
    if (!min || poset.components.components[*min] != f.vertices()) {
      violation("foundation " + str(f.vertices()) +
                " is not the minimum component of a construction");
    }
  }
  return counted(vs.size(), "constructions");
}

inline std::string construction_saturated(Subject& s) {
  const auto vs = variants(s);
  for (const auto& [f, g] : vs) {
    if (!is_saturated(g)) violation("a construction is not saturated");
  }
  return counted(vs.size(), "constructions");
}

}  // namespace checks

// Registry in report order.
inline const std::vector<CheckDef>& all_checks() {
  using R = Requirement;
  static const std::vector<CheckDef> defs = {
      {"maximum-matching", R::kNone, false, checks::maximum_matching_check},
      {"allowed-oracle", R::kNone, false, checks::allowed_oracle},
      {"near-perfect-balanced", R::kNone, false, checks::near_perfect_balanced},
      {"allowed-circuit", R::kNone, false, checks::allowed_circuit},
      {"allowed-saturated-path", R::kNone, false, checks::allowed_saturated_path},
      {"saturated-path-split", R::kNone, false, checks::saturated_path_split},
      {"new-matching-pair", R::kNone, false, checks::new_matching_pair},
      {"ge-exposed-paths", R::kNone, false, checks::ge_exposed_paths},
      {"ge-vertex-deleted-paths", R::kNone, false, checks::ge_vertex_deleted_paths},
      {"order-axioms", R::kNone, false, checks::order_axioms},
      {"class-equivalence", R::kNone, false, checks::class_equivalence},
      {"class-refinement", R::kNone, false, checks::class_refinement},
      {"class-saturated-paths", R::kNone, false, checks::class_saturated_paths},
      {"upper-set-attachment", R::kNone, false, checks::upper_set_attachment},
      {"ear-ends-equivalent", R::kNone, false, checks::ear_ends_equivalent},
      {"order-by-added-edges", R::kNone, false, checks::order_by_added_edges},
      {"elementary-reachability", R::kNone, false, checks::elementary_reachability},
      {"upper-set-reach", R::kNone, false, checks::upper_set_reach},
      {"upper-set-combination", R::kNone, false, checks::upper_set_combination},
      {"ge-up-sets", R::kMinimum, false, checks::ge_up_sets},
      {"foundation-ge", R::kMinimum, false, checks::foundation_ge},
      {"closure-preserves-matchings", R::kNone, false,
       checks::closure_preserves_matchings},
      {"closure-orders", R::kNone, true, checks::closure_orders},
      {"balanced-across-matchings", R::kNone, true,
       checks::balanced_across_matchings},
      {"saturated-minimum", R::kSaturated, false, checks::saturated_minimum},
      {"saturated-class-restriction", R::kSaturated, false,
       checks::saturated_class_restriction},
      {"saturated-parts", R::kSaturated, false, checks::saturated_parts},
      {"saturated-join", R::kSaturated, false, checks::saturated_join},
      {"saturated-contraction-critical", R::kSaturated, false,
       checks::saturated_contraction_critical},
      {"saturated-classes-complete", R::kSaturated, false,
       checks::saturated_classes_complete},
      {"saturated-connected", R::kSaturated, false, checks::saturated_connected},
      {"decomposition-allowed-edges", R::kSaturated, false,
       checks::decomposition_allowed_edges},
      {"decomposition-unique", R::kSaturated, false, checks::decomposition_unique},
      {"decomposition-foundation-ge", R::kSaturated, false,
       checks::decomposition_foundation_ge},
      {"round-trip", R::kSaturated, false, checks::round_trip},
      {"construction-minimum", R::kSaturated, false, checks::construction_minimum},
      {"construction-saturated", R::kSaturated, false,
       checks::construction_saturated},
  };
  return defs;
}

}  // namespace cathedral::verifier

#endif  // CATHEDRAL_VERIFIER_CHECKS_HPP_
