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

// Text, JSON and DOT renderings used by the command-line tool. The library
// itself produces no formatted output besides the edge-list format.

#ifndef CATHEDRAL_TOOLS_RENDER_HPP_
#define CATHEDRAL_TOOLS_RENDER_HPP_

#include <cstddef>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "cathedral/canonical.hpp"
#include "cathedral/cathedral.hpp"
#include "cathedral/gallai_edmonds.hpp"
#include "cathedral/graph.hpp"
#include "cathedral/verifier/suite.hpp"
#include "json.hpp"

namespace cathedral::render {

using Json = nlohmann::ordered_json;

inline Json to_json(const VertexSet& s) { return Json(s.ids()); }

inline Json to_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

inline Json to_json(const Graph& g) {
  return Json{{"vertices", to_json(g.vertices())}, {"edges", to_json(g.edges())}};
}

inline Json to_json(const CathedralTree& t) {
  Json classes = Json::array();
  for (const auto& slot : t.classes) {
    classes.push_back({{"class", to_json(slot.cls)},
                       {"tower", slot.tower ? to_json(*slot.tower) : Json()}});
  }
  return Json{{"foundation", to_json(t.foundation)}, {"classes", classes}};
}

namespace detail {

[[noreturn]] inline void bad_document(const std::string& what) {
  fail(Errc::kMalformedDocument, "invalid tree document: " + what);
}

inline std::vector<Vertex> ints(const Json& j, const char* field) {
  if (!j.is_array()) bad_document(std::string(field) + " must be an array");
  std::vector<Vertex> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) {
      bad_document(std::string(field) + " must hold integers");
    }
    out.push_back(v.get<Vertex>());
  }
  return out;
}

inline const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    bad_document(std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

}  // namespace detail

inline Graph graph_from_json(const Json& j) {
  std::vector<Vertex> vs = detail::ints(detail::field(j, "vertices"), "vertices");
  const Json& es = detail::field(j, "edges");
  if (!es.is_array()) detail::bad_document("edges must be an array");
  std::vector<Edge> edges;
  for (const auto& e : es) {
    auto pair = detail::ints(e, "edge");
    if (pair.size() != 2) detail::bad_document("an edge needs two end vertices");
    edges.emplace_back(pair[0], pair[1]);
  }
  VertexSet set(vs);
  if (set.size() != vs.size()) detail::bad_document("repeated vertex id");
  return Graph(set, std::move(edges));
}

inline CathedralTree tree_from_json(const Json& j) {
  CathedralTree t;
  t.foundation = graph_from_json(detail::field(j, "foundation"));
  const Json& classes = detail::field(j, "classes");
  if (!classes.is_array()) detail::bad_document("classes must be an array");
  for (const auto& c : classes) {
    CathedralTree::Slot slot;
    slot.cls = VertexSet(detail::ints(detail::field(c, "class"), "class"));
    const Json& tower = detail::field(c, "tower");
    if (!tower.is_null()) {
      slot.tower = std::make_shared<const CathedralTree>(tree_from_json(tower));
    }
    t.classes.push_back(std::move(slot));
  }
  return t;
}

inline CathedralTree parse_tree(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    detail::bad_document(e.what());
  }
  return tree_from_json(j);
}

// Structure of a factorizable graph, as reported by `analyze`.
struct Analysis {
  Graph graph;
  bool factorizable = false;
  std::optional<GEPartition> ge;  // of G itself when not factorizable
  std::vector<Edge> allowed;
  FactorComponents components;
  CanonicalPartition partition;
  std::optional<ComponentPoset> poset;  // absent above the component limit
  std::optional<std::size_t> minimum;
  std::optional<bool> saturated;
  std::vector<std::pair<Vertex, GEPartition>> ge_minus;  // with --ge
};

inline Analysis analyze(const Graph& g, std::size_t limit, bool with_ge) {
  Analysis a;
  a.graph = g;
  a.factorizable = is_factorizable(g);
  if (!a.factorizable) {
    a.ge = gallai_edmonds(g);
    return a;
  }
  a.allowed = allowed_edges(g);
  a.components = factor_components(g);
  a.partition = canonical_partition(g, a.components);
  if (a.components.size() <= limit) {
    a.poset = component_poset(g, limit);
    a.minimum = minimum_component(*a.poset);
  }
  a.saturated = is_saturated(g);
  if (with_ge) {
    for (Vertex x : g.vertices()) {
      a.ge_minus.emplace_back(x, gallai_edmonds(remove_vertices(g, VertexSet{x})));
    }
  }
  return a;
}

inline Json ge_json(const GEPartition& p) {
  return Json{{"d", to_json(p.d)}, {"a", to_json(p.a)}, {"c", to_json(p.c)}};
}

inline Json to_json(const Analysis& a) {
  Json j{{"vertices", a.graph.order()},
         {"edges", a.graph.size()},
         {"factorizable", a.factorizable}};
  if (!a.factorizable) {
    j["gallai_edmonds"] = ge_json(*a.ge);
    return j;
  }
  j["allowed_edges"] = to_json(a.allowed);
  Json comps = Json::array();
  for (const auto& c : a.components.components) comps.push_back(to_json(c));
  j["components"] = comps;
  Json classes = Json::array();
  for (const auto& c : a.partition.classes) classes.push_back(to_json(c));
  j["classes"] = classes;
  if (a.poset) {
    Json order = Json::array();
    for (const auto& [lo, hi] : a.poset->hasse) order.push_back({lo, hi});
    j["order"] = order;
    j["minimum"] = a.minimum ? Json(*a.minimum) : Json();
  } else {
    j["order"] = Json();
    j["minimum"] = Json();
  }
  j["saturated"] = *a.saturated;
  if (!a.ge_minus.empty()) {
    Json ge = Json::array();
    for (const auto& [x, p] : a.ge_minus) {
      Json e{{"x", x}};
      e.update(ge_json(p));
      ge.push_back(e);
    }
    j["gallai_edmonds_minus"] = ge;
  }
  return j;
}

inline std::string edge_string(const std::vector<Edge>& edges) {
  std::string out;
  for (const Edge& e : edges) {
    if (!out.empty()) out += ' ';
    out += std::to_string(e.u) + "-" + std::to_string(e.v);
  }
  return out.empty() ? "none" : out;
}

inline std::string ge_string(const GEPartition& p) {
  return "D=" + to_string(p.d) + " A=" + to_string(p.a) + " C=" + to_string(p.c);
}

inline std::string to_text(const Analysis& a) {
  std::ostringstream os;
  os << "vertices: " << a.graph.order() << "\n";
  os << "edges: " << a.graph.size() << "\n";
  os << "factorizable: " << (a.factorizable ? "yes" : "no") << "\n";
  if (!a.factorizable) {
    os << "gallai-edmonds: " << ge_string(*a.ge) << "\n";
    return os.str();
  }
  os << "allowed edges: " << edge_string(a.allowed) << "\n";
  os << "components:\n";
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    os << "  c" << i << " " << to_string(a.components.components[i]) << "\n";
  }
  os << "classes:";
  for (const auto& c : a.partition.classes) os << " " << to_string(c);
  os << "\n";
  if (a.poset) {
    os << "order (lower < higher):";
    if (a.poset->hasse.empty()) os << " none";
    for (const auto& [lo, hi] : a.poset->hasse) os << " c" << lo << "<c" << hi;
    os << "\n";
    os << "minimum: " << (a.minimum ? "c" + std::to_string(*a.minimum) : "none")
       << "\n";
  } else {
    os << "order: not computed (" << a.components.size()
       << " components exceed the limit)\n";
  }
  os << "saturated: " << (*a.saturated ? "yes" : "no") << "\n";
  if (!a.ge_minus.empty()) {
    os << "gallai-edmonds of G-x:\n";
    for (const auto& [x, p] : a.ge_minus) {
      os << "  x=" << x << " " << ge_string(p) << "\n";
    }
  }
  return os.str();
}

// Hasse diagram with edges from lower to higher components.
inline std::string to_dot(const ComponentPoset& p) {
  std::ostringstream os;
  os << "digraph components {\n";
  for (std::size_t i = 0; i < p.size(); ++i) {
    os << "  c" << i << " [label=\"";
    const auto& ids = p.components.components[i].ids();
    for (std::size_t k = 0; k < ids.size(); ++k) os << (k ? " " : "") << ids[k];
    os << "\"];\n";
  }
  for (const auto& [lo, hi] : p.hasse) os << "  c" << lo << " -> c" << hi << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string saturation_text(const SaturationResult& r) {
  std::string out;
  for (const Edge& e : r.added) {
    out += "# added " + std::to_string(e.u) + " " + std::to_string(e.v) + "\n";
  }
  return out + render_edge_list(r.graph);
}

namespace vf = cathedral::verifier;

inline Json millis_json(double ms, bool timing) {
  return timing ? Json(ms) : Json();
}

inline Json to_json(const vf::SuiteReport& r, bool timing) {
  Json checks = Json::array();
  for (const auto& c : r.checks) {
    checks.push_back(
        {{"id", c.id},
         {"target", c.target},
         {"status", std::string(vf::to_string(c.status))},
         {"detail", c.detail},
         {"counterexample", c.counterexample.empty() ? Json() : Json(c.counterexample)},
         {"millis", millis_json(c.millis, timing)}});
  }
  Json j{{"seed", r.seed}};
  j["trial"] = r.trial ? Json(*r.trial) : Json();
  j["graph"] = r.graph;
  j["passed"] = r.passed();
  j["checks"] = checks;
  return j;
}

inline std::string tally_status(const vf::CheckTally& t) {
  if (t.failed) return "fail";
  if (t.budget_exceeded) return "budget_exceeded";
  if (t.passed) return "pass";
  return "skipped";
}

inline Json to_json(const vf::BatchReport& b, bool timing) {
  const auto& cfg = b.config;
  Json checks = Json::array();
  for (const auto& t : b.tallies) {
    Json c{{"id", t.id},
           {"target", t.target},
           {"status", tally_status(t)},
           {"passed", t.passed},
           {"failed", t.failed},
           {"skipped", t.skipped},
           {"budget_exceeded", t.budget_exceeded}};
    c["trial"] = t.first_failure_trial ? Json(*t.first_failure_trial) : Json();
    c["detail"] = t.first_failure_detail.empty() ? Json() : Json(t.first_failure_detail);
    c["counterexample"] = t.first_failure_counterexample.empty()
                              ? Json()
                              : Json(t.first_failure_counterexample);
    c["millis"] = millis_json(t.millis, timing);
    checks.push_back(c);
  }
  return Json{{"seed", cfg.seed},
              {"trials", cfg.trials},
              {"max_vertices", cfg.max_vertices},
              {"edge_probability", cfg.edge_probability},
              {"enumeration_cap", cfg.enumeration_cap},
              {"passed", b.passed()},
              {"checks", checks}};
}

inline std::string indent_block(const std::string& text) {
  std::string out;
  std::istringstream is(text);
  for (std::string line; std::getline(is, line);) out += "      " + line + "\n";
  return out;
}

inline std::string to_text(const vf::SuiteReport& r, bool timing) {
  std::ostringstream os;
  os << "seed " << r.seed;
  if (r.trial) os << " trial " << *r.trial;
  os << ": " << (r.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& c : r.checks) {
    os << "  [" << vf::to_string(c.status) << "] " << c.target << " " << c.id
       << ": " << c.detail;
    if (timing) os << " (" << c.millis << " ms)";
    os << "\n";
    if (!c.counterexample.empty()) os << indent_block(c.counterexample);
  }
  return os.str();
}

inline std::string to_text(const vf::BatchReport& b, bool timing) {
  std::ostringstream os;
  const auto& cfg = b.config;
  os << "seed " << cfg.seed << ", " << cfg.trials << " trials, n <= "
     << cfg.max_vertices << ", p = " << cfg.edge_probability << ": "
     << (b.passed() ? "PASS" : "FAIL") << "\n";
  for (const auto& t : b.tallies) {
    os << "  [" << tally_status(t) << "] " << t.target << " " << t.id << ": "
       << t.passed << " passed, " << t.failed << " failed, " << t.skipped
       << " skipped, " << t.budget_exceeded << " over budget";
    if (timing) os << " (" << t.millis << " ms)";
    os << "\n";
    if (t.first_failure_trial) {
      os << "    first failure in trial " << *t.first_failure_trial << ": "
         << t.first_failure_detail << "\n"
         << indent_block(t.first_failure_counterexample);
    }
  }
  return os.str();
}

}  // namespace cathedral::render

#endif  // CATHEDRAL_TOOLS_RENDER_HPP_
