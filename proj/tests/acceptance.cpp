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

// Acceptance gate. Prints one [PASS]/[FAIL] line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "cathedral/canonical.hpp"
#include "cathedral/cathedral.hpp"
#include "cathedral/gallai_edmonds.hpp"
#include "cathedral/matching.hpp"
#include "cathedral/verifier/suite.hpp"
#include "cli.hpp"
#include "fixtures.hpp"
#include "json.hpp"

namespace {

using namespace cathedral;  // NOLINT
using Json = nlohmann::json;

// Pinned parameters.
constexpr std::uint64_t kCorpusSeed = 2026;
constexpr std::size_t kOracleGraphs = 300;
constexpr int kOracleMaxN = 10;
constexpr double kOracleSeconds = 60.0;
constexpr std::size_t kConformanceGraphs = 200;
constexpr std::size_t kConformanceMaxN = 8;  // largest even order <= 9
constexpr double kConformanceSeconds = 300.0;
constexpr std::size_t kClosureGraphs = 200;
constexpr int kClosureMaxN = 10;
constexpr std::size_t kEnumerationCap = 1'000'000;

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail_with(std::string what) { return {false, std::move(what)}; }

const std::vector<Graph>& oracle_corpus() {
  static const auto corpus =
      fixtures::random_corpus(kOracleGraphs, kOracleMaxN, kCorpusSeed);
  return corpus;
}

const std::vector<Graph>& closure_corpus() {
  static const auto corpus =
      fixtures::random_corpus(kClosureGraphs, kClosureMaxN, kCorpusSeed + 1);
  return corpus;
}

std::vector<Matching> all_perfect_matchings(const Graph& g) {
  auto list = enumerate_perfect_matchings(g, kEnumerationCap);
  if (list.truncated) fail(Errc::kBudgetExceeded, "enumeration cap reached");
  return list.matchings;
}

std::string where(const Graph& g) { return "\n" + render_edge_list(g); }

Outcome allowed_edges_match_enumeration() {
  std::size_t edges = 0;
  for (const Graph& g : oracle_corpus()) {
    std::set<Edge> from_pms;
    for (const Matching& m : all_perfect_matchings(g)) {
      from_pms.insert(m.edges.begin(), m.edges.end());
    }
    const auto allowed = allowed_edges(g);
    if (std::set<Edge>(allowed.begin(), allowed.end()) != from_pms) {
      return fail_with("allowed edges differ on" + where(g));
    }
    edges += allowed.size();
  }
  return {true, std::to_string(oracle_corpus().size()) + " graphs, " +
                    std::to_string(edges) + " allowed edges"};
}

Outcome order_and_equivalence_axioms() {
  std::size_t triples = 0;
  for (const Graph& g : oracle_corpus()) {
    const auto poset = component_poset(g);
    const std::size_t k = poset.size();
    for (std::size_t a = 0; a < k; ++a) {
      if (!poset.le(a, a)) return fail_with("not reflexive on" + where(g));
      for (std::size_t b = 0; b < k; ++b) {
        if (a != b && poset.le(a, b) && poset.le(b, a)) {
          return fail_with("not antisymmetric on" + where(g));
        }
        for (std::size_t c = 0; c < k; ++c) {
          if (poset.le(a, b) && poset.le(b, c) && !poset.le(a, c)) {
            return fail_with("not transitive on" + where(g));
          }
        }
      }
    }
    // u ~ v: same component and G - u - v has no perfect matching.
    const auto comps = factor_components(g);
    const auto ids = g.vertices().ids();
    auto related = [&](Vertex u, Vertex v) {
      return u == v || (comps.component_of(u) == comps.component_of(v) &&
                        !is_factorizable_without(g, VertexSet{u, v}));
    };
    std::vector<std::vector<char>> rel(ids.size(), std::vector<char>(ids.size()));
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = 0; j < ids.size(); ++j) rel[i][j] = related(ids[i], ids[j]);
    }
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = 0; j < ids.size(); ++j) {
        if (!rel[i][j]) continue;
        for (std::size_t l = 0; l < ids.size(); ++l) {
          ++triples;
          if (rel[j][l] && !rel[i][l]) {
            return fail_with("equivalence not transitive on" + where(g));
          }
        }
      }
    }
    const auto part = canonical_partition(g, comps);
    for (std::size_t i = 0; i < ids.size(); ++i) {
      for (std::size_t j = 0; j < ids.size(); ++j) {
        if (part.equivalent(ids[i], ids[j]) != bool(rel[i][j])) {
          return fail_with("partition differs from the relation on" + where(g));
        }
      }
    }
  }
  return {true, std::to_string(oracle_corpus().size()) + " graphs, " +
                    std::to_string(triples) + " triples"};
}

Outcome structural_conformance() {
  static const double kDensities[] = {0.2, 0.35, 0.5, 0.7};
  std::size_t graphs = 0;
  std::size_t passes = 0;
  std::size_t closure_runs = 0;
  for (std::size_t d = 0; d < 4; ++d) {
    verifier::TrialConfig cfg;
    cfg.seed = kCorpusSeed + 10 + d;
    cfg.trials = kConformanceGraphs / 4;
    cfg.max_vertices = kConformanceMaxN;
    cfg.edge_probability = kDensities[d];
    cfg.enumeration_cap = kEnumerationCap;
    // Every perfect matching drives the path checks at this size.
    cfg.exhaustive_order = kConformanceMaxN;
    const auto batch = verifier::run_trials(cfg);
    graphs += batch.trials.size();
    for (const auto& t : batch.tallies) {
      if (t.failed) {
        return fail_with(t.id + " on " + t.target + ": " + t.first_failure_detail +
                         "\n" + t.first_failure_counterexample);
      }
      if (t.budget_exceeded) {
        return fail_with(t.id + " exceeded its budget");
      }
      passes += t.passed;
      if (t.target == verifier::kClosureTarget) closure_runs += t.passed;
    }
  }
  return {true, std::to_string(graphs) + " graphs, " + std::to_string(passes) +
                    " passing check runs (" + std::to_string(closure_runs) +
                    " on closures)"};
}

Outcome added_edge_witnesses() {
  std::size_t pairs = 0;
  for (const Graph& g : oracle_corpus()) {
    const auto poset = component_poset(g);
    const auto& comps = poset.components;
    for (std::size_t g1 : minimal_components(poset)) {
      for (std::size_t g2 = 0; g2 < poset.size(); ++g2) {
        if (g2 == g1 || poset.le(g1, g2) || poset.le(g2, g1)) continue;
        ++pairs;
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
            found = hc.components == comps.components &&
                    component_leq(h, hc, g1, g2);
          }
        }
        if (!found) return fail_with("no witness pair on" + where(g));
      }
    }
  }
  if (pairs == 0) return fail_with("corpus has no incomparable pair");
  return {true, std::to_string(pairs) + " minimal/incomparable pairs, 0 misses"};
}

Outcome closures_are_saturated() {
  std::size_t added = 0;
  for (const Graph& g : closure_corpus()) {
    const auto r = saturate(g);
    if (!is_saturated(r.graph)) return fail_with("closure not saturated on" + where(g));
    if (all_perfect_matchings(r.graph) != all_perfect_matchings(g)) {
      return fail_with("closure changed the perfect matchings of" + where(g));
    }
    added += r.added.size();
  }
  return {true, std::to_string(closure_corpus().size()) + " closures, " +
                    std::to_string(added) + " edges added"};
}

void collect_parts(const CathedralTree& t, std::vector<Graph>& out) {
  out.push_back(t.foundation);
  for (const auto& s : t.classes) {
    if (s.tower) out.push_back(construct(*s.tower));
  }
}

Outcome decomposition_round_trip() {
  for (const Graph& g0 : closure_corpus()) {
    const Graph g = saturate(g0).graph;
    const auto tree = decompose(g);
    const Graph back = construct(tree);
    if (back.vertices() != g.vertices() || back.edges() != g.edges()) {
      return fail_with("round trip differs on" + where(g));
    }
    std::vector<Graph> parts;
    collect_parts(tree, parts);
    std::set<Edge> from_parts;
    for (const Graph& p : parts) {
      for (const Edge& e : allowed_edges(p)) from_parts.insert(e);
    }
    const auto allowed = allowed_edges(g);
    if (std::set<Edge>(allowed.begin(), allowed.end()) != from_parts) {
      return fail_with("allowed edges differ from the parts on" + where(g));
    }
    if (foundation_via_ge(g) != tree.foundation.vertices()) {
      return fail_with("foundation differs from the deletion route on" + where(g));
    }
    if (canonical_partition(g).classes_within(tree.foundation.vertices()) !=
        canonical_partition(tree.foundation).classes) {
      return fail_with("foundation classes differ on" + where(g));
    }
  }
  return {true, std::to_string(closure_corpus().size()) + " closures"};
}

std::string read(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json edges_json(const std::vector<Edge>& edges) {
  Json out = Json::array();
  for (const Edge& e : edges) out.push_back({e.u, e.v});
  return out;
}

Json matchings_json(const std::vector<Matching>& ms) {
  Json out = Json::array();
  for (const Matching& m : ms) out.push_back(edges_json(m.edges));
  return out;
}

Outcome fixture_regressions() {
  const std::string golden = CATHEDRAL_GOLDEN_DIR;
  const Json want = Json::parse(read(golden + "/fixtures.json"));
  std::size_t compared = 0;
  for (const auto& [name, fx] : want.items()) {
    const Graph g = parse_edge_list(read(std::string(CATHEDRAL_SAMPLES_DIR) + "/" +
                                         name + ".edges"));
    auto expect = [&](const char* field, const Json& got) -> bool {
      ++compared;
      return got == fx.at(field);
    };
    const auto poset = component_poset(g);
    Json order = Json::array();
    for (std::size_t i = 0; i < poset.size(); ++i) {
      for (std::size_t j = 0; j < poset.size(); ++j) {
        if (i != j && poset.le(i, j)) order.push_back({i, j});
      }
    }
    Json comps = Json::array();
    for (const auto& c : poset.components.components) comps.push_back(c.ids());
    Json classes = Json::array();
    for (const auto& c : canonical_partition(g).classes) classes.push_back(c.ids());
    const auto min = minimum_component(poset);
    Json minimum = min ? Json(poset.components.components[*min].ids()) : Json();
    Json ge = Json::object();
    for (Vertex x : g.vertices()) {
      const auto p = gallai_edmonds(remove_vertices(g, VertexSet{x}));
      ge[std::to_string(x)] = {{"a", p.a.ids()}, {"c", p.c.ids()}, {"d", p.d.ids()}};
    }
    Json closures = Json::object();
    for (auto [key, order_kind] : {std::pair{"ascending", ScanOrder::kAscending},
                                   std::pair{"descending", ScanOrder::kDescending}}) {
      const auto r = saturate(g, order_kind);
      Json added = Json::array();
      for (const Edge& e : r.added) added.push_back({e.u, e.v});
      closures[key] = {{"added", added},
                       {"edges", edges_json(r.graph.edges())},
                       {"same_matchings", all_perfect_matchings(r.graph) ==
                                              all_perfect_matchings(g)},
                       {"saturated", is_saturated(r.graph)}};
    }
    const bool ok = expect("edges", edges_json(g.edges())) &&
                    expect("perfect_matchings",
                           matchings_json(all_perfect_matchings(g))) &&
                    expect("components", comps) && expect("classes", classes) &&
                    expect("order", order) && expect("saturated", is_saturated(g)) &&
                    expect("minimum", minimum) && expect("ge_minus", ge) &&
                    expect("closures", closures);
    if (!ok) return fail_with(name + " differs from fixtures.json");
    if (fx.contains("decomposition")) {
      const auto tree = decompose(g);
      Json towers = Json::object();
      for (const auto& s : tree.classes) {
        if (!s.tower) continue;
        const Graph t = construct(*s.tower);
        towers[Json(s.cls.ids()).dump()] = {{"edges", edges_json(t.edges())},
                                            {"vertices", t.vertices().ids()}};
      }
      const Json got = {{"foundation", tree.foundation.vertices().ids()},
                        {"towers", towers}};
      if (!expect("decomposition", got)) {
        return fail_with(name + " decomposition differs from fixtures.json");
      }
    }
  }

  // Pinned command-line outputs.
  const std::string samples = CATHEDRAL_SAMPLES_DIR;
  const std::vector<std::pair<std::vector<std::string>, std::string>> cli_cases = {
      {{"analyze", samples + "/p4.edges", "--format", "json"}, "p4.analysis.json"},
      {{"analyze", samples + "/c4.edges", "--format", "json"}, "c4.analysis.json"},
      {{"analyze", samples + "/t.edges", "--format", "json", "--ge"},
       "t.analysis.json"},
      {{"saturate", samples + "/c4.edges"}, "c4.saturate.edges"},
      {{"decompose", samples + "/t.edges"}, "t.tree.json"},
  };
  for (const auto& [args, file] : cli_cases) {
    std::ostringstream out;
    std::ostringstream err;
    if (cathedral::cli::run_cli(args, out, err) != 0 ||
        out.str() != read(golden + "/" + file)) {
      return fail_with("output differs from " + file);
    }
    ++compared;
  }
  return {true, std::to_string(compared) + " pinned values"};
}

Outcome verify_is_deterministic() {
  const std::vector<std::string> args = {"verify", "--seed", "1", "--trials", "100",
                                         "--format", "json"};
  std::string first;
  for (int run = 0; run < 2; ++run) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cathedral::cli::run_cli(args, out, err);
    if (code != 0) return fail_with("verify exited " + std::to_string(code));
    if (run == 0) {
      first = out.str();
    } else if (out.str() != first) {
      return fail_with("two runs produced different JSON");
    }
  }
  return {true, "identical JSON, " + std::to_string(first.size()) + " bytes"};
}

struct Criterion {
  const char* id;
  const char* name;
  double seconds_limit;  // 0: none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {"AC1", "allowed edges equal the union of perfect matchings", kOracleSeconds,
       allowed_edges_match_enumeration},
      {"AC2", "component order and class relation axioms", 0,
       order_and_equivalence_axioms},
      {"AC3", "structural conformance suite", kConformanceSeconds,
       structural_conformance},
      {"AC4", "added-edge witnesses for incomparable components", 0,
       added_edge_witnesses},
      {"AC5", "saturation closures", 0, closures_are_saturated},
      {"AC6", "decomposition round trip", 0, decomposition_round_trip},
      {"AC7", "fixture regressions", 0, fixture_regressions},
      {"AC8", "verify determinism", 0, verify_is_deterministic},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = fail_with(std::string("exception: ") + e.what());
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (o.pass && c.seconds_limit > 0 && secs >= c.seconds_limit) {
      o = fail_with("took " + std::to_string(secs) + " s");
    }
    char timing[64];
    if (c.seconds_limit > 0) {
      std::snprintf(timing, sizeof timing, "%.2f s, limit %.0f s", secs, c.seconds_limit);
    } else {
      std::snprintf(timing, sizeof timing, "%.2f s", secs);
    }
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.id << " " << c.name << ": "
              << o.detail << " (" << timing << ")" << std::endl;
    if (!o.pass) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
