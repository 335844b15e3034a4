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

#ifndef CATHEDRAL_VERIFIER_SUBJECT_HPP_
#define CATHEDRAL_VERIFIER_SUBJECT_HPP_

#include <cstddef>
#include <deque>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cathedral/canonical.hpp"
#include "cathedral/cathedral.hpp"
#include "cathedral/gallai_edmonds.hpp"
#include "cathedral/graph.hpp"
#include "cathedral/matching.hpp"
#include "cathedral/verifier/config.hpp"

namespace cathedral::verifier {

// Thrown by a check on the first violated statement.
class CheckFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

[[noreturn]] inline void violation(const std::string& what) {
  throw CheckFailure(what);
}

// Endpoints reachable from each vertex, per path kind, for one (G, M).
struct PathTable {
  std::map<Vertex, VertexSet> saturated;
  std::map<Vertex, VertexSet> balanced;
  std::map<Vertex, VertexSet> exposed;
};

struct PathList {
  std::vector<std::vector<Vertex>> paths;  // each path listed once
  bool truncated = false;
};

// Everything the checks need about one factorizable graph, computed lazily
// and cached. A computation that throws is retried by the next check that
// needs it, so one failure is reported by every dependent check.
class Subject {
 public:
  Subject(Graph g, const TrialConfig& cfg) : g_(std::move(g)), cfg_(cfg) {}
  Subject(const Subject&) = delete;
  Subject& operator=(const Subject&) = delete;

  const Graph& g() const { return g_; }
  const TrialConfig& cfg() const { return cfg_; }

  const PerfectMatchingList& pms() {
    if (!pms_) pms_ = enumerate_perfect_matchings(g_, cfg_.enumeration_cap);
    return *pms_;
  }

  // Perfect matchings the path checks iterate over.
  const std::vector<Matching>& sample() {
    if (!sample_) {
      const auto& all = pms().matchings;
      if (g_.order() <= cfg_.exhaustive_order) {
        sample_ = all;
      } else {
        sample_ = std::vector<Matching>(all.begin(), all.begin() + 1);
      }
    }
    return *sample_;
  }

  // Throws kBudgetExceeded when the enumeration was truncated.
  const std::vector<Matching>& all_pms() {
    if (pms().truncated) {
      fail(Errc::kBudgetExceeded, "perfect matching enumeration truncated at " +
                                      std::to_string(cfg_.enumeration_cap));
    }
    return pms().matchings;
  }

  const FactorComponents& comps() {
    if (!comps_) comps_ = factor_components(g_);
    return *comps_;
  }

  const CanonicalPartition& part() {
    if (!part_) part_ = canonical_partition(g_, comps());
    return *part_;
  }

  const ComponentPoset& poset() {
    if (!poset_) poset_ = component_poset(g_, cfg_.component_limit);
    return *poset_;
  }

  std::optional<std::size_t> minimum() { return minimum_component(poset()); }

  const UpSets& ups(std::size_t h) {
    auto it = ups_.find(h);
    if (it == ups_.end()) {
      it = ups_.emplace(h, up_sets(g_, poset(), part(), h)).first;
    }
    return it->second;
  }

  bool saturated() {
    if (!saturated_) saturated_ = is_saturated(g_);
    return *saturated_;
  }

  const GEPartition& ge_minus(Vertex x) {
    auto it = ge_.find(x);
    if (it == ge_.end()) {
      it = ge_.emplace(x, gallai_edmonds(remove_vertices(g_, VertexSet{x})))
               .first;
    }
    return it->second;
  }

  const AlternatingSearch& search(std::size_t m) {
    ensure_searches();
    return searches_[m];
  }

  const PathTable& table(std::size_t m) {
    ensure_searches();
    if (tables_.size() < sample().size()) tables_.resize(sample().size());
    if (!tables_[m]) {
      const auto& s = searches_[m];
      PathTable t;
      for (Vertex u : g_.vertices()) {
        t.saturated[u] = s.reachable(u, PathKind::kSaturated);
        t.balanced[u] = s.reachable(u, PathKind::kBalanced);
        t.exposed[u] = s.reachable(u, PathKind::kExposed);
      }
      tables_[m] = std::make_unique<PathTable>(std::move(t));
    }
    return *tables_[m];
  }

  // Saturated paths, each listed once (from the smaller end vertex).
  const PathList& saturated_paths(std::size_t m) {
    ensure_searches();
    if (paths_.size() < sample().size()) paths_.resize(sample().size());
    if (!paths_[m]) {
      PathList out;
      for (Vertex u : g_.vertices()) {
        bool truncated = false;
        auto ps = searches_[m].paths(u, PathKind::kSaturated, cfg_.path_limit,
                                     &truncated);
        out.truncated = out.truncated || truncated;
        for (auto& p : ps) {
          if (p.front() < p.back()) out.paths.push_back(std::move(p));
        }
      }
      paths_[m] = std::make_unique<PathList>(std::move(out));
    }
    return *paths_[m];
  }

 private:
  void ensure_searches() {
    if (searches_.empty()) {
      for (const auto& m : sample()) {
        searches_.emplace_back(g_, m, cfg_.search_budget);
      }
    }
  }

  Graph g_;
  TrialConfig cfg_;
  std::optional<PerfectMatchingList> pms_;
  std::optional<std::vector<Matching>> sample_;
  std::optional<FactorComponents> comps_;
  std::optional<CanonicalPartition> part_;
  std::optional<ComponentPoset> poset_;
  std::map<std::size_t, UpSets> ups_;
  std::optional<bool> saturated_;
  std::map<Vertex, GEPartition> ge_;
  std::deque<AlternatingSearch> searches_;
  std::vector<std::unique_ptr<PathTable>> tables_;
  std::vector<std::unique_ptr<PathList>> paths_;
};

}  // namespace cathedral::verifier

#endif  // CATHEDRAL_VERIFIER_SUBJECT_HPP_
