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

#ifndef CATHEDRAL_VERIFIER_SUITE_HPP_
#define CATHEDRAL_VERIFIER_SUITE_HPP_

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "cathedral/cathedral.hpp"
#include "cathedral/error.hpp"
#include "cathedral/graph.hpp"
#include "cathedral/verifier/checks.hpp"
#include "cathedral/verifier/config.hpp"
#include "cathedral/verifier/subject.hpp"

namespace cathedral::verifier {

enum class CheckStatus { kPass, kFail, kSkipped, kBudgetExceeded };

inline constexpr std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::kPass: return "pass";
    case CheckStatus::kFail: return "fail";
    case CheckStatus::kSkipped: return "skipped";
    case CheckStatus::kBudgetExceeded: return "budget_exceeded";
  }
  return "?";
}

inline constexpr std::string_view kInputTarget = "input";
inline constexpr std::string_view kClosureTarget = "closure";

struct CheckResult {
  std::string id;
  std::string target;  // "input" or "closure"
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
  std::string counterexample;  // edge-list text, failures only
  double millis = 0;           // wall time; not part of equality
};

struct SuiteReport {
  std::uint64_t seed = 0;
  std::optional<std::size_t> trial;
  std::string graph;  // edge-list text of the input
  std::vector<CheckResult> checks;

  std::size_t count(CheckStatus s) const {
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(),
                      [&](const CheckResult& c) { return c.status == s; }));
  }
  bool passed() const { return count(CheckStatus::kFail) == 0; }
};

// Greedily deletes edges, then pairs of vertices, while the graph stays
// factorizable and `still_fails` holds. Vertex ids are compacted after each
// vertex deletion. Not guaranteed minimal.
inline Graph shrink_counterexample(
    const Graph& g, const std::function<bool(const Graph&)>& still_fails,
    std::size_t max_evaluations = 400) {
  Graph cur = g;
  std::size_t evals = 0;
  auto accept = [&](const Graph& h) {
    if (evals >= max_evaluations || !is_factorizable(h)) return false;
    ++evals;
    return still_fails(h);
  };
  for (bool progress = true; progress && evals < max_evaluations;) {
    progress = false;
    for (const Edge& e : cur.edges()) {
      std::vector<Edge> rest;
      for (const Edge& f : cur.edges()) {
        if (!(f == e)) rest.push_back(f);
      }
      Graph h = spanning_subgraph(cur, std::move(rest));
      if (accept(h)) {
        cur = std::move(h);
        progress = true;
        break;
      }
    }
    if (progress) continue;
    for (Vertex u : cur.vertices()) {
      for (Vertex v : cur.vertices()) {
        if (u >= v || progress) continue;
        Graph h = relabel_dense(remove_vertices(cur, VertexSet{u, v}));
        if (accept(h)) {
          cur = std::move(h);
          progress = true;
        }
      }
    }
  }
  return cur;
}

namespace detail {

struct Outcome {
  CheckStatus status;
  std::string detail;
};

inline Outcome evaluate(const CheckDef& def, Subject& s) {
  try {
    if (def.requirement == Requirement::kSaturated && !s.saturated()) {
      return {CheckStatus::kSkipped, "graph is not saturated"};
    }
    if (def.requirement == Requirement::kMinimum && !s.minimum()) {
      return {CheckStatus::kSkipped, "component order has no minimum"};
    }
    return {CheckStatus::kPass, def.run(s)};
  } catch (const CheckSkipped& e) {
    return {CheckStatus::kSkipped, e.what()};
  } catch (const CheckFailure& e) {
    return {CheckStatus::kFail, e.what()};
  } catch (const Error& e) {
    if (e.category() == ErrorCategory::kBudget ||
        e.code() == Errc::kTooManyComponents) {
      return {CheckStatus::kBudgetExceeded, e.what()};
    }
    return {CheckStatus::kFail,
            std::string(cathedral::to_string(e.code())) + ": " + e.what()};
  } catch (const std::exception& e) {
    return {CheckStatus::kFail, e.what()};
  }
}

inline CheckResult run_one(const CheckDef& def, Subject& s,
                           std::string_view target) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o = evaluate(def, s);
  CheckResult r;
  r.id = std::string(def.id);
  r.target = std::string(target);
  r.status = o.status;
  r.detail = std::move(o.detail);
  r.millis = std::chrono::duration<double, std::milli>(
                 std::chrono::steady_clock::now() - start)
                 .count();
  if (r.status == CheckStatus::kFail) {
    const TrialConfig cfg = s.cfg();
    auto fails = [&](const Graph& h) {
      Subject t(h, cfg);
      return evaluate(def, t).status == CheckStatus::kFail;
    };
    Graph small = shrink_counterexample(s.g(), fails);
    // Re-verified; fall back to the original graph otherwise.
    if (!fails(small)) small = s.g();
    r.counterexample = render_edge_list(is_dense(small) ? small : relabel_dense(small));
  }
  return r;
}

}  // namespace detail

// Runs every check on G. Checks skipped because G is not saturated or has no
// minimum component are run again on the closure saturate(G).
inline SuiteReport run_suite(const Graph& g, const TrialConfig& cfg,
                             std::optional<std::size_t> trial = std::nullopt) {
  if (!is_factorizable(g)) {
    fail(Errc::kNotFactorizable, "the suite needs a factorizable graph");
  }
  SuiteReport report;
  report.seed = cfg.seed;
  report.trial = trial;
  report.graph = render_edge_list(is_dense(g) ? g : relabel_dense(g));

  Subject input(g, cfg);
  std::vector<const CheckDef*> again;
  for (const CheckDef& def : all_checks()) {
    auto r = detail::run_one(def, input, kInputTarget);
    if (r.status == CheckStatus::kSkipped &&
        def.requirement != Requirement::kNone) {
      again.push_back(&def);
    }
    report.checks.push_back(std::move(r));
  }
  if (!again.empty()) {
    Subject closure(saturate(g).graph, cfg);
    for (const CheckDef* def : again) {
      report.checks.push_back(detail::run_one(*def, closure, kClosureTarget));
    }
  }
  return report;
}

struct CheckTally {
  std::string id;
  std::string target;
  std::size_t passed = 0;
  std::size_t failed = 0;
  std::size_t skipped = 0;
  std::size_t budget_exceeded = 0;
  double millis = 0;
  // First failing trial, with its detail and counterexample.
  std::optional<std::size_t> first_failure_trial;
  std::string first_failure_detail;
  std::string first_failure_counterexample;
};

struct BatchReport {
  TrialConfig config;
  std::vector<SuiteReport> trials;
  std::vector<CheckTally> tallies;  // registry order, input before closure

  bool passed() const {
    return std::all_of(tallies.begin(), tallies.end(),
                       [](const CheckTally& t) { return t.failed == 0; });
  }
};

inline std::vector<CheckTally> tally(const std::vector<SuiteReport>& reports) {
  std::vector<CheckTally> out;
  for (std::string_view target : {kInputTarget, kClosureTarget}) {
    for (const CheckDef& def : all_checks()) {
      CheckTally t;
      t.id = std::string(def.id);
      t.target = std::string(target);
      bool seen = false;
      for (const auto& rep : reports) {
        for (const auto& c : rep.checks) {
          if (c.id != t.id || c.target != t.target) continue;
          seen = true;
          t.millis += c.millis;
          switch (c.status) {
            case CheckStatus::kPass: ++t.passed; break;
            case CheckStatus::kSkipped: ++t.skipped; break;
            case CheckStatus::kBudgetExceeded: ++t.budget_exceeded; break;
            case CheckStatus::kFail:
              if (t.failed++ == 0) {
                t.first_failure_trial = rep.trial;
                t.first_failure_detail = c.detail;
                t.first_failure_counterexample = c.counterexample;
              }
              break;
          }
        }
      }
      if (seen) out.push_back(std::move(t));
    }
  }
  return out;
}

// Runs the suite on cfg.trials random graphs. Trials run in parallel; each
// draws from its own generator, so the report does not depend on threading.
inline BatchReport run_trials(const TrialConfig& cfg) {
  cfg.validate();
  BatchReport batch;
  batch.config = cfg;
  batch.trials.resize(cfg.trials);
  unsigned workers = cfg.threads ? cfg.threads : std::thread::hardware_concurrency();
  workers = std::max(1U, std::min<unsigned>(workers, static_cast<unsigned>(cfg.trials)));

  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto work = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= cfg.trials || failed) return;
      try {
        batch.trials[i] = run_suite(random_factorizable_graph(cfg, i), cfg, i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(work);
  work();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  batch.tallies = tally(batch.trials);
  return batch;
}

}  // namespace cathedral::verifier

#endif  // CATHEDRAL_VERIFIER_SUITE_HPP_
