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

#ifndef CATHEDRAL_VERIFIER_CONFIG_HPP_
#define CATHEDRAL_VERIFIER_CONFIG_HPP_

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "cathedral/canonical.hpp"
#include "cathedral/error.hpp"
#include "cathedral/graph.hpp"
#include "cathedral/matching.hpp"

namespace cathedral::verifier {

struct TrialConfig {
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t max_vertices = 8;  // even, >= 2
  double edge_probability = 0.3;
  std::size_t enumeration_cap = 100'000;
  std::size_t component_limit = kDefaultComponentLimit;
  std::uint64_t search_budget = kDefaultSearchBudget;
  // Saturated paths listed per perfect matching for the path-splitting checks.
  std::size_t path_limit = 200'000;
  // Path checks iterate over every enumerated perfect matching up to this
  // order and over the first one only above it.
  std::size_t exhaustive_order = 9;
  // 0 picks the hardware concurrency. Results never depend on it.
  unsigned threads = 0;

  void validate() const {
    if (max_vertices < 2 || max_vertices % 2 != 0) {
      fail(Errc::kInvalidArgument, "max_vertices must be even and >= 2");
    }
    if (trials < 1) fail(Errc::kInvalidArgument, "trials must be >= 1");
    if (!(edge_probability >= 0.0 && edge_probability <= 1.0)) {
      fail(Errc::kInvalidArgument, "edge probability must lie in [0, 1]");
    }
    if (enumeration_cap < 1) {
      fail(Errc::kInvalidArgument, "enumeration cap must be >= 1");
    }
  }
};

// Per-trial generator. std::seed_seq and mt19937_64 are fully specified, so
// the stream is identical on every platform.
inline std::mt19937_64 trial_rng(std::uint64_t seed, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(trial),
                    static_cast<std::uint32_t>(trial >> 32)};
  return std::mt19937_64(seq);
}

// Bernoulli draw without std::bernoulli_distribution, whose algorithm is
// implementation-defined.
inline bool coin(std::mt19937_64& rng, double p) {
  if (p >= 1.0) return true;
  if (p <= 0.0) return false;
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

// Plants the perfect matching {(0,1), (2,3), ...} and adds every other pair
// independently with probability p.
inline Graph random_factorizable_graph(int n, double p, std::mt19937_64& rng) {
  if (n < 0 || n % 2 != 0) {
    fail(Errc::kInvalidArgument, "vertex count must be even");
  }
  std::vector<Edge> edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if ((u % 2 == 0 && v == u + 1) || coin(rng, p)) edges.emplace_back(u, v);
    }
  }
  return Graph::on_range(n, std::move(edges));
}

inline Graph random_factorizable_graph(int n, double p, std::uint64_t seed,
                                       std::uint64_t trial) {
  auto rng = trial_rng(seed, trial);
  return random_factorizable_graph(n, p, rng);
}

// Trial graph: an even order drawn uniformly from 2..max_vertices, then edges.
inline Graph random_factorizable_graph(const TrialConfig& cfg,
                                       std::size_t trial) {
  cfg.validate();
  auto rng = trial_rng(cfg.seed, trial);
  const auto sizes = cfg.max_vertices / 2;
  const int n = static_cast<int>(2 * (1 + rng() % sizes));
  return random_factorizable_graph(n, cfg.edge_probability, rng);
}

}  // namespace cathedral::verifier

#endif  // CATHEDRAL_VERIFIER_CONFIG_HPP_
