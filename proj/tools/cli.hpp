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

#ifndef CATHEDRAL_TOOLS_CLI_HPP_
#define CATHEDRAL_TOOLS_CLI_HPP_

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cathedral/canonical.hpp"
#include "cathedral/cathedral.hpp"
#include "cathedral/error.hpp"
#include "cathedral/graph.hpp"
#include "cathedral/verifier/suite.hpp"
#include "render.hpp"

namespace cathedral::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitNo = 1;  // `saturated` on an unsaturated graph
inline constexpr int kExitUsage = 2;
inline constexpr int kExitPrecondition = 3;
inline constexpr int kExitInternal = 4;

inline int exit_code(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::kParse: return kExitUsage;
    case ErrorCategory::kPrecondition: return kExitPrecondition;
    case ErrorCategory::kBudget: return kExitPrecondition;
    case ErrorCategory::kInternal: return kExitInternal;
  }
  return kExitInternal;
}

// Reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

struct Options {
  std::string file;
  std::string out;
  std::string format = "text";
  std::uint64_t seed = 1;
  std::size_t trials = 100;
  std::size_t max_n = 8;
  double p = 0.3;
  std::size_t cap = 100'000;
  std::size_t max_components = kDefaultComponentLimit;
  unsigned threads = 0;
  bool ge = false;
  bool timing = false;
};

class Runner {
 public:
  Runner(const Options& o, std::ostream& out) : o_(o), out_(out) {}

  int analyze() {
    auto a = render::analyze(load(), o_.max_components, o_.ge);
    emit(json() ? render::to_json(a).dump(2) + "\n" : render::to_text(a));
    return kExitOk;
  }

  int saturated() {
    const bool yes = is_saturated(load());
    emit(yes ? "saturated\n" : "not saturated\n");
    return yes ? kExitOk : kExitNo;
  }

  int saturate() {
    emit(render::saturation_text(cathedral::saturate(load())));
    return kExitOk;
  }

  int decompose() {
    emit(render::to_json(cathedral::decompose(load(), o_.max_components)).dump(2) +
         "\n");
    return kExitOk;
  }

  int construct() {
    auto tree = render::parse_tree(read_file(o_.file));
    Graph g = cathedral::construct(tree, o_.max_components);
    emit(render_edge_list(g));
    return kExitOk;
  }

  int hasse() {
    emit(render::to_dot(component_poset(load(), o_.max_components)));
    return kExitOk;
  }

  int verify() {
    verifier::TrialConfig cfg;
    cfg.seed = o_.seed;
    cfg.trials = o_.trials;
    cfg.max_vertices = o_.max_n;
    cfg.edge_probability = o_.p;
    cfg.enumeration_cap = o_.cap;
    cfg.component_limit = o_.max_components;
    cfg.threads = o_.threads;
    cfg.validate();
    bool passed = false;
    if (!o_.file.empty()) {
      auto r = verifier::run_suite(load(), cfg);
      passed = r.passed();
      emit(json() ? render::to_json(r, o_.timing).dump(2) + "\n"
                  : render::to_text(r, o_.timing));
    } else {
      auto b = verifier::run_trials(cfg);
      passed = b.passed();
      emit(json() ? render::to_json(b, o_.timing).dump(2) + "\n"
                  : render::to_text(b, o_.timing));
    }
    return passed ? kExitOk : kExitInternal;
  }

 private:
  bool json() const { return o_.format == "json"; }

  Graph load() const {
    if (o_.file.empty()) throw UsageError("an input FILE is required");
    return parse_edge_list(read_file(o_.file));
  }

  void emit(const std::string& text) const {
    if (o_.out.empty()) {
      out_ << text;
      return;
    }
    std::ofstream f(o_.out, std::ios::binary);
    if (!f || !(f << text)) throw UsageError("cannot write " + o_.out);
  }

  const Options& o_;
  std::ostream& out_;
};

// `args` excludes the program name.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out,
                   std::ostream& err) {
  Options o;
  CLI::App app{"Structure of factorizable graphs: factor-connected components, "
               "canonical partition, saturation and cathedral decomposition."};
  app.name("cathedral");
  app.require_subcommand(1, 1);

  auto add_file = [&](CLI::App* sub, bool required, const std::string& what) {
    auto* opt = sub->add_option("FILE", o.file, what);
    if (required) opt->required()->check(CLI::ExistingFile);
  };
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("-o,--out", o.out, "Write to this file instead of stdout");
  };
  auto add_limit = [&](CLI::App* sub) {
    sub->add_option("--max-components", o.max_components,
                    "Component limit of the brute-force order computation")
        ->check(CLI::PositiveNumber);
  };
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  auto* analyze = app.add_subcommand("analyze", "Components, classes and order");
  add_file(analyze, true, "Edge-list file");
  add_out(analyze);
  add_format(analyze);
  add_limit(analyze);
  analyze->add_flag("--ge", o.ge, "Also print the Gallai-Edmonds partition of each G-x");

  auto* saturated = app.add_subcommand("saturated", "Exit 0 if saturated, 1 if not");
  add_file(saturated, true, "Edge-list file");
  add_out(saturated);

  auto* saturate = app.add_subcommand("saturate", "Saturation closure");
  add_file(saturate, true, "Edge-list file");
  add_out(saturate);

  auto* decompose = app.add_subcommand("decompose", "Cathedral tree of a saturated graph");
  add_file(decompose, true, "Edge-list file");
  add_out(decompose);
  add_limit(decompose);

  auto* construct = app.add_subcommand("construct", "Graph of a cathedral tree");
  add_file(construct, true, "Tree JSON file");
  add_out(construct);
  add_limit(construct);

  auto* hasse = app.add_subcommand("hasse", "Hasse diagram of the component order (DOT)");
  add_file(hasse, true, "Edge-list file");
  add_out(hasse);
  add_limit(hasse);

  auto* verify = app.add_subcommand("verify", "Conformance suite on FILE or on random graphs");
  add_file(verify, false, "Edge-list file (random trials when omitted)");
  verify->get_option("FILE")->check(CLI::ExistingFile);
  add_out(verify);
  add_format(verify);
  add_limit(verify);
  verify->add_option("--seed", o.seed, "Base seed");
  verify->add_option("--trials", o.trials, "Number of random graphs")
      ->check(CLI::PositiveNumber);
  verify->add_option("--max-n", o.max_n, "Largest vertex count (even)");
  verify->add_option("--p", o.p, "Edge probability")->check(CLI::Range(0.0, 1.0));
  verify->add_option("--cap", o.cap, "Perfect matching enumeration cap")
      ->check(CLI::PositiveNumber);
  verify->add_option("--threads", o.threads, "Worker threads (0: all cores)");
  verify->add_flag("--timing", o.timing, "Report wall time per check");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Runner run(o, out);
  try {
    if (*analyze) return run.analyze();
    if (*saturated) return run.saturated();
    if (*saturate) return run.saturate();
    if (*decompose) return run.decompose();
    if (*construct) return run.construct();
    if (*hasse) return run.hasse();
    return run.verify();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << " [" << to_string(e.code()) << "]\n";
    return exit_code(e.category());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace cathedral::cli

#endif  // CATHEDRAL_TOOLS_CLI_HPP_
