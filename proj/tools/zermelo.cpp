// Copyright 2026 The Zermelo Authors
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

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <future>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "zermelo/error.hpp"
#include "zermelo/kernels.hpp"
#include "zermelo/scenario.hpp"

namespace fs = std::filesystem;
using namespace zermelo;

namespace {

constexpr int kExitInvariantFailed = 1;
constexpr int kExitError = 2;

struct Outcome {
  std::string label;
  int code;
  std::string message;
};

void print_summary(const std::string& label, const scenario::RunReport& r) {
  std::printf("%s: preset=%s dim=%zu k=%.10g delta_t=%.15g", label.c_str(), r.preset.c_str(), r.dim, r.k,
              r.delta_t);
  if (r.delta_t_seconds) std::printf(" (%.6g ps)", *r.delta_t_seconds * 1e12);
  std::printf(" method=%s\n", r.method.c_str());
  for (const scenario::InvariantResult& i : r.invariants)
    std::printf("  %-26s %-4s dev=%.3e thr=%.1e\n", i.name.c_str(), i.pass ? "ok" : "FAIL", i.max_deviation,
                i.threshold);
  for (const std::string& n : r.notes) std::printf("  note: %s\n", n.c_str());
}

Outcome run_one(const fs::path& config, const fs::path& out_dir, const scenario::RunOptions& opts, bool quiet,
                bool print) {
  const std::string label = config.filename().string();
  try {
    const scenario::ScenarioConfig cfg = scenario::load_config(config);
    const scenario::RunReport r = scenario::run_scenario(cfg, out_dir, opts);
    if (!quiet && print) print_summary(label, r);
    return {label, r.all_pass() ? 0 : kExitInvariantFailed, r.all_pass() ? "" : "invariant check failed"};
  } catch (const Error& e) {
    return {label, kExitError, e.what()};
  } catch (const std::exception& e) {
    return {label, kExitError, std::string("unexpected error: ") + e.what()};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum-time quantum state navigation under a background Hamiltonian"};
  app.require_subcommand(1);

  CLI::App* run = app.add_subcommand("run", "Run one scenario config, or every *.json in a directory with --batch");
  std::string config;
  std::string batch;
  std::string output_dir = "out";
  int steps = 0;
  bool quiet = false;
  run->add_option("config", config, "Scenario JSON file");
  run->add_option("--batch", batch, "Directory of scenario JSON files, run concurrently")->check(CLI::ExistingDirectory);
  run->add_option("--output-dir,-o", output_dir, "Where outputs are written")->capture_default_str();
  run->add_option("--steps", steps, "Override grid.n_steps")->check(CLI::Range(2, 100000000));
  run->add_flag("--quiet,-q", quiet, "Only print errors");

  CLI::App* info = app.add_subcommand("info", "Print the active compute kernel backend");

  CLI11_PARSE(app, argc, argv);

  if (*info) {
    std::printf("kernels: %s (avx2 %s)\n", std::string(kernels::backend_name(kernels::active_backend())).c_str(),
                kernels::avx2_available() ? "available" : "unavailable");
    return 0;
  }

  if (config.empty() == batch.empty()) {
    std::cerr << "run: give exactly one of <config> or --batch <dir>\n";
    return kExitError;
  }
  scenario::RunOptions opts;
  if (steps > 0) opts.steps_override = steps;

  std::vector<Outcome> outcomes;
  if (!config.empty()) {
    outcomes.push_back(run_one(config, output_dir, opts, quiet, true));
  } else {
    std::vector<fs::path> configs;
    for (const fs::directory_entry& e : fs::directory_iterator(batch))
      if (e.is_regular_file() && e.path().extension() == ".json") configs.push_back(e.path());
    std::sort(configs.begin(), configs.end());
    std::vector<std::future<Outcome>> jobs;
    for (const fs::path& c : configs)
      jobs.push_back(std::async(std::launch::async, run_one, c, fs::path(output_dir) / c.stem(), opts, quiet, false));
    for (auto& j : jobs) outcomes.push_back(j.get());
    if (!quiet)
      for (const Outcome& o : outcomes) std::printf("%-28s %s\n", o.label.c_str(), o.code == 0 ? "ok" : "FAIL");
  }

  int code = 0;
  for (const Outcome& o : outcomes) {
    if (!o.message.empty()) std::cerr << o.label << ": " << o.message << "\n";
    code = std::max(code, o.code);
  }
  return code;
}
