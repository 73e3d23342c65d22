// Copyright 2026 The absnft Authors
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

#include <cstdint>
#include <string>

#include <CLI11.hpp>

#include "absnft/scenario.hpp"

namespace {

struct SubcommandIo {
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int bound = 0;
  bool bound_set = false;
  int grid = 0;
  bool grid_set = false;
  std::string format;
};

void attach_common(CLI::App* cmd, SubcommandIo& io, bool with_grid) {
  cmd->add_option("--config", io.config_path, "Scenario config (JSON)")
      ->required();
  cmd->add_option("--out", io.out_path,
                  "Report destination (default: stdout)");
  cmd->add_option("--seed", io.seed, "Seed override for sampled checks")
      ->each([&io](const std::string&) { io.seed_set = true; });
  cmd->add_option("--bound", io.bound, "Bid bound override for oracle scans")
      ->each([&io](const std::string&) { io.bound_set = true; });
  if (with_grid) {
    cmd->add_option("--grid", io.grid, "Verify the closed form on [1..N]^2")
        ->each([&io](const std::string&) { io.grid_set = true; });
  }
  cmd->add_option("--format", io.format, "Report format: json or csv")
      ->check(CLI::IsMember({"json", "csv"}));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Deterministic simulator and equilibrium solver for NFT "
      "securitization and repurchase games"};
  app.set_version_flag("--version", std::string("absnft ") +
                                        absnft::scenario::kArtifactVersion);
  app.require_subcommand(1);

  const std::vector<std::string> kinds = {
      "solve2p", "bayes", "repeated", "multi", "settle", "verify", "sweep"};
  const std::vector<std::string> blurbs = {
      "Single-round two-player equilibrium",
      "Leader bidding against a discrete prior",
      "Repeated game trace",
      "Multi-leader equilibrium",
      "Budget-constrained settlement",
      "Brute-force verification with witnesses (exit 2 on a falsified check)",
      "Grid or seeded-random sweep to CSV"};

  std::vector<SubcommandIo> ios(kinds.size());
  for (std::size_t i = 0; i < kinds.size(); ++i) {
    CLI::App* cmd = app.add_subcommand(kinds[i], blurbs[i]);
    attach_common(cmd, ios[i], kinds[i] == "verify");
  }

  CLI11_PARSE(app, argc, argv);

  for (std::size_t i = 0; i < kinds.size(); ++i) {
    if (!app.get_subcommand(kinds[i])->parsed()) continue;
    const SubcommandIo& io = ios[i];
    absnft::scenario::RunFlags flags;
    flags.expect_kind = kinds[i];
    if (io.seed_set) flags.seed = io.seed;
    if (io.bound_set) flags.bound = io.bound;
    if (io.grid_set) flags.grid = io.grid;
    if (!io.format.empty()) flags.format = io.format;
    return absnft::scenario::run(io.config_path, io.out_path, flags);
  }
  return absnft::scenario::kExitValidation;
}
