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

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "absnft/ledger.hpp"

namespace absnft::scenario {

// Config-driven front end. Configs are JSON; reports are JSON (CSV for
// sweeps) containing only integers, integer pairs and decimal strings, so a
// rerun with the same config and seed is byte-identical.

inline constexpr int kExitOk = 0;
inline constexpr int kExitValidation = 1;  // bad config, bad io
inline constexpr int kExitFalsified = 2;   // a verification check failed

inline constexpr const char* kArtifactName = "absnft";
inline constexpr const char* kArtifactVersion = "0.1.0";

struct RunFlags {
  std::optional<std::uint64_t> seed;      // overrides config "seed"
  std::optional<int> bound;               // overrides config "bound"
  std::optional<int> grid;                // verify only: forces grid [1, N]
  std::optional<std::string> format;      // "json" or "csv"
  std::optional<std::string> expect_kind; // CLI subcommand cross-check
};

struct RunResult {
  int exit_code = kExitOk;
  std::string output;  // full report bytes (JSON or CSV)
  std::string error;   // human-readable reason when exit_code != 0
};

// Validates and executes one parsed config.
RunResult run_config(const nlohmann::json& config, const RunFlags& flags);

// File-level wrapper: reads config_path, writes the report to out_path
// ("-" or empty for stdout), reports errors on stderr. Returns the exit
// code.
int run(const std::string& config_path, const std::string& out_path,
        const RunFlags& flags);

// Ledger snapshot in the report format: token records plus share books,
// deterministically ordered.
nlohmann::json ledger_snapshot(const LedgerState& ledger);

}  // namespace absnft::scenario
