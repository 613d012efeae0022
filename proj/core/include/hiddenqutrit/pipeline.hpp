// Copyright 2026 The hiddenqutrit authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>
#include <vector>

#include "hiddenqutrit/json_io.hpp"
#include "hiddenqutrit/scenario.hpp"

namespace hq {

// Writes via a temp file in the same directory plus rename, so a failed run
// never leaves a partial file behind.
void write_text_file_atomic(const std::string& path,
                            const std::string& content);
std::string read_text_file(const std::string& path);

// Table-driven simulation of the scenario's true state over the canonical
// 10 settings.
std::vector<CountRecord> simulate_scenario(const ScenarioParams& params);

TomographyResult reconstruct_records(const std::vector<CountRecord>& records,
                                     Method method, bool project_psd = false);

// File-level commands backing the CLI. Each writes exactly one output file.
void cmd_prepare(const ScenarioParams& params, const std::string& out_path);
void cmd_simulate(const ScenarioParams& params, const std::string& out_path);
void cmd_reconstruct(const std::string& counts_path, Method method,
                     bool project_psd, const std::string& out_path);
void cmd_metrics(const std::string& state_path, const std::string& out_path);

// CSV with header delay,gamma,p_psi_plus,p_psi_minus over `steps` evenly
// spaced delays from 0 to delay_max inclusive.
void cmd_sweep_delay(double delay_max, int steps, double coherence_time,
                     const std::string& out_path);

struct PaperFiguresConfig {
  double coherence_time = 100.0;
  double flux = 1e5;
  std::uint64_t master_seed = 42;
};

// One bundle per scenario a..g: figN.json (parameters, truth,
// reconstruction, metrics), figN_counts.json, and figN_re.csv / figN_im.csv
// with the reconstructed matrix (triplet<->singlet cells are NA). The f
// case reuses e's counts and fits them with the naive model; per-figure
// seeds are master_seed + figure index.
void cmd_paper_figures(const PaperFiguresConfig& config,
                       const std::string& out_dir);

}  // namespace hq
