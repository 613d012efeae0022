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

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "hiddenqutrit/pipeline.hpp"

namespace {

// --seed beats HIDDENQUTRIT_SEED beats the built-in default.
std::uint64_t default_seed() {
  const char* env = std::getenv("HIDDENQUTRIT_SEED");
  if (env == nullptr || *env == '\0') {
    return 42;
  }
  const std::string text(env);
  std::size_t used = 0;
  std::uint64_t value = 0;
  try {
    value = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size()) {
    throw hq::ValidationError("HIDDENQUTRIT_SEED is not a valid integer: " +
                              text);
  }
  return value;
}

struct ScenarioCliOptions {
  std::string scenario;
  std::optional<double> delay;
  double coherence_time = 100.0;
  double flux = 1e5;
  std::optional<std::uint64_t> seed;
  double dephasing_stdev = 2.0;
  double rotation_angle_deg = 3.0;

  hq::ScenarioParams resolve() const {
    hq::ScenarioParams params;
    params.kind = hq::scenario_from_name(scenario);
    params.coherence_time = coherence_time;
    params.delay = delay;
    params.flux = flux;
    params.seed = seed.value_or(default_seed());
    params.dephasing_stdev = dephasing_stdev;
    params.rotation_angle_deg = rotation_angle_deg;
    return params;
  }
};

void add_scenario_options(CLI::App* sub, ScenarioCliOptions& opts,
                          bool with_statistics) {
  sub->add_option("--scenario", opts.scenario,
                  "One of: hv_overlapped, hv_delayed, hv_partial, "
                  "noon_indistinguishable, noon_distinguishable, "
                  "noon_naive_comparison, noon_dephased")
      ->required();
  sub->add_option("--delay", opts.delay,
                  "Arrival-time delay (defaults per scenario)");
  sub->add_option("--coherence-time", opts.coherence_time,
                  "Gaussian coherence time")
      ->capture_default_str();
  sub->add_option("--dephasing-stdev", opts.dephasing_stdev,
                  "Collective phase stdev in radians (noon_dephased)")
      ->capture_default_str();
  sub->add_option("--rotation-angle", opts.rotation_angle_deg,
                  "Polarization rotation in degrees before dephasing "
                  "(noon_dephased)")
      ->capture_default_str();
  if (with_statistics) {
    sub->add_option("--flux", opts.flux, "Mean pair flux per unit exposure")
        ->capture_default_str();
    sub->add_option("--seed", opts.seed, "RNG seed");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Two-photon polarization states with hidden distinguishing modes: "
      "simulation and block-structured tomography"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "hiddenqutrit 0.1.0");

  ScenarioCliOptions prepare_opts;
  std::string prepare_out;
  auto* prepare = app.add_subcommand(
      "prepare", "Write a scenario's true density matrix as JSON");
  add_scenario_options(prepare, prepare_opts, false);
  prepare->add_option("--out", prepare_out, "Output JSON path")->required();

  ScenarioCliOptions simulate_opts;
  std::string simulate_out;
  auto* simulate = app.add_subcommand(
      "simulate", "Simulate Poisson counts over the 10-setting schedule");
  add_scenario_options(simulate, simulate_opts, true);
  simulate->add_option("--out", simulate_out, "Output JSON path")->required();

  std::string rec_counts, rec_out, rec_method = "mle";
  bool rec_project = false;
  auto* reconstruct = app.add_subcommand(
      "reconstruct", "Fit a density matrix to recorded counts");
  reconstruct->add_option("--counts", rec_counts, "Counts JSON path")
      ->required();
  reconstruct->add_option("--method", rec_method, "linear, mle, or naive")
      ->capture_default_str();
  reconstruct->add_flag("--project-psd", rec_project,
                        "Project the linear estimate onto PSD states");
  reconstruct->add_option("--out", rec_out, "Output JSON path")->required();

  std::string met_in, met_out;
  auto* metrics = app.add_subcommand(
      "metrics", "Fidelity, concurrence, purity and populations of a state");
  metrics->add_option("--state", met_in, "State or fit JSON path")
      ->required();
  metrics->add_option("--out", met_out, "Output JSON path")->required();

  double sweep_max = 0.0, sweep_tau = 100.0;
  int sweep_steps = 50;
  std::string sweep_out;
  auto* sweep = app.add_subcommand(
      "sweep-delay", "CSV of overlap and populations against delay");
  sweep->add_option("--delay-max", sweep_max, "Largest delay (inclusive)")
      ->required();
  sweep->add_option("--steps", sweep_steps, "Number of rows")
      ->capture_default_str();
  sweep->add_option("--coherence-time", sweep_tau, "Gaussian coherence time")
      ->capture_default_str();
  sweep->add_option("--out", sweep_out, "Output CSV path")->required();

  hq::PaperFiguresConfig figures_config;
  std::optional<std::uint64_t> figures_seed;
  std::string figures_out;
  auto* figures = app.add_subcommand(
      "paper-figures", "Truth/counts/fit bundles for the seven showcase "
                       "scenarios");
  figures->add_option("--coherence-time", figures_config.coherence_time,
                      "Gaussian coherence time")
      ->capture_default_str();
  figures->add_option("--flux", figures_config.flux,
                      "Mean pair flux per unit exposure")
      ->capture_default_str();
  figures->add_option("--seed", figures_seed, "Master RNG seed");
  figures->add_option("--out", figures_out, "Output directory")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (prepare->parsed()) {
      hq::cmd_prepare(prepare_opts.resolve(), prepare_out);
    } else if (simulate->parsed()) {
      hq::cmd_simulate(simulate_opts.resolve(), simulate_out);
    } else if (reconstruct->parsed()) {
      hq::cmd_reconstruct(rec_counts, hq::method_from_string(rec_method),
                          rec_project, rec_out);
    } else if (metrics->parsed()) {
      hq::cmd_metrics(met_in, met_out);
    } else if (sweep->parsed()) {
      hq::cmd_sweep_delay(sweep_max, sweep_steps, sweep_tau, sweep_out);
    } else if (figures->parsed()) {
      figures_config.master_seed = figures_seed.value_or(default_seed());
      hq::cmd_paper_figures(figures_config, figures_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
