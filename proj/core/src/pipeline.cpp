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

#include "hiddenqutrit/pipeline.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hiddenqutrit/hilbert.hpp"

namespace hq {

namespace {

namespace fs = std::filesystem;
using Json = nlohmann::ordered_json;

std::string csv_cell(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string matrix_csv(const Matrix4c& m, bool imag_part) {
  std::ostringstream out;
  out << "basis,HH,psi_plus,VV,psi_minus\n";
  for (int i = 0; i < 4; ++i) {
    out << kCoupledLabels[i];
    for (int j = 0; j < 4; ++j) {
      const bool off_block = (i == kPsiMinus) != (j == kPsiMinus);
      if (off_block) {
        out << ",NA";
      } else {
        out << ',' << csv_cell(imag_part ? m(i, j).imag() : m(i, j).real());
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace

void write_text_file_atomic(const std::string& path,
                            const std::string& content) {
  const fs::path target(path);
  if (target.has_parent_path()) {
    std::error_code ec;
    fs::create_directories(target.parent_path(), ec);
  }
  const fs::path tmp = target.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) {
      throw IoError("cannot open for writing: " + tmp.string());
    }
    out << content;
    out.flush();
    if (!out) {
      std::error_code ec;
      fs::remove(tmp, ec);
      throw IoError("write failed: " + tmp.string());
    }
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw IoError("cannot move into place: " + path);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw IoError("cannot read file: " + path);
  }
  std::ostringstream out;
  out << in.rdbuf();
  if (in.bad()) {
    throw IoError("read failed: " + path);
  }
  return out.str();
}

std::vector<CountRecord> simulate_scenario(const ScenarioParams& params) {
  return simulate_counts(prepare_scenario(params), table1_settings(),
                         params.flux, params.seed);
}

TomographyResult reconstruct_records(const std::vector<CountRecord>& records,
                                     Method method, bool project_psd) {
  switch (method) {
    case Method::Linear:
      return linear_reconstruct(records, project_psd);
    case Method::Mle:
      return mle_reconstruct(records);
    case Method::Naive:
      return naive_symmetric_reconstruct(records);
  }
  throw ValidationError("unknown method");
}

void cmd_prepare(const ScenarioParams& params, const std::string& out_path) {
  write_text_file_atomic(out_path, state_to_json(prepare_scenario(params)));
}

void cmd_simulate(const ScenarioParams& params, const std::string& out_path) {
  write_text_file_atomic(out_path, counts_to_json(simulate_scenario(params)));
}

void cmd_reconstruct(const std::string& counts_path, Method method,
                     bool project_psd, const std::string& out_path) {
  const auto records = counts_from_json(read_text_file(counts_path));
  const TomographyResult result =
      reconstruct_records(records, method, project_psd);
  write_text_file_atomic(out_path, result_to_json(result));
}

void cmd_metrics(const std::string& state_path, const std::string& out_path) {
  const VisibleDensityMatrix rho =
      state_from_json(read_text_file(state_path));
  write_text_file_atomic(out_path, metrics_to_json(compute_metrics(rho)));
}

void cmd_sweep_delay(double delay_max, int steps, double coherence_time,
                     const std::string& out_path) {
  if (!(delay_max > 0.0)) {
    throw ValidationError("sweep_delay: delay_max must be > 0");
  }
  if (steps < 2) {
    throw ValidationError("sweep_delay: need at least 2 steps");
  }
  Vector2c h, v;
  h << 1.0, 0.0;
  v << 0.0, 1.0;
  std::ostringstream out;
  out << "delay,gamma,p_psi_plus,p_psi_minus\n";
  for (int i = 0; i < steps; ++i) {
    const double delay = delay_max * i / (steps - 1);
    const double gamma = gaussian_overlap(delay, coherence_time);
    const auto [a, b] = mode_pair_from_delay(h, v, delay, coherence_time);
    const VisibleDensityMatrix rho = partial_trace_hidden(
        FullDensityMatrix::from_state(FullTwoPhotonState::symmetrize(a, b)));
    out << csv_cell(delay) << ',' << csv_cell(gamma) << ','
        << csv_cell(rho.population(kPsiPlus)) << ','
        << csv_cell(rho.population(kPsiMinus)) << '\n';
  }
  write_text_file_atomic(out_path, out.str());
}

void cmd_paper_figures(const PaperFiguresConfig& config,
                       const std::string& out_dir) {
  std::error_code ec;
  fs::create_directories(out_dir, ec);
  const auto scenarios = all_scenarios();
  std::vector<CountRecord> previous_records;
  for (size_t i = 0; i < scenarios.size(); ++i) {
    ScenarioParams params;
    params.kind = scenarios[i];
    params.coherence_time = config.coherence_time;
    params.flux = config.flux;
    params.seed = config.master_seed + static_cast<std::uint64_t>(i);

    const VisibleDensityMatrix truth = prepare_scenario(params);
    const bool reuse = params.kind == ScenarioKind::NoonNaiveComparison;
    const std::vector<CountRecord> records =
        reuse ? previous_records : simulate_scenario(params);
    const Method method = scenario_method(params.kind);
    const TomographyResult result = reconstruct_records(records, method);

    // Indefinite naive fits are projected before computing metrics.
    const VisibleDensityMatrix metric_state =
        method == Method::Mle
            ? result.estimate
            : VisibleDensityMatrix::from_matrix(
                  project_to_block_psd(result.estimate.matrix()));

    const std::string stem =
        std::string("fig2") + scenario_figure_label(params.kind);
    Json fig;
    fig["figure"] = stem;
    fig["scenario"] = scenario_name(params.kind);
    Json p;
    p["delay"] = resolve_delay(params);
    p["coherence_time"] = params.coherence_time;
    p["flux"] = params.flux;
    p["seed"] = reuse ? config.master_seed + i - 1 : params.seed;
    p["method"] = method_to_string(method);
    if (params.kind == ScenarioKind::NoonDephased) {
      p["dephasing_stdev"] = params.dephasing_stdev;
      p["rotation_angle_deg"] = params.rotation_angle_deg;
    }
    if (reuse) {
      p["counts_shared_with"] = "fig2e";
    }
    fig["parameters"] = p;
    fig["truth"] = Json::parse(state_to_json(truth));
    fig["reconstruction"] = Json::parse(result_to_json(result));
    fig["metrics_truth"] =
        Json::parse(metrics_to_json(compute_metrics(truth)));
    fig["metrics_reconstruction"] =
        Json::parse(metrics_to_json(compute_metrics(metric_state)));

    const fs::path dir(out_dir);
    write_text_file_atomic((dir / (stem + ".json")).string(),
                           fig.dump(2) + "\n");
    write_text_file_atomic((dir / (stem + "_counts.json")).string(),
                           counts_to_json(records));
    write_text_file_atomic((dir / (stem + "_re.csv")).string(),
                           matrix_csv(result.estimate.matrix(), false));
    write_text_file_atomic((dir / (stem + "_im.csv")).string(),
                           matrix_csv(result.estimate.matrix(), true));

    if (params.kind == ScenarioKind::NoonDistinguishable) {
      previous_records = records;
    }
  }
}

}  // namespace hq
