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

#include "hiddenqutrit/json_io.hpp"

#include <json.hpp>

#include "hiddenqutrit/errors.hpp"
#include "hiddenqutrit/metrics.hpp"

namespace hq {

namespace {

using Json = nlohmann::ordered_json;

Json matrix_fields(const Matrix4c& m) {
  Json out;
  out["basis"] = Json::array();
  for (const char* label : kCoupledLabels) out["basis"].push_back(label);
  Json re = Json::array();
  Json im = Json::array();
  for (int i = 0; i < 4; ++i) {
    Json re_row = Json::array();
    Json im_row = Json::array();
    for (int j = 0; j < 4; ++j) {
      re_row.push_back(m(i, j).real());
      im_row.push_back(m(i, j).imag());
    }
    re.push_back(re_row);
    im.push_back(im_row);
  }
  out["re"] = re;
  out["im"] = im;
  return out;
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace

std::string counts_to_json(const std::vector<CountRecord>& records) {
  Json out = Json::array();
  for (const auto& r : records) {
    Json entry;
    entry["h_deg"] = r.setting.h_deg;
    entry["q_deg"] = r.setting.q_deg;
    entry["kind"] = kind_to_string(r.setting.kind);
    entry["counts"] = r.counts;
    entry["exposure"] = r.exposure;
    out.push_back(entry);
  }
  return out.dump(2) + "\n";
}

std::vector<CountRecord> counts_from_json(const std::string& text) {
  const Json in = parse(text);
  if (!in.is_array() || in.empty()) {
    throw IoError("counts JSON must be a non-empty array");
  }
  std::vector<CountRecord> records;
  records.reserve(in.size());
  try {
    for (const auto& entry : in) {
      CountRecord r;
      r.setting.h_deg = entry.at("h_deg").get<double>();
      r.setting.q_deg = entry.at("q_deg").get<double>();
      r.setting.kind = kind_from_string(entry.at("kind").get<std::string>());
      r.counts = entry.at("counts").get<std::int64_t>();
      r.exposure = entry.at("exposure").get<double>();
      if (r.counts < 0) throw ValidationError("negative counts");
      if (!(r.exposure > 0.0)) throw ValidationError("non-positive exposure");
      records.push_back(r);
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed count record: ") + e.what());
  }
  return records;
}

std::string state_to_json(const VisibleDensityMatrix& rho) {
  return matrix_fields(rho.matrix()).dump(2) + "\n";
}

std::string result_to_json(const TomographyResult& result) {
  Json out = matrix_fields(result.estimate.matrix());
  out["flux"] = result.flux_estimate;
  out["method"] = method_to_string(result.method);
  if (result.method == Method::Mle) {
    out["nll"] = result.diagnostics.nll;
    out["iterations"] = result.diagnostics.iterations;
  } else {
    out["residual"] = result.diagnostics.residual;
    out["psd_projected"] = result.diagnostics.psd_projected;
  }
  return out.dump(2) + "\n";
}

VisibleDensityMatrix state_from_json(const std::string& text,
                                     bool require_psd) {
  const Json in = parse(text);
  Matrix4c m;
  try {
    const auto& re = in.at("re");
    const auto& im = in.at("im");
    for (int i = 0; i < 4; ++i) {
      for (int j = 0; j < 4; ++j) {
        m(i, j) = Complex(re.at(i).at(j).get<double>(),
                          im.at(i).at(j).get<double>());
      }
    }
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("malformed state JSON: ") + e.what());
  }
  return VisibleDensityMatrix::from_matrix(m, require_psd);
}

MetricsReport compute_metrics(const VisibleDensityMatrix& rho) {
  MetricsReport report;
  report.fidelity_noon = fidelity(rho, noon_target());
  report.concurrence = concurrence(rho);
  report.purity = purity(rho);
  report.populations = populations(rho);
  return report;
}

std::string metrics_to_json(const MetricsReport& report) {
  Json out;
  out["fidelity_noon"] = report.fidelity_noon;
  out["concurrence"] = report.concurrence;
  out["purity"] = report.purity;
  Json pops;
  pops["p_HH"] = report.populations.p_hh;
  pops["p_psi_plus"] = report.populations.p_psi_plus;
  pops["p_VV"] = report.populations.p_vv;
  pops["p_psi_minus"] = report.populations.p_psi_minus;
  out["populations"] = pops;
  return out.dump(2) + "\n";
}

}  // namespace hq
