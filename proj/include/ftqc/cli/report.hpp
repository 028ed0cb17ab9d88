// Copyright 2026 The ftqc-estimator Authors
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

// Report emission: one versioned JSON document per run, an aligned text
// table for people, and CSV with a frozen column order for sweeps.

#include <array>
#include <cstdio>
#include <iomanip>
#include <sstream>
#include <string>
#include <vector>

#include "ftqc/cli/config.hpp"
#include "ftqc/estimator.hpp"

namespace ftqc::cli {

inline constexpr const char* kSchemaVersion = "1.0";

// ---------------------------------------------------------------------------
// Assumption flags

struct AssumptionFlag {
  std::string name;
  Json value;
  std::string source;  ///< "default" or "user"
};

inline std::string source_of(const Json& inputs, const std::string& path) {
  return lookup(inputs, path) ? "user" : "default";
}

/// Every inferred or defaulted setting that influenced a number in the report.
inline std::vector<AssumptionFlag> assumption_flags(const RunConfig& rc, const Json& inputs,
                                                    fh::Scheme scheme) {
  std::vector<AssumptionFlag> out;
  auto add = [&](const std::string& path, Json value) {
    out.push_back({path, std::move(value), source_of(inputs, path)});
  };
  add("qec.E", rc.options.E_qec);
  add("qec.t_gate_budget", rc.options.t_gate_budget);
  out.push_back({"error_split.algorithm_share", fh::kAlgorithmShare, "model"});
  if (rc.factory_name == "auto") add("factory.name", "auto:" + rc.factory().name);
  if (rc.cultivation) {
    // Qubits and batch time shrink 5x; the output infidelity is carried over unchanged.
    out.push_back({"factory.cultivation.out_infidelity", rc.factory().out_infidelity, "model"});
  }
  switch (scheme) {
    case fh::Scheme::plaq_serial:
      add("algorithm.m", fh::resolved_hwp_ancillas(rc.instance, rc.options.algorithm));
      break;
    case fh::Scheme::plaq_L2:
      add("algorithm.f_r", rc.options.algorithm.f_r);
      add("algorithm.nonclifford_interval_timesteps",
          rc.options.algorithm.nonclifford_interval_timesteps);
      break;
    case fh::Scheme::qsp:
      add("algorithm.log_base", fh::to_string(rc.options.algorithm.log_base));
      add("algorithm.qsp_throttle", rc.options.algorithm.qsp_throttle);
      break;
    case fh::Scheme::plaq_L:
      break;
  }
  if (rc.sensitivity_enabled) add("sensitivity.fraction", rc.sensitivity_fraction);
  return out;
}

inline Json to_json(const std::vector<AssumptionFlag>& flags) {
  Json arr = Json::array();
  for (const auto& f : flags) {
    arr.push_back({{"name", f.name}, {"value", f.value}, {"source", f.source}});
  }
  return arr;
}

// ---------------------------------------------------------------------------
// Estimates

inline Json to_json(const ResourceEstimate& e) {
  const auto& b = e.budget_ledger;
  return {
      {"scheme", e.label},
      {"d", e.d},
      {"physical_qubits_total", e.physical_qubits_total},
      {"physical_qubits_by_role",
       {{"data_aux", e.physical_qubits_by_role.data_aux},
        {"routing", e.physical_qubits_by_role.routing},
        {"factories", e.physical_qubits_by_role.factories}}},
      {"logical_patches", e.logical_patches},
      {"wall_time_seconds", e.wall_time_seconds},
      {"spacetime_volume_patch_rounds", e.spacetime_volume},
      {"factory_count", e.factory_count},
      {"factory_name", e.factory_name},
      {"bottleneck", to_string(e.bottleneck)},
      {"magic_stretch", e.magic_stretch},
      {"t_count", e.t_count},
      {"timestep_depth", e.timestep_depth},
      {"reaction_depth", e.reaction_depth},
      {"repetitions", e.repetitions},
      {"sigma", e.sigma},
      {"budget_ledger",
       {{"eps_total", b.eps_total},
        {"eps_algorithm", b.eps_algorithm},
        {"eps_synthesis", b.eps_synthesis},
        {"eps_per_rotation", b.eps_s_per_rotation},
        {"rotation_count", b.rotation_count},
        {"E_qec", b.E_qec},
        {"qec_failure_realized", e.qec_failure},
        {"t_gate_budget", b.t_gate_budget},
        {"t_gate_error_realized", e.t_check.total_error},
        {"t_gate_pass", e.t_check.pass},
        {"max_factory_infidelity", e.t_check.max_infidelity}}},
  };
}

inline Json band_json(const SensitivityBand& band) {
  auto side = [](const ResourceEstimate& e) {
    return Json{{"d", e.d},
                {"physical_qubits_total", e.physical_qubits_total},
                {"wall_time_seconds", e.wall_time_seconds},
                {"spacetime_volume_patch_rounds", e.spacetime_volume},
                {"factory_count", e.factory_count}};
  };
  return {{"fraction", band.fraction},
          {"perturbed", Json::array({"factory.qubits", "factory.batch_rounds",
                                     "physical.p_star", "physical.prefactor"})},
          {"low", side(band.low)},
          {"high", side(band.high)}};
}

inline Json report_header(const std::string& command, const Json& inputs, const Json& defaults) {
  return {{"schema", kReportSchema},
          {"schema_version", kSchemaVersion},
          {"command", command},
          {"inputs", inputs},
          {"defaults", defaults}};
}

inline Json warnings_json(const std::vector<std::string>& warnings) {
  Json arr = Json::array();
  for (const auto& w : warnings) arr.push_back(w);
  return arr;
}

// ---------------------------------------------------------------------------
// Text

inline std::string fmt_sig(double x, int digits = 4) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

inline std::string fmt_duration(double seconds) {
  struct Unit { double scale; const char* name; };
  static constexpr std::array<Unit, 7> units{{{86400.0 * 365.25, "years"},
                                              {86400, "days"},
                                              {3600, "hours"},
                                              {60, "minutes"},
                                              {1, "s"},
                                              {1e-3, "ms"},
                                              {1e-6, "us"}}};
  for (const auto& u : units) {
    if (seconds >= u.scale) return fmt_sig(seconds / u.scale, 3) + " " + u.name;
  }
  return fmt_sig(seconds / 1e-9, 3) + " ns";
}

inline void table_rows(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& rows) {
  std::size_t w = 0;
  for (const auto& r : rows) w = std::max(w, r.first.size());
  for (const auto& [k, v] : rows) os << "  " << std::left << std::setw(static_cast<int>(w)) << k << "  " << v << "\n";
}

inline void write_table(std::ostream& os, const ResourceEstimate& e) {
  os << e.label << "\n";
  std::vector<std::pair<std::string, std::string>> rows = {
      {"code distance", std::to_string(e.d)},
      {"physical qubits", fmt_sig(e.physical_qubits_total)},
      {"  data + aux", fmt_sig(e.physical_qubits_by_role.data_aux)},
      {"  routing", fmt_sig(e.physical_qubits_by_role.routing)},
      {"  factories", fmt_sig(e.physical_qubits_by_role.factories)},
      {"wall time", fmt_duration(e.wall_time_seconds) + " (" + fmt_sig(e.wall_time_seconds) + " s)"},
      {"spacetime volume", fmt_sig(e.spacetime_volume) + " patch-rounds"},
  };
  if (e.factory_count > 0) {
    rows.push_back({"factories", std::to_string(e.factory_count) + " x " + e.factory_name});
    rows.push_back({"T count", fmt_sig(e.t_count)});
    rows.push_back({"sigma", std::to_string(e.sigma)});
    rows.push_back({"repetitions", std::to_string(e.repetitions)});
    rows.push_back({"bottleneck", to_string(e.bottleneck)});
  }
  table_rows(os, rows);
  for (const auto& w : e.warnings) os << "  warning: " << w << "\n";
}

inline void write_flags(std::ostream& os, const std::vector<AssumptionFlag>& flags) {
  os << "assumptions\n";
  for (const auto& f : flags) {
    os << "  " << f.name << " = " << (f.value.is_string() ? f.value.get<std::string>() : f.value.dump())
       << " [" << f.source << "]\n";
  }
}

// ---------------------------------------------------------------------------
// CSV

/// Frozen for schema 1.x. Sweeps prepend `index` and one column per ranged field.
inline const std::vector<std::string>& csv_columns() {
  static const std::vector<std::string> cols = {
      "status",          "scheme",        "p",
      "d",               "physical_qubits_total",
      "data_aux_qubits", "routing_qubits", "factory_qubits",
      "factory_count",   "factory_name",  "wall_time_seconds",
      "spacetime_volume_patch_rounds",    "t_count",
      "sigma",           "repetitions",   "t_budget_pass",
      "message"};
  return cols;
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

inline std::string csv_number(double x) { return Json(x).dump(); }

inline std::string csv_scalar(const Json& v) {
  return v.is_string() ? v.get<std::string>() : v.dump();
}

inline std::vector<std::string> csv_cells(const ResourceEstimate& e, double p) {
  return {"ok",
          e.label,
          csv_number(p),
          std::to_string(e.d),
          csv_number(e.physical_qubits_total),
          csv_number(e.physical_qubits_by_role.data_aux),
          csv_number(e.physical_qubits_by_role.routing),
          csv_number(e.physical_qubits_by_role.factories),
          std::to_string(e.factory_count),
          e.factory_name,
          csv_number(e.wall_time_seconds),
          csv_number(e.spacetime_volume),
          csv_number(e.t_count),
          std::to_string(e.sigma),
          std::to_string(e.repetitions),
          e.t_check.pass ? "true" : "false",
          ""};
}

/// A row for a grid point that could not be estimated.
inline std::vector<std::string> csv_failure_cells(const std::string& status,
                                                  const std::string& scheme, double p,
                                                  const std::string& message) {
  std::vector<std::string> cells(csv_columns().size());
  cells[0] = status;
  cells[1] = scheme;
  cells[2] = csv_number(p);
  cells.back() = message;
  return cells;
}

inline void write_csv_row(std::ostream& os, const std::vector<std::string>& cells) {
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) os << ',';
    os << csv_escape(cells[i]);
  }
  os << '\n';
}

}  // namespace ftqc::cli
