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

// The ftqc_estimate command line: estimate, table1, sweep and compare.
// Exit status is 0 on success, 2 for unusable input and 3 when the
// requested computation is infeasible.

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "ftqc/cli/config.hpp"
#include "ftqc/cli/report.hpp"
#include "ftqc/estimator.hpp"

namespace ftqc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 2;
inline constexpr int kExitInfeasible = 3;

struct CommonFlags {
  std::vector<std::string> overrides;
  std::string format;  ///< empty: use output.format
  std::string output;  ///< empty: use output.path, then stdout
};

struct RunOutput {
  int code = kExitOk;
  std::string body;
};

namespace detail {

inline Json inputs_with_overrides(Json inputs, const CommonFlags& flags) {
  for (const auto& a : flags.overrides) apply_override(inputs, a);
  return inputs;
}

inline std::string pick_format(const CommonFlags& flags, const RunConfig& rc) {
  return flags.format.empty() ? rc.format : flags.format;
}

inline std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

/// Parses "X" or "LO:HI"; returns the value and whether it was a range.
inline std::pair<double, bool> parse_quantity(const std::string& text, const std::string& flag,
                                              Midpoint convention) {
  auto number = [&](const std::string& s) {
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
      throw ConfigError(flag + ": '" + text + "' is not a number or LO:HI range");
    }
    return x;
  };
  const auto colon = text.find(':');
  if (colon == std::string::npos) return {number(text), false};
  const double lo = number(text.substr(0, colon));
  const double hi = number(text.substr(colon + 1));
  if (!(lo > 0 && hi >= lo)) throw ConfigError(flag + ": range needs 0 < LO <= HI");
  return {midpoint(lo, hi, convention), true};
}

}  // namespace detail

// ---------------------------------------------------------------------------
// estimate

inline RunOutput run_estimate(const Json& defaults, const Json& inputs, const CommonFlags& flags) {
  const RunConfig rc = checked_run_config(merged(defaults, inputs));
  const std::string format = detail::pick_format(flags, rc);
  const FactorySpec spec = rc.factory();
  const ResourceEstimate est = estimate(rc.instance, rc.scheme, rc.physical, spec, rc.options);

  std::optional<SensitivityBand> band;
  std::vector<std::string> warnings = est.warnings;
  if (rc.sensitivity_enabled) {
    try {
      band = sensitivity(rc.instance, rc.scheme, rc.physical, spec, rc.options,
                         rc.sensitivity_fraction);
    } catch (const EstimatorError& e) {
      warnings.push_back(std::string("sensitivity band unavailable: ") + e.what());
    }
  }
  const auto flags_used = assumption_flags(rc, inputs, rc.scheme);

  std::ostringstream os;
  if (format == "json") {
    Json doc = report_header("estimate", inputs, defaults);
    doc["estimate"] = to_json(est);
    doc["sensitivity"] = band ? band_json(*band) : Json(nullptr);
    doc["assumption_flags"] = to_json(flags_used);
    doc["warnings"] = warnings_json(warnings);
    os << detail::dump(doc);
  } else if (format == "csv") {
    write_csv_row(os, csv_columns());
    write_csv_row(os, csv_cells(est, rc.physical.p));
  } else {
    os << "Fermi-Hubbard L=" << rc.instance.L << " U/t=" << rc.instance.U / rc.instance.t_hop
       << " T=" << rc.instance.T_evol << " eps=" << rc.instance.eps_total
       << " p=" << rc.physical.p << "\n";
    ResourceEstimate shown = est;
    shown.warnings = warnings;
    write_table(os, shown);
    if (band) {
      os << "sensitivity +/-" << fmt_sig(100 * band->fraction, 3) << "%\n";
      table_rows(os, {{"physical qubits", fmt_sig(band->low.physical_qubits_total) + " .. " +
                                              fmt_sig(band->high.physical_qubits_total)},
                      {"wall time", fmt_duration(band->low.wall_time_seconds) + " .. " +
                                        fmt_duration(band->high.wall_time_seconds)}});
    }
    write_flags(os, flags_used);
  }
  return {kExitOk, os.str()};
}

// ---------------------------------------------------------------------------
// compare

inline RunOutput run_compare(const Json& defaults, const Json& inputs, const CommonFlags& flags) {
  const RunConfig rc = checked_run_config(merged(defaults, inputs), Mode::compare);
  const std::string format = detail::pick_format(flags, rc);
  const Comparison cmp =
      compare(rc.instance, rc.compare_schemes, rc.physical, rc.factory(), rc.options);

  std::vector<AssumptionFlag> flags_used;
  std::vector<std::string> warnings;
  for (const auto& row : cmp.rows) {
    RunConfig no_band = rc;
    no_band.sensitivity_enabled = false;
    for (auto& f : assumption_flags(no_band, inputs, fh::parse_scheme(row.estimate.label))) {
      const bool seen = std::any_of(flags_used.begin(), flags_used.end(),
                                    [&](const AssumptionFlag& g) { return g.name == f.name; });
      if (!seen) flags_used.push_back(std::move(f));
    }
    for (const auto& w : row.estimate.warnings) {
      if (std::find(warnings.begin(), warnings.end(), w) == warnings.end()) warnings.push_back(w);
    }
  }

  std::ostringstream os;
  if (format == "json") {
    Json doc = report_header("compare", inputs, defaults);
    Json rows = Json::array();
    for (const auto& row : cmp.rows) {
      Json j = to_json(row.estimate);
      j["time_ratio"] = row.time_ratio;
      j["qubit_ratio"] = row.qubit_ratio;
      j["volume_ratio"] = row.volume_ratio;
      rows.push_back(std::move(j));
    }
    doc["comparison"] = std::move(rows);
    doc["assumption_flags"] = to_json(flags_used);
    doc["warnings"] = warnings_json(warnings);
    os << detail::dump(doc);
  } else if (format == "csv") {
    auto header = csv_columns();
    header.insert(header.end(), {"time_ratio", "qubit_ratio", "volume_ratio"});
    write_csv_row(os, header);
    for (const auto& row : cmp.rows) {
      auto cells = csv_cells(row.estimate, rc.physical.p);
      cells.insert(cells.end(), {csv_number(row.time_ratio), csv_number(row.qubit_ratio),
                                 csv_number(row.volume_ratio)});
      write_csv_row(os, cells);
    }
  } else {
    os << "Fermi-Hubbard L=" << rc.instance.L << " p=" << rc.physical.p
       << " (ratios relative to " << cmp.rows.front().estimate.label << ")\n";
    os << std::left << std::setw(13) << "scheme" << std::setw(4) << "d" << std::setw(12)
       << "qubits" << std::setw(16) << "wall time" << std::setw(12) << "T count"
       << std::setw(10) << "time x" << std::setw(10) << "qubits x" << "volume x\n";
    for (const auto& row : cmp.rows) {
      const auto& e = row.estimate;
      os << std::left << std::setw(13) << e.label << std::setw(4) << e.d << std::setw(12)
         << fmt_sig(e.physical_qubits_total, 3) << std::setw(16)
         << fmt_duration(e.wall_time_seconds) << std::setw(12) << fmt_sig(e.t_count, 3)
         << std::setw(10) << fmt_sig(row.time_ratio, 3) << std::setw(10)
         << fmt_sig(row.qubit_ratio, 3) << fmt_sig(row.volume_ratio, 3) << "\n";
    }
    for (const auto& w : warnings) os << "warning: " << w << "\n";
    write_flags(os, flags_used);
  }
  return {kExitOk, os.str()};
}

// ---------------------------------------------------------------------------
// table1

struct Table1Args {
  std::string logical;
  std::string gates;
  std::optional<double> p;
  std::string midpoint;  ///< empty: table1.midpoint
};

inline RunOutput run_table1(const Json& defaults, const Json& inputs, const Table1Args& args,
                            const CommonFlags& flags) {
  Json cfg = merged(defaults, inputs);
  if (args.p) cfg[pointer("table1.p")] = *args.p;
  if (!args.midpoint.empty()) cfg[pointer("table1.midpoint")] = args.midpoint;
  const RunConfig rc = checked_run_config(cfg, Mode::table1);
  const std::string format = detail::pick_format(flags, rc);

  const auto [Q, q_range] = detail::parse_quantity(args.logical, "--logical", rc.midpoint);
  const auto [G, g_range] = detail::parse_quantity(args.gates, "--gates", rc.midpoint);
  PhysicalAssumptions assume = rc.physical;
  assume.p = rc.table1_p;
  ResourceEstimate est;
  try {
    est = simple_estimate(Q, G, assume, rc.table1);
  } catch (const EstimatorError& e) {
    if (e.kind() == ErrorKind::invalid_argument) throw ConfigError(std::string("table1: ") + e.what());
    throw;
  }

  std::vector<AssumptionFlag> flags_used;
  auto add = [&](const std::string& path, Json value, bool user) {
    flags_used.push_back({path, std::move(value), user ? "user" : source_of(inputs, path)});
  };
  add("qec.E", rc.table1.E, false);
  add("table1.routing_factor", rc.table1.routing_factor, false);
  add("table1.include_reaction_delay", rc.table1.include_reaction_delay, false);
  add("table1.p", rc.table1_p, args.p.has_value());
  if (q_range || g_range) add("table1.midpoint", to_string(rc.midpoint), !args.midpoint.empty());

  std::ostringstream os;
  if (format == "json") {
    Json row_inputs = {{"logical", args.logical}, {"gates", args.gates}};
    Json doc = report_header("table1", inputs, defaults);
    doc["row"] = row_inputs;
    doc["estimate"] = {{"logical_qubits", Q},
                       {"gate_count", G},
                       {"p", assume.p},
                       {"d", est.d},
                       {"physical_qubits_total", est.physical_qubits_total},
                       {"logical_patches", est.logical_patches},
                       {"wall_time_seconds", est.wall_time_seconds},
                       {"spacetime_volume_patch_rounds", est.spacetime_volume},
                       {"qec_failure_realized", est.qec_failure}};
    doc["assumption_flags"] = to_json(flags_used);
    doc["warnings"] = Json::array();
    os << detail::dump(doc);
  } else if (format == "csv") {
    write_csv_row(os, {"logical_qubits", "gate_count", "p", "d", "physical_qubits_total",
                       "wall_time_seconds", "spacetime_volume_patch_rounds"});
    write_csv_row(os, {csv_number(Q), csv_number(G), csv_number(assume.p), std::to_string(est.d),
                       csv_number(est.physical_qubits_total), csv_number(est.wall_time_seconds),
                       csv_number(est.spacetime_volume)});
  } else {
    os << "minimal-footprint estimate Q=" << fmt_sig(Q) << " G=" << fmt_sig(G)
       << " p=" << assume.p << "\n";
    table_rows(os, {{"code distance", std::to_string(est.d)},
                    {"physical qubits", fmt_sig(est.physical_qubits_total, 3)},
                    {"wall time", fmt_duration(est.wall_time_seconds)}});
    write_flags(os, flags_used);
  }
  return {kExitOk, os.str()};
}

// ---------------------------------------------------------------------------
// sweep

inline RunOutput run_sweep(const Json& defaults, const Json& inputs, const CommonFlags& flags,
                           unsigned threads = 0) {
  if (!flags.format.empty() && flags.format != "csv") {
    throw ConfigError("--format: sweep writes csv only");
  }
  const Json cfg = merged(defaults, inputs);
  const auto fields = ranged_fields(cfg);
  if (fields.size() > kMaxRangedFields) {
    std::string list;
    for (const auto& f : fields) list += (list.empty() ? "" : ", ") + f;
    throw ConfigError("sweep: at most 3 ranged fields are supported, got " +
                      std::to_string(fields.size()) + " (" + list + ")");
  }
  const std::vector<Json> points = expand_grid(cfg, fields);

  std::vector<std::string> errs;
  std::vector<RunConfig> configs;
  configs.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    try {
      configs.push_back(checked_run_config(points[i]));
    } catch (const ConfigError& e) {
      for (const auto& d : e.diagnostics()) errs.push_back("point " + std::to_string(i) + ": " + d);
    }
  }
  if (points.empty()) {
    // An empty list still gets the remaining fields validated.
    for (auto& d : validate(cfg)) {
      if (d.find("only accepted by the sweep") == std::string::npos) errs.push_back(d);
    }
  }
  if (!errs.empty()) throw ConfigError(std::move(errs));

  std::vector<std::vector<std::string>> rows(points.size());
  std::vector<char> infeasible(points.size(), 0);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < points.size(); i = next++) {
      const RunConfig& rc = configs[i];
      std::vector<std::string> cells;
      try {
        cells = csv_cells(estimate(rc.instance, rc.scheme, rc.physical, rc.factory(), rc.options),
                          rc.physical.p);
      } catch (const EstimatorError& e) {
        cells = csv_failure_cells(e.is_infeasible() ? "infeasible" : "invalid",
                                  fh::to_string(rc.scheme), rc.physical.p, e.what());
        infeasible[i] = 1;
      }
      std::vector<std::string> row{std::to_string(i)};
      for (const auto& f : fields) row.push_back(csv_scalar(points[i].at(pointer(f))));
      row.insert(row.end(), cells.begin(), cells.end());
      rows[i] = std::move(row);
    }
  };
  const unsigned n_threads = std::max(
      1u, std::min<unsigned>(threads ? threads : std::thread::hardware_concurrency(),
                             static_cast<unsigned>(points.size())));
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < n_threads; ++t) pool.emplace_back(worker);
    worker();
  }

  std::ostringstream os;
  std::vector<std::string> header{"index"};
  header.insert(header.end(), fields.begin(), fields.end());
  header.insert(header.end(), csv_columns().begin(), csv_columns().end());
  write_csv_row(os, header);
  for (const auto& row : rows) write_csv_row(os, row);
  const bool any_infeasible = std::any_of(infeasible.begin(), infeasible.end(),
                                          [](char c) { return c != 0; });
  return {any_infeasible ? kExitInfeasible : kExitOk, os.str()};
}

// ---------------------------------------------------------------------------
// Entry point

inline int emit(const RunOutput& result, const std::string& path, std::ostream& out,
                std::ostream& err) {
  if (path.empty()) {
    out << result.body;
    return result.code;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file || !(file << result.body)) {
    err << "error: cannot write " << path << "\n";
    return kExitInvalid;
  }
  return result.code;
}

inline std::string config_output_path(const Json& defaults, const Json& inputs) {
  const Json cfg = merged(defaults, inputs);
  const Json* v = lookup(cfg, "output.path");
  return v && v->is_string() ? v->get<std::string>() : "";
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout,
               std::ostream& err = std::cerr) {
  CLI::App app{"Fault-tolerant quantum computing resource estimator", "ftqc_estimate"};
  app.require_subcommand(1);
  CommonFlags flags;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--set", flags.overrides, "Override a config field, e.g. physical.p=1e-4");
    sub->add_option("--format", flags.format, "Output format")
        ->check(CLI::IsMember({"json", "table", "csv"}));
    sub->add_option("--output,-o", flags.output, "Write the report to this file");
  };

  std::string config_path;
  auto* est = app.add_subcommand("estimate", "Estimate one Fermi-Hubbard compilation");
  est->add_option("config", config_path, "Run config (YAML or JSON report)")->required();
  add_common(est);

  auto* sweep = app.add_subcommand("sweep", "Cartesian sweep over list-valued fields (CSV)");
  sweep->add_option("config", config_path, "Run config with up to 3 list-valued fields")
      ->required();
  unsigned sweep_threads = 0;
  sweep->add_option("--threads", sweep_threads, "Worker threads (0: hardware concurrency)");
  add_common(sweep);

  auto* cmp = app.add_subcommand("compare", "Compare schemes listed in compare.schemes");
  cmp->add_option("config", config_path, "Run config")->required();
  add_common(cmp);

  Table1Args t1;
  double t1_p = 0;
  auto* table1 = app.add_subcommand("table1", "Minimal-footprint estimate from Q and gate count");
  table1->add_option("--logical", t1.logical, "Logical qubits, or LO:HI")->required();
  table1->add_option("--gates", t1.gates, "T/Toffoli count, or LO:HI")->required();
  auto* p_opt = table1->add_option("--p", t1_p, "Physical error rate");
  table1->add_option("--midpoint", t1.midpoint, "Range midpoint convention")
      ->check(CLI::IsMember({"arithmetic", "geometric"}));
  add_common(table1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    const Json defaults = load_defaults();
    Json inputs = Json::object();
    if (!config_path.empty()) inputs = load_inputs(config_path);
    inputs = detail::inputs_with_overrides(std::move(inputs), flags);
    const std::string path =
        flags.output.empty() ? config_output_path(defaults, inputs) : flags.output;

    RunOutput result;
    if (*est) {
      result = run_estimate(defaults, inputs, flags);
    } else if (*sweep) {
      result = run_sweep(defaults, inputs, flags, sweep_threads);
    } else if (*cmp) {
      result = run_compare(defaults, inputs, flags);
    } else {
      if (*p_opt) t1.p = t1_p;
      result = run_table1(defaults, inputs, t1, flags);
    }
    return emit(result, path, out, err);
  } catch (const ConfigError& e) {
    for (const auto& d : e.diagnostics()) err << "error: " << d << "\n";
    return kExitInvalid;
  } catch (const EstimatorError& e) {
    err << (e.is_infeasible() ? "infeasible: " : "error: ") << e.what() << "\n";
    return e.is_infeasible() ? kExitInfeasible : kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
}

}  // namespace ftqc::cli
