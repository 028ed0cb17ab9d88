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

// Run configuration: a defaults document, the user's inputs and --set
// overrides merged on top, validated field by field against a fixed schema.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "ftqc/cli/embedded_defaults.hpp"
#include "ftqc/cli/yaml_json.hpp"
#include "ftqc/estimator.hpp"

namespace ftqc::cli {

inline constexpr const char* kReportSchema = "ftqc-estimator/report";
inline constexpr const char* kDefaultsEnv = "FTQC_DEFAULTS";

/// Diagnostics that map to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<std::string> diagnostics)
      : std::runtime_error(join(diagnostics)), diagnostics_(std::move(diagnostics)) {}
  explicit ConfigError(const std::string& diagnostic)
      : ConfigError(std::vector<std::string>{diagnostic}) {}

  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  static std::string join(const std::vector<std::string>& lines) {
    std::string out;
    for (const auto& l : lines) out += (out.empty() ? "" : "\n") + l;
    return out;
  }
  std::vector<std::string> diagnostics_;
};

// ---------------------------------------------------------------------------
// Schema

enum class FieldType { number, integer, boolean, string, choice, scheme_list };

/// Returns an error message, or nothing when the value is acceptable.
using NumberCheck = std::function<std::optional<std::string>(double)>;

struct FieldSpec {
  std::string path;
  FieldType type = FieldType::number;
  bool required = false;
  std::vector<std::string> choices;
  NumberCheck check;
};

namespace checks {

inline NumberCheck positive() {
  return [](double x) -> std::optional<std::string> {
    if (x > 0) return std::nullopt;
    return "must be > 0";
  };
}
inline NumberCheck nonnegative() {
  return [](double x) -> std::optional<std::string> {
    if (x >= 0) return std::nullopt;
    return "must be >= 0";
  };
}
inline NumberCheck open_unit() {
  return [](double x) -> std::optional<std::string> {
    if (x > 0 && x < 1) return std::nullopt;
    return "must lie in (0, 1)";
  };
}
inline NumberCheck closed_unit() {
  return [](double x) -> std::optional<std::string> {
    if (x >= 0 && x <= 1) return std::nullopt;
    return "must lie in [0, 1]";
  };
}
inline NumberCheck at_least(double lo) {
  return [lo](double x) -> std::optional<std::string> {
    if (x >= lo) return std::nullopt;
    std::ostringstream os;
    os << "must be >= " << lo;
    return os.str();
  };
}

}  // namespace checks

inline const std::vector<FieldSpec>& schema() {
  using enum FieldType;
  static const std::vector<FieldSpec> fields = {
      {"physical.p", number, true, {}, checks::open_unit()},
      {"physical.p_star", number, false, {}, [](double x) -> std::optional<std::string> {
         if (x > 0 && x <= 1) return std::nullopt;
         return "must lie in (0, 1]";
       }},
      {"physical.prefactor", number, false, {}, checks::positive()},
      {"physical.t_se", number, false, {}, checks::positive()},
      {"physical.tau_r", number, false, {}, checks::positive()},
      {"algorithm.scheme", choice, true, {"plaq_serial", "plaq_L", "plaq_L2", "qsp"}, {}},
      {"algorithm.L", integer, true, {}, [](double x) -> std::optional<std::string> {
         if (x >= 2 && std::fmod(x, 2) == 0) return std::nullopt;
         return "must be an even integer >= 2";
       }},
      {"algorithm.t", number, false, {}, checks::positive()},
      {"algorithm.U", number, true, {}, checks::nonnegative()},
      {"algorithm.T_evol", number, true, {}, checks::positive()},
      {"algorithm.eps_total", number, true, {}, checks::open_unit()},
      {"algorithm.m", integer, false, {}, [](double x) -> std::optional<std::string> {
         if (x == 0 || x >= 2) return std::nullopt;
         return "must be 0 (meaning L^2) or >= 2";
       }},
      {"algorithm.f_r", number, false, {}, checks::closed_unit()},
      {"algorithm.nonclifford_interval_timesteps", integer, false, {}, checks::at_least(1)},
      {"algorithm.log_base", choice, false, {"natural", "base2"}, {}},
      {"algorithm.qsp_throttle", boolean, false, {}, {}},
      {"factory.name", choice, false, {"auto", "F1", "F2", "custom"}, {}},
      {"factory.cultivation", boolean, false, {}, {}},
      {"factory.max_count", integer, false, {}, checks::nonnegative()},
      {"factory.custom.name", string, false, {}, {}},
      {"factory.custom.qubits", number, false, {}, checks::positive()},
      {"factory.custom.batch_rounds", number, false, {}, checks::positive()},
      {"factory.custom.states_per_batch", integer, false, {}, checks::at_least(1)},
      {"factory.custom.out_infidelity", number, false, {}, checks::open_unit()},
      {"factory.custom.valid_p", number, false, {}, checks::nonnegative()},
      {"qec.E", number, false, {}, checks::open_unit()},
      {"qec.d_max", integer, false, {}, [](double x) -> std::optional<std::string> {
         if (x >= 3 && std::fmod(x, 2) == 1) return std::nullopt;
         return "must be an odd integer >= 3";
       }},
      {"qec.t_gate_budget", number, false, {}, checks::open_unit()},
      {"table1.p", number, false, {}, checks::open_unit()},
      {"table1.routing_factor", number, false, {}, checks::at_least(1)},
      {"table1.include_reaction_delay", boolean, false, {}, {}},
      {"table1.midpoint", choice, false, {"arithmetic", "geometric"}, {}},
      {"sensitivity.enabled", boolean, false, {}, {}},
      {"sensitivity.fraction", number, false, {}, [](double x) -> std::optional<std::string> {
         if (x >= 0 && x < 1) return std::nullopt;
         return "must lie in [0, 1)";
       }},
      {"compare.schemes", scheme_list, false, {}, {}},
      {"output.format", choice, false, {"json", "table", "csv"}, {}},
      {"output.path", string, false, {}, {}},
  };
  return fields;
}

inline const FieldSpec* find_field(const std::string& path) {
  for (const auto& f : schema()) {
    if (f.path == path) return &f;
  }
  return nullptr;
}

inline Json::json_pointer pointer(const std::string& dotted) {
  std::string p = "/" + dotted;
  std::replace(p.begin(), p.end(), '.', '/');
  return Json::json_pointer(p);
}

inline const Json* lookup(const Json& doc, const std::string& dotted) {
  const auto ptr = pointer(dotted);
  return doc.contains(ptr) ? &doc.at(ptr) : nullptr;
}

// ---------------------------------------------------------------------------
// Documents

inline std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Json parse_or_throw(const std::string& text, const std::string& origin) {
  try {
    Json doc = parse_document(text);
    if (doc.is_null()) return Json::object();
    if (!doc.is_object()) throw ConfigError(origin + ": top level must be a mapping");
    return doc;
  } catch (const ConfigError&) {
    throw;
  } catch (const std::exception& e) {
    throw ConfigError(origin + ": parse error: " + e.what());
  }
}

/// Defaults from $FTQC_DEFAULTS when set, else the copy compiled in.
inline Json load_defaults() {
  if (const char* path = std::getenv(kDefaultsEnv); path && *path) {
    return parse_or_throw(read_text(path), path);
  }
  return parse_or_throw(std::string(kEmbeddedDefaults), "embedded defaults");
}

/// A run config, or a JSON report whose recorded inputs are taken as the config.
inline Json load_inputs(const std::string& path) {
  Json doc = parse_or_throw(read_text(path), path);
  if (doc.contains("schema") && doc["schema"] == kReportSchema) {
    if (!doc.contains("inputs") || !doc["inputs"].is_object()) {
      throw ConfigError(path + ": report has no inputs section");
    }
    return doc["inputs"];
  }
  return doc;
}

/// Applies `section.key=value`; the value is read as YAML, so lists work.
inline void apply_override(Json& inputs, const std::string& assignment) {
  const auto eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("--set " + assignment + ": expected key=value");
  }
  const std::string key = assignment.substr(0, eq);
  Json value;
  try {
    value = yaml_to_json(YAML::Load(assignment.substr(eq + 1)));
  } catch (const std::exception& e) {
    throw ConfigError("--set " + key + ": " + e.what());
  }
  inputs[pointer(key)] = std::move(value);
}

inline void merge_into(Json& base, const Json& over) {
  for (auto it = over.begin(); it != over.end(); ++it) {
    if (it.value().is_object() && base.contains(it.key()) && base[it.key()].is_object()) {
      merge_into(base[it.key()], it.value());
    } else {
      base[it.key()] = it.value();
    }
  }
}

inline Json merged(const Json& defaults, const Json& inputs) {
  Json out = defaults;
  merge_into(out, inputs);
  return out;
}

// ---------------------------------------------------------------------------
// Validation

namespace detail {

inline void collect_leaves(const Json& node, const std::string& prefix,
                           std::vector<std::string>& out) {
  for (auto it = node.begin(); it != node.end(); ++it) {
    const std::string path = prefix.empty() ? it.key() : prefix + "." + it.key();
    if (it.value().is_object() && !find_field(path)) {
      collect_leaves(it.value(), path, out);
    } else {
      out.push_back(path);
    }
  }
}

inline std::string join_choices(const std::vector<std::string>& choices) {
  std::string out;
  for (std::size_t i = 0; i < choices.size(); ++i) {
    if (i) out += i + 1 == choices.size() ? " or " : ", ";
    out += choices[i];
  }
  return out;
}

inline std::optional<std::string> check_value(const FieldSpec& f, const Json& v) {
  switch (f.type) {
    case FieldType::number:
    case FieldType::integer: {
      if (!v.is_number()) return "expected a number";
      const double x = v.get<double>();
      if (!std::isfinite(x)) return "must be finite";
      if (f.type == FieldType::integer && std::trunc(x) != x) return "expected an integer";
      if (f.check) return f.check(x);
      return std::nullopt;
    }
    case FieldType::boolean:
      if (!v.is_boolean()) return "expected true or false";
      return std::nullopt;
    case FieldType::string:
      if (!v.is_string()) return "expected a string";
      return std::nullopt;
    case FieldType::choice:
      if (!v.is_string() ||
          std::find(f.choices.begin(), f.choices.end(), v.get<std::string>()) == f.choices.end()) {
        return "expected one of " + join_choices(f.choices);
      }
      return std::nullopt;
    case FieldType::scheme_list: {
      static const std::vector<std::string> names = {"plaq_serial", "plaq_L", "plaq_L2", "qsp"};
      if (!v.is_array() || v.empty()) return "expected a nonempty list of schemes";
      for (const auto& item : v) {
        if (!item.is_string() ||
            std::find(names.begin(), names.end(), item.get<std::string>()) == names.end()) {
          return "list entries must be one of " + join_choices(names);
        }
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// `compare` takes its schemes from compare.schemes; `table1` needs no algorithm.
enum class Mode { estimate, compare, table1 };

/// Field-path diagnostics for a fully merged, single-point config.
inline std::vector<std::string> validate(const Json& cfg, Mode mode = Mode::estimate) {
  std::vector<std::string> errs;

  std::vector<std::string> leaves;
  detail::collect_leaves(cfg, "", leaves);
  for (const auto& path : leaves) {
    if (!find_field(path)) errs.push_back(path + ": unknown field");
  }

  const bool custom_factory = [&] {
    const Json* n = lookup(cfg, "factory.name");
    return n && n->is_string() && n->get<std::string>() == "custom";
  }();

  for (const auto& f : schema()) {
    const bool is_algorithm = f.path.rfind("algorithm.", 0) == 0;
    if (mode == Mode::table1 && (is_algorithm || f.path == "physical.p")) continue;
    if (mode == Mode::compare && f.path == "algorithm.scheme") continue;
    const Json* v = lookup(cfg, f.path);
    const bool needed =
        f.required || (custom_factory && f.path.rfind("factory.custom.", 0) == 0);
    if (!v || v->is_null()) {
      if (needed) errs.push_back(f.path + ": required field is missing");
      continue;
    }
    if (v->is_array() && f.type != FieldType::scheme_list) {
      errs.push_back(f.path + ": lists of values are only accepted by the sweep command");
      continue;
    }
    if (auto msg = detail::check_value(f, *v)) errs.push_back(f.path + ": " + *msg);
  }

  const Json* p = lookup(cfg, mode == Mode::table1 ? "table1.p" : "physical.p");
  const Json* p_star = lookup(cfg, "physical.p_star");
  if (p && p_star && p->is_number() && p_star->is_number() &&
      p->get<double>() >= p_star->get<double>()) {
    std::ostringstream os;
    os << (mode == Mode::table1 ? "table1.p" : "physical.p")
       << ": PhysicalAssumptions requires 0 < p < p_star <= 1 (p = " << p->get<double>()
       << ", p_star = " << p_star->get<double>() << ")";
    errs.push_back(os.str());
  }
  return errs;
}

// ---------------------------------------------------------------------------
// Sweep grids

/// Schema fields holding a list of values, in schema order (at most three).
inline std::vector<std::string> ranged_fields(const Json& cfg) {
  std::vector<std::string> out;
  for (const auto& f : schema()) {
    if (f.type == FieldType::scheme_list) continue;
    if (const Json* v = lookup(cfg, f.path); v && v->is_array()) out.push_back(f.path);
  }
  return out;
}

inline constexpr std::size_t kMaxRangedFields = 3;

/// Cartesian product in lexicographic order over `fields` (first field
/// varies slowest). Empty when any list is empty.
inline std::vector<Json> expand_grid(const Json& cfg, const std::vector<std::string>& fields) {
  std::vector<Json> points{cfg};
  for (const auto& path : fields) {
    const Json values = cfg.at(pointer(path));
    std::vector<Json> next;
    next.reserve(points.size() * values.size());
    for (const auto& base : points) {
      for (const auto& v : values) {
        Json pt = base;
        pt[pointer(path)] = v;
        next.push_back(std::move(pt));
      }
    }
    points = std::move(next);
  }
  return points;
}

// ---------------------------------------------------------------------------
// Typed view

struct RunConfig {
  PhysicalAssumptions physical;
  fh::FHInstance instance;
  fh::Scheme scheme = fh::Scheme::plaq_L2;
  EstimateOptions options;
  std::string factory_name = "auto";
  bool cultivation = false;
  std::optional<FactorySpec> custom_factory;
  SimpleOptions table1;
  double table1_p = 1e-3;
  Midpoint midpoint = Midpoint::arithmetic;
  bool sensitivity_enabled = true;
  double sensitivity_fraction = 0.05;
  std::vector<fh::Scheme> compare_schemes;
  std::string format = "json";
  std::string output_path;

  /// The factory the estimate runs with, after auto selection and the
  /// cultivation what-if.
  FactorySpec factory() const {
    FactorySpec spec = factory_name == "auto"     ? builtin_for(physical.p)
                       : factory_name == "custom" ? *custom_factory
                                                  : find_builtin(factory_name);
    return cultivation ? cultivation_variant(spec) : spec;
  }
};

namespace detail {

template <typename T>
void read(const Json& cfg, const std::string& path, T& out) {
  if (const Json* v = lookup(cfg, path); v && !v->is_null()) out = v->get<T>();
}

}  // namespace detail

/// Builds the typed view of a config that `validate` accepted.
inline RunConfig to_run_config(const Json& cfg, Mode mode = Mode::estimate) {
  using detail::read;
  RunConfig rc;
  read(cfg, "physical.p", rc.physical.p);
  read(cfg, "physical.p_star", rc.physical.p_star);
  read(cfg, "physical.prefactor", rc.physical.prefactor);
  read(cfg, "physical.t_se", rc.physical.t_se);
  read(cfg, "physical.tau_r", rc.physical.tau_r);

  if (mode != Mode::table1) {
    if (const Json* v = lookup(cfg, "algorithm.scheme"); v && v->is_string()) {
      rc.scheme = fh::parse_scheme(v->get<std::string>());
    }
    read(cfg, "algorithm.L", rc.instance.L);
    read(cfg, "algorithm.t", rc.instance.t_hop);
    read(cfg, "algorithm.U", rc.instance.U);
    read(cfg, "algorithm.T_evol", rc.instance.T_evol);
    read(cfg, "algorithm.eps_total", rc.instance.eps_total);
  }
  auto& alg = rc.options.algorithm;
  read(cfg, "algorithm.m", alg.hwp_ancillas);
  read(cfg, "algorithm.f_r", alg.f_r);
  read(cfg, "algorithm.nonclifford_interval_timesteps", alg.nonclifford_interval_timesteps);
  std::string log_base = "natural";
  read(cfg, "algorithm.log_base", log_base);
  alg.log_base = log_base == "base2" ? fh::LogBase::base2 : fh::LogBase::natural;
  read(cfg, "algorithm.qsp_throttle", alg.qsp_throttle);

  read(cfg, "factory.name", rc.factory_name);
  read(cfg, "factory.cultivation", rc.cultivation);
  read(cfg, "factory.max_count", rc.options.max_factories);
  if (rc.factory_name == "custom") {
    FactorySpec spec;
    spec.name = "custom";
    read(cfg, "factory.custom.name", spec.name);
    spec.qubits = Rational::from_double(cfg.at(pointer("factory.custom.qubits")).get<double>());
    spec.batch_rounds =
        Rational::from_double(cfg.at(pointer("factory.custom.batch_rounds")).get<double>());
    read(cfg, "factory.custom.states_per_batch", spec.states_per_batch);
    read(cfg, "factory.custom.out_infidelity", spec.out_infidelity);
    read(cfg, "factory.custom.valid_p", spec.valid_p);
    rc.custom_factory = spec;
  }

  read(cfg, "qec.E", rc.options.E_qec);
  read(cfg, "qec.d_max", rc.options.d_max);
  read(cfg, "qec.t_gate_budget", rc.options.t_gate_budget);
  rc.table1.E = rc.options.E_qec;
  rc.table1.d_max = rc.options.d_max;
  read(cfg, "table1.p", rc.table1_p);
  read(cfg, "table1.routing_factor", rc.table1.routing_factor);
  read(cfg, "table1.include_reaction_delay", rc.table1.include_reaction_delay);
  std::string mid = "arithmetic";
  read(cfg, "table1.midpoint", mid);
  rc.midpoint = mid == "geometric" ? Midpoint::geometric : Midpoint::arithmetic;

  read(cfg, "sensitivity.enabled", rc.sensitivity_enabled);
  read(cfg, "sensitivity.fraction", rc.sensitivity_fraction);
  std::vector<std::string> schemes = {"plaq_serial", "plaq_L", "plaq_L2", "qsp"};
  read(cfg, "compare.schemes", schemes);
  for (const auto& s : schemes) rc.compare_schemes.push_back(fh::parse_scheme(s));
  read(cfg, "output.format", rc.format);
  read(cfg, "output.path", rc.output_path);
  return rc;
}

/// Validates, then runs every module precondition so that nothing fails
/// after computation starts.
inline RunConfig checked_run_config(const Json& cfg, Mode mode = Mode::estimate) {
  if (auto errs = validate(cfg, mode); !errs.empty()) throw ConfigError(std::move(errs));
  RunConfig rc = to_run_config(cfg, mode);
  try {
    if (mode != Mode::table1) {
      rc.physical.validate();
      rc.instance.validate();
      rc.factory().validate();
    } else {
      PhysicalAssumptions a = rc.physical;
      a.p = rc.table1_p;
      a.validate();
    }
  } catch (const EstimatorError& e) {
    const std::string where = std::string(e.what()).find("factory") != std::string::npos
                                  ? "factory"
                                  : "config";
    throw ConfigError(where + ": " + e.what());
  }
  return rc;
}

}  // namespace ftqc::cli
