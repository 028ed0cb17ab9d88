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

// Acceptance checks. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "ftqc/cli/app.hpp"
#include "ftqc/cli/report.hpp"
#include "ftqc/cost_models.hpp"
#include "ftqc/estimator.hpp"
#include "ftqc/subroutines.hpp"
#include "invariants.hpp"
#include "oracles.hpp"

namespace {

using namespace ftqc;
using Clock = std::chrono::steady_clock;
using cli::Json;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Verdict {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [violated: " << what << "]";
    }
  }
};

int failures = 0;

void report(int id, const std::string& title, Verdict& v) {
  if (!v.pass) ++failures;
  std::cout << (v.pass ? "[PASS]" : "[FAIL]") << " criterion " << id << ": " << title << " --"
            << v.detail.str() << "\n";
}

template <class F>
void run_criterion(int id, const std::string& title, F&& body) {
  Verdict v;
  try {
    body(v);
  } catch (const std::exception& e) {
    v.require(false, std::string("exception: ") + e.what());
  }
  report(id, title, v);
}

PhysicalAssumptions at(double p) {
  PhysicalAssumptions a;
  a.p = p;
  return a;
}

fh::FHInstance l30() { return fh::FHInstance{30, 1.0, 8.0, 300.0, 0.01}; }

ResourceEstimate fh_estimate(fh::Scheme s, double p) {
  return estimate(l30(), s, at(p), builtin_for(p));
}

// 1. Minimal-footprint rows through the table1 subcommand.
void table1(Verdict& v) {
  struct Row {
    const char* name;
    const char* logical;
    const char* gates;
    double qubits;
    double seconds;
  };
  const Row rows[] = {{"spin", "100", "1e5", 8.7e4, 2},
                      {"molecule", "1e3", "1e9", 2.2e6, 8 * 3600.0},
                      {"options", "1e4", "1e10", 2.9e7, 3.7 * 86400},
                      {"EC-256", "1e3", "4e7", 1.9e6, 17 * 60.0}};
  for (const auto& r : rows) {
    std::ostringstream out, err;
    const char* argv[] = {"ftqc_estimate", "table1", "--logical", r.logical, "--gates", r.gates};
    const int code = cli::run(6, argv, out, err);
    v.require(code == 0, std::string(r.name) + " exit " + std::to_string(code));
    if (code != 0) continue;
    const Json e = Json::parse(out.str())["estimate"];
    const double q = e["physical_qubits_total"].get<double>();
    const double t = e["wall_time_seconds"].get<double>();
    v.detail << " " << r.name << " d=" << e["d"] << " qubits=" << cli::fmt_sig(q, 3)
             << " time=" << cli::fmt_duration(t) << ";";
    v.require(std::abs(q / r.qubits - 1) <= 0.05, std::string(r.name) + " qubits outside 5%");
    v.require(std::abs(t / r.seconds - 1) <= 0.15, std::string(r.name) + " time outside 15%");
  }

  // Runtime of the row computation itself, averaged over repeated calls.
  constexpr int kReps = 2000;
  const double Q[] = {100, 1e3, 1e4, 1e3};
  const double G[] = {1e5, 1e9, 1e10, 4e7};
  double sink = 0;
  const auto start = Clock::now();
  for (int i = 0; i < kReps; ++i) {
    for (int k = 0; k < 4; ++k) sink += simple_estimate(Q[k], G[k], at(1e-3)).physical_qubits_total;
  }
  const double per_row = seconds_since(start) / (4.0 * kReps);
  v.detail << " " << cli::fmt_sig(per_row * 1e6, 3) << " us/row";
  v.require(per_row < 1e-3 && sink > 0, "row runtime >= 1 ms");
}

// 2. Reaction-limited worked example, compared exactly.
void worked_example(Verdict& v) {
  PhysicalAssumptions a = at(1e-3);
  a.tau_r = 5e-6;
  const auto plan = reaction_limited_plan(75e-6, 5e-6, 30);
  const auto seq = sequential_t_baseline(30, 15, a);
  v.require(plan.time_seconds == 150e-6, "reaction plan time != 150 us");
  v.require(plan.logical_qubits == 60, "reaction plan qubits != 60");
  v.require(seq.time_seconds == 825e-6, "sequential time != 825 us");
  v.require(seq.logical_qubits == 2, "sequential qubits != 2");
  const std::string time_ratio = cli::fmt_sig(seq.time_seconds / plan.time_seconds, 6);
  const std::string space_ratio =
      cli::fmt_sig(static_cast<double>(plan.logical_qubits) / seq.logical_qubits, 6);
  v.detail << " plan " << plan.time_seconds * 1e6 << " us / " << plan.logical_qubits
           << " qubits, sequential " << seq.time_seconds * 1e6 << " us / " << seq.logical_qubits
           << " qubits, ratios " << time_ratio << "x time, " << space_ratio << "x space";
  v.require(time_ratio == "5.5", "time ratio reported as " + time_ratio);
  v.require(space_ratio == "30", "space ratio reported as " + space_ratio);
}

// 3. Total T count band for every scheme at L = 30.
void t_band(Verdict& v) {
  for (fh::Scheme s : fh::kAllSchemes) {
    const auto start = Clock::now();
    const auto e = fh_estimate(s, 1e-3);
    const double elapsed = seconds_since(start);
    v.detail << " " << fh::to_string(s) << " T=" << cli::fmt_sig(e.t_count, 4) << " in "
             << cli::fmt_sig(elapsed * 1e3, 2) << " ms;";
    v.require(e.t_count >= 1e11 && e.t_count <= 1.5e12,
              std::string(fh::to_string(s)) + " T count outside band");
    v.require(elapsed < 10e-3, std::string(fh::to_string(s)) + " runtime >= 10 ms");
  }
}

// 4. Scheme ordering, noise dominance and sensitivity bands.
void scheme_properties(Verdict& v) {
  for (double p : {1e-3, 1e-4}) {
    const auto serial = fh_estimate(fh::Scheme::plaq_serial, p);
    const auto pl = fh_estimate(fh::Scheme::plaq_L, p);
    const auto l2 = fh_estimate(fh::Scheme::plaq_L2, p);
    const auto qsp = fh_estimate(fh::Scheme::qsp, p);
    const std::string at_p = " at p=" + cli::fmt_sig(p, 2);
    v.require(serial.wall_time_seconds > pl.wall_time_seconds &&
                  pl.wall_time_seconds > l2.wall_time_seconds,
              "(a) wall-time ordering" + at_p);
    v.require(l2.wall_time_seconds < qsp.wall_time_seconds, "(b) L2 not faster than QSP" + at_p);
    v.require(l2.physical_qubits_total >= qsp.physical_qubits_total,
              "(b) L2 uses fewer qubits than QSP" + at_p);
  }
  v.detail << " (a) (b) checked at both p;";
  for (fh::Scheme s : fh::kAllSchemes) {
    const auto hi = fh_estimate(s, 1e-3);
    const auto lo = fh_estimate(s, 1e-4);
    v.require(lo.d <= hi.d && lo.physical_qubits_total <= hi.physical_qubits_total &&
                  lo.wall_time_seconds <= hi.wall_time_seconds &&
                  lo.spacetime_volume <= hi.spacetime_volume &&
                  lo.factory_count <= hi.factory_count,
              std::string("(c) p=1e-4 does not dominate for ") + fh::to_string(s));
    for (double p : {1e-3, 1e-4}) {
      const auto band = sensitivity(l30(), s, at(p), builtin_for(p));
      const bool ordered =
          band.low.physical_qubits_total <= band.nominal.physical_qubits_total &&
          band.nominal.physical_qubits_total <= band.high.physical_qubits_total &&
          band.low.wall_time_seconds <= band.nominal.wall_time_seconds &&
          band.nominal.wall_time_seconds <= band.high.wall_time_seconds &&
          band.low.spacetime_volume <= band.nominal.spacetime_volume &&
          band.nominal.spacetime_volume <= band.high.spacetime_volume;
      const bool nonempty = band.low.physical_qubits_total < band.high.physical_qubits_total ||
                            band.low.wall_time_seconds < band.high.wall_time_seconds;
      v.require(ordered && nonempty,
                std::string("(d) band for ") + fh::to_string(s) + " at p=" + cli::fmt_sig(p, 2));
    }
  }
  v.detail << " (c) (d) checked for all schemes";
}

// 5. Cultivation what-if on the L^2-parallel scheme.
void cultivation(Verdict& v) {
  const auto f2 = builtin_for(1e-4);
  const auto base = estimate(l30(), fh::Scheme::plaq_L2, at(1e-4), f2);
  const auto cult = estimate(l30(), fh::Scheme::plaq_L2, at(1e-4), cultivation_variant(f2));
  const double ratio = base.physical_qubits_total / cult.physical_qubits_total;
  v.detail << " " << f2.name << " " << cli::fmt_sig(base.physical_qubits_total, 4) << " vs "
           << cult.factory_name << " " << cli::fmt_sig(cult.physical_qubits_total, 4)
           << " qubits, ratio " << cli::fmt_sig(ratio, 4);
  v.require(ratio >= 3.0 && ratio <= 6.0, "ratio outside [3, 6]");
}

// 6. QROAM optimum against exhaustive search and the closed form.
void qroam(Verdict& v) {
  const auto start = Clock::now();
  int mismatches = 0;
  std::vector<std::string> over_bound;
  for (int k = 4; k <= 14; ++k) {
    const std::int64_t n = std::int64_t{1} << k;
    for (std::int64_t b : {1, 4, 8, 32}) {
      const auto opt = qroam_optimal(n, b);
      const auto ref = oracle::qroam_bruteforce(n, b);
      if (opt.lambda != ref.lambda || opt.cost.count != static_cast<double>(ref.cost)) ++mismatches;
      const double bound = 1.5 * 32 * std::sqrt(static_cast<double>(n * b));
      if (opt.cost.count > bound) {
        over_bound.push_back("(N=" + std::to_string(n) + ", b=" + std::to_string(b) +
                             ": T=" + cli::fmt_sig(opt.cost.count, 6) + " > " +
                             cli::fmt_sig(bound, 6) + " at lambda=" + std::to_string(opt.lambda) +
                             ")");
      }
    }
  }
  const double elapsed = seconds_since(start);
  v.detail << " 44 pairs, " << mismatches << " oracle mismatches, " << over_bound.size()
           << " above 1.5x closed form, " << cli::fmt_sig(elapsed * 1e3, 2) << " ms";
  v.require(mismatches == 0, "qroam_optimal differs from exhaustive search");
  for (const auto& s : over_bound) v.require(false, "closed-form bound " + s);
  v.require(elapsed < 1.0, "runtime >= 1 s");
}

// 7. Shuttle range to two significant figures.
void shuttle(Verdict& v) {
  const ShuttleParams sp;
  const double one_patch = shuttle_time(sp, sp.patch_width()) * 1e3;
  const double upper = shuttle_time(sp, sp.grid_diagonal(10)) * 1e3;
  const std::string lo = cli::fmt_sig(one_patch, 2);
  const std::string hi = cli::fmt_sig(upper, 2);
  v.detail << " " << cli::fmt_sig(one_patch, 4) << " ms -> " << lo << ", "
           << cli::fmt_sig(upper, 4) << " ms -> " << hi;
  v.require(lo == cli::fmt_sig(0.42, 2), "one-patch time " + lo + " ms");
  v.require(hi == cli::fmt_sig(1.57, 2), "upper bound " + hi + " ms");
}

// 8. Invariant suites, 1000 random cases each.
void invariant_suites(Verdict& v) {
  constexpr int kCases = 1000;
  struct Suite {
    const char* name;
    invariants::Outcome (*fn)(int);
  };
  const Suite suites[] = {{"distance fixed point", invariants::distance_fixed_point},
                          {"never under-provision", invariants::never_under_provision},
                          {"pbc/general_cost", invariants::pbc_cross_check},
                          {"ledger sum", invariants::ledger_sums},
                          {"report round trip", invariants::report_round_trip}};
  const auto start = Clock::now();
  for (const auto& s : suites) {
    const auto o = s.fn(kCases);
    v.detail << " " << s.name << " " << o.cases - o.failures << "/" << o.cases << ";";
    v.require(o.ok() && o.cases >= kCases, std::string(s.name) + ": " + o.first_failure);
  }
  const double elapsed = seconds_since(start);
  v.detail << " " << cli::fmt_sig(elapsed, 2) << " s";
  v.require(elapsed < 30, "runtime >= 30 s");
}

}  // namespace

int main() {
  run_criterion(1, "table1 rows within 5% qubits / 15% time", table1);
  run_criterion(2, "reaction-limited worked example", worked_example);
  run_criterion(3, "Fermi-Hubbard T count in [1e11, 1.5e12]", t_band);
  run_criterion(4, "scheme ordering, noise dominance, sensitivity bands", scheme_properties);
  run_criterion(5, "cultivation qubit reduction in [3, 6]x", cultivation);
  run_criterion(6, "QROAM optimum: exhaustive equality and 1.5x closed form", qroam);
  run_criterion(7, "neutral-atom shuttle 0.42-1.57 ms", shuttle);
  run_criterion(8, "invariant suites, >= 1000 cases each", invariant_suites);
  std::cout << (failures == 0 ? "all criteria pass" : std::to_string(failures) + " criterion failed")
            << "\n";
  return failures == 0 ? 0 : 1;
}
