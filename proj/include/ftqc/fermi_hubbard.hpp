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

// Fermi-Hubbard time evolution on an L x L lattice: Trotter step counts, the
// three plaquette-Trotterization compilations (serial with Hamming-weight
// phasing, L-parallel Jordan-Wigner, L^2-parallel compact mapping) and the
// qubitized QSP compilation with a log-depth SELECT.

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>

#include "ftqc/errors.hpp"
#include "ftqc/factories.hpp"
#include "ftqc/numeric.hpp"
#include "ftqc/qec.hpp"
#include "ftqc/rational.hpp"
#include "ftqc/subroutines.hpp"

namespace ftqc::fh {

struct FHInstance {
  int L = 30;            ///< lattice side
  double t_hop = 1.0;    ///< hopping strength
  double U = 8.0;        ///< onsite interaction
  double T_evol = 300;   ///< evolution time
  double eps_total = 0.01;

  void validate() const {
    require(L >= 2 && L % 2 == 0, ErrorKind::invalid_argument,
            "lattice side L must be even and >= 2");
    require(t_hop > 0, ErrorKind::invalid_argument, "hopping strength t must be > 0");
    require(U >= 0, ErrorKind::invalid_argument, "interaction U must be >= 0");
    require(T_evol > 0, ErrorKind::invalid_argument, "evolution time must be > 0");
    require(eps_total > 0 && eps_total < 1, ErrorKind::invalid_argument,
            "total error eps must lie in (0, 1)");
  }

  double sites() const { return static_cast<double>(L) * L; }
  /// N = 2 L^2 spin-orbitals.
  std::int64_t modes() const { return 2 * static_cast<std::int64_t>(L) * L; }
};

enum class Scheme { plaq_serial, plaq_L, plaq_L2, qsp };

inline constexpr Scheme kAllSchemes[] = {Scheme::plaq_serial, Scheme::plaq_L, Scheme::plaq_L2,
                                         Scheme::qsp};

inline const char* to_string(Scheme s) {
  switch (s) {
    case Scheme::plaq_serial: return "plaq_serial";
    case Scheme::plaq_L: return "plaq_L";
    case Scheme::plaq_L2: return "plaq_L2";
    case Scheme::qsp: return "qsp";
  }
  return "?";
}

inline Scheme parse_scheme(std::string_view name) {
  for (Scheme s : kAllSchemes) {
    if (name == to_string(s)) return s;
  }
  throw EstimatorError(ErrorKind::invalid_argument,
                       "unknown scheme '" + std::string(name) +
                           "' (expected plaq_serial, plaq_L, plaq_L2 or qsp)");
}

enum class LogBase { natural, base2 };

inline const char* to_string(LogBase b) { return b == LogBase::natural ? "natural" : "base2"; }

// ---------------------------------------------------------------------------
// Error budget

/// Share of the algorithmic error given to the simulation method; the rest
/// goes to rotation synthesis.
inline constexpr double kAlgorithmShare = 0.99;

struct ErrorBudget {
  double eps_total = 0;
  double eps_algorithm = 0;
  double eps_synthesis = 0;
  double eps_s_per_rotation = 0;
  double rotation_count = 0;
  double E_qec = kDefaultQecBudget;
  double t_gate_budget = kDefaultTGateBudget;

  static ErrorBudget allocate(double eps_total, double rotation_count,
                              double E_qec = kDefaultQecBudget,
                              double t_gate_budget = kDefaultTGateBudget) {
    require(eps_total > 0 && eps_total < 1, ErrorKind::invalid_argument,
            "total error must lie in (0, 1)");
    require(rotation_count >= 0, ErrorKind::invalid_argument, "rotation count must be >= 0");
    ErrorBudget b;
    b.eps_total = eps_total;
    b.eps_synthesis = eps_total * (1 - kAlgorithmShare);
    b.eps_algorithm = eps_total - b.eps_synthesis;
    b.rotation_count = rotation_count;
    b.eps_s_per_rotation =
        rotation_count > 0 ? std::min(1.0, b.eps_synthesis / rotation_count) : 1.0;
    b.E_qec = E_qec;
    b.t_gate_budget = t_gate_budget;
    return b;
  }
};

inline double algorithm_error(double eps_total) {
  return ErrorBudget::allocate(eps_total, 0).eps_algorithm;
}

// ---------------------------------------------------------------------------
// Trotter error

/// Commutator-bound constant for second-order plaquette Trotterization.
inline double trotter_kappa(double u_over_t) {
  require(u_over_t >= 0, ErrorKind::invalid_argument, "U/t must be >= 0");
  const double u = u_over_t;
  return (1.5 * u * u + 2 * u * (2 * std::sqrt(5.0) + 16) + 10) / 24.0;
}

/// sqrt(kappa) L (T t)^1.5 / sqrt(eps), before rounding up.
inline double trotter_steps_bound(const FHInstance& inst, double eps_trotter) {
  inst.validate();
  require(eps_trotter > 0 && eps_trotter < 1, ErrorKind::invalid_argument,
          "Trotter error must lie in (0, 1)");
  const double kappa = trotter_kappa(inst.U / inst.t_hop);
  return std::sqrt(kappa) * inst.L * std::pow(inst.T_evol * inst.t_hop, 1.5) /
         std::sqrt(eps_trotter);
}

inline std::int64_t trotter_steps(const FHInstance& inst, double eps_trotter) {
  return static_cast<std::int64_t>(ceil_snap(trotter_steps_bound(inst, eps_trotter)));
}

// ---------------------------------------------------------------------------
// Compilation output

struct CompilationSummary {
  Scheme scheme = Scheme::plaq_serial;
  std::int64_t repetitions = 0;  ///< Trotter steps, or QSP queries
  int sigma = 0;

  double data_patches = 0;
  double routing_patches = 0;
  double aux_patches = 0;
  /// Factory area that doubles as routing and must be protected; it is
  /// physically inside the factories, so it adds volume but not qubits.
  double factory_routing_patches = 0;

  double timestep_depth = 0;
  double reaction_depth = 0;
  double t_count_total = 0;
  double peak_parallel_t = 0;
  double rotation_count = 0;

  /// Device-wide magic-state demand, states per logical timestep.
  Rational consumption_per_timestep;
  /// Factories are provisioned independently at each supply site.
  std::int64_t supply_sites = 1;
  Rational site_demand_per_timestep;

  double per_repetition_t = 0;
  double per_repetition_timesteps = 0;
  double per_repetition_reactions = 0;

  double compute_patches() const { return data_patches + routing_patches + aux_patches; }
  double protected_patches() const { return compute_patches() + factory_routing_patches; }
};

// ---------------------------------------------------------------------------
// Serial PLAQ with Hamming-weight phasing, compiled to Pauli-based computation

/// T gates per Trotter step with m HWP ancillas: 4 L^2 (7 + lg(m) sigma / m).
inline double plaq_serial_t_per_step(int L, std::int64_t m, int sigma) {
  require(m >= 2, ErrorKind::invalid_argument,
          "HWP needs m >= 2 ancillas (lg 1 = 0 drops the synthesis term)");
  const double L2 = static_cast<double>(L) * L;
  const double mm = static_cast<double>(m);
  return 4 * L2 * (7 + lg(mm) * sigma / mm);
}

/// Rotations left after HWP, per step: 4 (L^2 / m) lg m.
inline double plaq_serial_rotations_per_step(int L, std::int64_t m) {
  require(m >= 2, ErrorKind::invalid_argument, "HWP needs m >= 2 ancillas");
  const double L2 = static_cast<double>(L) * L;
  return 4 * (L2 / static_cast<double>(m)) * lg(static_cast<double>(m));
}

/// Fast-block layout: 2n + sqrt(8n) + 1 patches for n logical qubits.
inline double fast_block_patches(double n) { return 2 * n + std::sqrt(8 * n) + 1; }

inline CompilationSummary plaq_serial(const FHInstance& inst, std::int64_t m, int sigma) {
  inst.validate();
  require(sigma >= 0, ErrorKind::invalid_argument, "sigma must be >= 0");
  CompilationSummary s;
  s.scheme = Scheme::plaq_serial;
  s.sigma = sigma;
  s.repetitions = trotter_steps(inst, algorithm_error(inst.eps_total));
  const double r = static_cast<double>(s.repetitions);

  s.per_repetition_t = plaq_serial_t_per_step(inst.L, m, sigma);
  s.t_count_total = r * s.per_repetition_t;
  s.rotation_count = r * plaq_serial_rotations_per_step(inst.L, m);

  const double n = 2 * inst.sites() + static_cast<double>(m);
  s.data_patches = n;
  s.routing_patches = fast_block_patches(n) - n;

  // One pi/8 rotation per timestep, each with one reaction.
  s.per_repetition_timesteps = s.per_repetition_t;
  s.per_repetition_reactions = s.per_repetition_t;
  s.timestep_depth = s.t_count_total;
  s.reaction_depth = s.t_count_total;
  s.peak_parallel_t = 1;
  s.consumption_per_timestep = Rational(1);
  s.site_demand_per_timestep = Rational(1);
  return s;
}

// ---------------------------------------------------------------------------
// L-parallel PLAQ, Jordan-Wigner, factories on the boundary

struct PlaqLDepthParts {
  double plaquette_blocks = 0;  ///< 3 L (18 + sigma/2)
  double interaction = 0;       ///< L (4 + sigma/2)
  double boundary = 0;          ///< 24 L of fermionic swaps
  double total() const { return plaquette_blocks + interaction + boundary; }
};

inline PlaqLDepthParts plaq_L_step_depth(int L, int sigma) {
  return {3.0 * L * (18 + sigma / 2.0), L * (4 + sigma / 2.0), 24.0 * L};
}

inline CompilationSummary plaq_L_parallel(const FHInstance& inst, int sigma) {
  inst.validate();
  require(sigma >= 0, ErrorKind::invalid_argument, "sigma must be >= 0");
  CompilationSummary s;
  s.scheme = Scheme::plaq_L;
  s.sigma = sigma;
  s.repetitions = trotter_steps(inst, algorithm_error(inst.eps_total));
  const double r = static_cast<double>(s.repetitions);
  const double L = inst.L;
  const double L2 = inst.sites();

  // Three plaquette blocks of L^2/2 plaquettes (both spins), each with eight
  // pi/8 gates and two sigma-gate rotations; L^2 onsite rotations.
  s.per_repetition_t = 3 * (L2 / 2) * (8 + 2.0 * sigma) + L2 * sigma;
  s.per_repetition_timesteps = plaq_L_step_depth(inst.L, sigma).total();
  // L/2 rounds per block with 8 + sigma sequential non-Clifford layers, and
  // L/2 interaction rounds with sigma layers.
  s.per_repetition_reactions = 3 * (L / 2) * (8 + sigma) + (L / 2) * sigma;

  s.t_count_total = r * s.per_repetition_t;
  s.timestep_depth = r * s.per_repetition_timesteps;
  s.reaction_depth = r * s.per_repetition_reactions;
  s.rotation_count = r * 4 * L2;

  s.data_patches = 2 * L2;
  s.routing_patches = 3 * s.data_patches;
  s.peak_parallel_t = 2 * L;
  s.consumption_per_timestep = Rational(2 * static_cast<std::int64_t>(inst.L));
  s.site_demand_per_timestep = s.consumption_per_timestep;
  return s;
}

// ---------------------------------------------------------------------------
// L^2-parallel PLAQ, compact mapping, factories inside the lattice

inline constexpr double kFermionicSwapTimesteps = 10;

inline double plaq_L2_step_depth(int sigma) { return 6.0 * sigma + 354; }

/// Sequential non-Clifford layers per step: six synthesis layers of sigma
/// plus eight pi/8 layers in each of the three plaquette blocks.
inline double plaq_L2_step_reactions(int sigma) { return 6.0 * sigma + 24; }

/// Factories serving one site so that it receives a state every tau_m rounds,
/// with tau_m = interval_timesteps x d.
inline std::int64_t plaq_L2_factories_per_site(const FactorySpec& spec, int d,
                                               int interval_timesteps) {
  require(interval_timesteps > 0, ErrorKind::invalid_schedule,
          "interval between non-Clifford layers must be > 0");
  return provision(spec, Rational(1, static_cast<std::int64_t>(interval_timesteps) * d)).count;
}

inline CompilationSummary plaq_L2_parallel(const FHInstance& inst, int sigma,
                                           const FactorySpec& spec, double f_r, int d,
                                           int interval_timesteps = 1) {
  inst.validate();
  spec.validate();
  require_distance(d);
  require(sigma >= 0, ErrorKind::invalid_argument, "sigma must be >= 0");
  require(f_r >= 0 && f_r <= 1, ErrorKind::invalid_argument, "f_r must lie in [0, 1]");
  require(interval_timesteps > 0, ErrorKind::invalid_schedule,
          "interval between non-Clifford layers must be > 0");
  CompilationSummary s;
  s.scheme = Scheme::plaq_L2;
  s.sigma = sigma;
  s.repetitions = trotter_steps(inst, algorithm_error(inst.eps_total));
  const double r = static_cast<double>(s.repetitions);
  const double L2 = inst.sites();

  s.per_repetition_t = 3 * (L2 / 2) * (8 + 2.0 * sigma) + L2 * sigma;
  s.per_repetition_timesteps = plaq_L2_step_depth(sigma);
  s.per_repetition_reactions = plaq_L2_step_reactions(sigma);
  s.t_count_total = r * s.per_repetition_t;
  s.timestep_depth = r * s.per_repetition_timesteps;
  s.reaction_depth = r * s.per_repetition_reactions;
  s.rotation_count = r * 4 * L2;

  // 1.5 qubits per mode, then 3:1 routing: 4 x 3 L^2 protected patches.
  s.data_patches = 2 * L2;
  s.aux_patches = L2;
  s.routing_patches = 3 * (s.data_patches + s.aux_patches);

  // Two factory sites per unit cell of four data qubits.
  s.supply_sites = static_cast<std::int64_t>(inst.L) * inst.L;
  s.site_demand_per_timestep = Rational(1, interval_timesteps);
  s.consumption_per_timestep = s.site_demand_per_timestep * Rational(s.supply_sites);
  s.peak_parallel_t = L2;

  const double per_site = static_cast<double>(plaq_L2_factories_per_site(spec, d, interval_timesteps));
  const double site_patches =
      ceil_snap(spec.qubits.to_double() / static_cast<double>(patch_physical_qubits(d)) * per_site);
  s.factory_routing_patches = f_r * L2 * site_patches;
  return s;
}

// ---------------------------------------------------------------------------
// QSP with a log-depth SELECT

/// Block-encoding normalization (2t + U/8) N.
inline double qsp_alpha(const FHInstance& inst) {
  return (2 * inst.t_hop + 0.125 * inst.U) * static_cast<double>(inst.modes());
}

/// Calls to the block encoding: 2 (aT + 3^(2/3)/2 (aT)^(1/3) log^(2/3)(1/eps)).
inline double qsp_queries(double alpha, double T_evol, double eps_qsp,
                          LogBase base = LogBase::natural) {
  require(alpha > 0 && T_evol > 0 && eps_qsp > 0, ErrorKind::invalid_argument,
          "QSP query bound needs positive alpha, time and error");
  const double at = alpha * T_evol;
  const double log_term = base == LogBase::natural ? std::log(1 / eps_qsp) : lg(1 / eps_qsp);
  return 2 * (at + std::pow(3.0, 2.0 / 3.0) / 2 * std::cbrt(at) *
                       std::pow(std::max(0.0, log_term), 2.0 / 3.0));
}

/// One controlled-SWAP* sequence: 5 CNOT + 4 pi/8 + 4 S in depth.
inline double swap_sequence_timesteps(const GateTimingModel& timing) {
  return 5 * timing[GateKind::cnot].timesteps + 4 * timing[GateKind::t_teleport].timesteps +
         4 * timing[GateKind::s].timesteps;
}

/// SWAPUP* on N qubits: T count 4(N-1), T depth 4 ceil(lg N), ceil(lg N)
/// sequences. `extra_sequences` models splitting the first sequence.
inline SubroutineCost swapup_cost(std::int64_t N, int extra_sequences = 0,
                                  const GateTimingModel& timing =
                                      GateTimingModel::lattice_surgery()) {
  require(N >= 2, ErrorKind::invalid_argument, "SWAPUP* needs N >= 2");
  const double seqs = ceil_lg(static_cast<std::uint64_t>(N)) + extra_sequences;
  SubroutineCost c;
  c.kind = CountKind::t;
  c.count = 4.0 * static_cast<double>(N - 1);
  c.reaction_depth = 4 * seqs;
  c.timestep_depth = seqs * swap_sequence_timesteps(timing);
  return c;
}

/// SELECT: 8 SWAPUP* calls, 2 CNOT ladders of depth 2 ceil(lg N) - 1, and 4
/// controlled rotation layers (2 multitarget CZ + 2N pi/8 gates each). With
/// `throttled`, each SWAPUP* gains one sequence and peak demand halves.
inline SubroutineCost select_cost(std::int64_t N, bool throttled = false,
                                  const GateTimingModel& timing =
                                      GateTimingModel::lattice_surgery()) {
  const SubroutineCost sw = swapup_cost(N, throttled ? 1 : 0, timing);
  const double cnot = timing[GateKind::cnot].timesteps;
  const double pi8 = timing[GateKind::t_teleport].timesteps;
  const double ladder = (2.0 * ceil_lg(static_cast<std::uint64_t>(N)) - 1) * cnot;
  SubroutineCost c;
  c.kind = CountKind::t;
  c.count = 8 * sw.count + 4 * 2.0 * static_cast<double>(N);
  c.reaction_depth = 8 * *sw.reaction_depth + 4 * 2.0;
  c.timestep_depth = 8 * *sw.timestep_depth + 2 * ladder + 4 * (2 * cnot + 2 * pi8);
  return c;
}

/// PREPARE, executed sequentially: 16 ceil(lg N) T gates and six rotations for
/// the standard state, plus lg^2 L + 7 lg L Toffolis to convert site indices.
inline SubroutineCost prepare_cost(int L, int sigma) {
  require(L >= 2, ErrorKind::invalid_argument, "PREPARE needs L >= 2");
  require(sigma >= 0, ErrorKind::invalid_argument, "sigma must be >= 0");
  const double lgN = ceil_lg(2 * static_cast<std::uint64_t>(L) * static_cast<std::uint64_t>(L));
  const double lgL = ceil_lg(static_cast<std::uint64_t>(L));
  SubroutineCost c;
  c.kind = CountKind::t;
  c.count = 16 * lgN + 4 * (lgL * lgL + 7 * lgL) + 6.0 * sigma;
  c.reaction_depth = c.count;
  c.timestep_depth = c.count;
  c.clean_ancillas = 0;
  return c;
}

/// Rotations per query: six per PREPARE, two PREPAREs, one QSP phase.
inline constexpr double kQspRotationsPerQuery = 13;

inline std::int64_t qsp_query_count(const FHInstance& inst, LogBase base) {
  return static_cast<std::int64_t>(
      ceil_snap(qsp_queries(qsp_alpha(inst), inst.T_evol, algorithm_error(inst.eps_total), base)));
}

/// One factory block per four data qubits, each delivering a state every
/// three timesteps.
inline CompilationSummary qsp_compile(const FHInstance& inst, int sigma,
                                      LogBase base = LogBase::natural, bool throttled = true) {
  inst.validate();
  require(sigma >= 0, ErrorKind::invalid_argument, "sigma must be >= 0");
  const std::int64_t N = inst.modes();
  CompilationSummary s;
  s.scheme = Scheme::qsp;
  s.sigma = sigma;
  s.repetitions = qsp_query_count(inst, base);
  const double q = static_cast<double>(s.repetitions);

  const SubroutineCost sel = select_cost(N, throttled);
  const SubroutineCost prep = prepare_cost(inst.L, sigma);
  s.per_repetition_t = sel.count + 2 * prep.count + sigma;
  s.per_repetition_timesteps = *sel.timestep_depth + 2 * *prep.timestep_depth + sigma;
  s.per_repetition_reactions = *sel.reaction_depth + 2 * *prep.reaction_depth + sigma;
  s.t_count_total = q * s.per_repetition_t;
  s.timestep_depth = q * s.per_repetition_timesteps;
  s.reaction_depth = q * s.per_repetition_reactions;
  s.rotation_count = q * kQspRotationsPerQuery;

  const double lgN = ceil_lg(static_cast<std::uint64_t>(N));
  s.data_patches = static_cast<double>(N);
  // Index registers p, q; two Pauli-select qubits each; the control ancilla.
  s.aux_patches = 2 * lgN + 5;
  s.routing_patches = 3 * (s.data_patches + s.aux_patches);

  s.supply_sites = (N + 3) / 4;
  s.site_demand_per_timestep = Rational(1, 3);
  s.consumption_per_timestep = s.site_demand_per_timestep * Rational(s.supply_sites);
  s.peak_parallel_t = static_cast<double>(throttled ? N / 4 : N / 2);
  return s;
}

// ---------------------------------------------------------------------------
// Planning: error budget -> repetitions -> sigma -> compiled summary

struct AlgorithmOptions {
  std::int64_t hwp_ancillas = 0;  ///< m; 0 selects L^2
  double f_r = 0.5;
  int nonclifford_interval_timesteps = 1;
  LogBase log_base = LogBase::natural;
  bool qsp_throttle = true;
};

inline std::int64_t resolved_hwp_ancillas(const FHInstance& inst, const AlgorithmOptions& opts) {
  return opts.hwp_ancillas > 0 ? opts.hwp_ancillas : static_cast<std::int64_t>(inst.L) * inst.L;
}

/// Rotation count for a scheme; independent of sigma, so it can fix the
/// per-rotation synthesis budget before compiling.
inline double scheme_rotation_count(Scheme scheme, const FHInstance& inst,
                                    const AlgorithmOptions& opts) {
  inst.validate();
  const double eps_alg = algorithm_error(inst.eps_total);
  switch (scheme) {
    case Scheme::plaq_serial:
      return static_cast<double>(trotter_steps(inst, eps_alg)) *
             plaq_serial_rotations_per_step(inst.L, resolved_hwp_ancillas(inst, opts));
    case Scheme::plaq_L:
    case Scheme::plaq_L2:
      return static_cast<double>(trotter_steps(inst, eps_alg)) * 4 * inst.sites();
    case Scheme::qsp:
      return static_cast<double>(qsp_query_count(inst, opts.log_base)) * kQspRotationsPerQuery;
  }
  return 0;
}

struct AlgorithmPlan {
  Scheme scheme = Scheme::plaq_serial;
  FHInstance instance;
  AlgorithmOptions options;
  ErrorBudget budget;
  int sigma = 0;
};

inline AlgorithmPlan plan_algorithm(const FHInstance& inst, Scheme scheme,
                                    const AlgorithmOptions& opts,
                                    double E_qec = kDefaultQecBudget,
                                    double t_gate_budget = kDefaultTGateBudget) {
  inst.validate();
  AlgorithmPlan plan;
  plan.scheme = scheme;
  plan.instance = inst;
  plan.options = opts;
  plan.budget = ErrorBudget::allocate(inst.eps_total, scheme_rotation_count(scheme, inst, opts),
                                      E_qec, t_gate_budget);
  plan.sigma = synthesis_sigma(plan.budget.eps_s_per_rotation);
  return plan;
}

/// Compiled summary at distance d (only the L^2 scheme depends on d).
inline CompilationSummary compile(const AlgorithmPlan& plan, const FactorySpec& spec, int d) {
  const auto& inst = plan.instance;
  const auto& opts = plan.options;
  switch (plan.scheme) {
    case Scheme::plaq_serial:
      return plaq_serial(inst, resolved_hwp_ancillas(inst, opts), plan.sigma);
    case Scheme::plaq_L:
      return plaq_L_parallel(inst, plan.sigma);
    case Scheme::plaq_L2:
      return plaq_L2_parallel(inst, plan.sigma, spec, opts.f_r, d,
                              opts.nonclifford_interval_timesteps);
    case Scheme::qsp:
      return qsp_compile(inst, plan.sigma, opts.log_base, opts.qsp_throttle);
  }
  throw EstimatorError(ErrorKind::invalid_argument, "unknown scheme");
}

}  // namespace ftqc::fh
