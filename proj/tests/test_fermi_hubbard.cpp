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

#include <gtest/gtest.h>

#include <cmath>

#include "ftqc/fermi_hubbard.hpp"
#include "oracles.hpp"

using namespace ftqc;
using namespace ftqc::fh;

namespace {

FHInstance l30() { return FHInstance{30, 1.0, 8.0, 300, 0.01}; }

}  // namespace

TEST(Instance, Validation) {
  EXPECT_NO_THROW(l30().validate());
  EXPECT_THROW((FHInstance{31, 1, 8, 300, 0.01}.validate()), EstimatorError);
  EXPECT_THROW((FHInstance{0, 1, 8, 300, 0.01}.validate()), EstimatorError);
  EXPECT_THROW((FHInstance{30, 1, 8, 300, 1.0}.validate()), EstimatorError);
  EXPECT_THROW((FHInstance{30, 0, 8, 300, 0.01}.validate()), EstimatorError);
  EXPECT_EQ(l30().modes(), 1800);
}

TEST(Schemes, NamesRoundTrip) {
  for (Scheme s : kAllSchemes) EXPECT_EQ(parse_scheme(to_string(s)), s);
  EXPECT_THROW(parse_scheme("plaq_L3"), EstimatorError);
}

TEST(Budget, SplitsAndSums) {
  const auto b = ErrorBudget::allocate(0.01, 1e6);
  EXPECT_NEAR(b.eps_algorithm, 0.0099, 1e-15);
  EXPECT_NEAR(b.eps_synthesis, 1e-4, 1e-15);
  EXPECT_DOUBLE_EQ(b.eps_algorithm + b.eps_synthesis, 0.01);
  EXPECT_NEAR(b.eps_s_per_rotation, 1e-10, 1e-21);
  EXPECT_DOUBLE_EQ(ErrorBudget::allocate(0.01, 0).eps_s_per_rotation, 1);
  EXPECT_THROW(ErrorBudget::allocate(0, 10), EstimatorError);
}

TEST(Trotter, KappaAndSteps) {
  EXPECT_NEAR(trotter_kappa(8), 18.0647, 1e-4);
  EXPECT_DOUBLE_EQ(trotter_kappa(8), oracle::kappa(8));
  EXPECT_NEAR(trotter_kappa(0), 10.0 / 24, 1e-15);
  const auto inst = l30();
  EXPECT_NEAR(trotter_steps_bound(inst, 0.0099), 6.659e6, 0.001e6);
  EXPECT_EQ(trotter_steps(inst, 0.0099), oracle::trotter_steps(30, 300, 1, 8, 0.0099));
  EXPECT_THROW(trotter_steps(inst, 0), EstimatorError);
}

TEST(PlaqSerial, HammingWeightPhasing) {
  EXPECT_DOUBLE_EQ(plaq_serial_t_per_step(30, 900, 33), 3600 * (7 + std::log2(900.0) * 33 / 900));
  EXPECT_DOUBLE_EQ(plaq_serial_rotations_per_step(30, 900), 4 * std::log2(900.0));
  EXPECT_THROW(plaq_serial_t_per_step(30, 1, 33), EstimatorError);
  EXPECT_NEAR(fast_block_patches(3600), 7370.7, 0.05);

  const auto s = plaq_serial(l30(), 900, 33);
  EXPECT_EQ(s.data_patches, 2700);
  EXPECT_DOUBLE_EQ(s.compute_patches(), fast_block_patches(2700));
  EXPECT_EQ(s.peak_parallel_t, 1);
  EXPECT_EQ(s.timestep_depth, s.t_count_total);
  EXPECT_EQ(s.reaction_depth, s.t_count_total);
  EXPECT_NEAR(s.t_count_total, 1.764e11, 0.001e11);
}

TEST(PlaqL, DepthDecomposition) {
  const auto parts = plaq_L_step_depth(30, 37);
  EXPECT_DOUBLE_EQ(parts.total(), 30 * (2 * 37 + 82));
  EXPECT_DOUBLE_EQ(parts.total(), 4680);
  const auto s = plaq_L_parallel(l30(), 37);
  EXPECT_DOUBLE_EQ(s.per_repetition_t, 900 * (12 + 4 * 37));
  EXPECT_DOUBLE_EQ(s.per_repetition_reactions, 30 * (12 + 2 * 37));
  EXPECT_EQ(s.data_patches, 1800);
  EXPECT_EQ(s.routing_patches, 5400);
  EXPECT_EQ(s.peak_parallel_t, 60);
  EXPECT_EQ(s.consumption_per_timestep, Rational(60));
  EXPECT_DOUBLE_EQ(s.rotation_count, static_cast<double>(s.repetitions) * 3600);
}

TEST(PlaqL2, PatchesAndFactorySites) {
  const auto f1 = find_builtin("F1");
  const auto s = plaq_L2_parallel(l30(), 37, f1, 0.5, 33);
  EXPECT_DOUBLE_EQ(s.per_repetition_timesteps, 6 * 37 + 354);
  EXPECT_DOUBLE_EQ(s.per_repetition_reactions, 6 * 37 + 24);
  EXPECT_DOUBLE_EQ(s.compute_patches(), 12 * 900);
  // ceil(97.5 / 33) = 3 factories per site; ceil(39100 / 2178 x 3) = 54 patches.
  EXPECT_EQ(plaq_L2_factories_per_site(f1, 33, 1), 3);
  EXPECT_DOUBLE_EQ(s.factory_routing_patches, 0.5 * 900 * 54);
  EXPECT_DOUBLE_EQ(s.protected_patches(), 10800 + 24300);
  EXPECT_EQ(s.supply_sites, 900);
  EXPECT_EQ(s.site_demand_per_timestep, Rational(1));

  const auto slow = plaq_L2_parallel(l30(), 37, f1, 0.5, 33, 2);
  EXPECT_EQ(plaq_L2_factories_per_site(f1, 33, 2), 2);
  EXPECT_EQ(slow.site_demand_per_timestep, Rational(1, 2));
  EXPECT_LT(slow.factory_routing_patches, s.factory_routing_patches);

  EXPECT_DOUBLE_EQ(plaq_L2_parallel(l30(), 37, f1, 0.0, 33).protected_patches(), 10800);
  EXPECT_THROW(plaq_L2_parallel(l30(), 37, f1, 1.5, 33), EstimatorError);
  try {
    plaq_L2_parallel(l30(), 37, f1, 0.5, 33, 0);
    FAIL();
  } catch (const EstimatorError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::invalid_schedule);
  }
}

TEST(Qsp, QueryBound) {
  const auto inst = l30();
  EXPECT_DOUBLE_EQ(qsp_alpha(inst), 5400);
  const double at = 5400.0 * 300;
  const double expect =
      2 * (at + std::pow(3, 2.0 / 3) / 2 * std::cbrt(at) * std::pow(std::log(1 / 0.0099), 2.0 / 3));
  EXPECT_DOUBLE_EQ(qsp_queries(5400, 300, 0.0099), expect);
  EXPECT_NEAR(expect, 3.241e6, 0.001e6);
  EXPECT_GT(qsp_queries(5400, 300, 0.0099, LogBase::base2), expect);
}

TEST(Qsp, SwapupSelectPrepare) {
  const auto sw = swapup_cost(1800);
  EXPECT_EQ(sw.count, 4 * 1799);
  EXPECT_EQ(*sw.reaction_depth, 44);
  EXPECT_EQ(*sw.timestep_depth, 11 * 18);
  const auto sel = select_cost(1800);
  EXPECT_EQ(sel.count, 40 * 1800 - 32);
  EXPECT_EQ(sel.count, 8 * sw.count + 8 * 1800);
  EXPECT_EQ(select_cost(1800, true).count, sel.count);
  EXPECT_GT(*select_cost(1800, true).timestep_depth, *sel.timestep_depth);
  const auto prep = prepare_cost(30, 31);
  EXPECT_EQ(prep.count, 176 + 240 + 6 * 31);
  EXPECT_LT(prepare_cost(30, 31).count, 0.01 * sel.count);
  EXPECT_THROW(swapup_cost(1), EstimatorError);
}

TEST(Qsp, Compilation) {
  const auto s = qsp_compile(l30(), 31);
  EXPECT_EQ(s.repetitions, 3240678);
  EXPECT_EQ(s.data_patches, 1800);
  EXPECT_EQ(s.aux_patches, 2 * 11 + 5);
  EXPECT_EQ(s.routing_patches, 3 * (1800 + 27));
  EXPECT_EQ(s.peak_parallel_t, 450);
  EXPECT_EQ(qsp_compile(l30(), 31, LogBase::natural, false).peak_parallel_t, 900);
  EXPECT_EQ(s.supply_sites, 450);
  EXPECT_EQ(s.site_demand_per_timestep, Rational(1, 3));
  EXPECT_DOUBLE_EQ(s.rotation_count, 13.0 * 3240678);
  EXPECT_NEAR(s.t_count_total, 2.372e11, 0.001e11);
  EXPECT_NEAR(s.per_repetition_timesteps, 3071, 5);
}

TEST(Plan, SigmaFollowsRotationBudget) {
  const auto inst = l30();
  const AlgorithmOptions opts;
  EXPECT_EQ(plan_algorithm(inst, Scheme::plaq_serial, opts).sigma, 33);
  EXPECT_EQ(plan_algorithm(inst, Scheme::plaq_L, opts).sigma, 37);
  EXPECT_EQ(plan_algorithm(inst, Scheme::plaq_L2, opts).sigma, 37);
  EXPECT_EQ(plan_algorithm(inst, Scheme::qsp, opts).sigma, 31);
  const auto plan = plan_algorithm(inst, Scheme::plaq_L, opts);
  EXPECT_EQ(plan.sigma, oracle::sigma(plan.budget.eps_synthesis / plan.budget.rotation_count));
  AlgorithmOptions bad;
  bad.hwp_ancillas = 1;
  EXPECT_THROW(plan_algorithm(inst, Scheme::plaq_serial, bad), EstimatorError);
}

TEST(Plan, EverySchemeInTCountBand) {
  const auto f1 = find_builtin("F1");
  for (Scheme s : kAllSchemes) {
    const auto c = compile(plan_algorithm(l30(), s, {}), f1, 33);
    EXPECT_GE(c.t_count_total, 1e11) << to_string(s);
    EXPECT_LE(c.t_count_total, 1.5e12) << to_string(s);
    EXPECT_GE(c.timestep_depth, c.reaction_depth) << to_string(s);
  }
}
