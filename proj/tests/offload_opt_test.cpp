/*
 * Copyright 2026 The semcn Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 * http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "reference.hpp"
#include "semcn/cost_model.hpp"
#include "semcn/offload_opt.hpp"

namespace semcn::opt {
namespace {

using testing::RandomProblemShape;
using testing::naive_search;
using testing::random_problem;

ComputeNode end_node(const std::string& id) {
  ComputeNode n;
  n.id = id;
  n.tier = Tier::end;
  n.clock_hz = 1.72e9;
  n.freq_range_hz = FreqRange{0.96e9, 1.72e9};
  n.kappa = 1e-27;
  return n;
}

ComputeNode edge(const std::string& id, double load = 2e10) {
  ComputeNode s;
  s.id = id;
  s.tier = Tier::edge;
  s.clock_hz = 2.5e9;
  s.cores = 8;
  s.flops_per_cycle = 8;
  s.capacity_flops = 1.6e11;
  s.current_load_flops = load;
  return s;
}

Agent agent(const std::string& dev, const std::vector<std::string>& servers, double gain = 1e-14) {
  Agent a;
  a.end = end_node(dev);
  a.task.id = "t-" + dev;
  a.task.device_id = dev;
  a.task.words = 100;
  a.task.enc_cycles_base = 2e4;
  a.task.enc_cycles_per_symbol = 2e3;
  a.task.dec_cycles_per_word = 2e5;
  a.task.deadline_s = 0.05;
  for (const auto& s : servers) a.links.push_back({dev, s, 1e5, gain, 4e-21, {15, 24}});
  return a;
}

TEST(Grid, LinspaceHasExactEndpoints) {
  const auto v = linspace(0.96e9, 1.72e9, 5);
  ASSERT_EQ(v.size(), 5u);
  EXPECT_EQ(v.front(), 0.96e9);
  EXPECT_EQ(v.back(), 1.72e9);
  for (std::size_t i = 1; i < v.size(); ++i) EXPECT_GT(v[i], v[i - 1]);
  EXPECT_EQ(linspace(3.0, 3.0, 1), std::vector<double>{3.0});
}

TEST(Grid, ValidationRejectsOutOfRangeAndUnsortedLevels) {
  OffloadProblem p;
  p.servers = {edge("edge0")};
  p.agents = {agent("ue0", {"edge0"})};
  auto g = make_uniform_grid(p, 5, 4);
  EXPECT_NO_THROW(validate(g, p));
  auto bad = g;
  bad.agents[0].freq_hz = {2e9};
  EXPECT_THROW(validate(bad, p), ValidationError);
  bad = g;
  std::swap(bad.agents[0].power_dbm[0][0], bad.agents[0].power_dbm[0][1]);
  EXPECT_THROW(validate(bad, p), ValidationError);
  bad = g;
  bad.agents[0].freq_hz.clear();
  EXPECT_THROW(validate(bad, p), ValidationError);
}

TEST(Actions, CanonicalOrder) {
  OffloadProblem p;
  p.servers = {edge("a"), edge("b")};
  p.agents = {agent("ue0", {"a", "b"})};
  const auto g = make_uniform_grid(p, 2, 2);
  const auto acts = enumerate_actions(p.agents[0], g.agents[0]);
  ASSERT_EQ(acts.size(), 2u + 2 * 2 * 2);
  EXPECT_EQ(acts[0], OffloadAction::local(0.96e9));
  EXPECT_EQ(acts[1], OffloadAction::local(1.72e9));
  EXPECT_EQ(acts[2], OffloadAction::offload("a", 0.96e9, 15));
  EXPECT_EQ(acts[3], OffloadAction::offload("a", 0.96e9, 24));
  EXPECT_EQ(acts[4], OffloadAction::offload("a", 1.72e9, 15));
  EXPECT_EQ(acts[6], OffloadAction::offload("b", 0.96e9, 15));
}

TEST(ActionTable, AgreesWithDirectEvaluation) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto [p, g] = random_problem({3, 2, 2, 2}, seed);
    const ActionTable table(p, g);
    std::vector<std::size_t> profile;
    for (std::size_t i = 0; i < table.agent_count(); ++i) profile.push_back((seed * 7 + i * 3) % table.action_count(i));
    const auto a = table.evaluate(profile);
    std::vector<OffloadAction> acts;
    for (std::size_t i = 0; i < profile.size(); ++i) acts.push_back(table.action(i, profile[i]));
    const auto b = evaluate_profile(p, acts);
    for (std::size_t i = 0; i < a.size(); ++i) {
      EXPECT_EQ(a[i].energy_j, b[i].energy_j);
      EXPECT_EQ(a[i].latency_s, b[i].latency_s);
      EXPECT_EQ(a[i].feasible, b[i].feasible);
    }
  }
}

TEST(Oracle, SingletonSpace) {
  OffloadProblem p;
  p.agents = {agent("ue0", {})};
  const auto g = make_uniform_grid(p, 1, 1);
  const auto s = oracle_search(p, g);
  ASSERT_EQ(s.actions.size(), 1u);
  EXPECT_EQ(s.actions[0], OffloadAction::local(0.96e9));
  EXPECT_TRUE(s.feasible);
}

TEST(Oracle, EmptyProblem) {
  const auto s = oracle_search(OffloadProblem{}, ActionGrid{});
  EXPECT_EQ(s.total_energy_j, 0.0);
  EXPECT_TRUE(s.feasible);
  EXPECT_EQ(greedy_local(OffloadProblem{}, ActionGrid{}).total_energy_j, 0.0);
  EXPECT_EQ(greedy_offload(OffloadProblem{}, ActionGrid{}).total_energy_j, 0.0);
  EXPECT_EQ(best_response_gne(OffloadProblem{}, ActionGrid{}).solution.total_energy_j, 0.0);
}

TEST(Oracle, MatchesNaiveEnumeratorOn64JointActions) {
  for (std::uint64_t seed = 100; seed < 130; ++seed) {
    auto [p, g] = random_problem({2, 1, 2, 3}, seed);
    const auto s = oracle_search(p, g);
    const auto ref = naive_search(p, g);
    EXPECT_EQ(s.action_indices, ref.profile) << "seed " << seed;
    EXPECT_NEAR(s.total_energy_j, ref.energy_j, 1e-12 * ref.energy_j);
    EXPECT_EQ(s.feasible, ref.violations == 0);
  }
}

TEST(Oracle, ImpossibleDeadlineIsReportedInfeasible) {
  OffloadProblem p;
  p.servers = {edge("edge0")};
  p.agents = {agent("ue0", {"edge0"})};
  p.agents[0].task.deadline_s = 1e-9;
  const auto s = oracle_search(p, make_uniform_grid(p, 3, 3));
  EXPECT_FALSE(s.feasible);
  EXPECT_EQ(s.actions.size(), 1u);
}

TEST(Oracle, CapIsEnforced) {
  auto [p, g] = random_problem({4, 2, 5, 4}, 1);
  OracleOptions o;
  o.max_joint_actions = 1000;
  EXPECT_THROW(oracle_search(p, g, o), SearchCapExceeded);
}

TEST(Oracle, ThreadCountDoesNotChangeTheResult) {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    auto [p, g] = random_problem({4, 2, 2, 2}, seed);
    OracleOptions one;
    OracleOptions many;
    many.threads = 4;
    const auto a = oracle_search(p, g, one);
    const auto b = oracle_search(p, g, many);
    EXPECT_EQ(a.action_indices, b.action_indices);
    EXPECT_EQ(a.total_energy_j, b.total_energy_j);
  }
}

TEST(Oracle, DominatesEveryFeasibleHeuristic) {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto [p, g] = random_problem({3, 2, 3, 3}, seed);
    const auto best = oracle_search(p, g);
    for (const auto& other :
         {greedy_local(p, g), greedy_offload(p, g), best_response_gne(p, g).solution}) {
      if (!other.feasible) continue;
      EXPECT_TRUE(best.feasible);
      EXPECT_LE(best.total_energy_j, other.total_energy_j);
    }
  }
}

TEST(Solution, TotalsAndFeasibilityAggregate) {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    auto [p, g] = random_problem({3, 2, 2, 2}, seed);
    for (const auto& s : {oracle_search(p, g), greedy_local(p, g), greedy_offload(p, g)}) {
      double sum = 0.0;
      bool all = true;
      for (const auto& o : s.outcomes) {
        sum += o.energy_j;
        all = all && o.feasible;
      }
      EXPECT_EQ(s.total_energy_j, sum);
      EXPECT_EQ(s.feasible, all);
    }
  }
}

TEST(Greedy, LocalEqualsOracleRestrictedToLocal) {
  OffloadProblem p;
  p.agents = {agent("ue0", {})};
  const auto g = make_uniform_grid(p, 5, 4);
  const auto a = greedy_local(p, g);
  const auto b = oracle_search(p, g);
  EXPECT_EQ(a.actions, b.actions);
  EXPECT_EQ(a.total_energy_j, b.total_energy_j);
}

TEST(Greedy, LocalBeatsOffloadWhenDecodingIsFree) {
  OffloadProblem p;
  p.servers = {edge("edge0")};
  p.agents = {agent("ue0", {"edge0"}, 1e-15)};
  auto& t = p.agents[0].task;
  t.dec_cycles_per_word = 0.0;
  t.enc_cycles_per_symbol = 0.0;
  t.bits_per_symbol = 64;
  t.deadline_s = 10.0;
  const auto g = make_uniform_grid(p, 5, 4);
  const auto local = greedy_local(p, g);
  const auto off = greedy_offload(p, g);
  EXPECT_EQ(off.actions[0].mode, Mode::offload);
  EXPECT_LE(local.total_energy_j, off.total_energy_j);
}

TEST(Greedy, OffloadTargetsLeastUtilisedServer) {
  OffloadProblem p;
  p.servers = {edge("a", 1e11), edge("b", 1e10)};
  p.agents = {agent("ue0", {"a", "b"})};
  const auto s = greedy_offload(p, make_uniform_grid(p, 3, 3));
  EXPECT_EQ(s.actions[0].server_id, "b");
}

TEST(Gne, SingleAgentEqualsOracle) {
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    auto [p, g] = random_problem({1, 2, 3, 3}, seed);
    const auto r = best_response_gne(p, g);
    const auto o = oracle_search(p, g);
    EXPECT_TRUE(r.converged);
    EXPECT_EQ(r.solution.total_energy_j, o.total_energy_j);
  }
}

TEST(Gne, SymmetricDevicesReachASymmetricProfileWithoutCongestion) {
  OffloadProblem p;
  p.servers = {edge("edge0")};
  p.agents = {agent("ue0", {"edge0"}, 1e-11), agent("ue1", {"edge0"}, 1e-11)};
  const auto g = make_uniform_grid(p, 2, 2);
  const auto r = best_response_gne(p, g);
  ASSERT_TRUE(r.converged);
  const auto& a = r.solution.actions;
  EXPECT_EQ(a[0], a[1]);
  EXPECT_TRUE(deviation_scan(p, g, a, 1e-9).stable);
}

TEST(Gne, CongestedSymmetricDevicesSplitAcrossModes) {
  // Sharing the uplink pushes two offloaders past the deadline, while a lone
  // offloader beats local execution: no symmetric profile is stable.
  OffloadProblem p;
  p.servers = {edge("edge0")};
  p.agents = {agent("ue0", {"edge0"}), agent("ue1", {"edge0"})};
  const auto g = make_uniform_grid(p, 2, 2);
  for (const auto& x : enumerate_actions(p.agents[0], g.agents[0])) {
    EXPECT_FALSE(deviation_scan(p, g, {x, x}, 1e-9).stable);
  }
  const auto r = best_response_gne(p, g);
  ASSERT_TRUE(r.converged);
  EXPECT_NE(r.solution.actions[0].mode, r.solution.actions[1].mode);
  EXPECT_TRUE(deviation_scan(p, g, r.solution.actions, 1e-9).stable);
}

TEST(Gne, InfiniteEpsStopsAfterOneRound) {
  auto [p, g] = random_problem({3, 2, 3, 3}, 9);
  GneOptions o;
  o.eps = std::numeric_limits<double>::infinity();
  const auto r = best_response_gne(p, g, o);
  EXPECT_EQ(r.iterations, 1);
  EXPECT_TRUE(r.converged);
}

TEST(Gne, ConvergedProfilesPassTheDeviationScan) {
  int converged = 0;
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    auto [p, g] = random_problem({4, 2, 3, 3}, seed);
    const auto r = best_response_gne(p, g);
    if (!r.converged) continue;
    ++converged;
    const auto scan = deviation_scan(p, g, r.solution.actions, 1e-9);
    EXPECT_TRUE(scan.stable) << "seed " << seed << " gain " << scan.max_gain_j;
  }
  EXPECT_GT(converged, 30);
}

TEST(Gne, RejectsZeroIterations) {
  auto [p, g] = random_problem({2, 1, 2, 2}, 1);
  GneOptions o;
  o.max_iters = 0;
  EXPECT_THROW(best_response_gne(p, g, o), ValidationError);
}

TEST(DeviationScan, DetectsAProfitableDeviation) {
  OffloadProblem p;
  p.agents = {agent("ue0", {})};
  const auto g = make_uniform_grid(p, 3, 1);
  const auto scan = deviation_scan(p, g, {OffloadAction::local(1.72e9)}, 1e-9);
  EXPECT_FALSE(scan.stable);
  EXPECT_EQ(scan.deviation, OffloadAction::local(0.96e9));
  EXPECT_GT(scan.max_gain_j, 0.0);
}

}  // namespace
}  // namespace semcn::opt
