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
#include <random>

#include "semcn/core_model.hpp"

namespace semcn {
namespace {

ComputeNode end_node() {
  ComputeNode n;
  n.id = "ue0";
  n.tier = Tier::end;
  n.clock_hz = 1.72e9;
  n.freq_range_hz = FreqRange{0.96e9, 1.72e9};
  n.kappa = 1e-27;
  return n;
}

TEST(DbmToWatts, Anchors) {
  EXPECT_EQ(dbm_to_watts(30.0), 1.0);
  EXPECT_NEAR(dbm_to_watts(0.0), 0.001, 1e-18);
  EXPECT_NEAR(dbm_to_watts(15.0), 0.0316227766, 1e-9);
}

TEST(DbmToWatts, StrictlyIncreasingOnRandomPairs) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> d(-50.0, 60.0);
  for (int i = 0; i < 10000; ++i) {
    double a = d(rng);
    double b = d(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    EXPECT_LT(dbm_to_watts(a), dbm_to_watts(b));
  }
}

TEST(DbmToWatts, TenDbIsFactorTen) {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> d(-50.0, 60.0);
  for (int i = 0; i < 10000; ++i) {
    const double p = d(rng);
    const double ratio = dbm_to_watts(p + 10.0) / (10.0 * dbm_to_watts(p));
    EXPECT_NEAR(ratio, 1.0, 1e-12);
  }
}

TEST(NodeFlops, Products) {
  ComputeNode n;
  n.id = "a";
  n.clock_hz = 1e9;
  EXPECT_EQ(node_flops(n), 1e9);
  n.clock_hz = 1.72e9;
  n.cores = 2;
  n.flops_per_cycle = 4;
  EXPECT_DOUBLE_EQ(node_flops(n), 1.376e10);
  n.clock_hz = 0.0;
  EXPECT_THROW(node_flops(n), ValidationError);
}

TEST(Validation, RejectsBrokenNodes) {
  auto n = end_node();
  EXPECT_NO_THROW(validate(n));
  auto bad = n;
  bad.freq_range_hz = FreqRange{2e9, 1e9};
  EXPECT_THROW(validate(bad), ValidationError);
  bad = n;
  bad.kappa.reset();
  EXPECT_THROW(validate(bad), ValidationError);
  bad = n;
  bad.freq_range_hz.reset();
  EXPECT_THROW(validate(bad), ValidationError);
  bad = n;
  bad.cores = 0;
  EXPECT_THROW(validate(bad), ValidationError);

  ComputeNode srv;
  srv.id = "edge";
  srv.clock_hz = 1e9;
  srv.capacity_flops = 1e9;
  srv.current_load_flops = 2e9;
  EXPECT_THROW(validate(srv), ValidationError);
  srv.current_load_flops = 1e9;
  EXPECT_NO_THROW(validate(srv));
}

TEST(Validation, RejectsBrokenLinks) {
  WirelessLink l{"ue0", "edge", 1e6, 1e-7, 1e-17, {15, 24}};
  EXPECT_NO_THROW(validate(l));
  auto bad = l;
  bad.channel_gain = 1.5;
  EXPECT_THROW(validate(bad), ValidationError);
  bad = l;
  bad.channel_gain = 0.0;
  EXPECT_THROW(validate(bad), ValidationError);
  bad = l;
  bad.bandwidth_hz = 0.0;
  EXPECT_THROW(validate(bad), ValidationError);
  bad = l;
  bad.noise_psd = -1.0;
  EXPECT_THROW(validate(bad), ValidationError);
  bad = l;
  bad.power_range_dbm = {24, 15};
  EXPECT_THROW(validate(bad), ValidationError);
}

TEST(Validation, RejectsBrokenTasks) {
  SemanticTask t;
  t.id = "t";
  EXPECT_NO_THROW(validate(t));
  auto bad = t;
  bad.symbols_per_word = 0;
  EXPECT_THROW(validate(bad), ValidationError);
  bad = t;
  bad.bits_per_symbol = 0;
  EXPECT_THROW(validate(bad), ValidationError);
  bad = t;
  bad.deadline_s = 0.0;
  EXPECT_THROW(validate(bad), ValidationError);
  bad = t;
  bad.enc_cycles_base = -1.0;
  EXPECT_THROW(validate(bad), ValidationError);
}

TEST(Validation, ActionMustLieInRanges) {
  const auto n = end_node();
  WirelessLink l{"ue0", "edge", 1e6, 1e-7, 1e-17, {15, 24}};
  EXPECT_NO_THROW(validate(OffloadAction::local(1e9), n, nullptr));
  EXPECT_THROW(validate(OffloadAction::local(2e9), n, nullptr), ValidationError);
  EXPECT_NO_THROW(validate(OffloadAction::offload("edge", 1e9, 20), n, &l));
  EXPECT_THROW(validate(OffloadAction::offload("edge", 1e9, 30), n, &l), ValidationError);
}

TEST(Validation, NetworkStatusRanges) {
  NetworkStatus s;
  s.congestion_level = 0.5;
  s.loads = {{"a", 1.0, 0.0}, {"b", 2.0, 1.0}};
  EXPECT_NO_THROW(validate(s));
  s.loads = {{"a", 1.0, 1.0}, {"b", 2.0, 0.0}};
  EXPECT_THROW(validate(s), ValidationError);
  s.loads.clear();
  s.congestion_level = 1.5;
  EXPECT_THROW(validate(s), ValidationError);
}

TEST(PerfCurve, MonotoneAndBounded) {
  PerfCurve phi;
  double last = 0.0;
  for (int k = 1; k <= 64; ++k) {
    const double v = phi(k);
    EXPECT_GE(v, last);
    EXPECT_LE(v, 1.0);
    last = v;
  }
  EXPECT_NEAR(phi(4), 1.0 - std::exp(-1.0), 1e-15);
}

TEST(Tier, RoundTrip) {
  for (auto t : {Tier::cloud, Tier::edge, Tier::end}) EXPECT_EQ(tier_from_string(to_string(t)), t);
  EXPECT_THROW(tier_from_string("fog"), ValidationError);
}

}  // namespace
}  // namespace semcn
