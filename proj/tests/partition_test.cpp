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

#include <algorithm>
#include <numeric>
#include <random>

#include "semcn/partition.hpp"

namespace semcn::opt {
namespace {

ComputeNode server(const std::string& id, double capacity) {
  ComputeNode s;
  s.id = id;
  s.tier = Tier::edge;
  s.clock_hz = 1e9;
  s.capacity_flops = capacity;
  return s;
}

TEST(Partition, SingleServerTakesEverything) {
  const auto r = partition_divisible({5e9}, {server("a", 1e9)}, 50, 1e-12);
  EXPECT_EQ(r.allocation[0][0], 5e9);
  EXPECT_TRUE(r.converged);
  EXPECT_DOUBLE_EQ(r.server_time_s[0], 5.0);
}

TEST(Partition, EqualServersSplitExactlyInHalf) {
  const auto r = partition_divisible({4e9}, {server("a", 1e9), server("b", 1e9)}, 50, 1e-12);
  EXPECT_EQ(r.allocation[0][0], 2e9);
  EXPECT_EQ(r.allocation[0][1], 2e9);
}

TEST(Partition, UnequalServersBalanceCompletionTimes) {
  const std::vector<ComputeNode> servers{server("a", 2e9), server("b", 1e9)};
  const std::vector<double> demands{3e9, 1.5e9};
  const auto r = partition_divisible(demands, servers, 200, 1e-12);
  ASSERT_TRUE(r.converged);
  EXPECT_NEAR(r.server_time_s[0], r.server_time_s[1], 1e-9);
  const double load_a = r.allocation[0][0] + r.allocation[1][0];
  const double load_b = r.allocation[0][1] + r.allocation[1][1];
  EXPECT_NEAR(load_a / load_b, 2.0, 1e-9);
}

TEST(Partition, RowsSumToDemandsOnRandomInstances) {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 5;
    const std::size_t m = 1 + rng() % 4;
    std::vector<double> demands(n);
    for (auto& d : demands) d = u(rng) < 0.1 ? 0.0 : 1e9 * u(rng);
    std::vector<ComputeNode> servers;
    for (std::size_t s = 0; s < m; ++s) servers.push_back(server("s" + std::to_string(s), 1e8 + 1e9 * u(rng)));
    const auto r = partition_divisible(demands, servers, 500, 1e-9);
    for (std::size_t d = 0; d < n; ++d) {
      const double sum = std::accumulate(r.allocation[d].begin(), r.allocation[d].end(), 0.0);
      EXPECT_NEAR(sum, demands[d], 1e-9 * std::max(1.0, demands[d]));
      for (double a : r.allocation[d]) EXPECT_GE(a, 0.0);
    }
    if (!r.converged) continue;
    for (std::size_t d = 0; d < n; ++d) {
      EXPECT_GE(best_response_makespan(r, servers, d), device_makespan(r, d) - 1e-6);
    }
  }
}

TEST(Partition, ZeroCapacityServerIsExcluded) {
  const auto r = partition_divisible({1e9, 2e9}, {server("a", 0.0), server("b", 1e9)}, 50, 1e-12);
  EXPECT_EQ(r.allocation[0][0], 0.0);
  EXPECT_EQ(r.allocation[1][0], 0.0);
  EXPECT_EQ(r.allocation[1][1], 2e9);
}

TEST(Partition, RejectsBadInput) {
  EXPECT_THROW(partition_divisible({-1.0}, {server("a", 1e9)}, 10, 0), ValidationError);
  EXPECT_THROW(partition_divisible({1.0}, {server("a", 1e9)}, 0, 0), ValidationError);
  EXPECT_THROW(partition_divisible({1.0}, {server("a", 0.0)}, 10, 0), ValidationError);
}

TEST(Partition, ZeroDemandGetsNothing) {
  const auto r = partition_divisible({0.0, 1e9}, {server("a", 1e9), server("b", 1e9)}, 50, 1e-12);
  EXPECT_EQ(r.allocation[0][0], 0.0);
  EXPECT_EQ(r.allocation[0][1], 0.0);
  EXPECT_EQ(device_makespan(r, 0), 0.0);
}

}  // namespace
}  // namespace semcn::opt
