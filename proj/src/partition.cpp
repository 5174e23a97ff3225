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

#include "semcn/partition.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace semcn::opt {

namespace {

// Water-filling: the level T with sum_s max(0, T*c_s - other_s) == demand.
std::vector<double> water_fill(double demand, const std::vector<double>& capacity,
                               const std::vector<double>& other) {
  const std::size_t m = capacity.size();
  std::vector<double> alloc(m, 0.0);
  if (demand <= 0.0) return alloc;
  std::vector<std::size_t> order;
  for (std::size_t s = 0; s < m; ++s) {
    if (capacity[s] > 0.0) order.push_back(s);
  }
  if (order.empty()) throw ValidationError("no server with positive capacity");
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return other[a] / capacity[a] < other[b] / capacity[b];
  });
  // Fill servers in order of their current completion time until the level
  // reaches the next server's time.
  double cap_sum = 0.0;
  double load_sum = 0.0;
  double level = 0.0;
  std::size_t used = 0;
  for (std::size_t j = 0; j < order.size(); ++j) {
    cap_sum += capacity[order[j]];
    load_sum += other[order[j]];
    used = j + 1;
    level = (demand + load_sum) / cap_sum;
    if (j + 1 == order.size()) break;
    const std::size_t nxt = order[j + 1];
    if (level <= other[nxt] / capacity[nxt]) break;
  }
  for (std::size_t j = 0; j < used; ++j) {
    const std::size_t s = order[j];
    alloc[s] = std::max(0.0, level * capacity[s] - other[s]);
  }
  // Remove rounding drift so the row sums to the demand exactly.
  const double sum = std::accumulate(alloc.begin(), alloc.end(), 0.0);
  if (sum > 0.0) {
    for (auto& a : alloc) a *= demand / sum;
  }
  return alloc;
}

std::vector<double> capacities(const std::vector<ComputeNode>& servers) {
  std::vector<double> c;
  for (const auto& s : servers) {
    validate(s);
    c.push_back(s.capacity_flops);
  }
  return c;
}

std::vector<double> others_load(const std::vector<std::vector<double>>& alloc, std::size_t device,
                                std::size_t servers) {
  std::vector<double> load(servers, 0.0);
  for (std::size_t d = 0; d < alloc.size(); ++d) {
    if (d == device) continue;
    for (std::size_t s = 0; s < servers; ++s) load[s] += alloc[d][s];
  }
  return load;
}

double makespan_of(const std::vector<double>& row, const std::vector<double>& other,
                   const std::vector<double>& capacity) {
  double t = 0.0;
  for (std::size_t s = 0; s < row.size(); ++s) {
    if (row[s] > 0.0) t = std::max(t, (row[s] + other[s]) / capacity[s]);
  }
  return t;
}

void refresh_times(PartitionResult& r, const std::vector<double>& capacity) {
  r.server_time_s.assign(capacity.size(), 0.0);
  for (std::size_t s = 0; s < capacity.size(); ++s) {
    double load = 0.0;
    for (const auto& row : r.allocation) load += row[s];
    r.server_time_s[s] = capacity[s] > 0.0 ? load / capacity[s] : 0.0;
  }
}

}  // namespace

PartitionResult partition_divisible(const std::vector<double>& demands,
                                    const std::vector<ComputeNode>& servers, int max_iters,
                                    double eps) {
  if (max_iters < 1) throw ValidationError("max_iters must be >= 1");
  for (double d : demands) {
    if (!(d >= 0.0) || !std::isfinite(d)) throw ValidationError("demands must be finite and >= 0");
  }
  const auto capacity = capacities(servers);
  const std::size_t m = servers.size();
  PartitionResult r;
  r.allocation.assign(demands.size(), std::vector<double>(m, 0.0));

  std::vector<double> span(demands.size(), 0.0);
  for (int round = 1; round <= max_iters; ++round) {
    r.iterations = round;
    double max_change = 0.0;
    for (std::size_t d = 0; d < demands.size(); ++d) {
      const auto other = others_load(r.allocation, d, m);
      r.allocation[d] = water_fill(demands[d], capacity, other);
      const double t = makespan_of(r.allocation[d], other, capacity);
      max_change = std::max(max_change, std::abs(t - span[d]));
      span[d] = t;
    }
    // Re-measure after the full round: later moves shift earlier devices too.
    for (std::size_t d = 0; d < demands.size(); ++d) {
      const double t = makespan_of(r.allocation[d], others_load(r.allocation, d, m), capacity);
      max_change = std::max(max_change, std::abs(t - span[d]));
      span[d] = t;
    }
    if (round > 1 && max_change <= eps) {
      r.converged = true;
      break;
    }
  }
  refresh_times(r, capacity);
  return r;
}

double device_makespan(const PartitionResult& result, std::size_t device) {
  double t = 0.0;
  for (std::size_t s = 0; s < result.server_time_s.size(); ++s) {
    if (result.allocation[device][s] > 0.0) t = std::max(t, result.server_time_s[s]);
  }
  return t;
}

double best_response_makespan(const PartitionResult& result,
                              const std::vector<ComputeNode>& servers, std::size_t device) {
  const auto capacity = capacities(servers);
  const auto other = others_load(result.allocation, device, servers.size());
  const double demand =
      std::accumulate(result.allocation[device].begin(), result.allocation[device].end(), 0.0);
  return makespan_of(water_fill(demand, capacity, other), other, capacity);
}

}  // namespace semcn::opt
