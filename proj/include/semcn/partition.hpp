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

#pragma once

#include <vector>

#include "semcn/core_model.hpp"

namespace semcn::opt {

struct PartitionResult {
  /// allocation[device][server], FLOP. Rows sum to the device demand.
  std::vector<std::vector<double>> allocation;
  /// Completion time of each server: allocated work / capacity.
  std::vector<double> server_time_s;
  int iterations = 0;
  bool converged = false;
};

/// Divisible-task partitioning game. Each device splits its demand across the
/// servers to minimise its own makespan (the latest completion time among the
/// servers it uses), by water-filling against the load of the others.
/// Best responses are applied round-robin until no device's makespan moves by
/// more than eps seconds. Servers with zero capacity receive nothing.
PartitionResult partition_divisible(const std::vector<double>& demands,
                                    const std::vector<ComputeNode>& servers, int max_iters,
                                    double eps);

/// Makespan of one device under an allocation.
double device_makespan(const PartitionResult& result, std::size_t device);

/// Best makespan a device could reach by re-splitting its own demand, the
/// others held fixed.
double best_response_makespan(const PartitionResult& result,
                              const std::vector<ComputeNode>& servers, std::size_t device);

}  // namespace semcn::opt
