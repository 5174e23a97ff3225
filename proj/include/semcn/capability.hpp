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

#include <string>

#include "semcn/core_model.hpp"

namespace semcn::capability {

struct CapabilityReport {
  std::string node_id;
  double measured_flops = 0.0;
  double available_flops = 0.0;
  double timestamp_s = 0.0;
};

CapabilityReport measure(const ComputeNode& node, double at_s);

struct EndToEndEstimate {
  double latency_s = 0.0;  // +inf when the server has no spare capacity
  double rate_bps = 0.0;
  bool feasible = true;
};

/// Predicted latency and link rate of offloading `task` under `action`.
/// Pure; shares its formulas with cost::offload_outcome.
EndToEndEstimate estimate_end_to_end(const SemanticTask& task, const OffloadAction& action,
                                     const ComputeNode& end, const WirelessLink& link,
                                     const ComputeNode& server, int sharers = 1);

/// Admission test. The boundary is inclusive: load + demand == capacity admits.
bool admit(const ComputeNode& server, double demand_flops);

/// Coding dimension for the current network status:
/// round_half_up(k_max - congestion * (k_max - k_min)), clamped to the range.
int adapt_symbol_dimension(const NetworkStatus& status, int k_min, int k_max);

}  // namespace semcn::capability
