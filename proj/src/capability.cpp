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

#include "semcn/capability.hpp"

#include <algorithm>
#include <cmath>

#include "semcn/cost_model.hpp"

namespace semcn::capability {

CapabilityReport measure(const ComputeNode& node, double at_s) {
  const double measured = node_flops(node);
  return {node.id, measured, std::max(0.0, measured - node.current_load_flops), at_s};
}

EndToEndEstimate estimate_end_to_end(const SemanticTask& task, const OffloadAction& action,
                                     const ComputeNode& end, const WirelessLink& link,
                                     const ComputeNode& server, int sharers) {
  if (action.mode != Mode::offload || action.server_id != server.id) {
    throw ValidationError("estimate_end_to_end needs an offload action targeting '" + server.id + "'");
  }
  const auto [outcome, breakdown] = cost::offload_outcome(
      task, end, action.cpu_freq_hz, link, action.tx_power_dbm, server, sharers);
  return {outcome.latency_s, cost::shannon_rate(link, action.tx_power_dbm, sharers), outcome.feasible};
}

bool admit(const ComputeNode& server, double demand_flops) {
  if (!(demand_flops >= 0.0)) throw ValidationError("admission demand must be >= 0");
  if (demand_flops == 0.0) return true;
  return server.current_load_flops + demand_flops <= server.capacity_flops;
}

int adapt_symbol_dimension(const NetworkStatus& status, int k_min, int k_max) {
  validate(status);
  if (k_min > k_max) throw ValidationError("k_min must not exceed k_max");
  const double target = k_max - status.congestion_level * (k_max - k_min);
  const int k = static_cast<int>(std::floor(target + 0.5));
  return std::clamp(k, k_min, k_max);
}

}  // namespace semcn::capability
