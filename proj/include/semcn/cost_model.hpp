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

#include <array>
#include <cstdint>
#include <optional>
#include <utility>

#include "semcn/core_model.hpp"

namespace semcn::cost {

/// Per-stage energy and time of one task execution.
struct CostBreakdown {
  double e_encode_j = 0.0;
  double e_decode_j = 0.0;
  double e_transmit_j = 0.0;
  double t_encode_s = 0.0;
  double t_transmit_s = 0.0;
  double t_server_s = 0.0;
  double t_decode_s = 0.0;
};

using Evaluation = std::pair<Outcome, CostBreakdown>;

/// Shannon capacity of the link at transmit power `p_dbm` when the link's
/// bandwidth is split equally among `sharers` simultaneous uploads.
double shannon_rate(const WirelessLink& link, double p_dbm, int sharers = 1);

/// L * k * q.
std::uint64_t semantic_payload_bits(const SemanticTask& task);

/// Encode and decode on the end node at frequency f.
Evaluation local_outcome(const SemanticTask& task, const ComputeNode& node, double f_hz);

/// Encode on the end node, upload the semantic features, decode on the server.
/// The server decodes at its available FLOP/s (peak minus current load)
/// converted to cycles through flops_per_cycle. End-user energy covers encode
/// and transmit only.
Evaluation offload_outcome(const SemanticTask& task, const ComputeNode& end, double f_hz,
                           const WirelessLink& link, double p_dbm, const ComputeNode& server,
                           int sharers = 1);

/// Cycles executed on the end device for an outcome of `task`.
double end_device_cycles(const Outcome& outcome, const SemanticTask& task);

/// Reference magnitudes mapping each QoE term onto [0, 1].
struct QoeScales {
  double bits = 0.0;
  double cycles = 0.0;
  double latency_s = 0.0;
  double energy_j = 0.0;
};

/// Weights for (transmission overhead, computing cost, delay, energy, task performance).
using QoeWeights = std::array<double, 5>;

double qoe(const Outcome& outcome, const SemanticTask& task, const QoeWeights& weights,
           const std::optional<QoeScales>& scales);

}  // namespace semcn::cost
