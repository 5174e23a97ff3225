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

#include "semcn/cost_model.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace semcn::cost {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double kappa_of(const ComputeNode& node) { return node.kappa.value_or(kDefaultKappa); }

double clamp01(double v) { return std::clamp(v, 0.0, 1.0); }

}  // namespace

double shannon_rate(const WirelessLink& link, double p_dbm, int sharers) {
  validate(link);
  if (sharers < 1) throw ValidationError("bandwidth sharers must be >= 1");
  const auto& pr = link.power_range_dbm;
  if (!(p_dbm >= pr.min_dbm - 1e-12 * std::abs(pr.min_dbm) &&
        p_dbm <= pr.max_dbm + 1e-12 * std::abs(pr.max_dbm))) {
    throw ValidationError("transmit power " + std::to_string(p_dbm) +
                          " dBm outside the link power range");
  }
  const double bandwidth = link.bandwidth_hz / sharers;
  const double snr = dbm_to_watts(p_dbm) * link.channel_gain / (link.noise_psd * bandwidth);
  return bandwidth * std::log2(1.0 + snr);
}

std::uint64_t semantic_payload_bits(const SemanticTask& task) {
  validate(task);
  return task.words * static_cast<std::uint64_t>(task.symbols_per_word) *
         static_cast<std::uint64_t>(task.bits_per_symbol);
}

Evaluation local_outcome(const SemanticTask& task, const ComputeNode& node, double f_hz) {
  validate(task);
  validate(node);
  validate(OffloadAction::local(f_hz), node, nullptr);

  const double kappa = kappa_of(node);
  const double words = static_cast<double>(task.words);
  const double enc_cycles = words * task.enc_cycles_per_word();
  const double dec_cycles = words * task.dec_cycles_per_word;

  CostBreakdown cb;
  cb.t_encode_s = enc_cycles / f_hz;
  cb.t_decode_s = dec_cycles / f_hz;
  cb.e_encode_j = kappa * f_hz * f_hz * enc_cycles;
  cb.e_decode_j = kappa * f_hz * f_hz * dec_cycles;

  Outcome out;
  out.energy_j = cb.e_encode_j + cb.e_decode_j;
  out.latency_s = cb.t_encode_s + cb.t_decode_s;
  out.feasible = out.latency_s <= task.deadline_s;
  return {out, cb};
}

Evaluation offload_outcome(const SemanticTask& task, const ComputeNode& end, double f_hz,
                           const WirelessLink& link, double p_dbm, const ComputeNode& server,
                           int sharers) {
  validate(task);
  validate(end);
  validate(server);
  if (link.end_id != end.id || link.server_id != server.id) {
    throw ValidationError("link " + link.end_id + "->" + link.server_id + " does not connect '" +
                          end.id + "' to '" + server.id + "'");
  }
  validate(OffloadAction::offload(server.id, f_hz, p_dbm), end, &link);

  CostBreakdown cb;
  Outcome out;
  if (task.words == 0) return {out, cb};

  const double kappa = kappa_of(end);
  const double words = static_cast<double>(task.words);
  const double enc_cycles = words * task.enc_cycles_per_word();
  cb.t_encode_s = enc_cycles / f_hz;
  cb.e_encode_j = kappa * f_hz * f_hz * enc_cycles;

  const std::uint64_t bits = semantic_payload_bits(task);
  const double rate = shannon_rate(link, p_dbm, sharers);
  out.bits_sent = bits;
  if (!(rate > 0.0)) {
    cb.t_transmit_s = kInf;
    cb.e_transmit_j = kInf;
  } else {
    cb.t_transmit_s = static_cast<double>(bits) / rate;
    cb.e_transmit_j = dbm_to_watts(p_dbm) * cb.t_transmit_s;
    out.semantic_rate_sps = words * task.symbols_per_word / cb.t_transmit_s;
  }

  const double available = std::max(0.0, node_flops(server) - server.current_load_flops);
  const double dec_cycles = words * task.dec_cycles_per_word;
  if (dec_cycles == 0.0) {
    cb.t_server_s = 0.0;
  } else if (available > 0.0) {
    cb.t_server_s = dec_cycles * server.flops_per_cycle / available;
  } else {
    cb.t_server_s = kInf;
  }

  out.energy_j = cb.e_encode_j + cb.e_transmit_j;
  out.latency_s = cb.t_encode_s + cb.t_transmit_s + cb.t_server_s;
  out.feasible = std::isfinite(out.latency_s) && out.latency_s <= task.deadline_s;
  return {out, cb};
}

double end_device_cycles(const Outcome& outcome, const SemanticTask& task) {
  const double words = static_cast<double>(task.words);
  double cycles = words * task.enc_cycles_per_word();
  if (outcome.bits_sent == 0) cycles += words * task.dec_cycles_per_word;
  return cycles;
}

double qoe(const Outcome& outcome, const SemanticTask& task, const QoeWeights& weights,
           const std::optional<QoeScales>& scales) {
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) throw ValidationError("QoE weights must be finite and >= 0");
  }
  if (!scales) throw ValidationError("QoE reference scales are missing");
  const auto& s = *scales;
  if (!(s.bits > 0 && s.cycles > 0 && s.latency_s > 0 && s.energy_j > 0)) {
    throw ValidationError("QoE reference scales must all be > 0");
  }
  const double bits = clamp01(static_cast<double>(outcome.bits_sent) / s.bits);
  const double cycles = clamp01(end_device_cycles(outcome, task) / s.cycles);
  const double latency = clamp01(outcome.latency_s / s.latency_s);
  const double energy = clamp01(outcome.energy_j / s.energy_j);
  const double perf = task.perf(task.symbols_per_word);
  return -weights[0] * bits - weights[1] * cycles - weights[2] * latency - weights[3] * energy +
         weights[4] * perf;
}

}  // namespace semcn::cost
