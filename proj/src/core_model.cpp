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

#include "semcn/core_model.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace semcn {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw ValidationError(what);
}

bool positive_finite(double v) { return std::isfinite(v) && v > 0.0; }

// Grid levels are produced by linear interpolation, so allow one part in
// 1e12 of slack at the range endpoints.
bool within(double v, double lo, double hi) {
  const double slack = 1e-12 * std::max(std::abs(lo), std::abs(hi));
  return v >= lo - slack && v <= hi + slack;
}

}  // namespace

std::string_view to_string(Tier tier) {
  switch (tier) {
    case Tier::cloud:
      return "cloud";
    case Tier::edge:
      return "edge";
    case Tier::end:
      return "end";
  }
  return "unknown";
}

Tier tier_from_string(std::string_view name) {
  if (name == "cloud") return Tier::cloud;
  if (name == "edge") return Tier::edge;
  if (name == "end") return Tier::end;
  throw ValidationError("unknown tier '" + std::string(name) + "'");
}

double PerfCurve::operator()(int symbols_per_word) const {
  return 1.0 - std::exp(-static_cast<double>(symbols_per_word) / scale);
}

void validate(const ComputeNode& node) {
  const std::string who = "node '" + node.id + "': ";
  require(!node.id.empty(), "node id must not be empty");
  require(positive_finite(node.clock_hz), who + "clock_hz must be > 0");
  require(node.cores > 0, who + "cores must be > 0");
  require(node.flops_per_cycle > 0, who + "flops_per_cycle must be > 0");
  if (node.tier == Tier::end) {
    require(node.freq_range_hz.has_value(), who + "end nodes need freq_range_hz");
    require(node.kappa.has_value(), who + "end nodes need kappa");
  }
  if (node.freq_range_hz) {
    const auto& r = *node.freq_range_hz;
    require(positive_finite(r.min_hz) && positive_finite(r.max_hz),
            who + "frequency bounds must be > 0");
    require(r.min_hz <= r.max_hz, who + "f_min must not exceed f_max");
  }
  if (node.kappa) require(positive_finite(*node.kappa), who + "kappa must be > 0");
  // A zero-capacity server is representable; partitioners skip it.
  require(std::isfinite(node.capacity_flops) && node.capacity_flops >= 0.0,
          who + "capacity_flops must be >= 0");
  require(std::isfinite(node.current_load_flops) && node.current_load_flops >= 0.0,
          who + "current_load_flops must be >= 0");
  if (node.tier != Tier::end) {
    require(node.current_load_flops <= node.capacity_flops,
            who + "current_load_flops exceeds capacity_flops");
  }
}

void validate(const WirelessLink& link) {
  const std::string who = "link " + link.end_id + "->" + link.server_id + ": ";
  require(!link.end_id.empty() && !link.server_id.empty(), "link endpoints must be named");
  require(positive_finite(link.bandwidth_hz), who + "bandwidth_hz must be > 0");
  require(positive_finite(link.channel_gain) && link.channel_gain <= 1.0,
          who + "channel_gain must lie in (0, 1]");
  require(positive_finite(link.noise_psd), who + "noise_psd must be > 0");
  require(std::isfinite(link.power_range_dbm.min_dbm) && std::isfinite(link.power_range_dbm.max_dbm),
          who + "power bounds must be finite");
  require(link.power_range_dbm.min_dbm <= link.power_range_dbm.max_dbm,
          who + "p_min must not exceed p_max");
}

void validate(const SemanticTask& task) {
  const std::string who = "task '" + task.id + "': ";
  require(!task.id.empty(), "task id must not be empty");
  require(task.symbols_per_word >= 1, who + "symbols_per_word must be >= 1");
  require(task.bits_per_symbol >= 1, who + "bits_per_symbol must be >= 1");
  require(std::isfinite(task.enc_cycles_base) && task.enc_cycles_base >= 0.0,
          who + "encoder base cycles must be >= 0");
  require(std::isfinite(task.enc_cycles_per_symbol) && task.enc_cycles_per_symbol >= 0.0,
          who + "encoder per-symbol cycles must be >= 0");
  require(std::isfinite(task.dec_cycles_per_word) && task.dec_cycles_per_word >= 0.0,
          who + "dec_cycles_per_word must be >= 0");
  require(positive_finite(task.deadline_s), who + "deadline_s must be > 0");
  require(std::isfinite(task.arrival_s) && task.arrival_s >= 0.0, who + "arrival_s must be >= 0");
  require(positive_finite(task.perf.scale), who + "perf scale must be > 0");
}

void validate(const NetworkStatus& status) {
  require(status.congestion_level >= 0.0 && status.congestion_level <= 1.0,
          "congestion_level must lie in [0, 1]");
  require(status.link_utilization >= 0.0 && status.link_utilization <= 1.0,
          "link_utilization must lie in [0, 1]");
  double last = -INFINITY;
  for (const auto& s : status.loads) {
    require(s.load_flops >= 0.0, "load snapshot for '" + s.node_id + "' is negative");
    require(s.timestamp_s >= last, "load snapshot timestamps must be non-decreasing");
    last = s.timestamp_s;
  }
}

void validate(const OffloadAction& action, const ComputeNode& end, const WirelessLink* link) {
  require(end.freq_range_hz.has_value(), "node '" + end.id + "' has no frequency range");
  const auto& fr = *end.freq_range_hz;
  require(within(action.cpu_freq_hz, fr.min_hz, fr.max_hz),
          "cpu_freq_hz " + std::to_string(action.cpu_freq_hz) + " outside the range of '" +
              end.id + "'");
  if (action.mode == Mode::offload) {
    require(link != nullptr, "offload action needs a link");
    require(link->server_id == action.server_id, "link does not reach server '" + action.server_id + "'");
    const auto& pr = link->power_range_dbm;
    require(within(action.tx_power_dbm, pr.min_dbm, pr.max_dbm),
            "tx_power_dbm " + std::to_string(action.tx_power_dbm) + " outside the link power range");
  }
}

double dbm_to_watts(double dbm) { return std::pow(10.0, (dbm - 30.0) / 10.0); }

double node_flops(const ComputeNode& node) {
  validate(node);
  return node.clock_hz * node.cores * node.flops_per_cycle;
}

}  // namespace semcn
