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

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace semcn {

/// Raised whenever a value violates a documented invariant. Nothing in the
/// library clamps invalid input silently.
class ValidationError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Tier { cloud, edge, end };

std::string_view to_string(Tier tier);
Tier tier_from_string(std::string_view name);

struct FreqRange {
  double min_hz = 0.0;
  double max_hz = 0.0;
};

struct PowerRange {
  double min_dbm = 0.0;
  double max_dbm = 0.0;
};

/// A cloud, edge or end computing node.
///
/// End nodes carry the DVFS parameters (selectable frequency range and the
/// switched-capacitance coefficient). Edge and cloud nodes carry an admission
/// capacity and the load currently admitted against it.
struct ComputeNode {
  std::string id;
  Tier tier = Tier::edge;
  double clock_hz = 0.0;
  int cores = 1;
  int flops_per_cycle = 1;
  std::optional<FreqRange> freq_range_hz;
  std::optional<double> kappa;  // J*s^2/cycle
  double capacity_flops = 0.0;
  double current_load_flops = 0.0;
};

/// Uplink between an end node and a server.
struct WirelessLink {
  std::string end_id;
  std::string server_id;
  double bandwidth_hz = 0.0;
  double channel_gain = 0.0;  // linear power gain
  double noise_psd = 0.0;     // W/Hz
  PowerRange power_range_dbm;
};

/// Task performance as a function of symbols per word:
/// phi(k) = 1 - exp(-k / scale). Saturating, non-decreasing, bounded by 1.
struct PerfCurve {
  double scale = 4.0;

  double operator()(int symbols_per_word) const;
};

/// A semantic workload: `words` source words, each encoded into
/// `symbols_per_word` symbols of `bits_per_symbol` bits.
struct SemanticTask {
  std::string id;
  std::string device_id;
  double arrival_s = 0.0;
  std::uint64_t words = 0;
  int symbols_per_word = 8;
  int bits_per_symbol = 16;
  double enc_cycles_base = 0.0;     // a0, cycles per word
  double enc_cycles_per_symbol = 0.0;  // a1, cycles per word per symbol
  double dec_cycles_per_word = 0.0;
  double deadline_s = 1.0;
  PerfCurve perf;

  double enc_cycles_per_word() const {
    return enc_cycles_base + enc_cycles_per_symbol * symbols_per_word;
  }
};

enum class Mode { local, offload };

struct OffloadAction {
  Mode mode = Mode::local;
  std::string server_id;  // empty when local
  double cpu_freq_hz = 0.0;
  double tx_power_dbm = 0.0;  // ignored when local

  static OffloadAction local(double freq_hz) { return {Mode::local, {}, freq_hz, 0.0}; }
  static OffloadAction offload(std::string server, double freq_hz, double power_dbm) {
    return {Mode::offload, std::move(server), freq_hz, power_dbm};
  }

  friend bool operator==(const OffloadAction&, const OffloadAction&) = default;
};

struct Outcome {
  double energy_j = 0.0;
  double latency_s = 0.0;
  bool feasible = true;
  std::uint64_t bits_sent = 0;
  double semantic_rate_sps = 0.0;
};

struct LoadSnapshot {
  std::string node_id;
  double load_flops = 0.0;
  double timestamp_s = 0.0;
};

struct NetworkStatus {
  double congestion_level = 0.0;
  std::vector<LoadSnapshot> loads;
  double link_utilization = 0.0;
};

inline constexpr double kDefaultKappa = 1e-27;

void validate(const ComputeNode& node);
void validate(const WirelessLink& link);
void validate(const SemanticTask& task);
void validate(const NetworkStatus& status);
/// Checks the action against the acting node (and the link when offloading).
void validate(const OffloadAction& action, const ComputeNode& end, const WirelessLink* link);

double dbm_to_watts(double dbm);

/// Peak FLOP/s of a node: clock * cores * flops per cycle.
double node_flops(const ComputeNode& node);

}  // namespace semcn
