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

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "semcn/core_model.hpp"
#include "semcn/cost_model.hpp"
#include "semcn/marl.hpp"
#include "semcn/offload_opt.hpp"
#include "semcn/video/pipeline.hpp"

namespace semcn {

inline constexpr int kSchemaVersion = 1;

enum class OptimizerKind { oracle, greedy_local, greedy_offload, gne, marl };

std::string_view to_string(OptimizerKind kind);
OptimizerKind optimizer_from_string(std::string_view name);

struct GridSpec {
  std::size_t freq_levels = 5;
  std::size_t power_levels = 4;
};

struct OptimizerSpec {
  OptimizerKind kind = OptimizerKind::oracle;
  opt::OracleOptions oracle;
  opt::GneOptions gne;
  opt::MarlOptions marl;
  int marl_eval_episodes = 1;
  /// Also run the oracle on every epoch and report the price of anarchy.
  bool compare_with_oracle = false;
};

/// Seeded uniform arrivals: every end node receives round(rate * horizon)
/// tasks at times drawn uniformly from [0, horizon).
struct ArrivalProcess {
  double rate_per_s = 0.0;
  double horizon_s = 0.0;
  SemanticTask task;  // template; id, device and arrival are filled in
};

struct QoeSpec {
  cost::QoeWeights weights{};
  cost::QoeScales scales;
};

struct Scenario {
  std::uint64_t seed = 1;
  unsigned threads = 1;
  std::vector<ComputeNode> nodes;
  std::vector<WirelessLink> links;
  std::vector<SemanticTask> tasks;
  std::optional<ArrivalProcess> arrivals;
  /// Decision epochs batch the tasks arriving in [i*w, (i+1)*w). Zero puts
  /// every task in one epoch.
  double epoch_window_s = 0.0;
  GridSpec grid;
  OptimizerSpec optimizer;
  std::optional<QoeSpec> qoe;
  bool admission = true;
  std::optional<video::VideoConfig> video;
};

/// Parses a configuration document. Unknown keys, missing required keys,
/// wrong types and an unsupported schema_version raise ValidationError with
/// the offending JSON path in the message.
Scenario parse_scenario(const nlohmann::json& doc);

/// Reads and parses a file. Syntax errors are reported as
/// "<path>:<line>:<column>: <message>".
nlohmann::json load_config(const std::filesystem::path& path);
Scenario load_scenario(const std::filesystem::path& path);

/// Canonical document with every default written out; parse_scenario of the
/// result reproduces the scenario.
nlohmann::json to_json(const Scenario& scenario);

void validate(const Scenario& scenario);

/// The explicit task list, or the tasks drawn from the arrival process.
/// Sorted by (arrival, device id, task id).
std::vector<SemanticTask> materialize_tasks(const Scenario& scenario);

/// Replaces the scalar(s) at a dotted path. `*` matches every array element
/// and digits index arrays. A string target takes `value` verbatim; other
/// targets take it parsed as JSON and must keep their type.
void set_param(nlohmann::json& doc, std::string_view path, std::string_view value);

}  // namespace semcn
