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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "semcn/csv.hpp"
#include "semcn/scenario.hpp"
#include "semcn/video/pipeline.hpp"

namespace semcn {

struct TaskRecord {
  SemanticTask task;
  std::size_t epoch = 0;
  OffloadAction action;
  Outcome outcome;
  double qoe = 0.0;
  /// False when admission control turned an offload into local execution.
  bool admitted = true;
};

struct EpochReport {
  std::size_t index = 0;
  double start_s = 0.0;
  std::size_t agents = 0;
  double optimizer_energy_j = 0.0;
  /// Energy of the executed profile; equals optimizer_energy_j unless
  /// admission rejected an offload.
  double energy_j = 0.0;
  int iterations = 0;
  bool converged = true;
  std::size_t rejected = 0;
  std::optional<double> oracle_energy_j;
  std::optional<double> price_of_anarchy;
};

struct RunTotals {
  std::size_t tasks = 0;
  double energy_j = 0.0;
  double mean_latency_s = 0.0;
  double feasible_rate = 0.0;
  double mean_qoe = 0.0;
};

struct RunReport {
  OptimizerKind optimizer = OptimizerKind::oracle;
  std::uint64_t seed = 0;
  std::vector<TaskRecord> tasks;  // epoch order, then agent order
  std::vector<EpochReport> epochs;
  RunTotals totals;

  bool feasible() const;
};

/// The per-epoch offloading problem as the optimizer sees it.
opt::OffloadProblem make_problem(const Scenario& scenario, const std::vector<SemanticTask>& tasks);

/// Runs every decision epoch of the scenario. Deterministic in the scenario
/// (including its seed) and independent of the thread count.
RunReport run(const Scenario& scenario);

/// One run per value, with `path` set to that value in `config`. Every
/// variant is parsed and validated before the first run starts. Runs execute
/// on up to `threads` workers; results keep the order of `values`.
std::vector<RunReport> sweep(const nlohmann::json& config, std::string_view path,
                             const std::vector<std::string>& values, unsigned threads);

/// Video pipeline of the scenario's video section.
video::VideoReport run_video(const Scenario& scenario);

std::vector<video::VideoReport> sweep_video(const nlohmann::json& config, std::string_view path,
                                            const std::vector<std::string>& values,
                                            unsigned threads);

/// One row per task followed by summary rows (totals, then per-epoch
/// diagnostics). All rows share one header.
csv::Table report_table(const RunReport& report);

/// One row per frame followed by summary rows.
csv::Table video_table(const video::VideoReport& report);

/// Stacks tables with identical headers under a leading param_value column.
csv::Table sweep_table(const std::vector<std::string>& values, const std::vector<csv::Table>& tables);

}  // namespace semcn
