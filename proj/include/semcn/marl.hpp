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
#include <vector>

#include "semcn/offload_opt.hpp"

namespace semcn::opt {

enum class MarlCritic {
  /// REINFORCE with a moving-average baseline.
  none,
  /// Centralised critic: during training each agent scores every one of its
  /// own actions against the others' sampled actions and follows the exact
  /// softmax gradient of that counterfactual reward. Execution stays
  /// decentralised (each agent reads only its own table).
  counterfactual,
};

/// Tabular multi-agent policy gradient: every agent owns a softmax policy
/// over its own discrete action list and all agents learn from one shared
/// reward, -(total energy) - penalty * (deadline violations).
struct MarlOptions {
  int episodes = 5000;
  std::uint64_t seed = 1;
  double learning_rate = 0.1;
  /// Weight of the newest reward in the moving-average baseline.
  double baseline_rate = 0.05;
  /// Deadline penalty as a multiple of the largest feasible total energy.
  double penalty_factor = 10.0;
  /// Explicit penalty in joules; overrides penalty_factor when set.
  std::optional<double> penalty_j;
  MarlCritic critic = MarlCritic::counterfactual;
  /// Initial weight of the policy-entropy bonus (counterfactual critic only).
  double entropy_bonus = 0.0;
};

struct PolicyTable {
  std::vector<std::vector<double>> logits;  // [agent][action]
  double penalty_j = 0.0;
  double energy_scale_j = 1.0;

  std::vector<double> probabilities(std::size_t agent) const;
  /// Most probable action of each agent, lowest index on ties.
  std::vector<std::size_t> greedy_profile() const;
};

class MarlDiverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

PolicyTable marl_train(const OffloadProblem& problem, const ActionGrid& grid,
                       const MarlOptions& options = {});

struct MarlEvaluation {
  double mean_energy_j = 0.0;
  double feasible_rate = 0.0;
  JointSolution solution;  // the last evaluated profile
};

/// Runs the policy for `episodes` episodes. With `greedy` set every episode
/// plays the argmax profile; otherwise actions are sampled from the tables.
MarlEvaluation marl_evaluate(const PolicyTable& policy, const OffloadProblem& problem,
                             const ActionGrid& grid, int episodes, std::uint64_t seed,
                             bool greedy = true);

}  // namespace semcn::opt
