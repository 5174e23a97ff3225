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
#include <limits>
#include <stdexcept>
#include <vector>

#include "semcn/core_model.hpp"

namespace semcn::opt {

/// One decision maker: a task bound to its end node and the uplinks it can
/// use. Links are ordered by server id.
struct Agent {
  SemanticTask task;
  ComputeNode end;
  std::vector<WirelessLink> links;
};

/// A single decision epoch. Servers are ordered by id and every link's
/// server_id resolves into `servers`.
struct OffloadProblem {
  std::vector<Agent> agents;
  std::vector<ComputeNode> servers;

  std::size_t server_index(const std::string& id) const;
};

void validate(const OffloadProblem& problem);

/// Discrete levels per agent: frequencies for its end node, transmit powers
/// for each of its links.
struct AgentGrid {
  std::vector<double> freq_hz;
  std::vector<std::vector<double>> power_dbm;  // parallel to Agent::links
};

struct ActionGrid {
  std::vector<AgentGrid> agents;  // parallel to OffloadProblem::agents
};

/// `count` evenly spaced values over [lo, hi] with exact endpoints.
std::vector<double> linspace(double lo, double hi, std::size_t count);

/// Evenly spaced levels spanning every node's frequency range and every
/// link's power range.
ActionGrid make_uniform_grid(const OffloadProblem& problem, std::size_t freq_levels,
                             std::size_t power_levels);

void validate(const ActionGrid& grid, const OffloadProblem& problem);

/// Actions of one agent in canonical order: local at each frequency, then for
/// each link (server id order) every (frequency, power) pair, frequency-major.
std::vector<OffloadAction> enumerate_actions(const Agent& agent, const AgentGrid& grid);

/// Evaluates a joint profile. Bandwidth of each server's access link is split
/// equally among the agents offloading to that server.
std::vector<Outcome> evaluate_profile(const OffloadProblem& problem,
                                      const std::vector<OffloadAction>& profile);

/// Per-agent outcome of every action for every possible number of agents
/// sharing the chosen server. Local outcomes do not depend on sharing.
class ActionTable {
 public:
  ActionTable(const OffloadProblem& problem, const ActionGrid& grid);

  std::size_t agent_count() const { return actions_.size(); }
  std::size_t action_count(std::size_t agent) const { return actions_[agent].size(); }
  const OffloadAction& action(std::size_t agent, std::size_t index) const {
    return actions_[agent][index];
  }
  /// Server index of an action, or npos when local.
  std::size_t server_of(std::size_t agent, std::size_t index) const {
    return server_[agent][index];
  }
  std::size_t server_count() const { return server_count_; }
  /// Outcome when `sharers` agents (including this one) use the same server.
  const Outcome& outcome(std::size_t agent, std::size_t index, std::size_t sharers) const;

  /// Outcomes of a full profile given as action indices.
  std::vector<Outcome> evaluate(const std::vector<std::size_t>& profile) const;

  static constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();

 private:
  std::size_t server_count_ = 0;
  std::size_t max_sharers_ = 1;
  std::vector<std::vector<OffloadAction>> actions_;
  std::vector<std::vector<std::size_t>> server_;
  // [agent][action * max_sharers + (sharers - 1)]
  std::vector<std::vector<Outcome>> outcomes_;
};

struct JointSolution {
  std::vector<OffloadAction> actions;
  std::vector<std::size_t> action_indices;
  std::vector<Outcome> outcomes;
  double total_energy_j = 0.0;
  bool feasible = true;
};

JointSolution make_solution(const ActionTable& table, std::vector<std::size_t> profile);

class SearchCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct OracleOptions {
  double max_joint_actions = 1e7;
  unsigned threads = 1;
};

/// Exhaustive search for the feasible joint profile of minimum total energy.
/// Ties go to the lexicographically smallest index vector. When nothing is
/// feasible the result has feasible == false and holds the profile with the
/// fewest deadline violations, then least energy.
JointSolution oracle_search(const OffloadProblem& problem, const ActionGrid& grid,
                            const OracleOptions& options = {});

/// Every agent runs locally at its cheapest deadline-meeting frequency.
JointSolution greedy_local(const OffloadProblem& problem, const ActionGrid& grid);

/// Every agent offloads to its least-utilised reachable server and picks the
/// cheapest (f, p) assuming the whole bandwidth; the profile is then
/// re-evaluated with the bandwidth actually shared.
JointSolution greedy_offload(const OffloadProblem& problem, const ActionGrid& grid);

struct GneOptions {
  int max_iters = 100;
  double eps = 1e-9;
};

struct GneResult {
  JointSolution solution;
  int iterations = 0;
  bool converged = false;
};

/// Round-robin (Gauss-Seidel) best response on each agent's own energy, in
/// agent order. An agent moves only when the move improves its cost by more
/// than eps; meeting the deadline always beats missing it.
GneResult best_response_gne(const OffloadProblem& problem, const ActionGrid& grid,
                            const GneOptions& options = {});

struct DeviationReport {
  bool stable = true;
  double max_gain_j = 0.0;
  std::size_t agent = 0;
  OffloadAction deviation;
};

/// Exhaustive unilateral-deviation scan of a profile, evaluated directly
/// through the cost model.
DeviationReport deviation_scan(const OffloadProblem& problem, const ActionGrid& grid,
                               const std::vector<OffloadAction>& profile, double eps);

}  // namespace semcn::opt
