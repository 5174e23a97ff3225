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

#include "semcn/marl.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace semcn::opt {

namespace {

double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

void softmax(const std::vector<double>& logits, std::vector<double>& out) {
  out.resize(logits.size());
  const double hi = *std::max_element(logits.begin(), logits.end());
  double sum = 0.0;
  for (std::size_t a = 0; a < logits.size(); ++a) {
    out[a] = std::exp(logits[a] - hi);
    sum += out[a];
  }
  for (auto& p : out) p /= sum;
}

std::size_t sample(const std::vector<double>& probs, std::mt19937_64& rng) {
  const double u = uniform01(rng);
  double acc = 0.0;
  for (std::size_t a = 0; a < probs.size(); ++a) {
    acc += probs[a];
    if (u < acc) return a;
  }
  return probs.size() - 1;
}

// Sum over agents of the largest energy any feasible action can cost.
double largest_feasible_energy(const ActionTable& table) {
  double total = 0.0;
  for (std::size_t i = 0; i < table.agent_count(); ++i) {
    double worst = 0.0;
    for (std::size_t a = 0; a < table.action_count(i); ++a) {
      for (std::size_t m = 1; m <= table.agent_count(); ++m) {
        const Outcome& o = table.outcome(i, a, m);
        if (o.feasible) worst = std::max(worst, o.energy_j);
      }
    }
    total += worst;
  }
  return total;
}

struct EpisodeCost {
  double energy = 0.0;
  std::size_t violations = 0;
};

EpisodeCost play(const ActionTable& table, const std::vector<std::size_t>& profile) {
  EpisodeCost c;
  for (const auto& o : table.evaluate(profile)) {
    c.energy += o.energy_j;
    if (!o.feasible) ++c.violations;
  }
  return c;
}

double scaled_reward(const EpisodeCost& cost, const PolicyTable& policy) {
  return -(cost.energy + policy.penalty_j * static_cast<double>(cost.violations)) /
         policy.energy_scale_j;
}

std::size_t max_actions(const ActionTable& table) {
  std::size_t m = 0;
  for (std::size_t i = 0; i < table.agent_count(); ++i) m = std::max(m, table.action_count(i));
  return m;
}

}  // namespace

std::vector<double> PolicyTable::probabilities(std::size_t agent) const {
  std::vector<double> p;
  softmax(logits.at(agent), p);
  return p;
}

std::vector<std::size_t> PolicyTable::greedy_profile() const {
  std::vector<std::size_t> profile;
  for (const auto& l : logits) {
    profile.push_back(static_cast<std::size_t>(std::max_element(l.begin(), l.end()) - l.begin()));
  }
  return profile;
}

PolicyTable marl_train(const OffloadProblem& problem, const ActionGrid& grid,
                       const MarlOptions& options) {
  if (options.episodes < 1) throw ValidationError("episodes must be >= 1");
  if (!(options.learning_rate > 0.0)) throw ValidationError("learning_rate must be > 0");
  if (!(options.baseline_rate > 0.0 && options.baseline_rate <= 1.0)) {
    throw ValidationError("baseline_rate must lie in (0, 1]");
  }
  const ActionTable table(problem, grid);
  const std::size_t n = table.agent_count();

  PolicyTable policy;
  for (std::size_t i = 0; i < n; ++i) policy.logits.emplace_back(table.action_count(i), 0.0);
  const double largest = largest_feasible_energy(table);
  policy.energy_scale_j = largest > 0.0 ? largest : 1.0;
  policy.penalty_j = options.penalty_j.value_or(options.penalty_factor * policy.energy_scale_j);
  if (n == 0) return policy;

  std::mt19937_64 rng(options.seed);
  std::vector<std::vector<double>> probs(n);
  std::vector<std::size_t> profile(n, 0);
  std::vector<double> q(max_actions(table), 0.0);
  double baseline = 0.0;
  double spread = 0.0;
  bool have_baseline = false;

  for (int ep = 0; ep < options.episodes; ++ep) {
    for (std::size_t i = 0; i < n; ++i) {
      softmax(policy.logits[i], probs[i]);
      profile[i] = sample(probs[i], rng);
    }
    const EpisodeCost cost = play(table, profile);
    // Rewards are in units of the largest feasible energy.
    const double reward = scaled_reward(cost, policy);
    if (!have_baseline) {
      baseline = reward;
      have_baseline = true;
    }
    // Advantages are centred on a moving-average baseline and scaled by the
    // moving mean absolute deviation of the reward.
    const double deviation = reward - baseline;
    spread += options.baseline_rate * (std::abs(deviation) - spread);
    baseline += options.baseline_rate * deviation;
    const double scale = spread > 1e-12 ? spread : 1.0;
    const double progress = static_cast<double>(ep) / options.episodes;
    const double step = options.learning_rate / (1.0 + 4.0 * progress);
    // Entropy bonus fades linearly to zero over the first half of training.
    const double temperature = options.entropy_bonus * std::max(0.0, 1.0 - 2.0 * progress);

    for (std::size_t i = 0; i < n; ++i) {
      auto& theta = policy.logits[i];
      if (options.critic == MarlCritic::counterfactual) {
        // Shared reward of each of the agent's own actions with the other
        // agents' sampled actions held fixed.
        auto trial = profile;
        double expected = 0.0;
        for (std::size_t a = 0; a < theta.size(); ++a) {
          trial[i] = a;
          q[a] = scaled_reward(play(table, trial), policy);
          expected += probs[i][a] * q[a];
        }
        double entropy = 0.0;
        for (double p : probs[i]) entropy -= p > 0.0 ? p * std::log(p) : 0.0;
        for (std::size_t a = 0; a < theta.size(); ++a) {
          const double p = probs[i][a];
          const double entropy_grad = p > 0.0 ? -p * (std::log(p) + entropy) : 0.0;
          theta[a] += step * ((q[a] - expected) / scale + temperature * entropy_grad);
        }
      } else {
        const double advantage = deviation / scale;
        for (std::size_t a = 0; a < theta.size(); ++a) {
          const double indicator = a == profile[i] ? 1.0 : 0.0;
          theta[a] += step * advantage * (indicator - probs[i][a]);
        }
      }
      if (!std::isfinite(theta[profile[i]])) {
        throw MarlDiverged("policy gradient produced a non-finite logit for agent " +
                           std::to_string(i) + " at episode " + std::to_string(ep) +
                           " (reward " + std::to_string(reward) + ")");
      }
    }
  }
  return policy;
}

MarlEvaluation marl_evaluate(const PolicyTable& policy, const OffloadProblem& problem,
                             const ActionGrid& grid, int episodes, std::uint64_t seed, bool greedy) {
  if (episodes < 1) throw ValidationError("episodes must be >= 1");
  const ActionTable table(problem, grid);
  if (policy.logits.size() != table.agent_count()) {
    throw ValidationError("policy does not match the problem's agents");
  }
  for (std::size_t i = 0; i < table.agent_count(); ++i) {
    if (policy.logits[i].size() != table.action_count(i)) {
      throw ValidationError("policy does not match the action grid of agent " + std::to_string(i));
    }
  }
  std::mt19937_64 rng(seed);
  MarlEvaluation eval;
  double energy = 0.0;
  int feasible = 0;
  std::vector<std::vector<double>> probs(table.agent_count());
  for (std::size_t i = 0; i < probs.size(); ++i) probs[i] = policy.probabilities(i);
  for (int ep = 0; ep < episodes; ++ep) {
    std::vector<std::size_t> profile = policy.greedy_profile();
    if (!greedy) {
      for (std::size_t i = 0; i < profile.size(); ++i) profile[i] = sample(probs[i], rng);
    }
    eval.solution = make_solution(table, std::move(profile));
    energy += eval.solution.total_energy_j;
    if (eval.solution.feasible) ++feasible;
  }
  eval.mean_energy_j = energy / episodes;
  eval.feasible_rate = static_cast<double>(feasible) / episodes;
  return eval;
}

}  // namespace semcn::opt
