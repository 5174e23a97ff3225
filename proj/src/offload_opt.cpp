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

#include "semcn/offload_opt.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

#include "semcn/cost_model.hpp"

namespace semcn::opt {

namespace {

// Ranking used by every optimizer: deadline violations first, then energy.
struct Score {
  std::size_t violations = 0;
  double energy = 0.0;

  friend bool operator<(const Score& a, const Score& b) {
    if (a.violations != b.violations) return a.violations < b.violations;
    return a.energy < b.energy;
  }
};

// Improvement of `to` over `from` for a single agent. Gaining feasibility is
// an infinite improvement, losing it an infinite loss.
double gain(const Outcome& from, const Outcome& to) {
  if (from.feasible != to.feasible) {
    return to.feasible ? std::numeric_limits<double>::infinity()
                       : -std::numeric_limits<double>::infinity();
  }
  if (from.energy_j == to.energy_j) return 0.0;
  return from.energy_j - to.energy_j;
}

const WirelessLink* find_link(const Agent& agent, const std::string& server_id) {
  for (const auto& l : agent.links) {
    if (l.server_id == server_id) return &l;
  }
  return nullptr;
}

Outcome evaluate_action(const OffloadProblem& problem, const Agent& agent,
                        const OffloadAction& action, int sharers) {
  if (action.mode == Mode::local) {
    return cost::local_outcome(agent.task, agent.end, action.cpu_freq_hz).first;
  }
  const WirelessLink* link = find_link(agent, action.server_id);
  if (link == nullptr) {
    throw ValidationError("agent '" + agent.task.id + "' has no link to '" + action.server_id + "'");
  }
  const auto& server = problem.servers[problem.server_index(action.server_id)];
  return cost::offload_outcome(agent.task, agent.end, action.cpu_freq_hz, *link,
                               action.tx_power_dbm, server, sharers)
      .first;
}

std::vector<int> sharer_counts(const OffloadProblem& problem,
                               const std::vector<OffloadAction>& profile) {
  std::vector<int> counts(problem.servers.size(), 0);
  for (const auto& a : profile) {
    if (a.mode == Mode::offload) ++counts[problem.server_index(a.server_id)];
  }
  return counts;
}

}  // namespace

std::size_t OffloadProblem::server_index(const std::string& id) const {
  auto it = std::lower_bound(servers.begin(), servers.end(), id,
                             [](const ComputeNode& n, const std::string& key) { return n.id < key; });
  if (it == servers.end() || it->id != id) throw ValidationError("unknown server '" + id + "'");
  return static_cast<std::size_t>(it - servers.begin());
}

void validate(const OffloadProblem& problem) {
  for (std::size_t i = 1; i < problem.servers.size(); ++i) {
    if (!(problem.servers[i - 1].id < problem.servers[i].id)) {
      throw ValidationError("servers must be sorted by unique id");
    }
  }
  for (const auto& s : problem.servers) semcn::validate(s);
  for (const auto& a : problem.agents) {
    semcn::validate(a.task);
    semcn::validate(a.end);
    if (a.end.tier != Tier::end) throw ValidationError("agent node '" + a.end.id + "' is not an end node");
    for (std::size_t i = 0; i < a.links.size(); ++i) {
      semcn::validate(a.links[i]);
      if (a.links[i].end_id != a.end.id) {
        throw ValidationError("link " + a.links[i].end_id + "->" + a.links[i].server_id +
                              " does not start at '" + a.end.id + "'");
      }
      problem.server_index(a.links[i].server_id);
      if (i > 0 && !(a.links[i - 1].server_id < a.links[i].server_id)) {
        throw ValidationError("links of '" + a.end.id + "' must be sorted by unique server id");
      }
    }
  }
}

std::vector<double> linspace(double lo, double hi, std::size_t count) {
  if (count == 0) throw ValidationError("a grid needs at least one level");
  if (count == 1) return {lo};
  std::vector<double> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1);
  }
  out.back() = hi;
  return out;
}

ActionGrid make_uniform_grid(const OffloadProblem& problem, std::size_t freq_levels,
                             std::size_t power_levels) {
  ActionGrid grid;
  for (const auto& a : problem.agents) {
    semcn::validate(a.end);
    AgentGrid g;
    const auto& fr = *a.end.freq_range_hz;
    g.freq_hz = fr.min_hz == fr.max_hz ? std::vector<double>{fr.min_hz}
                                       : linspace(fr.min_hz, fr.max_hz, freq_levels);
    for (const auto& l : a.links) {
      const auto& pr = l.power_range_dbm;
      g.power_dbm.push_back(pr.min_dbm == pr.max_dbm ? std::vector<double>{pr.min_dbm}
                                                     : linspace(pr.min_dbm, pr.max_dbm, power_levels));
    }
    grid.agents.push_back(std::move(g));
  }
  return grid;
}

void validate(const ActionGrid& grid, const OffloadProblem& problem) {
  if (grid.agents.size() != problem.agents.size()) {
    throw ValidationError("action grid does not cover every agent");
  }
  auto strictly_increasing = [](const std::vector<double>& v) {
    return !v.empty() && std::adjacent_find(v.begin(), v.end(), std::greater_equal<>()) == v.end();
  };
  for (std::size_t i = 0; i < grid.agents.size(); ++i) {
    const auto& g = grid.agents[i];
    const auto& agent = problem.agents[i];
    if (!strictly_increasing(g.freq_hz)) {
      throw ValidationError("frequency levels of '" + agent.end.id + "' must be non-empty and increasing");
    }
    for (double f : g.freq_hz) semcn::validate(OffloadAction::local(f), agent.end, nullptr);
    if (g.power_dbm.size() != agent.links.size()) {
      throw ValidationError("power levels of '" + agent.end.id + "' do not match its links");
    }
    for (std::size_t l = 0; l < agent.links.size(); ++l) {
      if (!strictly_increasing(g.power_dbm[l])) {
        throw ValidationError("power levels must be non-empty and increasing");
      }
      for (double p : g.power_dbm[l]) {
        semcn::validate(OffloadAction::offload(agent.links[l].server_id, g.freq_hz.front(), p),
                        agent.end, &agent.links[l]);
      }
    }
  }
}

std::vector<OffloadAction> enumerate_actions(const Agent& agent, const AgentGrid& grid) {
  std::vector<OffloadAction> actions;
  for (double f : grid.freq_hz) actions.push_back(OffloadAction::local(f));
  for (std::size_t l = 0; l < agent.links.size(); ++l) {
    for (double f : grid.freq_hz) {
      for (double p : grid.power_dbm[l]) {
        actions.push_back(OffloadAction::offload(agent.links[l].server_id, f, p));
      }
    }
  }
  return actions;
}

std::vector<Outcome> evaluate_profile(const OffloadProblem& problem,
                                      const std::vector<OffloadAction>& profile) {
  if (profile.size() != problem.agents.size()) {
    throw ValidationError("profile size does not match the number of agents");
  }
  const auto counts = sharer_counts(problem, profile);
  std::vector<Outcome> out;
  out.reserve(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const auto& a = profile[i];
    const int sharers = a.mode == Mode::offload ? counts[problem.server_index(a.server_id)] : 1;
    out.push_back(evaluate_action(problem, problem.agents[i], a, sharers));
  }
  return out;
}

ActionTable::ActionTable(const OffloadProblem& problem, const ActionGrid& grid) {
  validate(problem);
  validate(grid, problem);
  server_count_ = problem.servers.size();
  max_sharers_ = std::max<std::size_t>(1, problem.agents.size());
  for (std::size_t i = 0; i < problem.agents.size(); ++i) {
    const auto& agent = problem.agents[i];
    auto actions = enumerate_actions(agent, grid.agents[i]);
    std::vector<std::size_t> servers;
    std::vector<Outcome> outcomes(actions.size() * max_sharers_);
    for (std::size_t a = 0; a < actions.size(); ++a) {
      const auto& act = actions[a];
      if (act.mode == Mode::local) {
        servers.push_back(npos);
        const Outcome o = evaluate_action(problem, agent, act, 1);
        std::fill_n(outcomes.begin() + a * max_sharers_, max_sharers_, o);
      } else {
        servers.push_back(problem.server_index(act.server_id));
        for (std::size_t m = 1; m <= max_sharers_; ++m) {
          outcomes[a * max_sharers_ + m - 1] =
              evaluate_action(problem, agent, act, static_cast<int>(m));
        }
      }
    }
    actions_.push_back(std::move(actions));
    server_.push_back(std::move(servers));
    outcomes_.push_back(std::move(outcomes));
  }
}

const Outcome& ActionTable::outcome(std::size_t agent, std::size_t index, std::size_t sharers) const {
  return outcomes_[agent][index * max_sharers_ + (sharers == 0 ? 0 : sharers - 1)];
}

std::vector<Outcome> ActionTable::evaluate(const std::vector<std::size_t>& profile) const {
  std::vector<std::size_t> counts(server_count_, 0);
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const auto s = server_[i][profile[i]];
    if (s != npos) ++counts[s];
  }
  std::vector<Outcome> out;
  out.reserve(profile.size());
  for (std::size_t i = 0; i < profile.size(); ++i) {
    const auto s = server_[i][profile[i]];
    out.push_back(outcome(i, profile[i], s == npos ? 1 : counts[s]));
  }
  return out;
}

JointSolution make_solution(const ActionTable& table, std::vector<std::size_t> profile) {
  JointSolution sol;
  sol.outcomes = table.evaluate(profile);
  for (std::size_t i = 0; i < profile.size(); ++i) {
    sol.actions.push_back(table.action(i, profile[i]));
    sol.total_energy_j += sol.outcomes[i].energy_j;
    sol.feasible = sol.feasible && sol.outcomes[i].feasible;
  }
  sol.action_indices = std::move(profile);
  return sol;
}

namespace {

struct Best {
  Score score{std::numeric_limits<std::size_t>::max(), std::numeric_limits<double>::infinity()};
  std::vector<std::size_t> profile;
  bool found = false;
};

// Enumerates every profile whose first agent plays `first`, in lexicographic
// order, keeping the first minimum encountered.
Best search_slice(const ActionTable& table, std::size_t first) {
  const std::size_t n = table.agent_count();
  Best best;
  std::vector<std::size_t> profile(n, 0);
  profile[0] = first;
  std::vector<std::size_t> counts(table.server_count(), 0);
  for (;;) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < n; ++i) {
      const auto s = table.server_of(i, profile[i]);
      if (s != ActionTable::npos) ++counts[s];
    }
    Score score{0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
      const auto s = table.server_of(i, profile[i]);
      const Outcome& o = table.outcome(i, profile[i], s == ActionTable::npos ? 1 : counts[s]);
      score.energy += o.energy_j;
      if (!o.feasible) ++score.violations;
    }
    if (!best.found || score < best.score) {
      best.score = score;
      best.profile = profile;
      best.found = true;
    }
    // Advance the mixed-radix counter over agents 1..n-1, last agent fastest.
    std::size_t i = n;
    while (i > 1) {
      --i;
      if (++profile[i] < table.action_count(i)) break;
      profile[i] = 0;
      if (i == 1) return best;
    }
    if (n == 1) return best;
  }
}

}  // namespace

JointSolution oracle_search(const OffloadProblem& problem, const ActionGrid& grid,
                            const OracleOptions& options) {
  validate(problem);
  if (problem.agents.empty()) return {};
  double joint = 1.0;
  for (std::size_t i = 0; i < problem.agents.size(); ++i) {
    joint *= static_cast<double>(enumerate_actions(problem.agents[i], grid.agents.at(i)).size());
  }
  if (joint > options.max_joint_actions) {
    throw SearchCapExceeded("joint action space of " + std::to_string(joint) +
                            " profiles exceeds the cap of " +
                            std::to_string(options.max_joint_actions));
  }
  const ActionTable table(problem, grid);
  const std::size_t slices = table.action_count(0);
  std::vector<Best> results(slices);
  const unsigned workers =
      std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(slices)));
  if (workers == 1) {
    for (std::size_t s = 0; s < slices; ++s) results[s] = search_slice(table, s);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t s = next++; s < slices; s = next++) results[s] = search_slice(table, s);
      });
    }
  }
  // Slices are reduced in index order, so the earliest minimum wins exactly
  // as in a serial scan.
  Best best;
  for (auto& r : results) {
    if (!best.found || r.score < best.score) best = std::move(r);
  }
  return make_solution(table, std::move(best.profile));
}

namespace {

std::size_t pick_cheapest(const ActionTable& table, std::size_t agent,
                          const std::vector<std::size_t>& candidates) {
  std::size_t best = candidates.front();
  for (std::size_t c : candidates) {
    const Outcome& o = table.outcome(agent, c, 1);
    const Outcome& b = table.outcome(agent, best, 1);
    // Among infeasible options prefer the fastest one.
    const bool better = o.feasible != b.feasible ? o.feasible
                        : o.feasible             ? o.energy_j < b.energy_j
                                                 : o.latency_s < b.latency_s;
    if (better) best = c;
  }
  return best;
}

}  // namespace

JointSolution greedy_local(const OffloadProblem& problem, const ActionGrid& grid) {
  const ActionTable table(problem, grid);
  std::vector<std::size_t> profile;
  for (std::size_t i = 0; i < table.agent_count(); ++i) {
    std::vector<std::size_t> local;
    for (std::size_t a = 0; a < table.action_count(i); ++a) {
      if (table.server_of(i, a) == ActionTable::npos) local.push_back(a);
    }
    profile.push_back(pick_cheapest(table, i, local));
  }
  return make_solution(table, std::move(profile));
}

JointSolution greedy_offload(const OffloadProblem& problem, const ActionGrid& grid) {
  const ActionTable table(problem, grid);
  std::vector<std::size_t> profile;
  for (std::size_t i = 0; i < table.agent_count(); ++i) {
    const auto& agent = problem.agents[i];
    std::size_t target = ActionTable::npos;
    double best_util = std::numeric_limits<double>::infinity();
    for (const auto& link : agent.links) {
      const std::size_t s = problem.server_index(link.server_id);
      const auto& server = problem.servers[s];
      const double util = server.capacity_flops > 0.0
                              ? server.current_load_flops / server.capacity_flops
                              : std::numeric_limits<double>::infinity();
      if (target == ActionTable::npos || util < best_util) {
        target = s;
        best_util = util;
      }
    }
    std::vector<std::size_t> candidates;
    for (std::size_t a = 0; a < table.action_count(i); ++a) {
      const auto s = table.server_of(i, a);
      if (target == ActionTable::npos ? s == ActionTable::npos : s == target) candidates.push_back(a);
    }
    profile.push_back(pick_cheapest(table, i, candidates));
  }
  return make_solution(table, std::move(profile));
}

GneResult best_response_gne(const OffloadProblem& problem, const ActionGrid& grid,
                            const GneOptions& options) {
  if (options.max_iters < 1) throw ValidationError("max_iters must be >= 1");
  const ActionTable table(problem, grid);
  const std::size_t n = table.agent_count();
  std::vector<std::size_t> profile(n, 0);
  std::vector<std::size_t> counts(table.server_count(), 0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto s = table.server_of(i, profile[i]);
    if (s != ActionTable::npos) ++counts[s];
  }

  GneResult result;
  for (int round = 1; round <= options.max_iters; ++round) {
    result.iterations = round;
    bool moved = false;
    for (std::size_t i = 0; i < n; ++i) {
      const auto cur_server = table.server_of(i, profile[i]);
      const Outcome& current =
          table.outcome(i, profile[i], cur_server == ActionTable::npos ? 1 : counts[cur_server]);
      std::size_t best = profile[i];
      double best_gain = options.eps;
      for (std::size_t a = 0; a < table.action_count(i); ++a) {
        if (a == profile[i]) continue;
        const auto s = table.server_of(i, a);
        std::size_t sharers = 1;
        if (s != ActionTable::npos) sharers = counts[s] + (s == cur_server ? 0 : 1);
        const double g = gain(current, table.outcome(i, a, sharers));
        if (g > best_gain) {
          best_gain = g;
          best = a;
        }
      }
      if (best != profile[i]) {
        if (cur_server != ActionTable::npos) --counts[cur_server];
        profile[i] = best;
        const auto s = table.server_of(i, best);
        if (s != ActionTable::npos) ++counts[s];
        moved = true;
      }
    }
    if (!moved) {
      result.converged = true;
      break;
    }
  }
  result.solution = make_solution(table, std::move(profile));
  return result;
}

DeviationReport deviation_scan(const OffloadProblem& problem, const ActionGrid& grid,
                               const std::vector<OffloadAction>& profile, double eps) {
  validate(problem);
  validate(grid, problem);
  const auto base = evaluate_profile(problem, profile);
  DeviationReport report;
  report.max_gain_j = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < problem.agents.size(); ++i) {
    auto trial = profile;
    for (const auto& alt : enumerate_actions(problem.agents[i], grid.agents[i])) {
      if (alt == profile[i]) continue;
      trial[i] = alt;
      const auto counts = sharer_counts(problem, trial);
      const int sharers = alt.mode == Mode::offload ? counts[problem.server_index(alt.server_id)] : 1;
      const Outcome o = evaluate_action(problem, problem.agents[i], alt, sharers);
      const double g = gain(base[i], o);
      if (g > report.max_gain_j) {
        report.max_gain_j = g;
        report.agent = i;
        report.deviation = alt;
      }
    }
  }
  if (report.max_gain_j == -std::numeric_limits<double>::infinity()) report.max_gain_j = 0.0;
  report.stable = !(report.max_gain_j > eps);
  return report;
}

}  // namespace semcn::opt
