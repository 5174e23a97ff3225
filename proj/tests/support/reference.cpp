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

#include "reference.hpp"

#include <cmath>
#include <random>
#include <string>

namespace semcn::testing {

namespace {

struct RefAction {
  bool offload = false;
  std::size_t link = 0;  // index into the agent's links
  double f = 0.0;
  double p = 0.0;
};

std::vector<RefAction> ref_actions(const opt::AgentGrid& g, std::size_t links) {
  std::vector<RefAction> out;
  for (double f : g.freq_hz) out.push_back({false, 0, f, 0.0});
  for (std::size_t l = 0; l < links; ++l) {
    for (double f : g.freq_hz) {
      for (double p : g.power_dbm[l]) out.push_back({true, l, f, p});
    }
  }
  return out;
}

}  // namespace

NaiveResult naive_evaluate(const opt::OffloadProblem& problem, const opt::ActionGrid& grid,
                           const std::vector<std::size_t>& profile) {
  const std::size_t n = problem.agents.size();
  std::vector<std::vector<RefAction>> acts(n);
  for (std::size_t i = 0; i < n; ++i) {
    acts[i] = ref_actions(grid.agents[i], problem.agents[i].links.size());
  }
  NaiveResult r;
  r.profile = profile;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& ag = problem.agents[i];
    const auto& a = acts[i][profile[i]];
    const auto& t = ag.task;
    const double kappa = ag.end.kappa.value_or(1e-27);
    const double words = static_cast<double>(t.words);
    const double enc = words * (t.enc_cycles_base + t.enc_cycles_per_symbol * t.symbols_per_word);
    const double dec = words * t.dec_cycles_per_word;
    double energy = 0.0;
    double latency = 0.0;
    if (!a.offload) {
      energy = kappa * a.f * a.f * (enc + dec);
      latency = (enc + dec) / a.f;
    } else {
      const auto& link = ag.links[a.link];
      int sharers = 0;
      for (std::size_t j = 0; j < n; ++j) {
        const auto& b = acts[j][profile[j]];
        if (b.offload && problem.agents[j].links[b.link].server_id == link.server_id) ++sharers;
      }
      const ComputeNode* server = nullptr;
      for (const auto& s : problem.servers) {
        if (s.id == link.server_id) server = &s;
      }
      const double watts = std::pow(10.0, a.p / 10.0) / 1000.0;
      const double bw = link.bandwidth_hz / sharers;
      const double rate = bw * std::log2(1.0 + watts * link.channel_gain / (link.noise_psd * bw));
      const double bits = words * t.symbols_per_word * t.bits_per_symbol;
      const double t_tx = bits / rate;
      const double spare = server->clock_hz * server->cores * server->flops_per_cycle -
                           server->current_load_flops;
      const double t_srv = dec == 0.0 ? 0.0 : (spare > 0.0 ? dec * server->flops_per_cycle / spare : INFINITY);
      energy = kappa * a.f * a.f * enc + watts * t_tx;
      latency = enc / a.f + t_tx + t_srv;
    }
    r.energy_j += energy;
    if (!(latency <= t.deadline_s)) ++r.violations;
  }
  return r;
}

NaiveResult naive_search(const opt::OffloadProblem& problem, const opt::ActionGrid& grid) {
  const std::size_t n = problem.agents.size();
  std::vector<std::size_t> sizes(n);
  for (std::size_t i = 0; i < n; ++i) {
    sizes[i] = ref_actions(grid.agents[i], problem.agents[i].links.size()).size();
  }
  std::vector<std::size_t> profile(n, 0);
  NaiveResult best;
  bool have = false;
  while (true) {
    const auto r = naive_evaluate(problem, grid, profile);
    if (!have || r.violations < best.violations ||
        (r.violations == best.violations && r.energy_j < best.energy_j)) {
      best = r;
      have = true;
    }
    std::size_t k = n;
    while (k > 0) {
      --k;
      if (++profile[k] < sizes[k]) break;
      profile[k] = 0;
      if (k == 0) return best;
    }
    if (n == 0) return best;
  }
}

std::pair<opt::OffloadProblem, opt::ActionGrid> random_problem(const RandomProblemShape& shape,
                                                               std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  auto uni = [&](double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng); };
  auto log_uni = [&](double lo, double hi) { return std::exp(uni(std::log(lo), std::log(hi))); };

  opt::OffloadProblem p;
  for (std::size_t s = 0; s < shape.servers; ++s) {
    ComputeNode n;
    n.id = "srv" + std::to_string(s);
    n.tier = s == 0 ? Tier::edge : Tier::cloud;
    n.clock_hz = uni(2e9, 3e9);
    n.cores = 4 + static_cast<int>(rng() % 16);
    n.flops_per_cycle = 8;
    n.capacity_flops = n.clock_hz * n.cores * n.flops_per_cycle;
    n.current_load_flops = uni(0.0, 0.6) * n.capacity_flops;
    p.servers.push_back(n);
  }
  for (std::size_t i = 0; i < shape.agents; ++i) {
    opt::Agent a;
    a.end.id = "ue" + std::to_string(i);
    a.end.tier = Tier::end;
    a.end.clock_hz = 1.72e9;
    a.end.freq_range_hz = FreqRange{0.96e9, 1.72e9};
    a.end.kappa = 1e-27;
    a.task.id = "t" + std::to_string(i);
    a.task.device_id = a.end.id;
    a.task.words = 50 + rng() % 100;
    a.task.symbols_per_word = 1 + static_cast<int>(rng() % 16);
    a.task.enc_cycles_base = uni(1e4, 3e4);
    a.task.enc_cycles_per_symbol = uni(1e3, 3e3);
    a.task.dec_cycles_per_word = uni(1e5, 3e5);
    a.task.deadline_s = uni(0.03, 0.08);
    for (const auto& s : p.servers) {
      WirelessLink l;
      l.end_id = a.end.id;
      l.server_id = s.id;
      l.bandwidth_hz = uni(5e4, 2e5);
      l.channel_gain = log_uni(1e-15, 5e-14);
      l.noise_psd = 4e-21;
      l.power_range_dbm = PowerRange{15.0, 24.0};
      a.links.push_back(l);
    }
    p.agents.push_back(std::move(a));
  }
  auto grid = opt::make_uniform_grid(p, shape.freq_levels, shape.power_levels);
  return {std::move(p), std::move(grid)};
}

}  // namespace semcn::testing
