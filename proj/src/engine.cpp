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

#include "semcn/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <functional>
#include <limits>
#include <thread>

#include "semcn/capability.hpp"
#include "semcn/cost_model.hpp"
#include "semcn/marl.hpp"

namespace semcn {

namespace {

struct EpochSolve {
  opt::JointSolution solution;
  int iterations = 1;
  bool converged = true;
};

EpochSolve solve(const Scenario& s, const opt::OffloadProblem& problem, const opt::ActionGrid& grid,
                 OptimizerKind kind, std::size_t epoch) {
  const auto& o = s.optimizer;
  EpochSolve out;
  switch (kind) {
    case OptimizerKind::oracle: {
      opt::OracleOptions oo = o.oracle;
      oo.threads = s.threads;
      out.solution = opt::oracle_search(problem, grid, oo);
      break;
    }
    case OptimizerKind::greedy_local:
      out.solution = opt::greedy_local(problem, grid);
      break;
    case OptimizerKind::greedy_offload:
      out.solution = opt::greedy_offload(problem, grid);
      break;
    case OptimizerKind::gne: {
      auto r = opt::best_response_gne(problem, grid, o.gne);
      out.solution = std::move(r.solution);
      out.iterations = r.iterations;
      out.converged = r.converged;
      break;
    }
    case OptimizerKind::marl: {
      opt::MarlOptions mo = o.marl;
      mo.seed = s.seed + epoch;
      const auto policy = opt::marl_train(problem, grid, mo);
      auto eval = opt::marl_evaluate(policy, problem, grid, o.marl_eval_episodes, mo.seed, true);
      out.solution = std::move(eval.solution);
      out.iterations = mo.episodes;
      break;
    }
  }
  return out;
}

// Cheapest deadline-meeting local frequency, else the fastest one.
OffloadAction local_fallback(const opt::Agent& agent, const opt::AgentGrid& grid) {
  std::optional<std::pair<double, double>> best;  // energy, freq
  double fastest = grid.freq_hz.front();
  for (double f : grid.freq_hz) {
    fastest = std::max(fastest, f);
    const auto o = cost::local_outcome(agent.task, agent.end, f).first;
    if (o.feasible && (!best || o.energy_j < best->first)) best = {o.energy_j, f};
  }
  return OffloadAction::local(best ? best->second : fastest);
}

struct Epoch {
  std::size_t index = 0;
  double start_s = 0.0;
  std::vector<SemanticTask> tasks;
};

std::vector<Epoch> split_epochs(const Scenario& s, const std::vector<SemanticTask>& tasks) {
  std::vector<Epoch> epochs;
  for (const auto& t : tasks) {
    const std::size_t idx =
        s.epoch_window_s > 0.0 ? static_cast<std::size_t>(std::floor(t.arrival_s / s.epoch_window_s)) : 0;
    if (epochs.empty() || epochs.back().index != idx) {
      epochs.push_back({idx, static_cast<double>(idx) * s.epoch_window_s, {}});
    }
    epochs.back().tasks.push_back(t);
  }
  return epochs;
}

template <typename T>
std::vector<T> parallel_map(std::size_t count, unsigned threads,
                            const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, threads), count));
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  std::vector<T> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
  }
  return out;
}

std::vector<Scenario> variants(const nlohmann::json& config, std::string_view path,
                               const std::vector<std::string>& values, unsigned threads) {
  if (values.empty()) throw ValidationError("sweep: no values given");
  std::vector<Scenario> out;
  for (const auto& v : values) {
    nlohmann::json doc = config;
    set_param(doc, path, v);
    Scenario s = parse_scenario(doc);
    // Outer parallelism replaces inner parallelism; results do not depend on it.
    if (threads > 1 && values.size() > 1) s.threads = 1;
    out.push_back(std::move(s));
  }
  return out;
}

std::string fmt(double v) { return csv::format_number(v); }
std::string fmt_bool(bool b) { return b ? "1" : "0"; }

}  // namespace

bool RunReport::feasible() const {
  return std::all_of(tasks.begin(), tasks.end(), [](const TaskRecord& r) { return r.outcome.feasible; });
}

opt::OffloadProblem make_problem(const Scenario& s, const std::vector<SemanticTask>& tasks) {
  opt::OffloadProblem p;
  for (const auto& n : s.nodes) {
    if (n.tier != Tier::end) p.servers.push_back(n);
  }
  std::sort(p.servers.begin(), p.servers.end(),
            [](const ComputeNode& a, const ComputeNode& b) { return a.id < b.id; });
  for (const auto& t : tasks) {
    opt::Agent a;
    a.task = t;
    const auto end = std::find_if(s.nodes.begin(), s.nodes.end(),
                                  [&](const ComputeNode& n) { return n.id == t.device_id; });
    if (end == s.nodes.end()) throw ValidationError("task '" + t.id + "': unknown device");
    a.end = *end;
    for (const auto& l : s.links) {
      if (l.end_id == t.device_id) a.links.push_back(l);
    }
    std::sort(a.links.begin(), a.links.end(),
              [](const WirelessLink& x, const WirelessLink& y) { return x.server_id < y.server_id; });
    p.agents.push_back(std::move(a));
  }
  return p;
}

RunReport run(const Scenario& s) {
  validate(s);
  const auto tasks = materialize_tasks(s);
  const auto epochs = split_epochs(s, tasks);

  // Build and check every epoch before solving any of them.
  std::vector<opt::OffloadProblem> problems;
  std::vector<opt::ActionGrid> grids;
  for (const auto& e : epochs) {
    problems.push_back(make_problem(s, e.tasks));
    opt::validate(problems.back());
    grids.push_back(opt::make_uniform_grid(problems.back(), s.grid.freq_levels, s.grid.power_levels));
  }

  RunReport report;
  report.optimizer = s.optimizer.kind;
  report.seed = s.seed;
  for (std::size_t ei = 0; ei < epochs.size(); ++ei) {
    const auto& problem = problems[ei];
    const auto& grid = grids[ei];
    const auto solved = solve(s, problem, grid, s.optimizer.kind, epochs[ei].index);

    EpochReport er;
    er.index = epochs[ei].index;
    er.start_s = epochs[ei].start_s;
    er.agents = problem.agents.size();
    er.optimizer_energy_j = solved.solution.total_energy_j;
    er.iterations = solved.iterations;
    er.converged = solved.converged;
    if (s.optimizer.kind == OptimizerKind::oracle) {
      er.oracle_energy_j = solved.solution.total_energy_j;
    } else if (s.optimizer.compare_with_oracle) {
      er.oracle_energy_j = solve(s, problem, grid, OptimizerKind::oracle, er.index).solution.total_energy_j;
    }
    if (er.oracle_energy_j && *er.oracle_energy_j > 0.0 && solved.solution.feasible) {
      er.price_of_anarchy = solved.solution.total_energy_j / *er.oracle_energy_j;
    }

    auto actions = solved.solution.actions;
    std::vector<bool> admitted(actions.size(), true);
    if (s.admission) {
      std::vector<ComputeNode> servers = problem.servers;
      for (std::size_t i = 0; i < actions.size(); ++i) {
        if (actions[i].mode != Mode::offload) continue;
        auto& server = servers[problem.server_index(actions[i].server_id)];
        const auto& t = problem.agents[i].task;
        const double demand = static_cast<double>(t.words) * t.dec_cycles_per_word *
                              server.flops_per_cycle / t.deadline_s;
        if (capability::admit(server, demand)) {
          server.current_load_flops += demand;
        } else {
          admitted[i] = false;
          actions[i] = local_fallback(problem.agents[i], grid.agents[i]);
          ++er.rejected;
        }
      }
    }
    const auto outcomes =
        er.rejected == 0 ? solved.solution.outcomes : opt::evaluate_profile(problem, actions);

    for (std::size_t i = 0; i < actions.size(); ++i) {
      TaskRecord r;
      r.task = problem.agents[i].task;
      r.epoch = er.index;
      r.action = actions[i];
      r.outcome = outcomes[i];
      r.qoe = cost::qoe(r.outcome, r.task, s.qoe->weights, s.qoe->scales);
      r.admitted = admitted[i];
      er.energy_j += r.outcome.energy_j;
      report.tasks.push_back(std::move(r));
    }
    report.epochs.push_back(er);
  }

  auto& tot = report.totals;
  tot.tasks = report.tasks.size();
  if (tot.tasks > 0) {
    double latency = 0.0;
    double qoe = 0.0;
    std::size_t feasible = 0;
    for (const auto& r : report.tasks) {
      tot.energy_j += r.outcome.energy_j;
      latency += r.outcome.latency_s;
      qoe += r.qoe;
      feasible += r.outcome.feasible ? 1 : 0;
    }
    const double n = static_cast<double>(tot.tasks);
    tot.mean_latency_s = latency / n;
    tot.mean_qoe = qoe / n;
    tot.feasible_rate = static_cast<double>(feasible) / n;
  }
  return report;
}

std::vector<RunReport> sweep(const nlohmann::json& config, std::string_view path,
                             const std::vector<std::string>& values, unsigned threads) {
  const auto scenarios = variants(config, path, values, threads);
  return parallel_map<RunReport>(scenarios.size(), threads,
                                 [&](std::size_t i) { return run(scenarios[i]); });
}

video::VideoReport run_video(const Scenario& s) {
  if (!s.video) throw ValidationError("video: the configuration has no video section");
  return video::run_video(*s.video, video::load_source(*s.video));
}

std::vector<video::VideoReport> sweep_video(const nlohmann::json& config, std::string_view path,
                                            const std::vector<std::string>& values,
                                            unsigned threads) {
  const auto scenarios = variants(config, path, values, threads);
  return parallel_map<video::VideoReport>(scenarios.size(), threads,
                                          [&](std::size_t i) { return run_video(scenarios[i]); });
}

csv::Table report_table(const RunReport& report) {
  csv::Table t;
  t.header = {"kind",       "task_id",     "device_id",   "arrival_s",         "epoch",
              "mode",       "server_id",   "cpu_freq_hz", "tx_power_dbm",      "energy_j",
              "latency_s",  "deadline_s",  "feasible",    "bits_sent",         "semantic_rate_sps",
              "qoe",        "admitted",    "name",        "value"};
  for (const auto& r : report.tasks) {
    const bool off = r.action.mode == Mode::offload;
    t.rows.push_back({"task",
                      r.task.id,
                      r.task.device_id,
                      fmt(r.task.arrival_s),
                      std::to_string(r.epoch),
                      off ? "offload" : "local",
                      r.action.server_id,
                      fmt(r.action.cpu_freq_hz),
                      off ? fmt(r.action.tx_power_dbm) : "",
                      fmt(r.outcome.energy_j),
                      fmt(r.outcome.latency_s),
                      fmt(r.task.deadline_s),
                      fmt_bool(r.outcome.feasible),
                      std::to_string(r.outcome.bits_sent),
                      fmt(r.outcome.semantic_rate_sps),
                      fmt(r.qoe),
                      fmt_bool(r.admitted),
                      "",
                      ""});
  }
  auto summary = [&](const std::string& epoch, const std::string& name, const std::string& value) {
    std::vector<std::string> row(t.header.size());
    row[0] = "summary";
    row[4] = epoch;
    row[t.header.size() - 2] = name;
    row[t.header.size() - 1] = value;
    t.rows.push_back(std::move(row));
  };
  const auto& tot = report.totals;
  summary("", "task_count", std::to_string(tot.tasks));
  summary("", "total_energy_j", fmt(tot.energy_j));
  summary("", "mean_latency_s", fmt(tot.mean_latency_s));
  summary("", "feasible_rate", fmt(tot.feasible_rate));
  summary("", "mean_qoe", fmt(tot.mean_qoe));
  for (const auto& e : report.epochs) {
    const std::string idx = std::to_string(e.index);
    summary(idx, "agents", std::to_string(e.agents));
    summary(idx, "optimizer_energy_j", fmt(e.optimizer_energy_j));
    summary(idx, "energy_j", fmt(e.energy_j));
    summary(idx, "iterations", std::to_string(e.iterations));
    summary(idx, "converged", fmt_bool(e.converged));
    summary(idx, "rejected", std::to_string(e.rejected));
    if (e.oracle_energy_j) summary(idx, "oracle_energy_j", fmt(*e.oracle_energy_j));
    if (e.price_of_anarchy) summary(idx, "price_of_anarchy", fmt(*e.price_of_anarchy));
  }
  return t;
}

csv::Table video_table(const video::VideoReport& report) {
  csv::Table t;
  t.header = {"kind", "frame", "keyframe", "redundant", "psnr_db", "ssim", "name", "value"};
  std::size_t redundant = 0;
  for (const auto& f : report.frames) {
    redundant += f.redundant ? 1 : 0;
    t.rows.push_back({"frame", std::to_string(f.index), fmt_bool(f.keyframe), fmt_bool(f.redundant),
                      fmt(f.psnr_db), fmt(f.ssim), "", ""});
  }
  auto summary = [&](const std::string& name, const std::string& value) {
    t.rows.push_back({"summary", "", "", "", "", "", name, value});
  };
  summary("frames", std::to_string(report.frames.size()));
  summary("keyframes", std::to_string(report.plan.keyframe_indices.size()));
  summary("redundant", std::to_string(redundant));
  summary("bpp", fmt(report.bpp));
  summary("mean_psnr_db", fmt(report.mean_psnr_db));
  summary("mean_ssim", fmt(report.mean_ssim));
  return t;
}

csv::Table sweep_table(const std::vector<std::string>& values, const std::vector<csv::Table>& tables) {
  if (values.size() != tables.size()) throw ValidationError("sweep: value and table counts differ");
  csv::Table out;
  if (tables.empty()) return out;
  out.header = tables.front().header;
  out.header.insert(out.header.begin(), "param_value");
  for (std::size_t i = 0; i < tables.size(); ++i) {
    if (tables[i].header != tables.front().header) throw ValidationError("sweep: header mismatch");
    for (const auto& row : tables[i].rows) {
      auto r = row;
      r.insert(r.begin(), values[i]);
      out.rows.push_back(std::move(r));
    }
  }
  return out;
}

}  // namespace semcn
