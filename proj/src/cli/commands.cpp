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

#include "semcn/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "semcn/engine.hpp"
#include "semcn/simd/pixel_kernels.hpp"

namespace semcn::cli {

namespace {

namespace fs = std::filesystem;
using nlohmann::json;

enum class Level { error = 0, warn = 1, info = 2, debug = 3 };

// SEMCN_LOG selects the verbosity: error, warn (default), info or debug.
Level log_level() {
  const char* v = std::getenv("SEMCN_LOG");
  if (!v) return Level::warn;
  const std::string s(v);
  if (s == "error" || s == "quiet") return Level::error;
  if (s == "info") return Level::info;
  if (s == "debug") return Level::debug;
  return Level::warn;
}

class Log {
 public:
  explicit Log(std::ostream& err) : err_(err), level_(log_level()) {}
  void operator()(Level l, const std::string& msg) const {
    if (l > level_) return;
    static constexpr const char* names[] = {"error", "warn", "info", "debug"};
    err_ << names[static_cast<int>(l)] << ": " << msg << '\n';
  }

 private:
  std::ostream& err_;
  Level level_;
};

struct Common {
  std::string scenario;
  std::string out;
  std::optional<std::string> optimizer;
  std::optional<std::uint64_t> seed;
  std::optional<unsigned> threads;
};

// Accepts a configuration file or a run manifest written by this tool.
json read_config(const std::string& path) {
  json doc = load_config(path);
  if (doc.is_object() && doc.contains("manifest_version")) {
    if (!doc.contains("config")) throw ValidationError(path + ": manifest without a config");
    return doc["config"];
  }
  return doc;
}

json apply_overrides(json doc, const Common& c) {
  if (!doc.is_object()) throw ValidationError(c.scenario + ": $: expected an object");
  if (c.optimizer) {
    (void)optimizer_from_string(*c.optimizer);
    doc["optimizer"]["name"] = *c.optimizer;
  }
  if (c.seed) doc["seed"] = *c.seed;
  if (c.threads) {
    if (*c.threads < 1) throw ValidationError("--threads must be >= 1");
    doc["threads"] = *c.threads;
  }
  return doc;
}

Scenario parse_with_path(const json& doc, const std::string& path) {
  try {
    return parse_scenario(doc);
  } catch (const ValidationError& e) {
    throw ValidationError(path + ": " + e.what());
  }
}

void write_file(const fs::path& path, const std::string& text) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << text;
  if (!f) throw std::runtime_error("failed writing " + path.string());
}

fs::path manifest_path(const std::string& out) {
  fs::path p(out);
  p.replace_extension(".manifest.json");
  return p;
}

void write_manifest(const std::string& out, const std::string& command, const json& config,
                    json extra) {
  json m = {{"manifest_version", 1},
            {"tool", "semcn"},
            {"version", SEMCN_VERSION},
            {"command", command},
            {"config", config}};
  for (auto it = extra.begin(); it != extra.end(); ++it) m[it.key()] = it.value();
  write_file(manifest_path(out), m.dump(2) + "\n");
}

std::vector<std::string> split_values(const std::string& list) {
  std::vector<std::string> out;
  std::string cur;
  auto flush = [&] {
    const auto b = cur.find_first_not_of(" \t");
    const auto e = cur.find_last_not_of(" \t");
    if (b == std::string::npos) throw ValidationError("--values has an empty entry");
    out.push_back(cur.substr(b, e - b + 1));
    cur.clear();
  };
  for (char c : list) {
    if (c == ',') {
      flush();
    } else {
      cur += c;
    }
  }
  flush();
  return out;
}

void report_infeasible(const RunReport& r, std::ostream& err, const std::string& prefix = "") {
  for (const auto& t : r.tasks) {
    if (t.outcome.feasible) continue;
    err << "infeasible: " << prefix << "task '" << t.task.id << "' on '" << t.task.device_id
        << "': latency " << csv::format_number(t.outcome.latency_s) << " s exceeds deadline "
        << csv::format_number(t.task.deadline_s) << " s\n";
  }
}

int cmd_simulate(const Common& c, std::ostream& err, const Log& log) {
  const json doc = apply_overrides(read_config(c.scenario), c);
  const Scenario s = parse_with_path(doc, c.scenario);
  log(Level::info, "simulate: optimizer " + std::string(to_string(s.optimizer.kind)) + ", seed " +
                       std::to_string(s.seed));
  const RunReport r = run(s);
  write_file(c.out, csv::to_string(report_table(r)));
  write_manifest(c.out, "simulate", to_json(s), json::object());
  log(Level::info, "wrote " + c.out);
  if (!r.feasible()) {
    report_infeasible(r, err);
    return kExitInfeasible;
  }
  return kExitOk;
}

int cmd_sweep(const Common& c, const std::string& param, const std::string& values_text,
              std::ostream& err, const Log& log) {
  const json doc = apply_overrides(read_config(c.scenario), c);
  const Scenario base = parse_with_path(doc, c.scenario);
  const auto values = split_values(values_text);
  const json resolved = to_json(base);
  const bool is_video = param.rfind("video.", 0) == 0;
  std::vector<csv::Table> tables;
  bool feasible = true;
  try {
    if (is_video) {
      for (const auto& r : sweep_video(resolved, param, values, base.threads)) {
        tables.push_back(video_table(r));
      }
    } else {
      const auto reports = sweep(resolved, param, values, base.threads);
      for (std::size_t i = 0; i < reports.size(); ++i) {
        tables.push_back(report_table(reports[i]));
        if (!reports[i].feasible()) {
          feasible = false;
          report_infeasible(reports[i], err, param + "=" + values[i] + ": ");
        }
      }
    }
  } catch (const ValidationError& e) {
    throw ValidationError(c.scenario + ": " + e.what());
  }
  write_file(c.out, csv::to_string(sweep_table(values, tables)));
  write_manifest(c.out, "sweep", resolved, {{"param", param}, {"values", values}});
  log(Level::info, "wrote " + c.out);
  return feasible ? kExitOk : kExitInfeasible;
}

struct VideoArgs {
  std::optional<std::string> config;
  std::optional<std::string> frames;
  std::optional<std::string> keyframe;
  std::optional<std::size_t> factor;
  std::optional<double> keep;
  std::optional<std::uint64_t> seed;
  std::string out;
};

int cmd_video(const VideoArgs& a, const Log& log) {
  Scenario s;
  if (a.config) s = parse_with_path(read_config(*a.config), *a.config);
  if (!s.video) s.video = video::VideoConfig{};
  auto& v = *s.video;
  if (a.frames) v.frames = *a.frames;
  if (a.keyframe) v.keyframe = video::KeyframePolicy::parse(*a.keyframe);
  if (a.factor) v.factor = *a.factor;
  if (a.keep) v.keep_ratio = *a.keep;
  if (a.seed) v.seed = *a.seed;
  validate(s);
  log(Level::debug, "pixel kernels: " + std::string(simd::to_string(simd::kernels().isa)));
  const auto report = run_video(s);
  write_file(a.out, csv::to_string(video_table(report)));
  write_manifest(a.out, "video", to_json(s), json::object());
  log(Level::info, "wrote " + a.out + " (bpp " + csv::format_number(report.bpp) + ")");
  return kExitOk;
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--scenario", c.scenario, "Scenario configuration (JSON) or run manifest")->required();
  cmd->add_option("--out", c.out, "Output CSV path")->required();
  cmd->add_option("--optimizer", c.optimizer, "oracle, greedy-local, greedy-offload, gne or marl");
  cmd->add_option("--seed", c.seed, "Override the scenario seed");
  cmd->add_option("--threads", c.threads, "Worker threads (results do not depend on it)");
}

}  // namespace

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"semcn: semantic communication over a cloud-edge-end computing network"};
  app.set_version_flag("--version", SEMCN_VERSION);
  app.require_subcommand(1);

  Common sim;
  auto* simulate = app.add_subcommand("simulate", "Run a scenario and write per-task results");
  add_common(simulate, sim);

  Common sw;
  std::string param;
  std::string values;
  auto* sweep_cmd = app.add_subcommand("sweep", "Run a scenario once per parameter value");
  add_common(sweep_cmd, sw);
  sweep_cmd->add_option("--param", param, "Dotted path of the parameter, e.g. tasks.*.symbols_per_word")
      ->required();
  sweep_cmd->add_option("--values", values, "Comma-separated values")->required();

  VideoArgs va;
  auto* video_cmd = app.add_subcommand("video", "Run the keyframe/downsampling video pipeline");
  video_cmd->add_option("--config", va.config, "Configuration with a video section");
  video_cmd->add_option("--frames", va.frames, "SEMFRAMES file or synthetic:NAME");
  video_cmd->add_option("--keyframe", va.keyframe, "fixed:N or content:B");
  video_cmd->add_option("--factor", va.factor, "Downsampling factor");
  video_cmd->add_option("--keep", va.keep, "Fraction of sensing blocks kept");
  video_cmd->add_option("--seed", va.seed, "Seed of the synthetic source and sensing mask");
  video_cmd->add_option("--out", va.out, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  const Log log(err);
  try {
    if (*simulate) return cmd_simulate(sim, err, log);
    if (*sweep_cmd) return cmd_sweep(sw, param, values, err, log);
    if (*video_cmd) return cmd_video(va, log);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const opt::SearchCapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace semcn::cli
