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

#include "semcn/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace semcn {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw ValidationError(path + ": " + what);
}

const char* type_name(const json& j) { return j.type_name(); }

// Object view that records which keys were read so leftovers can be rejected.
class Fields {
 public:
  Fields(const json& j, std::string path) : j_(j), path_(std::move(path)) {
    if (!j_.is_object()) fail(path_, std::string("expected an object, got ") + type_name(j_));
  }

  const std::string& path() const { return path_; }
  std::string at(const std::string& key) const { return path_ + "." + key; }

  const json* find(const std::string& key) {
    auto it = j_.find(key);
    if (it == j_.end()) return nullptr;
    used_.insert(key);
    return &*it;
  }

  const json& need(const std::string& key) {
    const json* v = find(key);
    if (!v) fail(path_, "missing required key '" + key + "'");
    return *v;
  }

  double number(const std::string& key) { return as_number(need(key), at(key)); }
  double number(const std::string& key, double def) {
    const json* v = find(key);
    return v ? as_number(*v, at(key)) : def;
  }

  std::int64_t integer(const std::string& key) { return as_integer(need(key), at(key)); }
  std::int64_t integer(const std::string& key, std::int64_t def) {
    const json* v = find(key);
    return v ? as_integer(*v, at(key)) : def;
  }

  std::uint64_t unsigned_integer(const std::string& key) {
    const json& v = need(key);
    const bool ok = v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
    if (!ok) fail(at(key), "expected a non-negative integer");
    return v.get<std::uint64_t>();
  }
  std::uint64_t unsigned_integer(const std::string& key, std::uint64_t def) {
    return find(key) ? unsigned_integer(key) : def;
  }

  std::string string(const std::string& key) {
    const json& v = need(key);
    if (!v.is_string()) fail(at(key), std::string("expected a string, got ") + type_name(v));
    return v.get<std::string>();
  }
  std::string string(const std::string& key, const std::string& def) {
    return find(key) ? string(key) : def;
  }

  bool boolean(const std::string& key, bool def) {
    const json* v = find(key);
    if (!v) return def;
    if (!v->is_boolean()) fail(at(key), std::string("expected a boolean, got ") + type_name(*v));
    return v->get<bool>();
  }

  const json& array(const std::string& key) {
    const json& v = need(key);
    if (!v.is_array()) fail(at(key), std::string("expected an array, got ") + type_name(v));
    return v;
  }

  void finish() const {
    for (auto it = j_.begin(); it != j_.end(); ++it) {
      if (!used_.count(it.key())) fail(path_, "unknown key '" + it.key() + "'");
    }
  }

  static double as_number(const json& v, const std::string& path) {
    if (!v.is_number()) fail(path, std::string("expected a number, got ") + type_name(v));
    return v.get<double>();
  }

  static std::int64_t as_integer(const json& v, const std::string& path) {
    if (v.is_number_integer()) return v.get<std::int64_t>();
    if (v.is_number_float()) {
      const double d = v.get<double>();
      if (std::floor(d) == d && std::abs(d) < 9e15) return static_cast<std::int64_t>(d);
    }
    fail(path, "expected an integer");
  }

 private:
  const json& j_;
  std::string path_;
  std::set<std::string> used_;
};

std::pair<double, double> number_pair(Fields& f, const std::string& key) {
  const json& a = f.array(key);
  if (a.size() != 2) fail(f.at(key), "expected [min, max]");
  return {Fields::as_number(a[0], f.at(key) + "[0]"), Fields::as_number(a[1], f.at(key) + "[1]")};
}

int small_int(Fields& f, const std::string& key, std::int64_t def) {
  const auto v = f.integer(key, def);
  if (v < 0 || v > 1'000'000'000) fail(f.at(key), "value out of range");
  return static_cast<int>(v);
}

ComputeNode parse_node(const json& j, const std::string& path) {
  Fields f(j, path);
  ComputeNode n;
  n.id = f.string("id");
  try {
    n.tier = tier_from_string(f.string("tier"));
  } catch (const ValidationError& e) {
    fail(f.at("tier"), e.what());
  }
  n.clock_hz = f.number("clock_hz");
  n.cores = small_int(f, "cores", 1);
  n.flops_per_cycle = small_int(f, "flops_per_cycle", 1);
  if (f.find("freq_range_hz")) {
    auto [lo, hi] = number_pair(f, "freq_range_hz");
    n.freq_range_hz = FreqRange{lo, hi};
  }
  if (f.find("kappa")) {
    n.kappa = f.number("kappa");
  } else if (n.tier == Tier::end) {
    n.kappa = kDefaultKappa;
  }
  n.capacity_flops = f.number("capacity_flops", 0.0);
  n.current_load_flops = f.number("current_load_flops", 0.0);
  f.finish();
  return n;
}

WirelessLink parse_link(const json& j, const std::string& path) {
  Fields f(j, path);
  WirelessLink l;
  l.end_id = f.string("end_id");
  l.server_id = f.string("server_id");
  l.bandwidth_hz = f.number("bandwidth_hz");
  l.channel_gain = f.number("channel_gain");
  l.noise_psd = f.number("noise_psd");
  auto [lo, hi] = number_pair(f, "power_range_dbm");
  l.power_range_dbm = PowerRange{lo, hi};
  f.finish();
  return l;
}

// Shared by explicit tasks and the arrival template.
void parse_task_body(Fields& f, SemanticTask& t) {
  t.words = f.unsigned_integer("words");
  t.symbols_per_word = small_int(f, "symbols_per_word", t.symbols_per_word);
  t.bits_per_symbol = small_int(f, "bits_per_symbol", t.bits_per_symbol);
  t.enc_cycles_base = f.number("enc_cycles_base");
  t.enc_cycles_per_symbol = f.number("enc_cycles_per_symbol");
  t.dec_cycles_per_word = f.number("dec_cycles_per_word");
  t.deadline_s = f.number("deadline_s", t.deadline_s);
  t.perf.scale = f.number("perf_scale", t.perf.scale);
}

SemanticTask parse_task(const json& j, const std::string& path) {
  Fields f(j, path);
  SemanticTask t;
  t.id = f.string("id");
  t.device_id = f.string("device_id");
  t.arrival_s = f.number("arrival_s", 0.0);
  parse_task_body(f, t);
  f.finish();
  return t;
}

ArrivalProcess parse_arrivals(const json& j, const std::string& path) {
  Fields f(j, path);
  ArrivalProcess a;
  a.rate_per_s = f.number("rate_per_s");
  a.horizon_s = f.number("horizon_s");
  Fields t(f.need("task"), f.at("task"));
  parse_task_body(t, a.task);
  t.finish();
  f.finish();
  return a;
}

opt::MarlCritic critic_from_string(const std::string& s, const std::string& path) {
  if (s == "none") return opt::MarlCritic::none;
  if (s == "counterfactual") return opt::MarlCritic::counterfactual;
  fail(path, "unknown critic '" + s + "'");
}

std::string_view to_string(opt::MarlCritic c) {
  return c == opt::MarlCritic::none ? "none" : "counterfactual";
}

OptimizerSpec parse_optimizer(const json& j, const std::string& path) {
  Fields f(j, path);
  OptimizerSpec o;
  try {
    o.kind = optimizer_from_string(f.string("name", "oracle"));
  } catch (const ValidationError& e) {
    fail(f.at("name"), e.what());
  }
  o.compare_with_oracle = f.boolean("compare_with_oracle", false);
  if (const json* v = f.find("oracle")) {
    Fields g(*v, f.at("oracle"));
    o.oracle.max_joint_actions = g.number("max_joint_actions", o.oracle.max_joint_actions);
    g.finish();
  }
  if (const json* v = f.find("gne")) {
    Fields g(*v, f.at("gne"));
    o.gne.max_iters = small_int(g, "max_iters", o.gne.max_iters);
    o.gne.eps = g.number("eps", o.gne.eps);
    g.finish();
  }
  if (const json* v = f.find("marl")) {
    Fields g(*v, f.at("marl"));
    o.marl.episodes = small_int(g, "episodes", o.marl.episodes);
    o.marl.learning_rate = g.number("learning_rate", o.marl.learning_rate);
    o.marl.baseline_rate = g.number("baseline_rate", o.marl.baseline_rate);
    o.marl.penalty_factor = g.number("penalty_factor", o.marl.penalty_factor);
    if (g.find("penalty_j")) o.marl.penalty_j = g.number("penalty_j");
    o.marl.critic = critic_from_string(g.string("critic", "counterfactual"), g.at("critic"));
    o.marl.entropy_bonus = g.number("entropy_bonus", o.marl.entropy_bonus);
    o.marl_eval_episodes = small_int(g, "eval_episodes", o.marl_eval_episodes);
    g.finish();
  }
  f.finish();
  return o;
}

QoeSpec parse_qoe(const json& j, const std::string& path) {
  Fields f(j, path);
  QoeSpec q;
  const json& w = f.array("weights");
  if (w.size() != q.weights.size()) fail(f.at("weights"), "expected 5 weights");
  for (std::size_t i = 0; i < w.size(); ++i) {
    q.weights[i] = Fields::as_number(w[i], f.at("weights") + "[" + std::to_string(i) + "]");
  }
  Fields s(f.need("scales"), f.at("scales"));
  q.scales.bits = s.number("bits");
  q.scales.cycles = s.number("cycles");
  q.scales.latency_s = s.number("latency_s");
  q.scales.energy_j = s.number("energy_j");
  s.finish();
  f.finish();
  return q;
}

video::VideoConfig parse_video(const json& j, const std::string& path) {
  Fields f(j, path);
  video::VideoConfig v;
  v.frames = f.string("frames", v.frames);
  if (const json* s = f.find("synthetic")) {
    Fields g(*s, f.at("synthetic"));
    v.synthetic_frames = g.unsigned_integer("frames", v.synthetic_frames);
    v.synthetic_height = g.unsigned_integer("height", v.synthetic_height);
    v.synthetic_width = g.unsigned_integer("width", v.synthetic_width);
    g.finish();
  }
  v.seed = f.unsigned_integer("seed", v.seed);
  if (const json* k = f.find("keyframe")) {
    Fields g(*k, f.at("keyframe"));
    const std::string policy = g.string("policy");
    const auto value = g.unsigned_integer("value");
    try {
      v.keyframe = video::KeyframePolicy::parse(policy + ":" + std::to_string(value));
    } catch (const ValidationError& e) {
      fail(g.path(), e.what());
    }
    g.finish();
  }
  v.factor = f.unsigned_integer("factor", v.factor);
  v.tau_frame = f.number("tau_frame", v.tau_frame);
  v.tau_motion = f.number("tau_motion", v.tau_motion);
  v.keep_ratio = f.number("keep_ratio", v.keep_ratio);
  if (const json* r = f.find("rates")) {
    Fields g(*r, f.at("rates"));
    v.rates.lr_bits_per_pixel = g.number("lr_bits_per_pixel", v.rates.lr_bits_per_pixel);
    v.rates.hr_bits_per_pixel = g.number("hr_bits_per_pixel", v.rates.hr_bits_per_pixel);
    g.finish();
  }
  f.finish();
  return v;
}

json task_body_json(const SemanticTask& t) {
  return {{"words", t.words},
          {"symbols_per_word", t.symbols_per_word},
          {"bits_per_symbol", t.bits_per_symbol},
          {"enc_cycles_base", t.enc_cycles_base},
          {"enc_cycles_per_symbol", t.enc_cycles_per_symbol},
          {"dec_cycles_per_word", t.dec_cycles_per_word},
          {"deadline_s", t.deadline_s},
          {"perf_scale", t.perf.scale}};
}

void validate_video(const video::VideoConfig& v) {
  auto require = [](bool ok, const std::string& what) {
    if (!ok) fail("video", what);
  };
  require(v.factor >= 1, "factor must be >= 1");
  require(v.keep_ratio > 0.0 && v.keep_ratio <= 1.0, "keep_ratio must lie in (0, 1]");
  require(v.tau_frame >= 0.0 && v.tau_motion >= 0.0, "thresholds must be >= 0");
  require(v.rates.lr_bits_per_pixel > 0.0 && v.rates.hr_bits_per_pixel > 0.0,
          "coded rates must be > 0");
  require(v.synthetic_frames >= 1 && v.synthetic_height >= 1 && v.synthetic_width >= 1,
          "synthetic dimensions must be >= 1");
}

}  // namespace

std::string_view to_string(OptimizerKind kind) {
  switch (kind) {
    case OptimizerKind::oracle:
      return "oracle";
    case OptimizerKind::greedy_local:
      return "greedy-local";
    case OptimizerKind::greedy_offload:
      return "greedy-offload";
    case OptimizerKind::gne:
      return "gne";
    case OptimizerKind::marl:
      return "marl";
  }
  return "unknown";
}

OptimizerKind optimizer_from_string(std::string_view name) {
  for (auto k : {OptimizerKind::oracle, OptimizerKind::greedy_local, OptimizerKind::greedy_offload,
                 OptimizerKind::gne, OptimizerKind::marl}) {
    if (to_string(k) == name) return k;
  }
  throw ValidationError("unknown optimizer '" + std::string(name) + "'");
}

Scenario parse_scenario(const json& doc) {
  Fields f(doc, "$");
  const auto version = f.integer("schema_version");
  if (version != kSchemaVersion) {
    fail(f.at("schema_version"), "unsupported schema version " + std::to_string(version) +
                                     " (expected " + std::to_string(kSchemaVersion) + ")");
  }
  Scenario s;
  s.seed = f.unsigned_integer("seed", s.seed);
  const auto threads = f.integer("threads", 1);
  if (threads < 1 || threads > 1024) fail(f.at("threads"), "must lie in [1, 1024]");
  s.threads = static_cast<unsigned>(threads);

  if (f.find("nodes")) {
    const json& a = f.array("nodes");
    for (std::size_t i = 0; i < a.size(); ++i) {
      s.nodes.push_back(parse_node(a[i], f.at("nodes") + "[" + std::to_string(i) + "]"));
    }
  }
  if (f.find("links")) {
    const json& a = f.array("links");
    for (std::size_t i = 0; i < a.size(); ++i) {
      s.links.push_back(parse_link(a[i], f.at("links") + "[" + std::to_string(i) + "]"));
    }
  }
  if (f.find("tasks")) {
    const json& a = f.array("tasks");
    for (std::size_t i = 0; i < a.size(); ++i) {
      s.tasks.push_back(parse_task(a[i], f.at("tasks") + "[" + std::to_string(i) + "]"));
    }
  }
  if (const json* a = f.find("arrivals")) s.arrivals = parse_arrivals(*a, f.at("arrivals"));
  s.epoch_window_s = f.number("epoch_window_s", 0.0);
  if (const json* g = f.find("grid")) {
    Fields gf(*g, f.at("grid"));
    s.grid.freq_levels = gf.unsigned_integer("freq_levels", s.grid.freq_levels);
    s.grid.power_levels = gf.unsigned_integer("power_levels", s.grid.power_levels);
    gf.finish();
  }
  if (const json* o = f.find("optimizer")) s.optimizer = parse_optimizer(*o, f.at("optimizer"));
  if (const json* q = f.find("qoe")) s.qoe = parse_qoe(*q, f.at("qoe"));
  s.admission = f.boolean("admission", true);
  if (const json* v = f.find("video")) s.video = parse_video(*v, f.at("video"));
  f.finish();
  validate(s);
  return s;
}

json load_config(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ValidationError(path.string() + ": cannot open file");
  std::ostringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    std::size_t line = 1;
    std::size_t col = 1;
    const std::size_t end = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < end; ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    std::string what = e.what();
    if (auto p = what.find("syntax error"); p != std::string::npos) what = what.substr(p);
    throw ValidationError(path.string() + ":" + std::to_string(line) + ":" + std::to_string(col) +
                          ": " + what);
  }
}

Scenario load_scenario(const std::filesystem::path& path) {
  const json doc = load_config(path);
  try {
    return parse_scenario(doc);
  } catch (const ValidationError& e) {
    throw ValidationError(path.string() + ": " + e.what());
  }
}

json to_json(const Scenario& s) {
  json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["seed"] = s.seed;
  doc["threads"] = s.threads;
  doc["nodes"] = json::array();
  for (const auto& n : s.nodes) {
    json j = {{"id", n.id},
              {"tier", std::string(to_string(n.tier))},
              {"clock_hz", n.clock_hz},
              {"cores", n.cores},
              {"flops_per_cycle", n.flops_per_cycle},
              {"capacity_flops", n.capacity_flops},
              {"current_load_flops", n.current_load_flops}};
    if (n.freq_range_hz) j["freq_range_hz"] = {n.freq_range_hz->min_hz, n.freq_range_hz->max_hz};
    if (n.kappa) j["kappa"] = *n.kappa;
    doc["nodes"].push_back(std::move(j));
  }
  doc["links"] = json::array();
  for (const auto& l : s.links) {
    doc["links"].push_back({{"end_id", l.end_id},
                            {"server_id", l.server_id},
                            {"bandwidth_hz", l.bandwidth_hz},
                            {"channel_gain", l.channel_gain},
                            {"noise_psd", l.noise_psd},
                            {"power_range_dbm",
                             {l.power_range_dbm.min_dbm, l.power_range_dbm.max_dbm}}});
  }
  doc["tasks"] = json::array();
  for (const auto& t : s.tasks) {
    json j = task_body_json(t);
    j["id"] = t.id;
    j["device_id"] = t.device_id;
    j["arrival_s"] = t.arrival_s;
    doc["tasks"].push_back(std::move(j));
  }
  if (s.arrivals) {
    doc["arrivals"] = {{"rate_per_s", s.arrivals->rate_per_s},
                       {"horizon_s", s.arrivals->horizon_s},
                       {"task", task_body_json(s.arrivals->task)}};
  }
  doc["epoch_window_s"] = s.epoch_window_s;
  doc["grid"] = {{"freq_levels", s.grid.freq_levels}, {"power_levels", s.grid.power_levels}};
  const auto& o = s.optimizer;
  json marl = {{"episodes", o.marl.episodes},
               {"learning_rate", o.marl.learning_rate},
               {"baseline_rate", o.marl.baseline_rate},
               {"penalty_factor", o.marl.penalty_factor},
               {"critic", std::string(to_string(o.marl.critic))},
               {"entropy_bonus", o.marl.entropy_bonus},
               {"eval_episodes", o.marl_eval_episodes}};
  if (o.marl.penalty_j) marl["penalty_j"] = *o.marl.penalty_j;
  doc["optimizer"] = {{"name", std::string(to_string(o.kind))},
                      {"compare_with_oracle", o.compare_with_oracle},
                      {"oracle", {{"max_joint_actions", o.oracle.max_joint_actions}}},
                      {"gne", {{"max_iters", o.gne.max_iters}, {"eps", o.gne.eps}}},
                      {"marl", std::move(marl)}};
  if (s.qoe) {
    doc["qoe"] = {{"weights", s.qoe->weights},
                  {"scales",
                   {{"bits", s.qoe->scales.bits},
                    {"cycles", s.qoe->scales.cycles},
                    {"latency_s", s.qoe->scales.latency_s},
                    {"energy_j", s.qoe->scales.energy_j}}}};
  }
  doc["admission"] = s.admission;
  if (s.video) {
    const auto& v = *s.video;
    doc["video"] = {
        {"frames", v.frames},
        {"synthetic",
         {{"frames", v.synthetic_frames}, {"height", v.synthetic_height}, {"width", v.synthetic_width}}},
        {"seed", v.seed},
        {"keyframe",
         {{"policy", v.keyframe.kind == video::KeyframePolicy::Kind::fixed ? "fixed" : "content"},
          {"value", v.keyframe.value}}},
        {"factor", v.factor},
        {"tau_frame", v.tau_frame},
        {"tau_motion", v.tau_motion},
        {"keep_ratio", v.keep_ratio},
        {"rates",
         {{"lr_bits_per_pixel", v.rates.lr_bits_per_pixel},
          {"hr_bits_per_pixel", v.rates.hr_bits_per_pixel}}}};
  }
  return doc;
}

void validate(const Scenario& s) {
  std::map<std::string, const ComputeNode*> nodes;
  for (std::size_t i = 0; i < s.nodes.size(); ++i) {
    const auto& n = s.nodes[i];
    const std::string path = "nodes[" + std::to_string(i) + "]";
    try {
      validate(n);
    } catch (const ValidationError& e) {
      fail(path, e.what());
    }
    if (!nodes.emplace(n.id, &n).second) fail(path, "duplicate node id '" + n.id + "'");
  }
  std::set<std::pair<std::string, std::string>> pairs;
  for (std::size_t i = 0; i < s.links.size(); ++i) {
    const auto& l = s.links[i];
    const std::string path = "links[" + std::to_string(i) + "]";
    try {
      validate(l);
    } catch (const ValidationError& e) {
      fail(path, e.what());
    }
    auto e = nodes.find(l.end_id);
    if (e == nodes.end()) fail(path, "unknown end node '" + l.end_id + "'");
    if (e->second->tier != Tier::end) fail(path, "'" + l.end_id + "' is not an end node");
    auto srv = nodes.find(l.server_id);
    if (srv == nodes.end()) fail(path, "unknown server '" + l.server_id + "'");
    if (srv->second->tier == Tier::end) fail(path, "'" + l.server_id + "' is an end node");
    if (!pairs.emplace(l.end_id, l.server_id).second) {
      fail(path, "more than one link from '" + l.end_id + "' to '" + l.server_id + "'");
    }
  }
  auto check_device = [&](const std::string& path, const std::string& device) {
    auto it = nodes.find(device);
    if (it == nodes.end()) fail(path, "unknown device '" + device + "'");
    if (it->second->tier != Tier::end) fail(path, "'" + device + "' is not an end node");
  };
  std::set<std::string> task_ids;
  for (std::size_t i = 0; i < s.tasks.size(); ++i) {
    const auto& t = s.tasks[i];
    const std::string path = "tasks[" + std::to_string(i) + "]";
    try {
      validate(t);
    } catch (const ValidationError& e) {
      fail(path, e.what());
    }
    if (!task_ids.insert(t.id).second) fail(path, "duplicate task id '" + t.id + "'");
    check_device(path, t.device_id);
  }
  if (s.arrivals) {
    if (!s.tasks.empty()) fail("arrivals", "give either tasks or arrivals, not both");
    const auto& a = *s.arrivals;
    if (!(std::isfinite(a.rate_per_s) && a.rate_per_s >= 0.0)) fail("arrivals", "rate_per_s must be >= 0");
    if (!(std::isfinite(a.horizon_s) && a.horizon_s >= 0.0)) fail("arrivals", "horizon_s must be >= 0");
    if (a.rate_per_s * a.horizon_s > 1e6) fail("arrivals", "too many arrivals per device");
    SemanticTask probe = a.task;
    probe.id = "template";
    try {
      validate(probe);
    } catch (const ValidationError& e) {
      fail("arrivals.task", e.what());
    }
  }
  if (!(std::isfinite(s.epoch_window_s) && s.epoch_window_s >= 0.0)) {
    fail("epoch_window_s", "must be >= 0");
  }
  if (s.grid.freq_levels < 1 || s.grid.power_levels < 1) fail("grid", "levels must be >= 1");
  if (s.grid.freq_levels > 1000 || s.grid.power_levels > 1000) fail("grid", "at most 1000 levels");
  const auto& o = s.optimizer;
  if (!(o.oracle.max_joint_actions >= 1.0)) fail("optimizer.oracle", "max_joint_actions must be >= 1");
  if (o.gne.max_iters < 1) fail("optimizer.gne", "max_iters must be >= 1");
  if (!(o.gne.eps >= 0.0)) fail("optimizer.gne", "eps must be >= 0");
  if (o.marl.episodes < 1) fail("optimizer.marl", "episodes must be >= 1");
  if (!(o.marl.learning_rate > 0.0 && std::isfinite(o.marl.learning_rate))) {
    fail("optimizer.marl", "learning_rate must be > 0");
  }
  if (!(o.marl.baseline_rate > 0.0 && o.marl.baseline_rate <= 1.0)) {
    fail("optimizer.marl", "baseline_rate must lie in (0, 1]");
  }
  if (!(o.marl.penalty_factor >= 0.0)) fail("optimizer.marl", "penalty_factor must be >= 0");
  if (o.marl.penalty_j && !(*o.marl.penalty_j >= 0.0)) fail("optimizer.marl", "penalty_j must be >= 0");
  if (!(o.marl.entropy_bonus >= 0.0)) fail("optimizer.marl", "entropy_bonus must be >= 0");
  if (o.marl_eval_episodes < 1) fail("optimizer.marl", "eval_episodes must be >= 1");
  const bool has_tasks = !s.tasks.empty() || s.arrivals.has_value();
  if (has_tasks && !s.qoe) fail("qoe", "QoE weights and scales must be declared when tasks are present");
  if (s.qoe) {
    try {
      SemanticTask probe;
      probe.id = "probe";
      (void)cost::qoe(Outcome{}, probe, s.qoe->weights, s.qoe->scales);
    } catch (const ValidationError& e) {
      fail("qoe", e.what());
    }
  }
  if (s.video) validate_video(*s.video);
}

std::vector<SemanticTask> materialize_tasks(const Scenario& s) {
  std::vector<SemanticTask> tasks = s.tasks;
  if (s.arrivals) {
    const auto& a = *s.arrivals;
    const auto per_device = static_cast<std::size_t>(std::llround(a.rate_per_s * a.horizon_s));
    std::vector<std::string> devices;
    for (const auto& n : s.nodes) {
      if (n.tier == Tier::end) devices.push_back(n.id);
    }
    std::sort(devices.begin(), devices.end());
    std::mt19937_64 rng(s.seed);
    for (const auto& d : devices) {
      for (std::size_t i = 0; i < per_device; ++i) {
        SemanticTask t = a.task;
        t.device_id = d;
        t.id = d + "/" + std::to_string(i);
        // 53 random bits mapped onto [0, 1).
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
        t.arrival_s = u * a.horizon_s;
        tasks.push_back(std::move(t));
      }
    }
  }
  std::stable_sort(tasks.begin(), tasks.end(), [](const SemanticTask& x, const SemanticTask& y) {
    return std::tie(x.arrival_s, x.device_id, x.id) < std::tie(y.arrival_s, y.device_id, y.id);
  });
  return tasks;
}

namespace {

void set_at(json& node, const std::vector<std::string>& parts, std::size_t i,
            std::string_view value, const std::string& path, std::size_t& hits) {
  if (i == parts.size()) {
    if (node.is_string()) {
      node = std::string(value);
    } else if (node.is_number() || node.is_boolean()) {
      json parsed = json::parse(value, nullptr, false);
      if (parsed.is_discarded() || !(parsed.is_number() || parsed.is_boolean()) ||
          parsed.is_boolean() != node.is_boolean()) {
        fail(path, "value '" + std::string(value) + "' does not match the type of the target");
      }
      node = std::move(parsed);
    } else {
      fail(path, "path does not address a scalar");
    }
    ++hits;
    return;
  }
  const std::string& key = parts[i];
  if (node.is_array()) {
    if (key == "*") {
      for (auto& e : node) set_at(e, parts, i + 1, value, path, hits);
      return;
    }
    if (key.empty() || !std::all_of(key.begin(), key.end(), [](char c) { return c >= '0' && c <= '9'; })) {
      fail(path, "'" + key + "' is not an array index");
    }
    const auto idx = std::stoull(key);
    if (idx >= node.size()) fail(path, "index " + key + " out of range");
    set_at(node[idx], parts, i + 1, value, path, hits);
    return;
  }
  if (node.is_object()) {
    auto it = node.find(key);
    if (it == node.end()) fail(path, "no key '" + key + "'");
    set_at(*it, parts, i + 1, value, path, hits);
    return;
  }
  fail(path, "cannot descend into a scalar at '" + key + "'");
}

}  // namespace

void set_param(json& doc, std::string_view path, std::string_view value) {
  const std::string p(path);
  if (p.empty()) fail("param", "empty parameter path");
  std::vector<std::string> parts;
  std::size_t start = 0;
  while (true) {
    const auto dot = p.find('.', start);
    parts.push_back(p.substr(start, dot - start));
    if (dot == std::string::npos) break;
    start = dot + 1;
  }
  std::size_t hits = 0;
  set_at(doc, parts, 0, value, "param '" + p + "'", hits);
  if (hits == 0) fail("param '" + p + "'", "path matched nothing");
}

}  // namespace semcn
