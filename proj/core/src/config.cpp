#include "tsym/config.hpp"

#include <algorithm>
#include <climits>
#include <fstream>
#include <set>
#include <sstream>

namespace tsym {
namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  double v = 0.0;
  try {
    v = std::stod(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': expected a number, got '" + value + "'");
  }
  if (pos != value.size())
    throw ConfigError("config key '" + key + "': expected a number, got '" + value + "'");
  return v;
}

long parse_long(const std::string& key, const std::string& value) {
  std::size_t pos = 0;
  long v = 0;
  try {
    v = std::stol(value, &pos);
  } catch (const std::exception&) {
    throw ConfigError("config key '" + key + "': expected an integer, got '" + value + "'");
  }
  if (pos != value.size())
    throw ConfigError("config key '" + key + "': expected an integer, got '" + value + "'");
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  const long v = parse_long(key, value);
  if (v < INT_MIN || v > INT_MAX)
    throw ConfigError("config key '" + key + "': integer out of range");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const std::string& value) {
  if (value == "true" || value == "on" || value == "1") return true;
  if (value == "false" || value == "off" || value == "0") return false;
  throw ConfigError("config key '" + key + "': expected a boolean, got '" + value + "'");
}

std::vector<long> parse_long_list(const std::string& key, const std::string& value) {
  std::vector<long> out;
  std::stringstream ss(value);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty())
      throw ConfigError("config key '" + key + "': empty list element");
    out.push_back(parse_long(key, item));
  }
  if (out.empty()) throw ConfigError("config key '" + key + "': empty list");
  return out;
}

}  // namespace

void RunConfig::validate() const {
  if (env_name.empty()) throw ConfigError("config: env.name is required");
  if (total_env_steps <= 0)
    throw ConfigError("config key 'run.total_env_steps': must be positive");
  if (eval_interval <= 0) throw ConfigError("config key 'run.eval_interval': must be positive");
  if (total_env_steps % eval_interval != 0)
    throw ConfigError("config: run.total_env_steps must be a multiple of run.eval_interval");
  if (eval_episodes < 1) throw ConfigError("config key 'run.eval_episodes': must be >= 1");
  if (seeds.empty()) throw ConfigError("config key 'run.seeds': must be nonempty");
  std::set<long> distinct(seeds.begin(), seeds.end());
  if (distinct.size() != seeds.size())
    throw ConfigError("config key 'run.seeds': seeds must be distinct");
  if (solved_threshold < 0.0)
    throw ConfigError("config key 'run.solved_threshold': must be >= 0");
  if (early_stop_return && *early_stop_return <= 0.0)
    throw ConfigError("config key 'run.early_stop_return': must be > 0");
  if (parallel_workers < 0)
    throw ConfigError("config key 'run.parallel_workers': must be >= 0");
  try {
    learner.validate();
  } catch (const ContractViolation& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
}

std::string RunConfig::effective_run_id() const {
  if (!run_id.empty()) return run_id;
  return env_name + (tsda_enabled ? "-tsda-on" : "-tsda-off");
}

double RunConfig::effective_solved_threshold() const {
  if (solved_threshold > 0.0) return solved_threshold;
  if (env_name == "cartpole") return 750.0;
  if (env_name.rfind("manipulator", 0) == 0) return 800.0;
  return 800.0;
}

RunConfig parse_config(const std::string& text) {
  RunConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const auto hash = raw.find('#');
    std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw ConfigError("config line " + std::to_string(lineno) + ": expected 'key = value'");

    if (key == "env.name") cfg.env_name = value;
    else if (key.rfind("env.", 0) == 0) cfg.env_overrides[key.substr(4)] = parse_double(key, value);
    else if (key == "tsda.enabled") cfg.tsda_enabled = parse_bool(key, value);
    else if (key == "run.total_env_steps") cfg.total_env_steps = parse_long(key, value);
    else if (key == "run.eval_interval") cfg.eval_interval = parse_int(key, value);
    else if (key == "run.eval_episodes") cfg.eval_episodes = parse_int(key, value);
    else if (key == "run.eval_stochastic") cfg.eval_stochastic = parse_bool(key, value);
    else if (key == "run.seeds") cfg.seeds = parse_long_list(key, value);
    else if (key == "run.output_dir") cfg.output_dir = value;
    else if (key == "run.id") cfg.run_id = value;
    else if (key == "run.solved_threshold") cfg.solved_threshold = parse_double(key, value);
    else if (key == "run.early_stop_return") cfg.early_stop_return = parse_double(key, value);
    else if (key == "run.parallel_workers") cfg.parallel_workers = parse_int(key, value);
    else if (key == "learner.batch_size") cfg.learner.batch_size = parse_int(key, value);
    else if (key == "learner.discount") cfg.learner.discount = parse_double(key, value);
    else if (key == "learner.critic_lr") cfg.learner.critic_lr = parse_double(key, value);
    else if (key == "learner.actor_lr") cfg.learner.actor_lr = parse_double(key, value);
    else if (key == "learner.critic_target_updates_per_env_step")
      cfg.learner.critic_target_updates_per_env_step = parse_int(key, value);
    else if (key == "learner.actor_updates_per_env_step")
      cfg.learner.actor_updates_per_env_step = parse_int(key, value);
    else if (key == "learner.q_soft_update_rate")
      cfg.learner.q_soft_update_rate = parse_double(key, value);
    else if (key == "learner.actor_log_std_min")
      cfg.learner.actor_log_std_min = parse_double(key, value);
    else if (key == "learner.actor_log_std_max")
      cfg.learner.actor_log_std_max = parse_double(key, value);
    else if (key == "learner.temperature_lr")
      cfg.learner.temperature_lr = parse_double(key, value);
    else if (key == "learner.temperature_adam_beta1")
      cfg.learner.temperature_adam_beta1 = parse_double(key, value);
    else if (key == "learner.initial_temperature")
      cfg.learner.initial_temperature = parse_double(key, value);
    else if (key == "learner.hidden_dim") cfg.learner.hidden_dim = parse_int(key, value);
    else if (key == "learner.hidden_layers") cfg.learner.hidden_layers = parse_int(key, value);
    else if (key == "learner.warmup_env_steps")
      cfg.learner.warmup_env_steps = parse_int(key, value);
    else throw ConfigError("unknown config key: " + key);
  }
  cfg.validate();
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace tsym
