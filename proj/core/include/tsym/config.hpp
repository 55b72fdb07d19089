#ifndef TSYM_CONFIG_HPP
#define TSYM_CONFIG_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tsym/sac.hpp"

namespace tsym {

// Experiment configuration. File format: flat `section.key = value` lines,
// `#` comments, blank lines ignored (grammar documented in the README).
struct RunConfig {
  std::string env_name;
  std::map<std::string, double> env_overrides;
  bool tsda_enabled = false;
  long total_env_steps = 0;
  int eval_interval = 4000;
  int eval_episodes = 10;
  bool eval_stochastic = false;
  std::vector<long> seeds = {0};
  LearnerConfig learner;
  std::string output_dir = ".";
  std::string run_id;  // defaults to "<env>-tsda-{on,off}"
  double solved_threshold = 0.0;                 // 0 = per-environment default
  std::optional<double> early_stop_return;      // stop a run once eval mean reaches this
  int parallel_workers = 0;                      // 0 = hardware concurrency

  void validate() const;
  std::string effective_run_id() const;
  double effective_solved_threshold() const;
};

RunConfig parse_config(const std::string& text);
RunConfig load_config_file(const std::string& path);

}  // namespace tsym

#endif  // TSYM_CONFIG_HPP
