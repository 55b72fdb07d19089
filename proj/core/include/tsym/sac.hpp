#ifndef TSYM_SAC_HPP
#define TSYM_SAC_HPP

#include <Eigen/Dense>

#include "tsym/environment.hpp"
#include "tsym/mlp.hpp"
#include "tsym/replay_buffer.hpp"

namespace tsym {

// Learner hyperparameters. Defaults are the reference table values; the
// network width/depth and warmup are implementation knobs (the table does
// not fix them).
struct LearnerConfig {
  int batch_size = 128;
  double discount = 0.99;
  double critic_lr = 1e-3;
  double actor_lr = 1e-3;
  int critic_target_updates_per_env_step = 2;
  int actor_updates_per_env_step = 2;
  double q_soft_update_rate = 0.01;
  double actor_log_std_min = -10.0;
  double actor_log_std_max = 2.0;
  double temperature_lr = 1e-4;
  double temperature_adam_beta1 = 0.5;
  double initial_temperature = 0.1;

  int hidden_dim = 256;
  int hidden_layers = 2;
  int warmup_env_steps = 1000;

  void validate() const;
};

struct SacLosses {
  double critic_loss = 0.0;
  double actor_loss = 0.0;
  double temperature_loss = 0.0;
  double alpha = 0.0;
  double entropy_estimate = 0.0;  // -mean log pi
};

// One squashed-Gaussian policy draw over a batch of observations, together
// with everything backward needs. actions = tanh(mean + std .* noise), and
// log_probs carry the tanh change-of-variables correction
// -sum_j log(1 - tanh(u_j)^2 + eps).
struct PolicySample {
  Eigen::MatrixXd actions;    // A x B
  Eigen::RowVectorXd log_probs;  // 1 x B
  Eigen::MatrixXd mean, log_std_raw, log_std, stddev, noise;  // A x B each
  Mlp::Workspace ws;
};

// Soft actor-critic with twin critics, soft-updated targets and automatic
// entropy-temperature tuning (target entropy = -action_dim), on manual-
// backprop MLPs in double precision. One instance per training run.
class SacLearner {
 public:
  // actor_stream seeds network initialization and supplies all policy noise.
  SacLearner(int obs_dim, int action_dim, const LearnerConfig& config, RngStream actor_stream);

  // Runs the configured number of critic updates (each followed by a soft
  // target update) and actor + temperature updates for one environment step.
  // Batches are drawn from the buffer with batch_rng. Throws TrainingDiverged
  // on a non-finite loss.
  SacLosses update_step(const ReplayBuffer& buffer, const Environment& env,
                        RngStream& batch_rng);

  Action act_stochastic(const std::vector<double>& obs);
  Action act_deterministic(const std::vector<double>& obs) const;

  // Squashed-Gaussian draw; noise == nullptr takes u = mean (deterministic).
  void sample_policy(const Eigen::MatrixXd& obs, PolicySample& out, RngStream* noise) const;

  // Soft Bellman backup y = r + discount * (1 - terminal) *
  // (min(Q1', Q2')(s', a') - alpha * log pi(a'|s')), a' freshly sampled.
  Eigen::RowVectorXd critic_target(const Eigen::MatrixXd& next_obs,
                                   const Eigen::RowVectorXd& rewards,
                                   const Eigen::RowVectorXd& terminal);

  double temperature() const { return std::exp(log_alpha_); }
  void set_log_temperature(double log_alpha) { log_alpha_ = log_alpha; }
  double target_entropy() const { return target_entropy_; }
  const LearnerConfig& config() const { return config_; }
  int observation_dim() const { return obs_dim_; }
  int action_dim() const { return action_dim_; }

  Mlp& actor() { return actor_; }
  const Mlp& actor() const { return actor_; }
  Mlp& critic1() { return critic1_; }
  Mlp& critic2() { return critic2_; }
  const Mlp& target_critic1() const { return target1_; }
  const Mlp& target_critic2() const { return target2_; }
  void sync_targets();  // hard copy online -> target (used after test edits)

  // Gradient of the mean actor loss for a fixed noise draw; exposed so tests
  // can finite-difference the full reparameterized path.
  double actor_loss_and_gradient(const Eigen::MatrixXd& obs, const Eigen::MatrixXd& noise,
                                 Mlp::Gradients& grads);
  // Mean twin-critic regression loss against fixed targets y.
  double critic_loss_and_gradient(const Eigen::MatrixXd& obs, const Eigen::MatrixXd& actions,
                                  const Eigen::RowVectorXd& y, Mlp::Gradients& grads1,
                                  Mlp::Gradients& grads2);

 private:
  Eigen::RowVectorXd critic_eval(const Mlp& critic, const Eigen::MatrixXd& obs,
                                 const Eigen::MatrixXd& actions, Mlp::Workspace& ws) const;
  void critic_update(const ReplayBuffer& buffer, const Environment& env, RngStream& batch_rng,
                     SacLosses& losses);
  void actor_and_temperature_update(const ReplayBuffer& buffer, const Environment& env,
                                    RngStream& batch_rng, SacLosses& losses);
  void gather_batch(const std::vector<Transition>& batch, const Environment& env);

  int obs_dim_;
  int action_dim_;
  LearnerConfig config_;
  RngStream noise_rng_;

  Mlp actor_, critic1_, critic2_, target1_, target2_;
  AdamOptimizer actor_opt_, critic1_opt_, critic2_opt_;
  double log_alpha_;
  AdamScalar alpha_opt_;
  double target_entropy_;
  double last_mean_logp_ = 0.0;

  // batch staging, reused across updates
  Eigen::MatrixXd obs_, next_obs_, actions_;
  Eigen::RowVectorXd rewards_, terminal_;
};

}  // namespace tsym

#endif  // TSYM_SAC_HPP
