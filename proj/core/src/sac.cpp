#include "tsym/sac.hpp"

#include <cmath>

namespace tsym {
namespace {

constexpr double kTanhEps = 1e-6;
constexpr double kHalfLog2Pi = 0.91893853320467274178;

}  // namespace

void LearnerConfig::validate() const {
  if (batch_size < 1) throw ContractViolation("LearnerConfig: batch_size must be >= 1");
  if (!(discount > 0.0 && discount < 1.0))
    throw ContractViolation("LearnerConfig: discount must be in (0, 1)");
  if (!(critic_lr > 0.0 && actor_lr > 0.0 && temperature_lr > 0.0))
    throw ContractViolation("LearnerConfig: learning rates must be > 0");
  if (critic_target_updates_per_env_step < 0 || actor_updates_per_env_step < 0)
    throw ContractViolation("LearnerConfig: update counts must be >= 0");
  if (!(q_soft_update_rate > 0.0 && q_soft_update_rate <= 1.0))
    throw ContractViolation("LearnerConfig: q_soft_update_rate must be in (0, 1]");
  if (!(actor_log_std_min < actor_log_std_max))
    throw ContractViolation("LearnerConfig: log-std bounds out of order");
  if (!(temperature_adam_beta1 >= 0.0 && temperature_adam_beta1 < 1.0))
    throw ContractViolation("LearnerConfig: temperature beta1 must be in [0, 1)");
  if (!(initial_temperature > 0.0))
    throw ContractViolation("LearnerConfig: initial_temperature must be > 0");
  if (hidden_dim < 1 || hidden_layers < 1)
    throw ContractViolation("LearnerConfig: hidden sizes must be >= 1");
  if (warmup_env_steps < 0)
    throw ContractViolation("LearnerConfig: warmup_env_steps must be >= 0");
}

SacLearner::SacLearner(int obs_dim, int action_dim, const LearnerConfig& config,
                       RngStream actor_stream)
    : obs_dim_(obs_dim),
      action_dim_(action_dim),
      config_(config),
      noise_rng_(actor_stream),
      actor_opt_(config.actor_lr),
      critic1_opt_(config.critic_lr),
      critic2_opt_(config.critic_lr),
      alpha_opt_(config.temperature_lr, config.temperature_adam_beta1),
      target_entropy_(-static_cast<double>(action_dim)) {
  config_.validate();
  if (obs_dim < 1 || action_dim < 1)
    throw ContractViolation("SacLearner: dimensions must be positive");

  std::vector<int> actor_sizes = {obs_dim};
  std::vector<int> critic_sizes = {obs_dim + action_dim};
  for (int l = 0; l < config_.hidden_layers; ++l) {
    actor_sizes.push_back(config_.hidden_dim);
    critic_sizes.push_back(config_.hidden_dim);
  }
  actor_sizes.push_back(2 * action_dim);  // per-action mean and log-std
  critic_sizes.push_back(1);

  actor_ = Mlp(actor_sizes);
  actor_.init_uniform(noise_rng_);
  critic1_ = Mlp(critic_sizes);
  critic1_.init_uniform(noise_rng_);
  critic2_ = Mlp(critic_sizes);
  critic2_.init_uniform(noise_rng_);
  target1_ = critic1_;
  target2_ = critic2_;
  log_alpha_ = std::log(config_.initial_temperature);
}

void SacLearner::sync_targets() {
  target1_ = critic1_;
  target2_ = critic2_;
}

namespace {

// Pushes loss gradients through the squashed-Gaussian sampling path for a
// fixed noise draw: action_grad is dL/d(action), logp_grad dL/d(log_prob)
// per sample. Produces the actor-network output gradient and backprops it.
void squash_backward(const Mlp& actor, double log_std_min, double log_std_max,
                     const PolicySample& ps, const Eigen::MatrixXd& action_grad,
                     const Eigen::RowVectorXd& logp_grad, Mlp::Gradients& grads) {
  const Eigen::Index A = ps.actions.rows();
  const Eigen::Index B = ps.actions.cols();
  const Eigen::ArrayXXd t = ps.actions.array();
  const Eigen::ArrayXXd one_minus_t2 = 1.0 - t.square();
  // d(log pi)/du from the tanh correction term -log(1 - tanh(u)^2 + eps)
  const Eigen::ArrayXXd dlogp_du = 2.0 * t * one_minus_t2 / (one_minus_t2 + kTanhEps);
  const Eigen::ArrayXXd logp_b = logp_grad.replicate(A, 1).array();

  const Eigen::ArrayXXd du = action_grad.array() * one_minus_t2 + logp_b * dlogp_du;
  Eigen::MatrixXd head_grad(2 * A, B);
  head_grad.topRows(A) = du.matrix();
  // u = mean + exp(log_std) * noise, plus the direct -log_std density term.
  Eigen::ArrayXXd dlog_std = du * ps.noise.array() * ps.stddev.array() - logp_b;
  const Eigen::ArrayXXd live = ((ps.log_std_raw.array() > log_std_min).cast<double>() *
                                (ps.log_std_raw.array() < log_std_max).cast<double>());
  head_grad.bottomRows(A) = (dlog_std * live).matrix();
  actor.backward(ps.ws, head_grad, grads);
}

}  // namespace

void SacLearner::sample_policy(const Eigen::MatrixXd& obs, PolicySample& out,
                               RngStream* noise) const {
  const Eigen::MatrixXd& head = actor_.forward(obs, out.ws);
  const Eigen::Index B = obs.cols();
  out.mean = head.topRows(action_dim_);
  out.log_std_raw = head.bottomRows(action_dim_);
  out.log_std = out.log_std_raw.cwiseMax(config_.actor_log_std_min)
                    .cwiseMin(config_.actor_log_std_max);
  out.stddev = out.log_std.array().exp();
  out.noise.resize(action_dim_, B);
  if (noise != nullptr) {
    for (Eigen::Index j = 0; j < B; ++j)
      for (Eigen::Index i = 0; i < action_dim_; ++i) out.noise(i, j) = noise->normal();
  } else {
    out.noise.setZero();
  }
  const Eigen::MatrixXd u = out.mean + out.stddev.cwiseProduct(out.noise);
  out.actions = u.array().tanh();

  const Eigen::ArrayXXd per_dim = -0.5 * out.noise.array().square() - out.log_std.array() -
                                  kHalfLog2Pi -
                                  (1.0 - out.actions.array().square() + kTanhEps).log();
  out.log_probs = per_dim.matrix().colwise().sum();
}

Eigen::RowVectorXd SacLearner::critic_eval(const Mlp& critic, const Eigen::MatrixXd& obs,
                                           const Eigen::MatrixXd& actions,
                                           Mlp::Workspace& ws) const {
  Eigen::MatrixXd input(obs_dim_ + action_dim_, obs.cols());
  input.topRows(obs_dim_) = obs;
  input.bottomRows(action_dim_) = actions;
  return critic.forward(input, ws).row(0);
}

Eigen::RowVectorXd SacLearner::critic_target(const Eigen::MatrixXd& next_obs,
                                             const Eigen::RowVectorXd& rewards,
                                             const Eigen::RowVectorXd& terminal) {
  PolicySample ps;
  sample_policy(next_obs, ps, &noise_rng_);
  Mlp::Workspace w1, w2;
  const Eigen::RowVectorXd q1 = critic_eval(target1_, next_obs, ps.actions, w1);
  const Eigen::RowVectorXd q2 = critic_eval(target2_, next_obs, ps.actions, w2);
  const Eigen::RowVectorXd soft =
      q1.cwiseMin(q2) - temperature() * ps.log_probs;
  const Eigen::RowVectorXd cont = Eigen::RowVectorXd::Ones(terminal.size()) - terminal;
  return rewards + config_.discount * cont.cwiseProduct(soft);
}

double SacLearner::critic_loss_and_gradient(const Eigen::MatrixXd& obs,
                                            const Eigen::MatrixXd& actions,
                                            const Eigen::RowVectorXd& y,
                                            Mlp::Gradients& grads1, Mlp::Gradients& grads2) {
  const double B = static_cast<double>(obs.cols());
  Mlp::Workspace w1, w2;
  const Eigen::RowVectorXd q1 = critic_eval(critic1_, obs, actions, w1);
  const Eigen::RowVectorXd q2 = critic_eval(critic2_, obs, actions, w2);
  const Eigen::RowVectorXd e1 = q1 - y;
  const Eigen::RowVectorXd e2 = q2 - y;
  const double loss = (e1.squaredNorm() + e2.squaredNorm()) / B;
  grads1.set_zero();
  grads2.set_zero();
  critic1_.backward(w1, (2.0 / B) * e1, grads1);
  critic2_.backward(w2, (2.0 / B) * e2, grads2);
  return loss;
}

double SacLearner::actor_loss_and_gradient(const Eigen::MatrixXd& obs,
                                           const Eigen::MatrixXd& noise,
                                           Mlp::Gradients& grads) {
  PolicySample ps;
  sample_policy(obs, ps, nullptr);
  ps.noise = noise;
  const Eigen::MatrixXd u = ps.mean + ps.stddev.cwiseProduct(ps.noise);
  ps.actions = u.array().tanh();
  const Eigen::ArrayXXd per_dim = -0.5 * ps.noise.array().square() - ps.log_std.array() -
                                  kHalfLog2Pi -
                                  (1.0 - ps.actions.array().square() + kTanhEps).log();
  ps.log_probs = per_dim.matrix().colwise().sum();

  const Eigen::Index B = obs.cols();
  Mlp::Workspace w1, w2;
  const Eigen::RowVectorXd q1 = critic_eval(critic1_, obs, ps.actions, w1);
  const Eigen::RowVectorXd q2 = critic_eval(critic2_, obs, ps.actions, w2);
  const double alpha = temperature();
  double loss = 0.0;

  // Route -dQ/da through whichever critic attains the per-sample min.
  Eigen::MatrixXd dy1 = Eigen::MatrixXd::Zero(1, B);
  Eigen::MatrixXd dy2 = Eigen::MatrixXd::Zero(1, B);
  const double inv_b = 1.0 / static_cast<double>(B);
  for (Eigen::Index b = 0; b < B; ++b) {
    loss += alpha * ps.log_probs(b) - std::min(q1(b), q2(b));
    if (q1(b) <= q2(b))
      dy1(0, b) = -inv_b;
    else
      dy2(0, b) = -inv_b;
  }
  loss *= inv_b;

  Eigen::MatrixXd dx1, dx2;
  critic1_.backward_input(w1, dy1, dx1);
  critic2_.backward_input(w2, dy2, dx2);
  const Eigen::MatrixXd action_grad =
      dx1.bottomRows(action_dim_) + dx2.bottomRows(action_dim_);
  const Eigen::RowVectorXd logp_grad = Eigen::RowVectorXd::Constant(B, alpha * inv_b);

  grads.set_zero();
  squash_backward(actor_, config_.actor_log_std_min, config_.actor_log_std_max, ps,
                  action_grad, logp_grad, grads);
  last_mean_logp_ = ps.log_probs.mean();
  return loss;
}

void SacLearner::gather_batch(const std::vector<Transition>& batch, const Environment& env) {
  const Eigen::Index B = static_cast<Eigen::Index>(batch.size());
  obs_.resize(obs_dim_, B);
  next_obs_.resize(obs_dim_, B);
  actions_.resize(action_dim_, B);
  rewards_.resize(B);
  terminal_.resize(B);
  for (Eigen::Index b = 0; b < B; ++b) {
    const Transition& t = batch[b];
    const std::vector<double> o = env.observe(t.state);
    const std::vector<double> no = env.observe(t.next_state);
    if (static_cast<int>(o.size()) != obs_dim_)
      throw ContractViolation("SacLearner: observation dimension mismatch");
    for (int i = 0; i < obs_dim_; ++i) {
      obs_(i, b) = o[i];
      next_obs_(i, b) = no[i];
    }
    for (int j = 0; j < action_dim_; ++j)
      actions_(j, b) = std::clamp(t.action.torques.at(j), -1.0, 1.0);
    rewards_(b) = t.reward;
    terminal_(b) = t.terminal ? 1.0 : 0.0;
  }
}

void SacLearner::critic_update(const ReplayBuffer& buffer, const Environment& env,
                               RngStream& batch_rng, SacLosses& losses) {
  gather_batch(buffer.sample(config_.batch_size, batch_rng), env);
  const Eigen::RowVectorXd y = critic_target(next_obs_, rewards_, terminal_);
  Mlp::Gradients g1 = critic1_.make_gradients();
  Mlp::Gradients g2 = critic2_.make_gradients();
  const double loss = critic_loss_and_gradient(obs_, actions_, y, g1, g2);
  critic1_opt_.step(critic1_, g1);
  critic2_opt_.step(critic2_, g2);
  soft_update(target1_, critic1_, config_.q_soft_update_rate);
  soft_update(target2_, critic2_, config_.q_soft_update_rate);
  losses.critic_loss += loss;
}

void SacLearner::actor_and_temperature_update(const ReplayBuffer& buffer,
                                              const Environment& env, RngStream& batch_rng,
                                              SacLosses& losses) {
  gather_batch(buffer.sample(config_.batch_size, batch_rng), env);
  Eigen::MatrixXd noise(action_dim_, obs_.cols());
  for (Eigen::Index j = 0; j < noise.cols(); ++j)
    for (Eigen::Index i = 0; i < noise.rows(); ++i) noise(i, j) = noise_rng_.normal();

  Mlp::Gradients grads = actor_.make_gradients();
  const double actor_loss = actor_loss_and_gradient(obs_, noise, grads);
  actor_opt_.step(actor_, grads);
  losses.actor_loss += actor_loss;

  // Temperature in log space; gradient of -alpha (log pi + target entropy).
  const double alpha = temperature();
  const double err = last_mean_logp_ + target_entropy_;
  const double temperature_loss = -alpha * err;
  alpha_opt_.step(log_alpha_, -alpha * err);
  losses.temperature_loss += temperature_loss;
  losses.entropy_estimate = -last_mean_logp_;
}

SacLosses SacLearner::update_step(const ReplayBuffer& buffer, const Environment& env,
                                  RngStream& batch_rng) {
  SacLosses out;
  for (int k = 0; k < config_.critic_target_updates_per_env_step; ++k)
    critic_update(buffer, env, batch_rng, out);
  for (int k = 0; k < config_.actor_updates_per_env_step; ++k)
    actor_and_temperature_update(buffer, env, batch_rng, out);
  if (config_.critic_target_updates_per_env_step > 0)
    out.critic_loss /= config_.critic_target_updates_per_env_step;
  if (config_.actor_updates_per_env_step > 0) {
    out.actor_loss /= config_.actor_updates_per_env_step;
    out.temperature_loss /= config_.actor_updates_per_env_step;
  }
  out.alpha = temperature();
  if (!std::isfinite(out.critic_loss) || !std::isfinite(out.actor_loss) ||
      !std::isfinite(out.temperature_loss) || !std::isfinite(out.alpha))
    throw TrainingDiverged("non-finite loss in update step");
  return out;
}

Action SacLearner::act_stochastic(const std::vector<double>& obs) {
  if (static_cast<int>(obs.size()) != obs_dim_)
    throw ContractViolation("act_stochastic: observation dimension mismatch");
  Eigen::MatrixXd o = Eigen::Map<const Eigen::VectorXd>(obs.data(), obs.size());
  PolicySample ps;
  sample_policy(o, ps, &noise_rng_);
  Action a;
  a.torques.assign(ps.actions.data(), ps.actions.data() + action_dim_);
  return a;
}

Action SacLearner::act_deterministic(const std::vector<double>& obs) const {
  if (static_cast<int>(obs.size()) != obs_dim_)
    throw ContractViolation("act_deterministic: observation dimension mismatch");
  Eigen::MatrixXd o = Eigen::Map<const Eigen::VectorXd>(obs.data(), obs.size());
  PolicySample ps;
  sample_policy(o, ps, nullptr);
  Action a;
  a.torques.assign(ps.actions.data(), ps.actions.data() + action_dim_);
  return a;
}

}  // namespace tsym
