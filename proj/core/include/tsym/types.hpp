#ifndef TSYM_TYPES_HPP
#define TSYM_TYPES_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tsym {

// Thrown when a caller breaks a documented precondition (shape mismatch,
// invalid involution mask, ...). Programming error, not a runtime condition.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Thrown when dynamics produce a non-finite state; carries the offending state.
class SimulationDiverged : public std::runtime_error {
 public:
  SimulationDiverged(const std::string& what, std::vector<double> offending)
      : std::runtime_error(what), offending_state(std::move(offending)) {}
  std::vector<double> offending_state;
};

class TrainingDiverged : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Replay buffer has fewer transitions than the requested batch.
class BufferNotReady : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Chain has no unique stationary distribution (reducible support).
class NoUniqueStationary : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Environment state split into generalized positions and velocities.
// The velocity block is exactly the set of coordinates negated by the
// conjugate involution.
struct StateVector {
  std::vector<double> config;
  std::vector<double> velocity;

  std::size_t dim() const { return config.size() + velocity.size(); }

  bool finite() const {
    for (double v : config)
      if (!std::isfinite(v)) return false;
    for (double v : velocity)
      if (!std::isfinite(v)) return false;
    return true;
  }

  std::vector<double> flat() const {
    std::vector<double> out;
    out.reserve(dim());
    out.insert(out.end(), config.begin(), config.end());
    out.insert(out.end(), velocity.begin(), velocity.end());
    return out;
  }

  bool operator==(const StateVector&) const = default;
};

// Normalized actuator command, one entry per actuated joint, each in [-1, 1].
struct Action {
  std::vector<double> torques;

  bool operator==(const Action&) const = default;
};

inline Action clamp_action(Action a) {
  for (double& t : a.torques) t = std::clamp(t, -1.0, 1.0);
  return a;
}

// One environment step. Reward is a function of the arrival state:
// reward == reward_fn(next_state).
struct Transition {
  StateVector state;
  Action action;
  double reward = 0.0;
  StateVector next_state;
  bool terminal = false;

  bool operator==(const Transition&) const = default;
};

// Conjugate-state involution: keeps the configuration block, multiplies the
// velocity block elementwise by a sign mask. Self-inverse by construction.
struct Involution {
  std::vector<double> velocity_sign_mask;

  static Involution negate_velocity(std::size_t velocity_dim) {
    return Involution{std::vector<double>(velocity_dim, -1.0)};
  }

  void validate() const {
    for (double m : velocity_sign_mask)
      if (m != 1.0 && m != -1.0)
        throw ContractViolation("involution mask entries must be +1 or -1");
  }

  StateVector apply(const StateVector& s) const {
    if (s.velocity.size() != velocity_sign_mask.size())
      throw ContractViolation("involution mask length != velocity length");
    StateVector out = s;
    for (std::size_t i = 0; i < out.velocity.size(); ++i)
      out.velocity[i] *= velocity_sign_mask[i];
    return out;
  }
};

// Static description of an environment: dimensions, timing, reward function
// and the conjugate involution. reward_fn maps any state into [0, 1], so an
// episode_length-step episode has nominal maximum return episode_length.
struct EnvDescriptor {
  std::string name;
  int state_dim = 0;
  int action_dim = 0;
  double dt = 0.0;
  int episode_length = 0;
  std::function<double(const StateVector&)> reward_fn;
  Involution involution;
};

inline double max_abs_diff(const StateVector& a, const StateVector& b) {
  if (a.config.size() != b.config.size() || a.velocity.size() != b.velocity.size())
    throw ContractViolation("max_abs_diff: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.config.size(); ++i)
    m = std::max(m, std::abs(a.config[i] - b.config[i]));
  for (std::size_t i = 0; i < a.velocity.size(); ++i)
    m = std::max(m, std::abs(a.velocity[i] - b.velocity[i]));
  return m;
}

}  // namespace tsym

#endif  // TSYM_TYPES_HPP
