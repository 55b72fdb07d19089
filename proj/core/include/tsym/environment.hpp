#ifndef TSYM_ENVIRONMENT_HPP
#define TSYM_ENVIRONMENT_HPP

#include <memory>
#include <vector>

#include "tsym/rng.hpp"
#include "tsym/types.hpp"

namespace tsym {

struct StepResult {
  StateVector next_state;
  double reward = 0.0;
  bool terminal = false;
};

// Environment contract shared by all continuous tasks. Instances hold
// parameters only; step/reset are functions of their arguments, so one
// instance per training run is the intended usage.
//
// The three continuous tasks are deterministic given (s, a); the RngStream
// argument to step exists for kernel generality and is unused by them.
// reset draws from the initial-state distribution.
class Environment {
 public:
  virtual ~Environment() = default;

  virtual const EnvDescriptor& descriptor() const = 0;

  virtual StateVector reset(RngStream& rng) const = 0;

  // Integrates one control interval of descriptor().dt seconds.
  // Actions outside [-1, 1] are clamped. Throws SimulationDiverged if the
  // integrator produces a non-finite state.
  virtual StepResult step(const StateVector& s, const Action& a, RngStream& rng) const = 0;

  double reward(const StateVector& s) const { return descriptor().reward_fn(s); }

  // Learner-facing feature vector (e.g. angles presented as cos/sin pairs).
  // The involution and the replay buffer always operate on raw StateVectors;
  // featurization happens only at the learner boundary.
  virtual std::vector<double> observe(const StateVector& s) const = 0;
  virtual int observation_dim() const = 0;
};

using EnvPtr = std::unique_ptr<Environment>;

}  // namespace tsym

#endif  // TSYM_ENVIRONMENT_HPP
