#ifndef TSYM_PENDULUM_HPP
#define TSYM_PENDULUM_HPP

#include "tsym/environment.hpp"
#include "tsym/hamiltonian.hpp"

namespace tsym {

// Torque-limited swing-up pendulum. The angle is measured from upright, so
// the hanging rest state is theta = pi and reward (1 + cos theta)/2 peaks at
// the inverted position. Point mass on a massless rod.
struct PendulumParams {
  double mass = 1.0;            // kg
  double length = 1.0;          // m
  double gravity = 9.81;        // m/s^2
  double damping = 0.0;         // N*m*s, viscous; 0 keeps the task conservative
  double torque_limit = 2.0;    // N*m; well below m*g*l so swing-up needs pumping

  void validate() const;
};

class PendulumEnv : public Environment {
 public:
  explicit PendulumEnv(PendulumParams params = {});

  const EnvDescriptor& descriptor() const override { return desc_; }
  const PendulumParams& params() const { return params_; }

  StateVector reset(RngStream& rng) const override;
  StepResult step(const StateVector& s, const Action& a, RngStream& rng) const override;

  std::vector<double> observe(const StateVector& s) const override;
  int observation_dim() const override { return 3; }

  HamiltonianSystem hamiltonian() const;

  // Angular acceleration for a given torque command (N*m, already scaled).
  double angular_acceleration(double theta, double theta_dot, double torque) const;

  static constexpr double kControlDt = 0.02;
  static constexpr int kSubsteps = 4;  // leapfrog at dt = 0.005

 private:
  PendulumParams params_;
  EnvDescriptor desc_;
};

}  // namespace tsym

#endif  // TSYM_PENDULUM_HPP
