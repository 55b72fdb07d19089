#ifndef TSYM_CARTPOLE_HPP
#define TSYM_CARTPOLE_HPP

#include <array>

#include "tsym/environment.hpp"
#include "tsym/hamiltonian.hpp"

namespace tsym {

// Cart-pole swing-up. Pole is a uniform rod hinged on the cart, angle
// measured from upright; the track has no walls, the reward weight
// max(0, 1 - (x/halfwidth)^2) is what keeps the cart near the center.
// Friction is viscous damping on both joints, scaled by a dimensionless
// run-time multiplier (0 = frictionless, 1 = nominal, 2000 = the
// high-friction regime).
struct CartpoleParams {
  double cart_mass = 1.0;        // kg
  double pole_mass = 0.1;        // kg
  double pole_length = 1.0;      // m, full rod length
  double gravity = 9.81;         // m/s^2
  double track_halfwidth = 1.0;  // m, reward falloff scale
  double friction_cart = 5e-4;   // N*s/m, nominal
  double friction_pole = 2e-4;   // N*m*s, nominal
  double friction_multiplier = 1.0;
  double force_limit = 10.0;     // N

  void validate() const;
};

class CartpoleEnv : public Environment {
 public:
  explicit CartpoleEnv(CartpoleParams params = {});

  const EnvDescriptor& descriptor() const override { return desc_; }
  const CartpoleParams& params() const { return params_; }

  StateVector reset(RngStream& rng) const override;
  StepResult step(const StateVector& s, const Action& a, RngStream& rng) const override;

  std::vector<double> observe(const StateVector& s) const override;
  int observation_dim() const override { return 5; }

  HamiltonianSystem hamiltonian() const;

  // State layout (x, theta, xdot, thetadot) -> derivative, with the force
  // command in newtons (already scaled and clamped).
  std::array<double, 4> dynamics(const std::array<double, 4>& s, double force) const;

  static constexpr double kControlDt = 0.02;
  static constexpr int kSubsteps = 10;  // RK4 at dt = 0.002

 private:
  CartpoleParams params_;
  EnvDescriptor desc_;
};

}  // namespace tsym

#endif  // TSYM_CARTPOLE_HPP
