#include "tsym/pendulum.hpp"

#include <cmath>

#include "tsym/integrators.hpp"

namespace tsym {

void PendulumParams::validate() const {
  if (!(mass > 0.0 && length > 0.0 && gravity > 0.0 && torque_limit > 0.0))
    throw ContractViolation("PendulumParams: mass, length, gravity, torque_limit must be > 0");
  if (damping < 0.0) throw ContractViolation("PendulumParams: damping must be >= 0");
}

PendulumEnv::PendulumEnv(PendulumParams params) : params_(params) {
  params_.validate();
  desc_.name = "pendulum";
  desc_.state_dim = 2;
  desc_.action_dim = 1;
  desc_.dt = kControlDt;
  desc_.episode_length = 1000;
  desc_.involution = Involution::negate_velocity(1);
  desc_.reward_fn = [](const StateVector& s) {
    return 0.5 * (1.0 + std::cos(s.config[0]));
  };
}

StateVector PendulumEnv::reset(RngStream& rng) const {
  StateVector s;
  s.config = {M_PI + rng.uniform(-0.1, 0.1)};
  s.velocity = {rng.uniform(-0.05, 0.05)};
  return s;
}

double PendulumEnv::angular_acceleration(double theta, double theta_dot, double torque) const {
  const double inertia = params_.mass * params_.length * params_.length;
  const double gravity_torque = params_.mass * params_.gravity * params_.length * std::sin(theta);
  return (gravity_torque + torque - params_.damping * theta_dot) / inertia;
}

StepResult PendulumEnv::step(const StateVector& s, const Action& a, RngStream&) const {
  if (s.config.size() != 1 || s.velocity.size() != 1)
    throw ContractViolation("PendulumEnv::step: state must be 1+1 dimensional");
  const Action ac = clamp_action(a);
  const double torque = ac.torques.at(0) * params_.torque_limit;
  const double h = kControlDt / kSubsteps;

  std::vector<double> q = {s.config[0]};
  std::vector<double> v = {s.velocity[0]};
  if (params_.damping == 0.0) {
    // Separable under constant torque; leapfrog keeps the step exactly
    // time reversible.
    auto force = [&](const std::vector<double>& qq) {
      return std::vector<double>{angular_acceleration(qq[0], 0.0, torque)};
    };
    for (int i = 0; i < kSubsteps; ++i) leapfrog_step(q, v, h, force);
  } else {
    auto deriv = [&](const std::vector<double>& x) {
      return std::vector<double>{x[1], angular_acceleration(x[0], x[1], torque)};
    };
    std::vector<double> x = {q[0], v[0]};
    for (int i = 0; i < kSubsteps; ++i) rk4_step(x, h, deriv);
    q[0] = x[0];
    v[0] = x[1];
  }

  StepResult out;
  out.next_state = StateVector{{q[0]}, {v[0]}};
  if (!out.next_state.finite())
    throw SimulationDiverged("pendulum: non-finite state", out.next_state.flat());
  out.reward = desc_.reward_fn(out.next_state);
  out.terminal = false;
  return out;
}

std::vector<double> PendulumEnv::observe(const StateVector& s) const {
  return {std::cos(s.config[0]), std::sin(s.config[0]), s.velocity[0]};
}

HamiltonianSystem PendulumEnv::hamiltonian() const {
  const PendulumParams p = params_;
  HamiltonianSystem sys;
  sys.kinetic_energy = [p](const std::vector<double>&, const std::vector<double>& v) {
    return 0.5 * p.mass * p.length * p.length * v[0] * v[0];
  };
  sys.potential_energy = [p](const std::vector<double>& q) {
    return p.mass * p.gravity * p.length * std::cos(q[0]);
  };
  sys.generalized_force = [this](const std::vector<double>& q, const std::vector<double>& v,
                                 const Action& a) {
    const double torque = std::clamp(a.torques.at(0), -1.0, 1.0) * params_.torque_limit;
    const double inertia = params_.mass * params_.length * params_.length;
    return std::vector<double>{angular_acceleration(q[0], v[0], torque) * inertia};
  };
  return sys;
}

}  // namespace tsym
