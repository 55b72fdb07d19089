#include "tsym/cartpole.hpp"

#include <cmath>

#include "tsym/integrators.hpp"

namespace tsym {

void CartpoleParams::validate() const {
  if (!(cart_mass > 0.0 && pole_mass > 0.0 && pole_length > 0.0 && gravity > 0.0 &&
        track_halfwidth > 0.0 && force_limit > 0.0))
    throw ContractViolation("CartpoleParams: masses, lengths, limits must be > 0");
  if (friction_cart < 0.0 || friction_pole < 0.0 || friction_multiplier < 0.0)
    throw ContractViolation("CartpoleParams: friction terms must be >= 0");
}

CartpoleEnv::CartpoleEnv(CartpoleParams params) : params_(params) {
  params_.validate();
  desc_.name = "cartpole";
  desc_.state_dim = 4;
  desc_.action_dim = 1;
  desc_.dt = kControlDt;
  desc_.episode_length = 1000;
  desc_.involution = Involution::negate_velocity(2);
  const double hw = params_.track_halfwidth;
  desc_.reward_fn = [hw](const StateVector& s) {
    const double upright = 0.5 * (1.0 + std::cos(s.config[1]));
    const double xr = s.config[0] / hw;
    const double centered = std::max(0.0, 1.0 - xr * xr);
    return upright * centered;
  };
}

StateVector CartpoleEnv::reset(RngStream& rng) const {
  StateVector s;
  s.config = {rng.uniform(-0.05, 0.05), M_PI + rng.uniform(-0.1, 0.1)};
  s.velocity = {rng.uniform(-0.05, 0.05), rng.uniform(-0.05, 0.05)};
  return s;
}

std::array<double, 4> CartpoleEnv::dynamics(const std::array<double, 4>& s, double force) const {
  const double theta = s[1];
  const double xdot = s[2];
  const double thetadot = s[3];
  const double m = params_.pole_mass;
  const double total = params_.cart_mass + m;
  const double l = 0.5 * params_.pole_length;                     // hinge-to-com
  const double hinge_inertia = m * params_.pole_length * params_.pole_length / 3.0;
  const double cx = params_.friction_cart * params_.friction_multiplier;
  const double ct = params_.friction_pole * params_.friction_multiplier;
  const double sin_t = std::sin(theta);
  const double cos_t = std::cos(theta);

  // total*xdd + m*l*cos*tdd = rhs1 ; m*l*cos*xdd + Ih*tdd = rhs2
  const double rhs1 = force - cx * xdot + m * l * thetadot * thetadot * sin_t;
  const double rhs2 = m * params_.gravity * l * sin_t - ct * thetadot;
  const double coupling = m * l * cos_t;
  const double det = total * hinge_inertia - coupling * coupling;
  const double xdd = (rhs1 * hinge_inertia - coupling * rhs2) / det;
  const double tdd = (total * rhs2 - coupling * rhs1) / det;
  return {xdot, thetadot, xdd, tdd};
}

StepResult CartpoleEnv::step(const StateVector& s, const Action& a, RngStream&) const {
  if (s.config.size() != 2 || s.velocity.size() != 2)
    throw ContractViolation("CartpoleEnv::step: state must be 2+2 dimensional");
  const Action ac = clamp_action(a);
  const double force = ac.torques.at(0) * params_.force_limit;
  const double h = kControlDt / kSubsteps;

  std::vector<double> x = {s.config[0], s.config[1], s.velocity[0], s.velocity[1]};
  auto deriv = [&](const std::vector<double>& v) {
    auto d = dynamics({v[0], v[1], v[2], v[3]}, force);
    return std::vector<double>(d.begin(), d.end());
  };
  for (int i = 0; i < kSubsteps; ++i) rk4_step(x, h, deriv);

  StepResult out;
  out.next_state = StateVector{{x[0], x[1]}, {x[2], x[3]}};
  if (!out.next_state.finite())
    throw SimulationDiverged("cartpole: non-finite state", out.next_state.flat());
  out.reward = desc_.reward_fn(out.next_state);
  out.terminal = false;
  return out;
}

std::vector<double> CartpoleEnv::observe(const StateVector& s) const {
  return {s.config[0], std::cos(s.config[1]), std::sin(s.config[1]), s.velocity[0],
          s.velocity[1]};
}

HamiltonianSystem CartpoleEnv::hamiltonian() const {
  const CartpoleParams p = params_;
  HamiltonianSystem sys;
  sys.kinetic_energy = [p](const std::vector<double>& q, const std::vector<double>& v) {
    const double l = 0.5 * p.pole_length;
    const double hinge_inertia = p.pole_mass * p.pole_length * p.pole_length / 3.0;
    return 0.5 * (p.cart_mass + p.pole_mass) * v[0] * v[0] +
           p.pole_mass * l * v[0] * v[1] * std::cos(q[1]) + 0.5 * hinge_inertia * v[1] * v[1];
  };
  sys.potential_energy = [p](const std::vector<double>& q) {
    return p.pole_mass * p.gravity * 0.5 * p.pole_length * std::cos(q[1]);
  };
  sys.generalized_force = [this](const std::vector<double>& q, const std::vector<double>& v,
                                 const Action& a) {
    const double force = std::clamp(a.torques.at(0), -1.0, 1.0) * params_.force_limit;
    const double cx = params_.friction_cart * params_.friction_multiplier;
    const double ct = params_.friction_pole * params_.friction_multiplier;
    const double l = 0.5 * params_.pole_length;
    return std::vector<double>{
        force - cx * v[0],
        params_.pole_mass * params_.gravity * l * std::sin(q[1]) - ct * v[1]};
  };
  return sys;
}

}  // namespace tsym
