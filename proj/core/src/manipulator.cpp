#include "tsym/manipulator.hpp"

#include <cmath>

#include "tsym/integrators.hpp"

namespace tsym {

void ManipulatorParams::validate() const {
  if (n_links < 2 || n_links > 4)
    throw ContractViolation("ManipulatorParams: n_links must be in {2, 3, 4}");
  if (!(link_mass > 0.0 && link_length > 0.0 && gravity > 0.0))
    throw ContractViolation("ManipulatorParams: mass, length, gravity must be > 0");
}

ManipulatorEnv::ManipulatorEnv(ManipulatorParams params) : params_(params) {
  params_.validate();
  const int n = params_.n_links;
  const double m = params_.link_mass;
  const double L = params_.link_length;
  const double d = 0.5 * L;  // com offset along each rod

  // Lever of link k's com seen from joint i (fully extended), and the
  // configuration-independent pieces of the absolute-coordinate mass matrix:
  //   D_ij(beta) = A_ij cos(beta_i - beta_j) + delta_ij I_com_i
  auto lever = [&](int i, int k) { return (k - i) * L + d; };
  inertia_coupling_ = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = std::max(i, j); k < n; ++k) {
        const double ci = (i < k) ? L : d;
        const double cj = (j < k) ? L : d;
        inertia_coupling_(i, j) += m * ci * cj;
      }
  gravity_moment_ = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i) {
    gravity_moment_(i) = m * d;
    for (int k = i + 1; k < n; ++k) gravity_moment_(i) += m * L;
  }
  com_inertia_ = Eigen::VectorXd::Constant(n, m * L * L / 12.0);

  hold_torque_ = Eigen::VectorXd::Zero(n);
  for (int i = 0; i < n; ++i)
    for (int k = i; k < n; ++k) hold_torque_(i) += params_.gravity * m * lever(i, k);
  torque_limits_ = tier_factor(params_.tier) * hold_torque_;

  desc_.name = "manipulator";
  desc_.state_dim = 2 * n;
  desc_.action_dim = n;
  desc_.dt = kControlDt;
  desc_.episode_length = 1000;
  desc_.involution = Involution::negate_velocity(n);
  const double total = total_length();
  desc_.reward_fn = [this, total](const StateVector& s) {
    const double tip_y = tip_position(s.config)[1];
    return std::clamp(0.5 * (tip_y / total + 1.0), 0.0, 1.0);
  };
}

Eigen::VectorXd ManipulatorEnv::absolute_angles(const Eigen::VectorXd& q) const {
  Eigen::VectorXd beta(q.size());
  double acc = 0.0;
  for (int i = 0; i < q.size(); ++i) {
    acc += q(i);
    beta(i) = acc;
  }
  return beta;
}

Eigen::MatrixXd ManipulatorEnv::mass_matrix_abs(const Eigen::VectorXd& beta) const {
  const int n = params_.n_links;
  Eigen::MatrixXd D(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      D(i, j) = inertia_coupling_(i, j) * std::cos(beta(i) - beta(j));
  D.diagonal() += com_inertia_;
  return D;
}

Eigen::VectorXd ManipulatorEnv::joint_accelerations(const Eigen::VectorXd& q,
                                                    const Eigen::VectorXd& qdot,
                                                    const Eigen::VectorXd& tau) const {
  const int n = params_.n_links;
  const Eigen::VectorXd beta = absolute_angles(q);
  const Eigen::VectorXd betadot = absolute_angles(qdot);  // same prefix-sum map
  const Eigen::MatrixXd D = mass_matrix_abs(beta);

  // Centrifugal and gravity terms in absolute coordinates.
  Eigen::VectorXd h(n);
  for (int i = 0; i < n; ++i) {
    double acc = 0.0;
    for (int j = 0; j < n; ++j)
      acc += inertia_coupling_(i, j) * std::sin(beta(i) - beta(j)) * betadot(j) * betadot(j);
    acc -= params_.gravity * gravity_moment_(i) * std::sin(beta(i));
    h(i) = acc;
  }

  // Map to relative coordinates with the prefix-sum matrix S: beta = S q.
  Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j <= i; ++j) S(i, j) = 1.0;
  const Eigen::MatrixXd M = S.transpose() * D * S;
  const Eigen::VectorXd rhs = tau - S.transpose() * h;

  Eigen::LDLT<Eigen::MatrixXd> solver(M);
  if (solver.info() != Eigen::Success || !solver.isPositive())
    throw ContractViolation("manipulator: mass matrix not positive definite");
  return solver.solve(rhs);
}

StateVector ManipulatorEnv::reset(RngStream& rng) const {
  const int n = params_.n_links;
  StateVector s;
  s.config.resize(n, 0.0);
  s.velocity.resize(n, 0.0);
  s.config[0] = M_PI + rng.uniform(-0.05, 0.05);  // hanging straight down
  for (int i = 1; i < n; ++i) s.config[i] = rng.uniform(-0.05, 0.05);
  return s;
}

StepResult ManipulatorEnv::step(const StateVector& s, const Action& a, RngStream&) const {
  const int n = params_.n_links;
  if (static_cast<int>(s.config.size()) != n || static_cast<int>(s.velocity.size()) != n)
    throw ContractViolation("ManipulatorEnv::step: state dimension mismatch");
  const Action ac = clamp_action(a);
  Eigen::VectorXd tau(n);
  for (int i = 0; i < n; ++i) tau(i) = ac.torques.at(i) * torque_limits_(i);

  const double h = kControlDt / kSubsteps;
  std::vector<double> x(2 * n);
  for (int i = 0; i < n; ++i) {
    x[i] = s.config[i];
    x[n + i] = s.velocity[i];
  }
  auto deriv = [&](const std::vector<double>& v) {
    Eigen::VectorXd q(n), qd(n);
    for (int i = 0; i < n; ++i) {
      q(i) = v[i];
      qd(i) = v[n + i];
    }
    const Eigen::VectorXd qdd = joint_accelerations(q, qd, tau);
    std::vector<double> out(2 * n);
    for (int i = 0; i < n; ++i) {
      out[i] = v[n + i];
      out[n + i] = qdd(i);
    }
    return out;
  };
  for (int i = 0; i < kSubsteps; ++i) rk4_step(x, h, deriv);

  StepResult out;
  out.next_state.config.assign(x.begin(), x.begin() + n);
  out.next_state.velocity.assign(x.begin() + n, x.end());
  if (!out.next_state.finite())
    throw SimulationDiverged("manipulator: non-finite state", out.next_state.flat());
  out.reward = desc_.reward_fn(out.next_state);
  out.terminal = false;
  return out;
}

std::array<double, 2> ManipulatorEnv::tip_position(const std::vector<double>& q) const {
  double beta = 0.0, tx = 0.0, ty = 0.0;
  for (double qi : q) {
    beta += qi;
    tx += params_.link_length * std::sin(beta);
    ty += params_.link_length * std::cos(beta);
  }
  return {tx, ty};
}

std::vector<double> ManipulatorEnv::observe(const StateVector& s) const {
  const int n = params_.n_links;
  std::vector<double> obs;
  obs.reserve(3 * n + 2);
  for (int i = 0; i < n; ++i) {
    obs.push_back(std::cos(s.config[i]));
    obs.push_back(std::sin(s.config[i]));
  }
  for (int i = 0; i < n; ++i) obs.push_back(s.velocity[i]);
  const auto tip = tip_position(s.config);
  obs.push_back(tip[0] / total_length());
  obs.push_back(tip[1] / total_length());
  return obs;
}

HamiltonianSystem ManipulatorEnv::hamiltonian() const {
  HamiltonianSystem sys;
  sys.kinetic_energy = [this](const std::vector<double>& q, const std::vector<double>& v) {
    const int n = params_.n_links;
    Eigen::VectorXd qe(n), ve(n);
    for (int i = 0; i < n; ++i) {
      qe(i) = q[i];
      ve(i) = v[i];
    }
    const Eigen::VectorXd beta = absolute_angles(qe);
    const Eigen::VectorXd betadot = absolute_angles(ve);
    return 0.5 * betadot.dot(mass_matrix_abs(beta) * betadot);
  };
  sys.potential_energy = [this](const std::vector<double>& q) {
    const int n = params_.n_links;
    Eigen::VectorXd qe(n);
    for (int i = 0; i < n; ++i) qe(i) = q[i];
    const Eigen::VectorXd beta = absolute_angles(qe);
    double V = 0.0;
    for (int i = 0; i < n; ++i)
      V += params_.gravity * gravity_moment_(i) * std::cos(beta(i));
    return V;
  };
  sys.generalized_force = [this](const std::vector<double>& q, const std::vector<double>& v,
                                 const Action& a) {
    const int n = params_.n_links;
    Eigen::VectorXd qe(n), ve(n), tau(n);
    for (int i = 0; i < n; ++i) {
      qe(i) = q[i];
      ve(i) = v[i];
      tau(i) = std::clamp(a.torques.at(i), -1.0, 1.0) * torque_limits_(i);
    }
    const Eigen::VectorXd beta = absolute_angles(qe);
    Eigen::VectorXd grav(n);
    for (int i = 0; i < n; ++i)
      grav(i) = -params_.gravity * gravity_moment_(i) * std::sin(beta(i));
    Eigen::MatrixXd S = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j <= i; ++j) S(i, j) = 1.0;
    const Eigen::VectorXd out = tau - S.transpose() * grav;  // actuation + gravity, no friction
    return std::vector<double>(out.data(), out.data() + n);
  };
  return sys;
}

}  // namespace tsym
