#ifndef TSYM_MANIPULATOR_HPP
#define TSYM_MANIPULATOR_HPP

#include <Eigen/Dense>

#include "tsym/environment.hpp"
#include "tsym/hamiltonian.hpp"

namespace tsym {

// Per-joint torque-limit tiers. Limits derive from the static torque needed
// to hold the fully extended horizontal arm at each joint: uM = 0.4x (cannot
// lift directly, must pump energy), iM = 1x, oM = 2x (direct lift possible).
enum class TorqueTier { uM, iM, oM };

inline double tier_factor(TorqueTier t) {
  switch (t) {
    case TorqueTier::uM: return 0.4;
    case TorqueTier::iM: return 1.0;
    case TorqueTier::oM: return 2.0;
  }
  throw ContractViolation("tier_factor: invalid tier");
}

// Fully actuated frictionless planar n-link manipulator built from uniform
// rods, joints measured as relative angles with zero = aligned with the
// parent link (first joint zero = pointing up). Swing-up task: reward is the
// normalized tip height.
struct ManipulatorParams {
  int n_links = 2;            // in {2, 3, 4}
  double link_mass = 1.0;     // kg, each
  double link_length = 0.5;   // m, each
  double gravity = 9.81;      // m/s^2
  TorqueTier tier = TorqueTier::iM;

  void validate() const;
};

class ManipulatorEnv : public Environment {
 public:
  explicit ManipulatorEnv(ManipulatorParams params = {});

  const EnvDescriptor& descriptor() const override { return desc_; }
  const ManipulatorParams& params() const { return params_; }

  StateVector reset(RngStream& rng) const override;
  StepResult step(const StateVector& s, const Action& a, RngStream& rng) const override;

  std::vector<double> observe(const StateVector& s) const override;
  int observation_dim() const override { return 3 * params_.n_links + 2; }

  HamiltonianSystem hamiltonian() const;

  // Joint accelerations for torques already clamped to the tier limits (N*m).
  Eigen::VectorXd joint_accelerations(const Eigen::VectorXd& q, const Eigen::VectorXd& qdot,
                                      const Eigen::VectorXd& tau) const;

  // Static holding torque per joint for the horizontal fully extended arm.
  const Eigen::VectorXd& static_hold_torque() const { return hold_torque_; }
  const Eigen::VectorXd& torque_limits() const { return torque_limits_; }

  // Tip position (x, y) relative to the base, y up.
  std::array<double, 2> tip_position(const std::vector<double>& q) const;
  double total_length() const { return params_.n_links * params_.link_length; }

  static constexpr double kControlDt = 0.02;
  static constexpr int kSubsteps = 10;  // RK4 at dt = 0.002

 private:
  ManipulatorParams params_;
  EnvDescriptor desc_;
  Eigen::MatrixXd inertia_coupling_;  // A: constant part of the mass matrix
  Eigen::VectorXd gravity_moment_;    // B: first moments for gravity/potential
  Eigen::VectorXd com_inertia_;       // rod inertia about its own com
  Eigen::VectorXd hold_torque_;
  Eigen::VectorXd torque_limits_;

  Eigen::VectorXd absolute_angles(const Eigen::VectorXd& q) const;
  Eigen::MatrixXd mass_matrix_abs(const Eigen::VectorXd& beta) const;
};

}  // namespace tsym

#endif  // TSYM_MANIPULATOR_HPP
