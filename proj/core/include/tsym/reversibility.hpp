#ifndef TSYM_REVERSIBILITY_HPP
#define TSYM_REVERSIBILITY_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "tsym/velocity_chain.hpp"

namespace tsym {

// Result of one reversibility check: the largest residual of the condition
// being tested plus the (state, next_state[, action]) witness attaining it.
struct ViolationReport {
  std::string check_name;
  double max_violation = 0.0;
  bool passed = false;
  double tolerance = 0.0;
  int witness_state = -1;
  int witness_next = -1;
  int witness_action = -1;  // -1 when the check has no action dimension
  std::string witness_label;

  std::string format_line() const;
};

inline constexpr double kDefaultCheckTolerance = 1e-9;

// Unique stationary distribution of a row-stochastic kernel via damped power
// iteration (residual <= 1e-12, 10^6 iteration cap). Throws NoUniqueStationary
// if the kernel's support is not strongly connected.
Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& kernel);

// max over (s, s') of |pi(s) P(s'|s) - pi(s') P(s|s')|.
ViolationReport check_detailed_balance(const Eigen::MatrixXd& kernel,
                                       double tolerance = kDefaultCheckTolerance);
// Same, with an explicitly supplied stationary distribution (validated).
ViolationReport check_detailed_balance(const Eigen::MatrixXd& kernel,
                                       const Eigen::VectorXd& stationary, double tolerance);

// max over (s, s') of |pi(s) P(s'|s) - pi(f(s')) P(f(s)|f(s'))|.
// With the identity involution this reduces exactly to detailed balance.
ViolationReport check_dynamic_reversibility(const Eigen::MatrixXd& kernel,
                                            const std::vector<int>& state_involution,
                                            double tolerance = kDefaultCheckTolerance);
ViolationReport check_dynamic_reversibility(const Eigen::MatrixXd& kernel,
                                            const std::vector<int>& state_involution,
                                            const Eigen::VectorXd& stationary, double tolerance);

// max over (s, a, s') of |P(s'|s,a) - P(f_s(s)|f_s(s'), f_a(a))|.
// Kernel-level condition; needs no stationary distribution.
ViolationReport check_darmdp(const TabularMDP& mdp, double tolerance = kDefaultCheckTolerance);

}  // namespace tsym

#endif  // TSYM_REVERSIBILITY_HPP
