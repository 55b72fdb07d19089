#include "tsym/reversibility.hpp"

#include <cmath>
#include <queue>
#include <sstream>

namespace tsym {
namespace {

void require_stochastic(const Eigen::MatrixXd& P) {
  if (P.rows() != P.cols() || P.rows() == 0)
    throw ContractViolation("kernel must be square and nonempty");
  for (int s = 0; s < P.rows(); ++s) {
    double sum = 0.0;
    for (int t = 0; t < P.cols(); ++t) {
      if (P(s, t) < 0.0) throw ContractViolation("kernel has negative entries");
      sum += P(s, t);
    }
    if (std::abs(sum - 1.0) > 1e-12)
      throw ContractViolation("kernel rows must sum to 1");
  }
}

bool all_reachable_from0(const Eigen::MatrixXd& P, bool transpose) {
  const int n = static_cast<int>(P.rows());
  std::vector<bool> seen(n, false);
  std::queue<int> frontier;
  frontier.push(0);
  seen[0] = true;
  int count = 1;
  while (!frontier.empty()) {
    const int s = frontier.front();
    frontier.pop();
    for (int t = 0; t < n; ++t) {
      const double p = transpose ? P(t, s) : P(s, t);
      if (p > 0.0 && !seen[t]) {
        seen[t] = true;
        ++count;
        frontier.push(t);
      }
    }
  }
  return count == n;
}

void validate_involution(const std::vector<int>& f, int n) {
  if (static_cast<int>(f.size()) != n)
    throw ContractViolation("state involution length != n_states");
  for (int i = 0; i < n; ++i)
    if (f[i] < 0 || f[i] >= n || f[f[i]] != i)
      throw ContractViolation("state involution is not a self-inverse permutation");
}

void validate_stationary(const Eigen::MatrixXd& P, const Eigen::VectorXd& pi) {
  if (pi.size() != P.rows())
    throw ContractViolation("stationary distribution size mismatch");
  if (pi.minCoeff() < -1e-15 || std::abs(pi.sum() - 1.0) > 1e-9)
    throw ContractViolation("stationary distribution must be a probability vector");
  const double residual = (pi.transpose() * P - pi.transpose()).cwiseAbs().maxCoeff();
  if (residual > 1e-9)
    throw ContractViolation("supplied distribution is not stationary (pi P != pi)");
}

}  // namespace

std::string ViolationReport::format_line() const {
  std::ostringstream os;
  os << "CHECK " << check_name << ' ' << (passed ? "passed" : "failed")
     << " max_violation=" << max_violation;
  if (!witness_label.empty()) os << " witness=" << witness_label;
  return os.str();
}

Eigen::VectorXd stationary_distribution(const Eigen::MatrixXd& kernel) {
  require_stochastic(kernel);
  // Unique stationary distribution iff the support graph is strongly
  // connected (one recurrent class covering every state).
  if (!all_reachable_from0(kernel, false) || !all_reachable_from0(kernel, true))
    throw NoUniqueStationary("kernel support is not strongly connected");

  const int n = static_cast<int>(kernel.rows());
  Eigen::VectorXd pi = Eigen::VectorXd::Constant(n, 1.0 / n);
  // Iterate the lazy chain (I + P)/2: same stationary distribution, no
  // periodicity issues. Residual is measured on the original kernel.
  constexpr double kResidualTol = 1e-12;
  constexpr long kMaxIters = 1000000;
  for (long it = 0; it < kMaxIters; ++it) {
    Eigen::VectorXd next = 0.5 * (pi + kernel.transpose() * pi);
    next /= next.sum();
    const double residual = (kernel.transpose() * next - next).cwiseAbs().maxCoeff();
    pi = next;
    if (residual <= kResidualTol) return pi;
  }
  throw NoUniqueStationary("power iteration did not converge");
}

ViolationReport check_detailed_balance(const Eigen::MatrixXd& kernel, double tolerance) {
  return check_detailed_balance(kernel, stationary_distribution(kernel), tolerance);
}

ViolationReport check_detailed_balance(const Eigen::MatrixXd& kernel,
                                       const Eigen::VectorXd& stationary, double tolerance) {
  require_stochastic(kernel);
  validate_stationary(kernel, stationary);
  ViolationReport r;
  r.check_name = "detailed_balance";
  r.tolerance = tolerance;
  const int n = static_cast<int>(kernel.rows());
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const double v = std::abs(stationary(s) * kernel(s, t) - stationary(t) * kernel(t, s));
      if (v > r.max_violation) {
        r.max_violation = v;
        r.witness_state = s;
        r.witness_next = t;
      }
    }
  r.passed = r.max_violation <= tolerance;
  if (r.witness_state >= 0)
    r.witness_label =
        "(" + std::to_string(r.witness_state) + "," + std::to_string(r.witness_next) + ")";
  return r;
}

ViolationReport check_dynamic_reversibility(const Eigen::MatrixXd& kernel,
                                            const std::vector<int>& state_involution,
                                            double tolerance) {
  return check_dynamic_reversibility(kernel, state_involution,
                                     stationary_distribution(kernel), tolerance);
}

ViolationReport check_dynamic_reversibility(const Eigen::MatrixXd& kernel,
                                            const std::vector<int>& state_involution,
                                            const Eigen::VectorXd& stationary,
                                            double tolerance) {
  require_stochastic(kernel);
  validate_involution(state_involution, static_cast<int>(kernel.rows()));
  validate_stationary(kernel, stationary);
  ViolationReport r;
  r.check_name = "dynamic_reversibility";
  r.tolerance = tolerance;
  const int n = static_cast<int>(kernel.rows());
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) {
      const int fs = state_involution[s];
      const int ft = state_involution[t];
      const double v =
          std::abs(stationary(s) * kernel(s, t) - stationary(ft) * kernel(ft, fs));
      if (v > r.max_violation) {
        r.max_violation = v;
        r.witness_state = s;
        r.witness_next = t;
      }
    }
  r.passed = r.max_violation <= tolerance;
  if (r.witness_state >= 0)
    r.witness_label =
        "(" + std::to_string(r.witness_state) + "," + std::to_string(r.witness_next) + ")";
  return r;
}

ViolationReport check_darmdp(const TabularMDP& mdp, double tolerance) {
  mdp.validate();
  ViolationReport r;
  r.check_name = "darmdp";
  r.tolerance = tolerance;
  for (int a = 0; a < mdp.n_actions; ++a) {
    const Eigen::MatrixXd& P = mdp.kernel[a];
    const Eigen::MatrixXd& Pc = mdp.kernel[mdp.action_involution[a]];
    for (int s = 0; s < mdp.n_states; ++s)
      for (int t = 0; t < mdp.n_states; ++t) {
        const double v =
            std::abs(P(s, t) - Pc(mdp.state_involution[t], mdp.state_involution[s]));
        if (v > r.max_violation) {
          r.max_violation = v;
          r.witness_state = s;
          r.witness_next = t;
          r.witness_action = a;
        }
      }
  }
  r.passed = r.max_violation <= tolerance;
  if (r.witness_state >= 0) {
    auto label = [&](int s) {
      return mdp.state_labels.empty() ? std::to_string(s) : mdp.state_labels[s];
    };
    auto alabel = [&](int a) {
      return mdp.action_labels.empty() ? std::to_string(a) : mdp.action_labels[a];
    };
    r.witness_label = "(" + label(r.witness_state) + "," + alabel(r.witness_action) + "," +
                      label(r.witness_next) + ")";
  }
  return r;
}

}  // namespace tsym
