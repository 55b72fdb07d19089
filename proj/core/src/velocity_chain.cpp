#include "tsym/velocity_chain.hpp"

#include <cmath>

namespace tsym {

void TabularMDP::validate(double row_sum_tol) const {
  if (static_cast<int>(kernel.size()) != n_actions)
    throw ContractViolation("TabularMDP: kernel size != n_actions");
  for (const auto& P : kernel) {
    if (P.rows() != n_states || P.cols() != n_states)
      throw ContractViolation("TabularMDP: kernel matrix shape mismatch");
    for (int s = 0; s < n_states; ++s) {
      double sum = 0.0;
      for (int t = 0; t < n_states; ++t) {
        if (P(s, t) < 0.0) throw ContractViolation("TabularMDP: negative probability");
        sum += P(s, t);
      }
      if (std::abs(sum - 1.0) > row_sum_tol)
        throw ContractViolation("TabularMDP: kernel row does not sum to 1");
    }
  }
  auto check_involution = [&](const std::vector<int>& f, int n, const char* what) {
    if (static_cast<int>(f.size()) != n) throw ContractViolation(what);
    for (int i = 0; i < n; ++i) {
      if (f[i] < 0 || f[i] >= n || f[f[i]] != i) throw ContractViolation(what);
    }
  };
  check_involution(state_involution, n_states, "TabularMDP: state involution not self-inverse");
  check_involution(action_involution, n_actions,
                   "TabularMDP: action involution not self-inverse");
}

TabularMDP conjugated(const TabularMDP& mdp) {
  mdp.validate();
  TabularMDP out = mdp;
  for (int a = 0; a < mdp.n_actions; ++a) {
    const Eigen::MatrixXd& src = mdp.kernel[mdp.action_involution[a]];
    for (int s = 0; s < mdp.n_states; ++s)
      for (int t = 0; t < mdp.n_states; ++t)
        out.kernel[a](s, t) = src(mdp.state_involution[s], mdp.state_involution[t]);
  }
  return out;
}

namespace {

constexpr int kVel[] = {-2, -1, 0, 1, 2};
constexpr int kAct[] = {-2, 0, 2};

// Wrap into {-2..2}; the range is symmetric and 5 is odd, so wrap5(-y) = -wrap5(y).
int wrap5(int y) {
  int m = (y + 2) % 5;
  if (m < 0) m += 5;
  return m - 2;
}

}  // namespace

int velocity_chain_state_index(int /*halfwidth*/, int x, int v) { return x * 5 + (v + 2); }

TabularMDP build_velocity_chain(int halfwidth, bool breaking) {
  if (halfwidth < 2) throw ContractViolation("build_velocity_chain: halfwidth must be >= 2");
  const int nx = 2 * halfwidth;
  const int lattice_states = nx * 5;
  const int n_states = lattice_states + (breaking ? 1 : 0);
  const int crash = lattice_states;  // index of the absorbing state, if any

  TabularMDP mdp;
  mdp.n_states = n_states;
  mdp.n_actions = 3;
  mdp.kernel.assign(3, Eigen::MatrixXd::Zero(n_states, n_states));
  mdp.reward.assign(n_states, 0.0);
  mdp.state_labels.resize(n_states);
  mdp.action_labels = {"a=-2", "a=0", "a=+2"};

  auto wrap_x = [nx](int x) {
    int m = x % nx;
    if (m < 0) m += nx;
    return m;
  };

  for (int x = 0; x < nx; ++x)
    for (int vi = 0; vi < 5; ++vi) {
      const int s = velocity_chain_state_index(halfwidth, x, kVel[vi]);
      mdp.state_labels[s] =
          "(x=" + std::to_string(x) + ",v=" + std::to_string(kVel[vi]) + ")";
      mdp.reward[s] = (x == 0) ? 1.0 : 0.0;
    }
  if (breaking) mdp.state_labels[crash] = "crash";

  for (int ai = 0; ai < 3; ++ai) {
    const int a = kAct[ai];
    for (int x = 0; x < nx; ++x)
      for (int vi = 0; vi < 5; ++vi) {
        const int v = kVel[vi];
        const int s = velocity_chain_state_index(halfwidth, x, v);
        if (breaking && x == 0 && std::abs(v) == 2) {
          mdp.kernel[ai](s, crash) = 1.0;  // inelastic stop
          continue;
        }
        const int v_next = wrap5(v + a);
        const int x_next = wrap_x(x + wrap5(v + a / 2));
        mdp.kernel[ai](s, velocity_chain_state_index(halfwidth, x_next, v_next)) = 1.0;
      }
    if (breaking) mdp.kernel[ai](crash, crash) = 1.0;
  }

  // f(x, v) = (x, -v); crash maps to itself. Actions are unchanged.
  mdp.state_involution.resize(n_states);
  for (int x = 0; x < nx; ++x)
    for (int vi = 0; vi < 5; ++vi)
      mdp.state_involution[velocity_chain_state_index(halfwidth, x, kVel[vi])] =
          velocity_chain_state_index(halfwidth, x, -kVel[vi]);
  if (breaking) mdp.state_involution[crash] = crash;
  mdp.action_involution = {0, 1, 2};

  mdp.validate();
  return mdp;
}

}  // namespace tsym
