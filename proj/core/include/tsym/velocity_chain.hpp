#ifndef TSYM_VELOCITY_CHAIN_HPP
#define TSYM_VELOCITY_CHAIN_HPP

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "tsym/types.hpp"

namespace tsym {

// Finite MDP with explicit per-action transition tables and state/action
// involutions, for exact reversibility verification.
struct TabularMDP {
  int n_states = 0;
  int n_actions = 0;
  // kernel[a] is the row-stochastic transition matrix for action a.
  std::vector<Eigen::MatrixXd> kernel;
  std::vector<double> reward;            // per state
  std::vector<int> state_involution;     // self-inverse permutation
  std::vector<int> action_involution;    // self-inverse permutation
  std::vector<std::string> state_labels;
  std::vector<std::string> action_labels;

  void validate(double row_sum_tol = 1e-12) const;
};

// Rewrites the MDP's kernel through its involutions:
//   kernel'[a][s][s'] = kernel[f_a(a)][f_s(s)][f_s(s')].
TabularMDP conjugated(const TabularMDP& mdp);

// Point particle on a circular lattice of 2*halfwidth sites with velocity
// v in {-2..2} and acceleration actions a in {-2, 0, 2}. One step:
//   v' = wrap5(v + a),  x' = wrapX(x + wrap5(v + a/2))
// a velocity-Verlet-style update on a toroidal phase lattice, exactly
// reversible under f(x, v) = (x, -v) with the action held fixed. Reward 1 at
// x = 0, else 0.
//
// breaking = true adds an absorbing crash state entered from every state with
// |v| = 2 at x = 0 (an inelastic stop), which breaks the reversibility
// condition at those entries.
TabularMDP build_velocity_chain(int halfwidth, bool breaking);

// Helpers for the chain's lattice coordinates.
int velocity_chain_state_index(int halfwidth, int x, int v);

// Single-action slice of the kernel.
inline const Eigen::MatrixXd& action_slice(const TabularMDP& mdp, int action_index) {
  return mdp.kernel.at(action_index);
}

}  // namespace tsym

#endif  // TSYM_VELOCITY_CHAIN_HPP
