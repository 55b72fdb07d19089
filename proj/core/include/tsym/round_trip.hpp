#ifndef TSYM_ROUND_TRIP_HPP
#define TSYM_ROUND_TRIP_HPP

#include <vector>

#include "tsym/conjugate.hpp"
#include "tsym/environment.hpp"

namespace tsym {

// Forward-conjugate-forward-conjugate probe: rolls s0 forward through the
// action sequence, applies the involution, rolls forward through the reversed
// sequence, applies the involution again, and returns the max-abs distance
// from s0. Zero (up to roundoff) exactly when the environment-integrator pair
// is time reversible; grows with friction or integrator asymmetry.
inline double round_trip_defect(const Environment& env, const StateVector& s0,
                                const std::vector<Action>& actions) {
  if (actions.empty())
    throw ContractViolation("round_trip_defect: actions must be nonempty");
  RngStream scratch(0, 0);  // the continuous environments are deterministic
  const Involution& f = env.descriptor().involution;
  StateVector s = s0;
  for (const Action& a : actions) s = env.step(s, a, scratch).next_state;
  s = conjugate_state(s, f);
  for (auto it = actions.rbegin(); it != actions.rend(); ++it)
    s = env.step(s, *it, scratch).next_state;
  s = conjugate_state(s, f);
  return max_abs_diff(s, s0);
}

}  // namespace tsym

#endif  // TSYM_ROUND_TRIP_HPP
