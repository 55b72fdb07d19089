#ifndef TSYM_CONJUGATE_HPP
#define TSYM_CONJUGATE_HPP

#include "tsym/types.hpp"

namespace tsym {

// f(q, v) = (q, mask .* v). Applying twice is the identity, bitwise.
StateVector conjugate_state(const StateVector& s, const Involution& inv);

// Actions are held fixed under time reversal. Kept as a named hook so a
// future involution with a+ != a changes exactly one function.
Action conjugate_action(const Action& a);

// Time-reversed counterpart of a transition:
//   state  <- f(next_state),  next_state <- f(state),  action unchanged,
//   reward <- reward_fn(f(state))  (the reversed arrival state),
//   terminal always false (time limits are a harness concept).
Transition conjugate_transition(const Transition& t, const EnvDescriptor& env);

}  // namespace tsym

#endif  // TSYM_CONJUGATE_HPP
