#include "tsym/conjugate.hpp"

namespace tsym {

StateVector conjugate_state(const StateVector& s, const Involution& inv) {
  if (!s.finite()) throw ContractViolation("conjugate_state: non-finite state");
  return inv.apply(s);
}

Action conjugate_action(const Action& a) { return a; }

Transition conjugate_transition(const Transition& t, const EnvDescriptor& env) {
  if (!t.state.finite() || !t.next_state.finite())
    throw ContractViolation("conjugate_transition: non-finite transition");
  Transition out;
  out.state = conjugate_state(t.next_state, env.involution);
  out.action = conjugate_action(t.action);
  out.next_state = conjugate_state(t.state, env.involution);
  out.reward = env.reward_fn(out.next_state);
  out.terminal = false;
  return out;
}

}  // namespace tsym
