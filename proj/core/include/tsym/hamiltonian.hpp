#ifndef TSYM_HAMILTONIAN_HPP
#define TSYM_HAMILTONIAN_HPP

#include <functional>
#include <vector>

#include "tsym/types.hpp"

namespace tsym {

// Energy view of an environment's mechanics. kinetic_energy may depend on the
// configuration (non-separable systems); generalized_force bundles gravity,
// actuation and friction as generalized forces/torques on the velocity block.
struct HamiltonianSystem {
  std::function<double(const std::vector<double>& q, const std::vector<double>& v)> kinetic_energy;
  std::function<double(const std::vector<double>& q)> potential_energy;
  std::function<std::vector<double>(const std::vector<double>& q, const std::vector<double>& v,
                                    const Action& a)>
      generalized_force;
};

inline double total_energy(const HamiltonianSystem& sys, const std::vector<double>& q,
                           const std::vector<double>& v) {
  return sys.kinetic_energy(q, v) + sys.potential_energy(q);
}

}  // namespace tsym

#endif  // TSYM_HAMILTONIAN_HPP
