#ifndef TSYM_INTEGRATORS_HPP
#define TSYM_INTEGRATORS_HPP

#include <cmath>
#include <cstddef>
#include <vector>

#include "tsym/types.hpp"

namespace tsym {

enum class IntegratorMethod { leapfrog, rk4, semi_implicit_euler };

struct IntegratorConfig {
  IntegratorMethod method = IntegratorMethod::rk4;
  double dt = 0.002;
  int substeps = 1;

  void validate() const {
    if (!(dt > 0.0)) throw ContractViolation("IntegratorConfig: dt must be > 0");
    if (substeps < 1) throw ContractViolation("IntegratorConfig: substeps must be >= 1");
  }
};

namespace detail {
inline void check_finite(const std::vector<double>& v, const char* what) {
  for (double x : v)
    if (!std::isfinite(x)) throw SimulationDiverged(what, v);
}
}  // namespace detail

// Velocity-Verlet step for a separable system under the unit-mass convention
// (mass folded into force_fn). force_fn: (q) -> dp/dt, independent of p.
// Exactly time-reversible: stepping, negating p, stepping again and negating
// p recovers the start state up to roundoff.
template <class ForceFn>
void leapfrog_step(std::vector<double>& q, std::vector<double>& p, double dt, ForceFn&& force) {
  std::vector<double> f = force(q);
  detail::check_finite(f, "leapfrog_step: non-finite force");
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += 0.5 * dt * f[i];
  for (std::size_t i = 0; i < q.size(); ++i) q[i] += dt * p[i];
  f = force(q);
  detail::check_finite(f, "leapfrog_step: non-finite force");
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += 0.5 * dt * f[i];
}

// Classical fourth-order Runge-Kutta. deriv_fn: (x) -> dx/dt.
template <class DerivFn>
void rk4_step(std::vector<double>& x, double dt, DerivFn&& deriv) {
  const std::size_t n = x.size();
  std::vector<double> k1 = deriv(x);
  detail::check_finite(k1, "rk4_step: non-finite derivative");
  std::vector<double> tmp(n);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k1[i];
  std::vector<double> k2 = deriv(tmp);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + 0.5 * dt * k2[i];
  std::vector<double> k3 = deriv(tmp);
  for (std::size_t i = 0; i < n; ++i) tmp[i] = x[i] + dt * k3[i];
  std::vector<double> k4 = deriv(tmp);
  detail::check_finite(k4, "rk4_step: non-finite derivative");
  for (std::size_t i = 0; i < n; ++i)
    x[i] += dt / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
}

// Symplectic (semi-implicit) Euler: kick then drift.
template <class ForceFn>
void semi_implicit_euler_step(std::vector<double>& q, std::vector<double>& p, double dt,
                              ForceFn&& force) {
  std::vector<double> f = force(q);
  detail::check_finite(f, "semi_implicit_euler_step: non-finite force");
  for (std::size_t i = 0; i < p.size(); ++i) p[i] += dt * f[i];
  for (std::size_t i = 0; i < q.size(); ++i) q[i] += dt * p[i];
}

// Explicit (forward) Euler. Not symplectic and not time-reversible; kept as
// the contrast case for energy-drift comparisons.
template <class DerivFn>
void explicit_euler_step(std::vector<double>& x, double dt, DerivFn&& deriv) {
  std::vector<double> d = deriv(x);
  detail::check_finite(d, "explicit_euler_step: non-finite derivative");
  for (std::size_t i = 0; i < x.size(); ++i) x[i] += dt * d[i];
}

}  // namespace tsym

#endif  // TSYM_INTEGRATORS_HPP
