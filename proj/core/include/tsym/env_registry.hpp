#ifndef TSYM_ENV_REGISTRY_HPP
#define TSYM_ENV_REGISTRY_HPP

#include <map>
#include <string>

#include "tsym/environment.hpp"

namespace tsym {

// Builds an environment from its registry name with optional numeric
// parameter overrides. Names: pendulum, cartpole,
// manipulator-{2,3,4}-{um,im,om}. Unknown names or override keys throw
// ConfigError. The tabular velocity chain is not an Environment; it is
// constructed directly via build_velocity_chain.
EnvPtr make_env(const std::string& name,
                const std::map<std::string, double>& overrides = {});

}  // namespace tsym

#endif  // TSYM_ENV_REGISTRY_HPP
