#include "tsym/env_registry.hpp"

#include <functional>

#include "tsym/cartpole.hpp"
#include "tsym/manipulator.hpp"
#include "tsym/pendulum.hpp"

namespace tsym {
namespace {

// Applies overrides through a key -> setter table; rejects unknown keys so
// config typos surface immediately.
using Setters = std::map<std::string, std::function<void(double)>>;

void apply_overrides(const std::map<std::string, double>& overrides, const Setters& setters) {
  for (const auto& [key, value] : overrides) {
    auto it = setters.find(key);
    if (it == setters.end())
      throw ConfigError("unknown environment parameter: env." + key);
    it->second(value);
  }
}

}  // namespace

EnvPtr make_env(const std::string& name, const std::map<std::string, double>& overrides) {
  if (name == "pendulum") {
    PendulumParams p;
    apply_overrides(overrides,
                    {{"mass", [&](double v) { p.mass = v; }},
                     {"length", [&](double v) { p.length = v; }},
                     {"gravity", [&](double v) { p.gravity = v; }},
                     {"damping", [&](double v) { p.damping = v; }},
                     {"torque_limit", [&](double v) { p.torque_limit = v; }}});
    return std::make_unique<PendulumEnv>(p);
  }
  if (name == "cartpole") {
    CartpoleParams p;
    apply_overrides(overrides,
                    {{"cart_mass", [&](double v) { p.cart_mass = v; }},
                     {"pole_mass", [&](double v) { p.pole_mass = v; }},
                     {"pole_length", [&](double v) { p.pole_length = v; }},
                     {"gravity", [&](double v) { p.gravity = v; }},
                     {"track_halfwidth", [&](double v) { p.track_halfwidth = v; }},
                     {"friction_cart", [&](double v) { p.friction_cart = v; }},
                     {"friction_pole", [&](double v) { p.friction_pole = v; }},
                     {"friction_multiplier", [&](double v) { p.friction_multiplier = v; }},
                     {"force_limit", [&](double v) { p.force_limit = v; }}});
    return std::make_unique<CartpoleEnv>(p);
  }
  // manipulator-<n>-<tier>
  if (name.rfind("manipulator-", 0) == 0) {
    const std::string rest = name.substr(12);
    const auto dash = rest.find('-');
    if (dash == std::string::npos)
      throw ConfigError("manipulator name must be manipulator-{2,3,4}-{um,im,om}: " + name);
    ManipulatorParams p;
    const std::string n = rest.substr(0, dash);
    const std::string tier = rest.substr(dash + 1);
    if (n == "2") p.n_links = 2;
    else if (n == "3") p.n_links = 3;
    else if (n == "4") p.n_links = 4;
    else throw ConfigError("manipulator link count must be 2, 3 or 4: " + name);
    if (tier == "um") p.tier = TorqueTier::uM;
    else if (tier == "im") p.tier = TorqueTier::iM;
    else if (tier == "om") p.tier = TorqueTier::oM;
    else throw ConfigError("manipulator tier must be um, im or om: " + name);
    apply_overrides(overrides,
                    {{"link_mass", [&](double v) { p.link_mass = v; }},
                     {"link_length", [&](double v) { p.link_length = v; }},
                     {"gravity", [&](double v) { p.gravity = v; }}});
    return std::make_unique<ManipulatorEnv>(p);
  }
  throw ConfigError("unknown environment name: " + name);
}

}  // namespace tsym
