#ifndef TSYM_CHECKPOINT_HPP
#define TSYM_CHECKPOINT_HPP

#include <string>

#include "tsym/mlp.hpp"

namespace tsym {

// Policy checkpoint file layout (all little-endian):
//   u64 K                      number of layer-size entries
//   u64 sizes[K]               e.g. {3, 256, 256, 2}
//   f64 payload                per affine layer: W row-major (out x in), then b
// Documented in the README so external tools can load actors.
void save_mlp(const Mlp& net, const std::string& path);
Mlp load_mlp(const std::string& path);

}  // namespace tsym

#endif  // TSYM_CHECKPOINT_HPP
