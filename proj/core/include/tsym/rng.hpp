#ifndef TSYM_RNG_HPP
#define TSYM_RNG_HPP

#include <cstdint>
#include <random>

namespace tsym {

// Deterministic random stream keyed by (seed, stream_id). All distribution
// transforms are implemented here rather than via <random> distributions,
// whose output is not pinned by the standard; this keeps draw sequences
// identical across standard library implementations.
class RngStream {
 public:
  RngStream() : RngStream(0, 0) {}
  RngStream(std::uint64_t seed, std::uint64_t stream_id);

  std::uint64_t seed() const { return seed_; }
  std::uint64_t stream_id() const { return stream_id_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform in [0, 1) with 53 random bits.
  double uniform();
  double uniform(double lo, double hi);

  // Standard normal via Box-Muller; pairs are cached.
  double normal();
  double normal(double mean, double stddev);

  // Uniform integer in [0, n). Widening-multiply reduction (deterministic).
  std::uint64_t uniform_index(std::uint64_t n);

 private:
  std::uint64_t seed_;
  std::uint64_t stream_id_;
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace tsym

#endif  // TSYM_RNG_HPP
