#ifndef TSYM_REPLAY_BUFFER_HPP
#define TSYM_REPLAY_BUFFER_HPP

#include <cstddef>
#include <vector>

#include "tsym/rng.hpp"
#include "tsym/types.hpp"

namespace tsym {

// Replay capacity rule: time-symmetric augmentation stores two transitions
// per environment step, so the buffer doubles.
inline std::size_t capacity_for(std::size_t total_env_steps, bool tsda_enabled) {
  if (total_env_steps == 0)
    throw ContractViolation("capacity_for: total_env_steps must be positive");
  return tsda_enabled ? 2 * total_env_steps : total_env_steps;
}

// Fixed-capacity FIFO transition store. With tsda_enabled, every push inserts
// the forward transition immediately followed by its conjugate, so eviction
// and sampling statistics treat synthetic transitions exactly like real ones.
class ReplayBuffer {
 public:
  ReplayBuffer(std::size_t capacity, bool tsda_enabled);

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return size_; }
  bool tsda_enabled() const { return tsda_enabled_; }

  // Appends t (and its conjugate when augmentation is on), evicting
  // oldest-first beyond capacity.
  void push(const Transition& t, const EnvDescriptor& env);

  // batch_size transitions drawn uniformly with replacement. Throws
  // BufferNotReady while size < batch_size (warmup).
  std::vector<Transition> sample(std::size_t batch_size, RngStream& rng) const;

  // i = 0 is the oldest stored transition.
  const Transition& at(std::size_t i) const;

 private:
  void append(Transition t);

  std::size_t capacity_;
  bool tsda_enabled_;
  std::vector<Transition> storage_;
  std::size_t next_ = 0;  // ring write position
  std::size_t size_ = 0;
};

}  // namespace tsym

#endif  // TSYM_REPLAY_BUFFER_HPP
