#include "tsym/replay_buffer.hpp"

#include "tsym/conjugate.hpp"

namespace tsym {

ReplayBuffer::ReplayBuffer(std::size_t capacity, bool tsda_enabled)
    : capacity_(capacity), tsda_enabled_(tsda_enabled) {
  if (capacity_ == 0) throw ContractViolation("ReplayBuffer: capacity must be positive");
  storage_.reserve(capacity_);
}

void ReplayBuffer::append(Transition t) {
  if (size_ < capacity_) {
    storage_.push_back(std::move(t));
    ++size_;
    next_ = size_ % capacity_;
  } else {
    storage_[next_] = std::move(t);
    next_ = (next_ + 1) % capacity_;
  }
}

void ReplayBuffer::push(const Transition& t, const EnvDescriptor& env) {
  append(t);
  if (tsda_enabled_) append(conjugate_transition(t, env));
}

std::vector<Transition> ReplayBuffer::sample(std::size_t batch_size, RngStream& rng) const {
  if (size_ < batch_size)
    throw BufferNotReady("replay buffer holds " + std::to_string(size_) +
                         " transitions, batch needs " + std::to_string(batch_size));
  std::vector<Transition> batch;
  batch.reserve(batch_size);
  for (std::size_t i = 0; i < batch_size; ++i)
    batch.push_back(at(rng.uniform_index(size_)));
  return batch;
}

const Transition& ReplayBuffer::at(std::size_t i) const {
  if (i >= size_) throw ContractViolation("ReplayBuffer::at: index out of range");
  if (size_ < capacity_) return storage_[i];
  return storage_[(next_ + i) % capacity_];
}

}  // namespace tsym
