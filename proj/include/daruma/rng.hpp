#pragma once

#include <cstdint>

namespace daruma {

// Stateless counter-based random bits: hash of (seed, stream, counter).
// Draw k for a given key is identical no matter how many other keys were
// drawn before it, which keeps channel evaluation order-independent.
inline std::uint64_t hash_mix(std::uint64_t z) {
  // splitmix64 finalizer
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t counter_bits(std::uint64_t seed, std::uint64_t stream,
                                  std::uint64_t counter) {
  return hash_mix(hash_mix(hash_mix(seed) ^ stream) ^ counter);
}

// Sequential draws within one (seed, stream) key.
class CounterRng {
public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : seed_(seed), stream_(stream) {}

  std::uint64_t next_u64() { return counter_bits(seed_, stream_, counter_++); }

  // Uniform in [0, 1).
  double next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  double uniform(double lo, double hi) {
    return lo + (hi - lo) * next_double();
  }

  std::uint64_t position() const { return counter_; }

private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::uint64_t counter_ = 0;
};

// Stream id for OI parameter draws: one stream per (channel, entry,
// activation) so params are drawn once per activation window.
inline std::uint64_t oi_param_stream(std::uint32_t channel_id,
                                     std::uint32_t entry_index,
                                     double activation_start) {
  std::uint64_t s = (static_cast<std::uint64_t>(channel_id) << 32) | entry_index;
  // Fold the activation time bits in; start times are exact config values.
  union {
    double d;
    std::uint64_t u;
  } bits{activation_start};
  return hash_mix(s ^ bits.u);
}

}  // namespace daruma
