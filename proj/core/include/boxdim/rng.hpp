#pragma once

#include <cstdint>

namespace boxdim {

// splitmix64; used to derive independent per-repetition seeds from a master
// seed so repetitions can be merged associatively.
inline uint64_t splitmix64(uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline uint64_t derive_seed(uint64_t master, uint64_t index) {
  uint64_t state = master;
  splitmix64(state);
  state ^= 0xA5A5A5A5DEADBEEFULL * (index + 1);
  uint64_t out = splitmix64(state);
  return out;
}

// Deterministic 32-bit draws (top half of splitmix64 output).
class DyadicRng {
 public:
  explicit DyadicRng(uint64_t seed) : state_(seed) {}
  uint32_t next_u32() { return static_cast<uint32_t>(splitmix64(state_) >> 32); }
  uint64_t next_u64() { return splitmix64(state_); }

 private:
  uint64_t state_;
};

}  // namespace boxdim
