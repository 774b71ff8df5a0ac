#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace reshard {

/// Incremental FNV-1a (64-bit). Used for state digests and the dataset
/// read-order checksum; stability across platforms matters, cryptographic
/// strength does not.
class Fnv1a64 {
 public:
  static constexpr uint64_t kOffset = 0xcbf29ce484222325ull;
  static constexpr uint64_t kPrime = 0x100000001b3ull;

  Fnv1a64& update(std::span<const uint8_t> bytes) {
    for (uint8_t b : bytes) {
      state_ ^= b;
      state_ *= kPrime;
    }
    return *this;
  }

  Fnv1a64& update(std::string_view s) {
    return update(std::span<const uint8_t>(reinterpret_cast<const uint8_t*>(s.data()), s.size()));
  }

  Fnv1a64& update_u64(uint64_t v) {
    uint8_t le[8];
    for (int i = 0; i < 8; ++i) le[i] = static_cast<uint8_t>(v >> (8 * i));
    return update(std::span<const uint8_t>(le, 8));
  }

  uint64_t digest() const { return state_; }

 private:
  uint64_t state_ = kOffset;
};

inline uint64_t fnv1a64(std::span<const uint8_t> bytes) { return Fnv1a64().update(bytes).digest(); }

/// splitmix64 step; the generator behind the epoch shuffle and the synthetic
/// payload fill. The constants are the reference ones.
inline uint64_t splitmix64_next(uint64_t& state) {
  uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}
  uint64_t next() { return splitmix64_next(state_); }

  /// Unbiased-enough modulo draw; callers only need determinism.
  uint64_t next_below(uint64_t n) { return n == 0 ? 0 : next() % n; }

 private:
  uint64_t state_;
};

}  // namespace reshard
