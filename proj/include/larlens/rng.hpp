#pragma once

#include <cstdint>

namespace larlens {

// Counter-based generator: the i-th draw of a stream is the SplitMix64
// finalizer applied to key + i * golden_gamma. Identical sequences on every
// platform; split() derives an independent stream without touching this one.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t next_u64();
  // Uniform on [0, 1) with 53 random bits.
  double uniform();
  // Uniform on (0, 1).
  double uniform_open();
  double normal();
  // Unbiased integer in [0, bound).
  std::uint64_t below(std::uint64_t bound);

  CounterRng split(std::uint64_t stream) const;

  std::uint64_t key() const noexcept { return key_; }
  std::uint64_t counter() const noexcept { return counter_; }

  static std::uint64_t mix(std::uint64_t z);

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace larlens
