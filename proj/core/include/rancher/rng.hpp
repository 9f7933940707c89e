// Seedable deterministic random streams for ensemble simulation.
//
// One PCG32 generator per stream (64-bit LCG state, xorshift-rotate output);
// substreams come from a splitmix64-style hash of (seed, index), so
// derive(seed, i) is a pure function and walks can run in parallel with no
// shared generator state. All state transitions are plain u64 arithmetic,
// so integer output is identical across platforms.

#ifndef RANCHER_RNG_HPP
#define RANCHER_RNG_HPP

#include <cstdint>
#include <string_view>

namespace rancher {

// Echoed in JSON output metadata under the "rng" key.
inline constexpr std::string_view kRngName = "pcg32-splitmix64";

class RandomStream {
 public:
  RandomStream() : RandomStream(0, 0) {}
  RandomStream(std::uint64_t seed, std::uint64_t index);

  // Pure: derive(s, i) always yields the same stream; distinct (s, i)
  // yield distinct sequences with overwhelming probability.
  static RandomStream derive(std::uint64_t seed, std::uint64_t index) {
    return RandomStream(seed, index);
  }

  std::uint32_t next_u32();

  // Uniform on [0, 1) with 53 random mantissa bits (consumes two u32).
  double uniform01();

  // Uniform on [lo, hi); lo == hi returns lo. Throws std::invalid_argument
  // if lo > hi.
  double uniform(double lo, double hi);

  // Standard normal via Box-Muller (exact; one call consumes two uniforms,
  // the sine component is discarded).
  double gaussian();

  std::uint64_t seed() const { return seed_; }
  std::uint64_t index() const { return index_; }

  friend bool operator==(const RandomStream&, const RandomStream&) = default;

 private:
  std::uint64_t state_ = 0;
  std::uint64_t inc_ = 1;
  std::uint64_t seed_ = 0;
  std::uint64_t index_ = 0;
};

}  // namespace rancher

#endif
