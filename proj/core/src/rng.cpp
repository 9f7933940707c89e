#include "rancher/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace rancher {
namespace {

inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t index)
    : seed_(seed), index_(index) {
  // Hash (seed, index) into an init value and a stream selector, then run
  // the canonical PCG32 seeding sequence.
  const std::uint64_t golden = 0x9E3779B97F4A7C15ULL;
  const std::uint64_t init = mix64(seed + golden * (index + 1));
  const std::uint64_t stream = mix64(init + golden);

  inc_ = (stream << 1u) | 1u;
  state_ = 0;
  next_u32();
  state_ += init;
  next_u32();
}

std::uint32_t RandomStream::next_u32() {
  const std::uint64_t old = state_;
  state_ = old * 6364136223846793005ULL + inc_;
  const auto xorshifted =
      static_cast<std::uint32_t>(((old >> 18u) ^ old) >> 27u);
  const auto rot = static_cast<std::uint32_t>(old >> 59u);
  return (xorshifted >> rot) | (xorshifted << ((-rot) & 31u));
}

double RandomStream::uniform01() {
  const std::uint64_t hi = next_u32();
  const std::uint64_t lo = next_u32();
  const std::uint64_t bits = ((hi << 32) | lo) >> 11;  // top 53 bits
  return static_cast<double>(bits) * 0x1.0p-53;
}

double RandomStream::uniform(double lo, double hi) {
  if (!(lo <= hi)) {
    throw std::invalid_argument("uniform: invalid interval, lo > hi");
  }
  if (lo == hi) return lo;
  double v = lo + uniform01() * (hi - lo);
  if (v >= hi) v = std::nextafter(hi, lo);  // rounding guard at the top end
  return v;
}

double RandomStream::gaussian() {
  const double u1 = 1.0 - uniform01();  // (0, 1], keeps log finite
  const double u2 = uniform01();
  return std::sqrt(-2.0 * std::log(u1)) *
         std::cos(2.0 * std::numbers::pi * u2);
}

}  // namespace rancher
