#pragma once

#include <cstdint>

namespace fewbranch {

/// splitmix64 finalizer, used to expand seeds.
///
///   z = x + 0x9E3779B97F4A7C15
///   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
///   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
///   return z ^ (z >> 31)
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  std::uint64_t z = x + 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

/// 64-bit xorshift generator with a multiplicative output scramble.
///
/// State s (never zero) starts at splitmix64(seed). Each step:
///
///   s ^= s >> 12;  s ^= s << 25;  s ^= s >> 27;
///   output = s * 0x2545F4914F6CDD1D   (mod 2^64)
///
/// uniform() takes the top 53 bits of an output as a fraction of 2^53.
/// below(k) rejects outputs >= the largest multiple of k and returns the
/// remainder mod k, so it is unbiased.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(splitmix64(seed)) {
    if (state_ == 0) state_ = 0x9E3779B97F4A7C15ULL;
  }

  std::uint64_t next() {
    state_ ^= state_ >> 12;
    state_ ^= state_ << 25;
    state_ ^= state_ >> 27;
    return state_ * 0x2545F4914F6CDD1DULL;
  }

  /// In [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// In [0, k); k must be positive.
  std::uint64_t below(std::uint64_t k) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % k;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % k;
  }

  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::uint64_t state_;
};

}  // namespace fewbranch
