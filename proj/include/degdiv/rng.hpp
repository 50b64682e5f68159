#pragma once

#include <cstdint>
#include <vector>

namespace degdiv {

/// splitmix64. Small, fast, and fully specified, so sampled subsets are
/// bit-identical across platforms and runs.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1), 53 random bits.
  double next_double() {
    return static_cast<double>(next() >> 11) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// Key for stream `index` under `seed`. Streams are derived by counter,
/// never by splitting a running generator, so the result of trial i does
/// not depend on how many trials ran before it or on which thread ran it.
inline std::uint64_t mix_stream(std::uint64_t seed, std::uint64_t index) {
  SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1)));
  return g.next();
}

inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
  return SplitMix64(mix_stream(seed, trial));
}

}  // namespace degdiv
