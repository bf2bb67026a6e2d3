#pragma once

#include <cmath>
#include <cstdint>

namespace gridverify {

/// Counter-based random stream: the n-th draw is a pure function of
/// (seed, stream, n), so parallel workers with distinct streams stay
/// reproducible and the sequence is identical across platforms.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : base_(mix(seed + mix(stream + kGolden))) {}

  std::uint64_t next_u64() { return mix(base_ + kGolden * ++counter_); }

  /// Uniform on the open interval (0, 1).
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Standard normal via Box-Muller; pairs are cached.
  double normal() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    const double u1 = uniform01();
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * kPi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

  bool bernoulli(double p) { return uniform01() < p; }

 private:
  static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;
  static constexpr double kPi = 3.14159265358979323846;

  // SplitMix64 finalizer.
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t base_ = 0;
  std::uint64_t counter_ = 0;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace gridverify
