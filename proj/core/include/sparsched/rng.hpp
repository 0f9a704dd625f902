#pragma once

#include <cstdint>
#include <limits>
#include <random>

namespace sparsched {

/// Seeded mt19937_64 with hand-rolled conversions, so the sampled sequence
/// is identical across standard-library implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  /// Uniform on [0, 1) with 53-bit resolution.
  double uniform01() { return static_cast<double>(gen_() >> 11) * kInv53; }

  /// Uniform integer on [0, n), unbiased. Requires n >= 1.
  int uniform_below(int n) {
    const auto bound = static_cast<std::uint64_t>(n);
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - max % bound;
    std::uint64_t x = gen_();
    while (x >= limit) x = gen_();
    return static_cast<int>(x % bound);
  }

 private:
  static constexpr double kInv53 = 1.0 / 9007199254740992.0;  // 2^-53
  std::mt19937_64 gen_;
};

}  // namespace sparsched
