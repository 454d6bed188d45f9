#pragma once

#include <cstdint>
#include <initializer_list>

namespace isolab {

/// SplitMix64: a counter-based generator. The state is a Weyl counter and each
/// output is a bijective mix of it, so stream(seed) is fully determined by the
/// seed and the number of draws so far.
///
/// Output is pinned by this implementation (no std:: distributions), so
/// sequences are identical across compilers and standard libraries.
class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit constexpr SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return ~result_type{0}; }

  constexpr result_type operator()() noexcept {
    state_ += kGamma;
    return mix(state_);
  }

  /// Uniform integer in [0, bound). bound must be > 0.
  constexpr std::uint64_t uniform_below(std::uint64_t bound) noexcept {
    // Lemire's multiply-shift with rejection of the biased low region.
    std::uint64_t x = (*this)();
    unsigned __int128 m = static_cast<unsigned __int128>(x) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        x = (*this)();
        m = static_cast<unsigned __int128>(x) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  constexpr double uniform01() noexcept {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  static constexpr std::uint64_t mix(std::uint64_t z) noexcept {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

 private:
  static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;
  std::uint64_t state_;
};

/// Seed of an independent sub-stream, e.g. derive_seed(master, {trial}) or
/// derive_seed(master, {grid_point, trial, attempt}). Depends only on its
/// arguments, never on scheduling order.
constexpr std::uint64_t derive_seed(std::uint64_t master,
                                    std::initializer_list<std::uint64_t> path) noexcept {
  std::uint64_t h = SplitMix64::mix(master ^ 0x6A09E667F3BCC909ULL);
  for (std::uint64_t step : path) {
    h = SplitMix64::mix(h + 0x9E3779B97F4A7C15ULL * (step + 1));
  }
  return h;
}

}  // namespace isolab
