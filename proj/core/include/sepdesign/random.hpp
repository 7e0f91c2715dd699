#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>
#include <utility>
#include <vector>

namespace sepdesign {

inline constexpr std::string_view kGeneratorName = "mt19937_64/splitmix64-streams";

// SplitMix64 finalizer over (seed, stream): independent substream seeds.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

// Portable draws on top of std::mt19937_64, whose output sequence is fixed
// by the standard. Conversions are done here rather than through
// <random> distributions, which differ across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  // Uniform on [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform on {0, ..., bound-1}; bound must be positive.
  std::uint64_t below(std::uint64_t bound);

  bool bernoulli(double p) { return uniform01() < p; }

  template <typename T>
  void shuffle(std::vector<T>& items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace sepdesign
