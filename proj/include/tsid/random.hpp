#pragma once

#include <cstdint>

namespace tsid {

// SplitMix64 finaliser. Used as a counter-based generator: the value drawn
// for (seed, counter) depends on nothing else, so hosts are reproducible
// across platforms and independent of iteration or thread order.
constexpr std::uint64_t mix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

constexpr std::uint64_t draw(std::uint64_t seed, std::uint64_t counter) {
  return mix64(mix64(seed) ^ (counter * 0xd1b54a32d192ed03ULL + 0x8cb92ba72f3d8dd7ULL));
}

/// Seed for sub-stream `index` of `seed` (trials, host sizes, ...).
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  return draw(seed ^ 0x6a09e667f3bcc909ULL, index);
}

class CounterRng {
public:
  explicit CounterRng(std::uint64_t seed) : seed_(seed) {}

  std::uint64_t next() { return draw(seed_, counter_++); }

  /// Uniform on [0, bound) by rejection; bound > 0.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    for (;;) {
      const std::uint64_t x = next();
      if (x < limit) return x % bound;
    }
  }

  bool coin() { return (next() >> 63) != 0; }

private:
  std::uint64_t seed_;
  std::uint64_t counter_ = 0;
};

}  // namespace tsid
