// Counter-based pseudo-random generator. A draw is a pure function of
// (seed, counter), so disjoint counter ranges can be consumed in parallel and
// every stream can be replayed exactly from its seed.
#pragma once

#include <cmath>
#include <cstdint>

namespace nevlab {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t counter = 0)
      : seed_(seed), counter_(counter) {}

  static std::uint64_t draw_bits(std::uint64_t seed, std::uint64_t counter) {
    return splitmix64(splitmix64(seed) ^ splitmix64(counter * 0xD1B54A32D192ED03ULL + 1));
  }

  /// Uniform in [0,1) from an explicit counter; does not advance the stream.
  static double unit_at(std::uint64_t seed, std::uint64_t counter) {
    return static_cast<double>(draw_bits(seed, counter) >> 11) * 0x1.0p-53;
  }

  std::uint64_t seed() const { return seed_; }
  std::uint64_t counter() const { return counter_; }

  double unit() { return unit_at(seed_, counter_++); }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  std::uint64_t bits() { return draw_bits(seed_, counter_++); }
  /// Integer in [0, n).
  std::uint64_t index(std::uint64_t n) { return n ? bits() % n : 0; }

  /// Child stream with an independent counter space.
  CounterRng split(std::uint64_t tag) const {
    return CounterRng(splitmix64(seed_ ^ splitmix64(tag + 0x632BE59BD9B4E019ULL)));
  }

 private:
  std::uint64_t seed_;
  std::uint64_t counter_;
};

}  // namespace nevlab
