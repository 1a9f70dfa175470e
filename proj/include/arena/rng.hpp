#ifndef ARENA_RNG_HPP_
#define ARENA_RNG_HPP_

#include <array>
#include <cmath>
#include <cstdint>
#include <span>
#include <string_view>

namespace arena::rng {

// 64-bit mixing step of splitmix64 (Steele, Lea & Flood 2014). Used for seed
// expansion and stream derivation so that nearby seeds give unrelated streams.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

// Derives the seed of a named substream. The label keeps logically distinct
// streams (agents, samplers, game instances) independent under one master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view label) {
  std::uint64_t s = master ^ fnv1a64(label);
  return splitmix64(s);
}

// xoshiro256** (Blackman & Vigna 2018), seeded through splitmix64 as the
// authors recommend. Fixed algorithm: output is identical on every platform.
class Stream {
 public:
  explicit Stream(std::uint64_t seed) {
    for (auto& word : state_) word = splitmix64(seed);
  }

  static Stream derived(std::uint64_t master, std::string_view label) {
    return Stream(derive_seed(master, label));
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Uniform on {0, ..., n-1}, bias removed by rejection.
  std::uint64_t uniform_int(std::uint64_t n) {
    const std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % n;
    std::uint64_t draw;
    do {
      draw = next();
    } while (draw >= limit);
    return draw % n;
  }

  // Standard normal via Box-Muller; consumes exactly two uniforms per call,
  // which keeps replay deterministic (no cached spare, no rejection loop).
  double normal() {
    const double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform();
    constexpr double two_pi = 6.283185307179586476925286766559;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(two_pi * u2);
  }

  // Samples an index from a probability vector by inverse CDF. Tolerates the
  // <=1e-9 mass drift allowed on strategies: overflow lands on the last
  // positive entry.
  int categorical(std::span<const double> probs) {
    const double u = uniform();
    double acc = 0.0;
    int last_positive = 0;
    for (std::size_t i = 0; i < probs.size(); ++i) {
      if (probs[i] > 0.0) last_positive = static_cast<int>(i);
      acc += probs[i];
      if (u < acc) return static_cast<int>(i);
    }
    return last_positive;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_{};
};

}  // namespace arena::rng

#endif  // ARENA_RNG_HPP_
