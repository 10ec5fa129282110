#pragma once

#include <cstdint>
#include <vector>

namespace edasvm {

// SplitMix64 stream. Self-contained so results do not depend on the
// standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, n). n must be > 0.
  std::size_t below(std::size_t n) {
    // Lemire multiply-shift; bias is < 2^-64 per draw.
    unsigned __int128 m = static_cast<unsigned __int128>(next()) *
                          static_cast<unsigned __int128>(n);
    return static_cast<std::size_t>(m >> 64);
  }

  // Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = below(i);
      std::swap(v[i - 1], v[j]);
    }
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t mix_bits(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Derive a stream seed from independent components, e.g.
// (config seed, source id, copy index). Order-sensitive.
inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  return mix_bits(a * 0x9e3779b97f4a7c15ull + b + 0x632be59bd9b4e019ull);
}

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  return mix_seed(mix_seed(a, b), c);
}

}  // namespace edasvm
