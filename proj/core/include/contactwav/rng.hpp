#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace contactwav {

// splitmix64 step. Small, well distributed, and bit-stable across platforms,
// which is what the export determinism contract needs (std:: distributions
// are not guaranteed to produce identical streams everywhere).
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ull);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : state_(seed) {
    // One warm-up step so seed 0 does not start the stream at 0.
    (void)splitmix64(state_);
  }

  std::uint64_t next_u64() { return splitmix64(state_); }

  // Uniform in [0, 1) with 53 random bits.
  double next_unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound); bound must be > 0.
  std::uint64_t next_below(std::uint64_t bound) {
    return std::uint64_t((static_cast<unsigned __int128>(next_u64()) * bound) >> 64);
  }

  double next_in(double lo, double hi) { return lo + (hi - lo) * next_unit(); }

  bool bernoulli(double p) { return next_unit() < p; }

  // Box-Muller; consumes two uniforms per call.
  double next_gaussian() {
    double u1 = next_unit();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double u2 = next_unit();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586477 * u2);
  }

 private:
  std::uint64_t state_;
};

inline std::uint64_t fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (const char c : bytes) {
    h ^= static_cast<unsigned char>(c);
    h *= 0x100000001b3ull;
  }
  return h;
}

// Per-window seed derivation: hash(master_seed, tag, index). Parallel workers
// that process disjoint (tag, index) pairs draw from disjoint streams, so the
// export result is independent of scheduling.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag,
                                 std::uint64_t index) {
  std::uint64_t s = master ^ fnv1a64(tag);
  (void)splitmix64(s);
  s ^= index * 0x9e3779b97f4a7c15ull;
  return splitmix64(s);
}

}  // namespace contactwav
