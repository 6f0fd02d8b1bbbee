#ifndef GEOKERNELS_RNG_HPP
#define GEOKERNELS_RNG_HPP

#include <cmath>
#include <cstdint>
#include <numbers>

namespace geokernels {

// Deterministic, platform-independent generator used by every sampler.
//
// The bit-stream is frozen; result files depend on it.
//   state advance:  s += 0x9E3779B97F4A7C15
//   output mix:     z = s
//                   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//                   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//                   z ^ (z >> 31)
//   substream(seed, i): initial state = mix(seed ^ 0xA02BDBF7BB3C0A7 * (i + 1))
//   uniform01:      (u64 >> 11) * 2^-53                  in [0, 1)
//   normal:         Box-Muller pair from two uniforms, the first shifted
//                   into (0, 1]; pairs are consumed in order (cos, sin)
//   uniform_int(b): u64 % b
//
// Per-element substreams make parallel sampling bit-identical to sequential.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix(seed)) {}

  // Independent stream for element `index` of a sample drawn with `seed`.
  static Rng substream(std::uint64_t seed, std::uint64_t index) {
    Rng r(0);
    r.state_ = mix(seed ^ (0x0A02BDBF7BB3C0A7ULL * (index + 1)));
    r.have_spare_ = false;
    return r;
  }

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ULL;
    return mix(state_);
  }

  double uniform01() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  // Uniform in {0, ..., bound-1}. Modulo bias is irrelevant at the bounds
  // used here (tree parents, alphabet letters) and keeps the stream simple.
  std::uint64_t uniform_int(std::uint64_t bound) {
    return next_u64() % bound;
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const double u1 =
        static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace geokernels

#endif
