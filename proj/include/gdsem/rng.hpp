#pragma once

#include <cstdint>

#include "gdsem/mathutil.hpp"

namespace gdsem {

// xoshiro256++ with splitmix64 seeding. Streams are derived from
// (base seed, stream id), so the set of streams in use never perturbs
// the draws of any individual stream.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) { seed_state(seed); }

  static Rng stream(std::uint64_t base_seed, std::uint64_t stream_id) {
    // distinct avalanche per stream; stream 0 differs from Rng(base_seed)
    std::uint64_t x = base_seed;
    x ^= (stream_id + 1) * 0x9E3779B97F4A7C15ULL;
    Rng r(0);
    r.seed_state(splitmix_once(x));
    return r;
  }

  std::uint64_t next_u64() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform on (0, 1); never returns 0 or 1 exactly
  double uniform() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  double uniform(double a, double b) { return a + (b - a) * uniform(); }

  // standard normal via inverse CDF (exact in distribution)
  double normal() { return inv_phi(uniform()); }

  double normal(double mean, double sd) { return mean + sd * normal(); }

  // Marsaglia-Tsang squeeze for shape >= 1, boosting for shape < 1.
  // Parameterized shape-rate: mean = shape / rate.
  double gamma(double shape, double rate) {
    double boost = 1.0;
    if (shape < 1.0) {
      boost = std::pow(uniform(), 1.0 / shape);
      shape += 1.0;
    }
    const double d = shape - 1.0 / 3.0;
    const double c = 1.0 / std::sqrt(9.0 * d);
    for (;;) {
      double x, v;
      do {
        x = normal();
        v = 1.0 + c * x;
      } while (v <= 0.0);
      v = v * v * v;
      const double u = uniform();
      const double x2 = x * x;
      if (u < 1.0 - 0.0331 * x2 * x2) return boost * d * v / rate;
      if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v)))
        return boost * d * v / rate;
    }
  }

  double chi_square(double df) { return gamma(0.5 * df, 0.5); }

  double student_t(double df) {
    return normal() / std::sqrt(chi_square(df) / df);
  }

  // uniform integer in [0, n)
  std::uint64_t below(std::uint64_t n) {
    // Lemire-style rejection-free-enough bound; n is tiny in practice
    std::uint64_t x = next_u64();
    return x % n;
  }

 private:
  std::uint64_t s_[4];

  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  static std::uint64_t splitmix_once(std::uint64_t& x) {
    x += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  void seed_state(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& w : s_) w = splitmix_once(x);
  }
};

}  // namespace gdsem
