#ifndef FRAMEDIL_RNG_HPP
#define FRAMEDIL_RNG_HPP

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>

namespace framedil {

/// Splitmix64 generator. Used instead of <random> distributions so that
/// streams are reproducible bit-for-bit across standard library versions;
/// every piece of randomness in the toolkit flows through one of these.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1) with 53 random bits.
  double uniform() { return double(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Standard normal via Box-Muller.
  double normal() {
    double u1 = uniform();
    while (u1 <= 0x1.0p-60) u1 = uniform();
    double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

  /// Complex standard normal (unit total variance).
  std::complex<double> complex_normal() {
    const double inv_sqrt2 = std::numbers::sqrt2 / 2.0;
    return {normal() * inv_sqrt2, normal() * inv_sqrt2};
  }

  /// Derive an independent stream, e.g. one per trial index.
  Rng fork(std::uint64_t salt) {
    Rng r(state_ ^ (0xA0761D6478BD642Full * (salt + 1)));
    r.next_u64();
    return r;
  }

private:
  std::uint64_t state_;
};

} // namespace framedil

#endif
