#pragma once

#include <complex>
#include <cstdint>
#include <random>

#include "confarea/series.hpp"

namespace confarea {

// Seeded generator whose uniform draws depend only on the 64-bit engine
// output, not on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }
  int integer(int lo, int hi) {
    return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  Complex complex_in_box(double half_width) {
    const double re = uniform(-half_width, half_width);
    return {re, uniform(-half_width, half_width)};
  }
  /// Uniform by area in the annulus lo <= |z| <= hi.
  Complex complex_in_annulus(double lo, double hi);

 private:
  std::mt19937_64 engine_;
};

/// sum_{n=lowest}^{degree} a_n z^n with Re, Im a_n uniform in [-1, 1].
FormalSeries random_taylor(Rng& rng, int degree, int lowest = 0);

/// Terms with exponents in [-degree, degree].
FormalSeries random_laurent(Rng& rng, int degree);

}  // namespace confarea
