#include "confarea/random.hpp"

#include <cmath>
#include <numbers>

namespace confarea {

Complex Rng::complex_in_annulus(double lo, double hi) {
  const double radius = std::sqrt(uniform(lo * lo, hi * hi));
  return std::polar(radius, uniform(0.0, 2.0 * std::numbers::pi));
}

FormalSeries random_taylor(Rng& rng, int degree, int lowest) {
  std::vector<FormalSeries::Term> terms;
  for (int n = lowest; n <= degree; ++n) terms.emplace_back(n, rng.complex_in_box(1.0));
  return FormalSeries::make(terms, std::min(lowest, degree), degree);
}

FormalSeries random_laurent(Rng& rng, int degree) {
  std::vector<FormalSeries::Term> terms;
  for (int n = -degree; n <= degree; ++n) terms.emplace_back(n, rng.complex_in_box(1.0));
  return FormalSeries::make(terms, -degree, degree);
}

}  // namespace confarea
