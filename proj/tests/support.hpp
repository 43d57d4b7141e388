#pragma once

#include <cmath>
#include <complex>
#include <initializer_list>
#include <numbers>
#include <vector>

#include "confarea/series.hpp"

namespace testing {

using confarea::Complex;
using confarea::FormalSeries;

inline constexpr double pi = std::numbers::pi;

inline FormalSeries series(std::initializer_list<FormalSeries::Term> terms, int lo, int hi) {
  const std::vector<FormalSeries::Term> v(terms);
  return FormalSeries::make(v, lo, hi);
}

inline double rel(double got, double want) {
  return std::abs(got - want) / std::max(1.0, std::abs(want));
}

}  // namespace testing
