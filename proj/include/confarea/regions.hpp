#pragma once

#include <complex>
#include <vector>

#include "confarea/area.hpp"

namespace confarea {

/// Gamma function for x > 0: Lanczos approximation (g = 7, 9 terms) with
/// Gamma(x) = Gamma(x + 1) / x below 1/2. Relative error ~1e-15 on [0.1, 30].
/// Throws DomainError for x <= 0 or NaN.
double gamma(double x);

/// Exterior map of the m-leafed lemniscate |w^m - 1| = 1:
/// b_{mn-1} = C_n^{1/m} for n = 1..trunc. Throws DomainError for m < 1.
LaurentTail lemniscate_tail(int m, int trunc);

/// How a truncated binomial-square series treats the terms past the cutoff.
enum class TailMode {
  none,             // raw partial sum; est_error is the estimated remainder
  euler_maclaurin,  // partial sum plus the Euler-Maclaurin estimate of the remainder
};

/// sum_{n > N} (c0 + c1 n) (C_n^alpha)^2 for 0 < alpha <= 1.
///
/// C_n^alpha extends to real n as Gamma(n - alpha) / (Gamma(-alpha) Gamma(n + 1))
/// up to sign; the remainder is summed term by term up to n = 64 and then by
/// Euler-Maclaurin: the integral of the continuous extension (Gauss-Legendre
/// in log n) minus the h/2, h'/12, h'''/720 endpoint corrections.
struct TailEstimate {
  double value = 0.0;
  double est_error = 0.0;
};
TailEstimate binomial_square_tail(double alpha, double c0, double c1, long long n_cut);

/// pi (sum_{n>=0} (C_n^{1/m})^2 - m sum_{n>=1} n (C_n^{1/m})^2) truncated at
/// n = trunc, optionally completed by the tail remainder.
AreaReport lemniscate_area_series(int m, int trunc, TailMode mode = TailMode::euler_maclaurin);

/// 2^{2/m - 1} Gamma(1/m + 1/2) / Gamma(1/m + 1) sqrt(pi).
AreaReport lemniscate_area_closed(int m);

/// 2^{2/m} m \int_0^{pi/2m} cos^{2/m}(m phi) d phi, Gauss-Legendre with
/// `order` nodes per panel on a mesh graded geometrically toward the
/// endpoint phi = pi/2m. Throws DomainError for order < 16.
AreaReport lemniscate_area_polar(int m, int order = 32);

struct BinomialSumResult {
  double numeric = 0.0;      // partial_sum + tail
  double closed_form = 0.0;  // Gamma expression
  double partial_sum = 0.0;
  long long terms_used = 0;  // last index k included
  double tail = 0.0;
  double tail_error = 0.0;
};

/// sum_k (C_k^alpha)^2 against Gamma(2 alpha + 1) / Gamma(alpha + 1)^2.
/// The partial sum stops once a term drops below 1e-14 or at k = 10^6.
/// Throws DomainError unless 0 < alpha <= 1.
BinomialSumResult binomial_sq_sum(double alpha);

/// sum_k k (C_k^alpha)^2 against Gamma(2 alpha) / Gamma(alpha)^2.
BinomialSumResult binomial_sq_weighted_sum(double alpha);

/// Area of the cardioid r = scale (1 + cos theta): (1/2) \int r^2 d theta by
/// the periodic trapezoid rule (exact for order >= 8). scale = 1/2 gives 3 pi / 8.
AreaReport cardioid_area(int order, double scale = 0.5);

/// Points 0 < |z_p| < 1, pairwise distinct.
class PointMassSpec {
 public:
  /// Throws DomainError on a point outside the punctured disk or a repeat.
  explicit PointMassSpec(std::vector<Complex> points);
  const std::vector<Complex>& points() const { return points_; }

 private:
  std::vector<Complex> points_;
};

/// log |(1 - |z_p|^2) / |z_p|^2|. Throws DomainError unless 0 < |z_p| < 1.
double pointmass_I(Complex zp);

/// 1/2 + 2 |z_p|^2 log |(1 - |z_p|^2) / |z_p|^2|.
double pointmass_J(Complex zp);

/// Principal value of \int_0^1 2r / (r^2 - |z_p|^2) dr.
double pointmass_I_oracle(Complex zp);

/// Principal value of \int_0^1 r (r^2 + 3|z_p|^2) / (r^2 - |z_p|^2) dr.
double pointmass_J_oracle(Complex zp);

struct PointMassSums {
  double sum_I = 0.0;            // pi sum_p I_p
  double sum_J = 0.0;            // sum_p 2 pi J_p
  double sum_I_aggregate = 0.0;  // pi log |prod_p (1 - |z_p|^2) / |z_p|^2|
  double sum_J_aggregate = 0.0;  // m pi + 2 pi log prod_p ((1 - |z_p|^2) / |z_p|^2)^{2 |z_p|^2}
};

PointMassSums pointmass_sums(const PointMassSpec& spec);

}  // namespace confarea
