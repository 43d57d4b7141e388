#pragma once

#include <complex>
#include <string>
#include <string_view>
#include <vector>

#include "confarea/series.hpp"

namespace confarea {

enum class AreaMethod { series, closed_form, quadrature };

std::string_view to_string(AreaMethod method);

/// A computed area with the method that produced it. `order` is the series
/// truncation or the quadrature node count.
struct AreaReport {
  double value = 0.0;
  AreaMethod method = AreaMethod::series;
  int order = 0;
  double est_error = 0.0;
  std::vector<std::string> warnings;
};

/// Coefficients b_0..b_N of the exterior map Psi(z) = z + sum_n b_n z^{-n}.
class LaurentTail {
 public:
  LaurentTail() = default;
  explicit LaurentTail(std::vector<Complex> b) : b_(std::move(b)) {}

  /// Reads a tail from a series whose exponents are <= 0, with b_n stored at
  /// exponent -n. An exponent-1 entry is accepted only if it equals 1.
  /// Throws ParseError otherwise.
  static LaurentTail from_series(const FormalSeries& s);

  const std::vector<Complex>& coefficients() const { return b_; }
  Complex b(int n) const {
    return n >= 0 && static_cast<std::size_t>(n) < b_.size() ? b_[static_cast<std::size_t>(n)]
                                                            : Complex{};
  }
  int degree() const { return static_cast<int>(b_.size()) - 1; }

  /// Psi(z) including the leading z.
  Complex map(Complex z) const;
  Complex map_derivative(Complex z) const;

  /// Psi as a FormalSeries on [-N, 1].
  FormalSeries as_series() const;

 private:
  std::vector<Complex> b_;
};

struct TailCheck {
  bool admissible = true;
  double slack = 1.0;  // 1 - sum n |b_n|^2
};

/// pi (r^2 - sum_{n>=1} n |b_n|^2 r^{-2n}). A negative value is returned
/// with a non-univalence warning. Throws DomainError for r <= 0.
AreaReport gronwall_area(const LaurentTail& tail, double r);

/// Area enclosed by Psi(r e^{i theta}) from `nodes` boundary samples, using
/// the spectral shoelace sum with analytic tangents.
AreaReport gronwall_area_quadrature(const LaurentTail& tail, double r, int nodes = 512);

/// Boundary samples Psi(r e^{i theta_k}), theta_k = 2 pi k / nodes.
std::vector<Complex> image_curve(const LaurentTail& tail, double r, int nodes);

/// Necessary univalence condition sum n |b_n|^2 <= 1.
TailCheck univalent_tail_check(const LaurentTail& tail);

/// pi sum (R^{2n+2} - r^{2n+2}) / (n+1) |a_n|^2 = \iint_{r<|z|<R} |f|^2.
/// Throws DomainError unless 0 <= r < R (r > 0 when negative powers are
/// present) and UnsupportedError for a nonzero a_{-1}.
double annulus_norm(const FormalSeries& f, double r, double R);

/// Polar Gauss-Legendre x trapezoid quadrature of |f|^2 over the annulus.
double annulus_norm_quadrature(const FormalSeries& f, double r, double R, int n_rad = 64,
                               int n_ang = 256);

/// One row of coefficient_bounds_report.
///
/// `naive_bound` drops the 1/pi and, for k >= 2, scales with I(f) instead of
/// its square root. For k = 0, 1 it bounds |f^{(k)}(0)|^2 (`naive_bound_on_square`
/// is true), for k >= 2 it bounds |f^{(k)}(0)| itself. Reported for comparison only. `derived_bound` bounds |f^{(k)}(0)| and follows from
/// the annulus norm: |a_k|^2 <= I(f) (k+1) / (pi (R^{2k+2} - r^{2k+2})).
struct CoefficientBound {
  int k = 0;
  double derivative_magnitude = 0.0;
  double naive_bound = 0.0;
  bool naive_bound_on_square = false;
  double derived_bound = 0.0;
  bool derived_holds = true;
};

std::vector<CoefficientBound> coefficient_bounds_report(const FormalSeries& f, double r, double R,
                                                        int kmax);

/// sum |a_n|^2 r^{2n}, the mean of |f|^2 on |z| = r.
double circle_mean_square(const FormalSeries& f, double r);

/// (1 / 2 pi) \oint |f(r e^{i theta})|^2 d theta by the periodic trapezoid rule.
double circle_mean_square_quadrature(const FormalSeries& f, double r, int nodes = 256);

enum class MapOrientation { interior_map, exterior_map };

/// Radial-derivative area -(r/4) d/dr \oint |f|^2 in coefficient form:
/// -pi sum n |a_n|^2 r^{2n} for exterior maps, the negation for interior maps.
double radial_area(const FormalSeries& f, double r, MapOrientation orientation);

/// (1 / 2i) \oint_{|z| = r} f'(z) conj(f(z)) dz by the periodic trapezoid rule.
/// The imaginary residual is reported as est_error.
AreaReport green_boundary_area(const FormalSeries& f, double r, int nodes = 256);

/// pi sum n |a_n|^2: the area of the image of the unit disk counted with
/// multiplicity.
double dirichlet_area(const FormalSeries& f);

enum class FunctionalVariant { coefficient, quadrature };

/// \iint_{[0, 2pi]^2} |f(e^{i phi}) - f(e^{i theta})|^2 / |e^{i phi} - e^{i theta}|^2.
/// The coefficient variant is 4 pi^2 sum p |a_p|^2; the quadrature variant uses
/// an nodes x nodes trapezoid grid with |f'(e^{i theta})|^2 on the diagonal.
double double_contour_functional(const FormalSeries& f, FunctionalVariant variant,
                                 int nodes = 64);

/// functional / (4 pi). Throws DomainError for negative input.
double area_from_functional(double functional);

/// pi sum p |c_p|^2 with c = coefficients of z f'(z), obtained as the Cauchy
/// product of log_derivative_coeffs(f) with f. Equals \iint_D |f' + z f''|^2.
double zfprime_area(const FormalSeries& f, int trunc);

/// Polar quadrature of |f'(z) + z f''(z)|^2 over the unit disk.
double zfprime_area_quadrature(const FormalSeries& f, int n_rad = 64, int n_ang = 256);

}  // namespace confarea
