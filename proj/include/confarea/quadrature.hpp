#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace confarea {

using Complex = std::complex<double>;

struct QuadratureRule {
  enum class Kind { gauss_legendre, periodic_trapezoid };

  Kind kind = Kind::gauss_legendre;
  double lower = -1.0;
  double upper = 1.0;
  std::vector<double> nodes;
  std::vector<double> weights;

  /// Sum of weight * f(node), compensated, in node order.
  double integrate(const std::function<double(double)>& f) const;
  Complex integrate_complex(const std::function<Complex(double)>& f) const;
};

/// n-point Gauss-Legendre rule on [a, b]: Newton iteration on P_n from the
/// Tricomi initial guesses, nodes ascending. Exact for degree <= 2n - 1.
/// Throws DomainError for n < 1 or a >= b, InternalError if Newton stalls.
QuadratureRule gauss_legendre(int n, double a = -1.0, double b = 1.0);

/// n equispaced nodes k * period / n with weight period / n.
QuadratureRule trapezoid_rule(int n, double period);

/// (period / n) * sum_k g(k period / n). Throws DomainError for n < 4.
Complex periodic_trapezoid(const std::function<Complex(double)>& g, int n, double period);

/// \iint g over the annulus r_inner <= |z| <= r_outer: Gauss-Legendre in the
/// radius times trapezoid in the angle, with the polar Jacobian rho.
double disk_integral(const std::function<double(Complex)>& g, double r_inner, double r_outer,
                     int n_rad = 64, int n_ang = 256);

/// Polygon area (1/2) sum (u_k v_{k+1} - u_{k+1} v_k), closing the polygon.
/// Signed: positive for counterclockwise points. Throws DomainError for < 3 points.
double curve_area_shoelace(std::span<const Complex> points);

/// Spectral variant of the shoelace sum for a smooth closed curve sampled at
/// equispaced parameter values: (1/2) \int Im(conj(p) p') dt by the periodic
/// trapezoid rule, given tangent samples p'(t_k).
double curve_area_spectral(std::span<const Complex> points, std::span<const Complex> tangents,
                           double period);

/// Principal value of \int_lower^upper g(r) dr across a simple pole at
/// `singularity`. Symmetric excision (s - eps, s + eps) for eps in
/// {1e-2, 1e-3, 1e-4}, geometrically graded Gauss-Legendre panels of
/// `nodes_per_panel` points, then linear-in-eps Richardson extrapolation.
/// Throws DomainError when the singularity lies within 1e-2 of an endpoint and
/// PrincipalValueError when the successive estimates do not contract.
double principal_value_radial(const std::function<double(double)>& g, double singularity,
                              int nodes_per_panel = 16, double lower = 0.0, double upper = 1.0);

}  // namespace confarea
