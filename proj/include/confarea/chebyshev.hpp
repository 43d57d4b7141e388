#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "confarea/series.hpp"

namespace confarea {

/// Ellipse with foci +-1: semi-axes a = cosh c, b = sinh c, rho = (a + b)^2 = e^{2c}.
/// It is the image of the rectangle [0, pi] x [-c, c] under z = cos w.
class EllipseGeometry {
 public:
  /// Throws DomainError unless c is finite and positive.
  static EllipseGeometry from_c(double c);

  double c() const { return c_; }
  double a() const { return a_; }
  double b() const { return b_; }
  double rho() const { return rho_; }

 private:
  EllipseGeometry(double c, double a, double b, double rho) : c_(c), a_(a), b_(b), rho_(rho) {}

  double c_;
  double a_;
  double b_;
  double rho_;
};

// Three-term recurrences, valid for every complex z.
Complex chebyshev_T(int n, Complex z);
Complex chebyshev_U(int n, Complex z);
/// T_n'(z) from the differentiated recurrence T'_{n+1} = 2 T_n + 2 z T'_n - T'_{n-1}.
Complex chebyshev_T_derivative(int n, Complex z);
/// U_n'(z) from U'_{n+1} = 2 U_n + 2 z U'_n - U'_{n-1}.
Complex chebyshev_U_derivative(int n, Complex z);

/// Monomial coefficients of T_n and U_n.
FormalSeries chebyshev_T_series(int n);
FormalSeries chebyshev_U_series(int n);

/// \iint_D |U_n|^2 = pi / (4(n+1)) (rho^{n+1} - rho^{-n-1}).
double bergman_norm_U(int n, const EllipseGeometry& geom);
/// The same norm as pi / (2(n+1)) sinh(2(n+1)c).
double bergman_norm_U_sinh(int n, const EllipseGeometry& geom);

/// P_n = 2 sqrt((n+1)/pi) (rho^{n+1} - rho^{-n-1})^{-1/2} U_n, orthonormal on D.
Complex orthonormal_P(int n, const EllipseGeometry& geom, Complex z);

/// \iint_D p conj(q) dx dy through z = cos w over u in [0, pi], v in [-c, c]
/// with weight |sin w|^2: Gauss-Legendre with 2 * order nodes in u and
/// `order` nodes in v. Throws DomainError for order < 8.
Complex bergman_inner_product(const std::function<Complex(Complex)>& p,
                              const std::function<Complex(Complex)>& q,
                              const EllipseGeometry& geom, int order = 32);
Complex bergman_inner_product(const FormalSeries& p, const FormalSeries& q,
                              const EllipseGeometry& geom, int order = 32);

enum class ChebyshevFamily { U, P };

/// Gram matrix [<f_i, f_j>] for i, j = 0..nmax.
std::vector<std::vector<Complex>> gram_matrix(ChebyshevFamily family, int nmax,
                                              const EllipseGeometry& geom, int order = 32);

/// \iint_D |T_n'|^2 = (n pi / 4)(rho^n - rho^{-n}); 0 for n <= 0.
double tprime_area(int n, const EllipseGeometry& geom);

/// Ellipse quadrature of |T_n'|^2 with T_n' from the differentiated recurrence.
double tprime_area_quadrature(int n, const EllipseGeometry& geom, int order = 32);

}  // namespace confarea
