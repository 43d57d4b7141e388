#include "confarea/chebyshev.hpp"

#include <cmath>
#include <numbers>

#include "confarea/compensated_sum.hpp"
#include "confarea/error.hpp"
#include "confarea/quadrature.hpp"

namespace confarea {

namespace {

void require_degree(int n, const char* op) {
  if (n < 0) throw DomainError(std::string(op) + ": degree must be >= 0");
}

// Value and derivative of the sequence P_0 = 1, P_1 = first_coeff * z,
// P_{k+1} = 2 z P_k - P_{k-1}.
struct ValueAndSlope {
  Complex value;
  Complex slope;
};

ValueAndSlope recurrence(int n, Complex z, double first_coeff) {
  Complex p0{1.0, 0.0};
  Complex d0{};
  if (n == 0) return {p0, d0};
  Complex p1 = first_coeff * z;
  Complex d1{first_coeff, 0.0};
  for (int k = 1; k < n; ++k) {
    const Complex p2 = 2.0 * z * p1 - p0;
    const Complex d2 = 2.0 * p1 + 2.0 * z * d1 - d0;
    p0 = p1;
    p1 = p2;
    d0 = d1;
    d1 = d2;
  }
  return {p1, d1};
}

FormalSeries recurrence_series(int n, double first_coeff) {
  std::vector<double> p0{1.0};
  std::vector<double> p1{0.0, first_coeff};
  if (n == 0) p1 = p0;
  for (int k = 1; k < n; ++k) {
    std::vector<double> p2(p1.size() + 1, 0.0);
    for (std::size_t i = 0; i < p1.size(); ++i) p2[i + 1] += 2.0 * p1[i];
    for (std::size_t i = 0; i < p0.size(); ++i) p2[i] -= p0[i];
    p0 = std::move(p1);
    p1 = std::move(p2);
  }
  std::vector<FormalSeries::Term> terms;
  for (std::size_t i = 0; i < p1.size(); ++i) terms.emplace_back(static_cast<int>(i), p1[i]);
  return FormalSeries::make(terms, 0, n);
}

}  // namespace

EllipseGeometry EllipseGeometry::from_c(double c) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("EllipseGeometry: c must be positive");
  return EllipseGeometry(c, std::cosh(c), std::sinh(c), std::exp(2.0 * c));
}

Complex chebyshev_T(int n, Complex z) {
  require_degree(n, "chebyshev_T");
  return recurrence(n, z, 1.0).value;
}

Complex chebyshev_U(int n, Complex z) {
  require_degree(n, "chebyshev_U");
  return recurrence(n, z, 2.0).value;
}

Complex chebyshev_T_derivative(int n, Complex z) {
  require_degree(n, "chebyshev_T_derivative");
  return recurrence(n, z, 1.0).slope;
}

Complex chebyshev_U_derivative(int n, Complex z) {
  require_degree(n, "chebyshev_U_derivative");
  return recurrence(n, z, 2.0).slope;
}

FormalSeries chebyshev_T_series(int n) {
  require_degree(n, "chebyshev_T_series");
  return recurrence_series(n, 1.0);
}

FormalSeries chebyshev_U_series(int n) {
  require_degree(n, "chebyshev_U_series");
  return recurrence_series(n, 2.0);
}

double bergman_norm_U(int n, const EllipseGeometry& geom) {
  require_degree(n, "bergman_norm_U");
  const double k = n + 1.0;
  return std::numbers::pi / (4.0 * k) * (std::pow(geom.rho(), k) - std::pow(geom.rho(), -k));
}

double bergman_norm_U_sinh(int n, const EllipseGeometry& geom) {
  require_degree(n, "bergman_norm_U_sinh");
  const double k = n + 1.0;
  return std::numbers::pi / (2.0 * k) * std::sinh(2.0 * k * geom.c());
}

Complex orthonormal_P(int n, const EllipseGeometry& geom, Complex z) {
  require_degree(n, "orthonormal_P");
  const double k = n + 1.0;
  const double scale = 2.0 * std::sqrt(k / std::numbers::pi) /
                       std::sqrt(std::pow(geom.rho(), k) - std::pow(geom.rho(), -k));
  return scale * chebyshev_U(n, z);
}

Complex bergman_inner_product(const std::function<Complex(Complex)>& p,
                              const std::function<Complex(Complex)>& q,
                              const EllipseGeometry& geom, int order) {
  if (order < 8) throw DomainError("bergman_inner_product: order must be >= 8");
  const QuadratureRule u_rule = gauss_legendre(2 * order, 0.0, std::numbers::pi);
  const QuadratureRule v_rule = gauss_legendre(order, -geom.c(), geom.c());
  ComplexCompensatedSum acc;
  for (std::size_t i = 0; i < u_rule.nodes.size(); ++i) {
    for (std::size_t j = 0; j < v_rule.nodes.size(); ++j) {
      const Complex w{u_rule.nodes[i], v_rule.nodes[j]};
      const Complex z = std::cos(w);
      const double jacobian = std::norm(std::sin(w));
      acc.add(u_rule.weights[i] * v_rule.weights[j] * jacobian * p(z) * std::conj(q(z)));
    }
  }
  return acc.value();
}

Complex bergman_inner_product(const FormalSeries& p, const FormalSeries& q,
                              const EllipseGeometry& geom, int order) {
  return bergman_inner_product([&](Complex z) { return evaluate(p, z); },
                               [&](Complex z) { return evaluate(q, z); }, geom, order);
}

std::vector<std::vector<Complex>> gram_matrix(ChebyshevFamily family, int nmax,
                                              const EllipseGeometry& geom, int order) {
  require_degree(nmax, "gram_matrix");
  auto basis = [&](int n) -> std::function<Complex(Complex)> {
    if (family == ChebyshevFamily::U) return [n](Complex z) { return chebyshev_U(n, z); };
    return [n, &geom](Complex z) { return orthonormal_P(n, geom, z); };
  };
  const auto size = static_cast<std::size_t>(nmax) + 1;
  std::vector<std::vector<Complex>> gram(size, std::vector<Complex>(size));
  for (int i = 0; i <= nmax; ++i) {
    for (int j = 0; j <= nmax; ++j) {
      gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          bergman_inner_product(basis(i), basis(j), geom, order);
    }
  }
  return gram;
}

double tprime_area(int n, const EllipseGeometry& geom) {
  if (n <= 0) return 0.0;
  return n * std::numbers::pi / 4.0 * (std::pow(geom.rho(), n) - std::pow(geom.rho(), -n));
}

double tprime_area_quadrature(int n, const EllipseGeometry& geom, int order) {
  require_degree(n, "tprime_area_quadrature");
  auto dt = [n](Complex z) { return chebyshev_T_derivative(n, z); };
  return bergman_inner_product(dt, dt, geom, order).real();
}

}  // namespace confarea
