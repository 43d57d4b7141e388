#include "confarea/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "confarea/compensated_sum.hpp"
#include "confarea/error.hpp"

namespace confarea {

double QuadratureRule::integrate(const std::function<double(double)>& f) const {
  CompensatedSum acc;
  for (std::size_t i = 0; i < nodes.size(); ++i) acc.add(weights[i] * f(nodes[i]));
  return acc.value();
}

Complex QuadratureRule::integrate_complex(const std::function<Complex(double)>& f) const {
  ComplexCompensatedSum acc;
  for (std::size_t i = 0; i < nodes.size(); ++i) acc.add(weights[i] * f(nodes[i]));
  return acc.value();
}

QuadratureRule gauss_legendre(int n, double a, double b) {
  if (n < 1) throw DomainError("gauss_legendre: n must be >= 1");
  if (!(a < b)) throw DomainError("gauss_legendre: need a < b");

  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::gauss_legendre;
  rule.lower = a;
  rule.upper = b;
  rule.nodes.assign(static_cast<std::size_t>(n), 0.0);
  rule.weights.assign(static_cast<std::size_t>(n), 0.0);

  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const int roots = (n + 1) / 2;
  for (int i = 0; i < roots; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    bool converged = false;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      double pn = n == 1 ? x : p1;
      double pn_1 = n == 1 ? 1.0 : p0;
      dp = n * (x * pn - pn_1) / (x * x - 1.0);
      const double dx = pn / dp;
      x -= dx;
      if (std::abs(dx) <= 1e-15) {
        converged = true;
        break;
      }
    }
    if (!converged) {
      throw InternalError("gauss_legendre: Newton iteration did not converge for n = " +
                          std::to_string(n));
    }
    // Refresh P_n' at the converged root for the weight.
    double p0 = 1.0;
    double p1 = x;
    for (int k = 2; k <= n; ++k) {
      const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n == 1 ? 1.0 : n * (x * p1 - p0) / (x * x - 1.0);
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);

    // x is the i-th largest root; store ascending.
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = mid - half * x;
    rule.nodes[hi] = mid + half * x;
    rule.weights[lo] = half * w;
    rule.weights[hi] = half * w;
  }
  if (n % 2 == 1) rule.nodes[static_cast<std::size_t>(n / 2)] = mid;
  return rule;
}

QuadratureRule trapezoid_rule(int n, double period) {
  if (n < 4) throw DomainError("trapezoid_rule: n must be >= 4");
  QuadratureRule rule;
  rule.kind = QuadratureRule::Kind::periodic_trapezoid;
  rule.lower = 0.0;
  rule.upper = period;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.assign(static_cast<std::size_t>(n), period / n);
  for (int k = 0; k < n; ++k) rule.nodes[static_cast<std::size_t>(k)] = k * period / n;
  return rule;
}

Complex periodic_trapezoid(const std::function<Complex(double)>& g, int n, double period) {
  if (n < 4) throw DomainError("periodic_trapezoid: n must be >= 4");
  ComplexCompensatedSum acc;
  for (int k = 0; k < n; ++k) acc.add(g(k * period / n));
  return acc.value() * (period / n);
}

double disk_integral(const std::function<double(Complex)>& g, double r_inner, double r_outer,
                     int n_rad, int n_ang) {
  if (r_inner < 0.0 || !(r_inner < r_outer)) {
    throw DomainError("disk_integral: need 0 <= r_inner < r_outer");
  }
  const QuadratureRule radial = gauss_legendre(n_rad, r_inner, r_outer);
  const QuadratureRule angular = trapezoid_rule(n_ang, 2.0 * std::numbers::pi);
  CompensatedSum acc;
  for (std::size_t i = 0; i < radial.nodes.size(); ++i) {
    const double rho = radial.nodes[i];
    for (std::size_t j = 0; j < angular.nodes.size(); ++j) {
      acc.add(radial.weights[i] * angular.weights[j] * rho *
              g(std::polar(rho, angular.nodes[j])));
    }
  }
  return acc.value();
}

double curve_area_shoelace(std::span<const Complex> points) {
  if (points.size() < 3) throw DomainError("curve_area_shoelace: need at least 3 points");
  CompensatedSum acc;
  for (std::size_t k = 0; k < points.size(); ++k) {
    const Complex p = points[k];
    const Complex q = points[(k + 1) % points.size()];
    acc.add(p.real() * q.imag() - q.real() * p.imag());
  }
  return 0.5 * acc.value();
}

double curve_area_spectral(std::span<const Complex> points, std::span<const Complex> tangents,
                           double period) {
  if (points.size() < 3) throw DomainError("curve_area_spectral: need at least 3 points");
  if (points.size() != tangents.size()) {
    throw DomainError("curve_area_spectral: points and tangents differ in length");
  }
  CompensatedSum acc;
  for (std::size_t k = 0; k < points.size(); ++k) {
    acc.add((std::conj(points[k]) * tangents[k]).imag());
  }
  return 0.5 * acc.value() * period / static_cast<double>(points.size());
}

namespace {

double composite_gl(const std::function<double(double)>& f, double a, double b, int panels,
                    const QuadratureRule& ref) {
  CompensatedSum acc;
  if (!(a < b)) return 0.0;
  const double width = (b - a) / panels;
  for (int p = 0; p < panels; ++p) {
    const double lo = a + p * width;
    const double mid = lo + 0.5 * width;
    for (std::size_t i = 0; i < ref.nodes.size(); ++i) {
      acc.add(0.5 * width * ref.weights[i] * f(mid + 0.5 * width * ref.nodes[i]));
    }
  }
  return acc.value();
}

// \int_{s-d}^{s-eps} + \int_{s+eps}^{s+d} g, folded onto t in [eps, d] as
// g(s + t) + g(s - t) so the simple-pole parts cancel pointwise.
double excised_symmetric(const std::function<double(double)>& g, double s, double eps, double d,
                         const QuadratureRule& ref) {
  CompensatedSum acc;
  double lo = eps;
  while (lo < d) {
    const double hi = std::min(2.0 * lo, d);
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < ref.nodes.size(); ++i) {
      const double t = mid + half * ref.nodes[i];
      acc.add(half * ref.weights[i] * (g(s + t) + g(s - t)));
    }
    lo = hi;
  }
  return acc.value();
}

}  // namespace

double principal_value_radial(const std::function<double(double)>& g, double singularity,
                              int nodes_per_panel, double lower, double upper) {
  constexpr std::array<double, 3> kEps{1e-2, 1e-3, 1e-4};
  const double s = singularity;
  if (!(lower < s && s < upper)) {
    throw DomainError("principal_value_radial: singularity must lie inside the interval");
  }
  const double d = std::min(s - lower, upper - s);
  if (d <= kEps.front()) {
    throw DomainError("principal_value_radial: singularity too close to an endpoint");
  }
  const QuadratureRule ref = gauss_legendre(nodes_per_panel);

  // The part of [lower, upper] not mirrored around s.
  const double outer = s - lower > upper - s ? composite_gl(g, lower, s - d, 8, ref)
                                             : composite_gl(g, s + d, upper, 8, ref);

  std::array<double, 3> est{};
  for (std::size_t i = 0; i < kEps.size(); ++i) {
    est[i] = outer + excised_symmetric(g, s, kEps[i], d, ref);
  }
  // Excised remainder is O(eps); eps shrinks by 10 between estimates.
  const double r1 = (10.0 * est[1] - est[0]) / 9.0;
  const double r2 = (10.0 * est[2] - est[1]) / 9.0;

  const double step_old = std::abs(est[1] - est[0]);
  const double step_new = std::abs(est[2] - est[1]);
  const double floor = 1e-13 * (1.0 + std::abs(est[2]));
  if (!std::isfinite(r1) || !std::isfinite(r2) || (step_new > step_old && step_new > floor)) {
    throw PrincipalValueError("principal_value_radial: excision estimates do not converge");
  }
  return r2;
}

}  // namespace confarea
