#include "confarea/area.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "confarea/compensated_sum.hpp"
#include "confarea/error.hpp"
#include "confarea/quadrature.hpp"

namespace confarea {

namespace {

constexpr double kPi = std::numbers::pi;

void require_taylor(const FormalSeries& f, const char* op) {
  if (!f.is_taylor()) {
    throw UnsupportedError(std::string(op) + ": Laurent input with negative powers is not supported");
  }
}

}  // namespace

std::string_view to_string(AreaMethod method) {
  switch (method) {
    case AreaMethod::series:
      return "series";
    case AreaMethod::closed_form:
      return "closed_form";
    case AreaMethod::quadrature:
      return "quadrature";
  }
  return "unknown";
}

LaurentTail LaurentTail::from_series(const FormalSeries& s) {
  if (s.max_exp() > 1) {
    throw ParseError("Laurent tail: exponents above 1 are not allowed");
  }
  for (const auto& [e, c] : s.terms()) {
    if (e == 1 && c != Complex{1.0, 0.0}) {
      throw ParseError("Laurent tail: the z coefficient must be 1");
    }
  }
  const int degree = std::max(0, -s.min_exp());
  std::vector<Complex> b(static_cast<std::size_t>(degree) + 1);
  for (const auto& [e, c] : s.terms()) {
    if (e <= 0) b[static_cast<std::size_t>(-e)] = c;
  }
  return LaurentTail(std::move(b));
}

Complex LaurentTail::map(Complex z) const {
  // Horner in 1/z for the tail.
  const Complex inv = 1.0 / z;
  Complex acc{};
  for (auto it = b_.rbegin(); it != b_.rend(); ++it) acc = acc * inv + *it;
  return z + acc;
}

Complex LaurentTail::map_derivative(Complex z) const {
  // d/dz b_n z^{-n} = -n b_n z^{-n-1}
  const Complex inv = 1.0 / z;
  Complex acc{};
  for (std::size_t n = b_.size(); n-- > 1;) acc = acc * inv - static_cast<double>(n) * b_[n];
  return 1.0 + acc * inv * inv;
}

FormalSeries LaurentTail::as_series() const {
  std::vector<FormalSeries::Term> terms{{1, Complex{1.0, 0.0}}};
  for (std::size_t n = 0; n < b_.size(); ++n) terms.emplace_back(-static_cast<int>(n), b_[n]);
  return FormalSeries::make(terms, -std::max(degree(), 0), 1);
}

AreaReport gronwall_area(const LaurentTail& tail, double r) {
  if (!(r > 0.0)) throw DomainError("gronwall_area: r must be positive");
  CompensatedSum tail_sum;
  const auto& b = tail.coefficients();
  for (std::size_t n = 1; n < b.size(); ++n) {
    tail_sum.add(static_cast<double>(n) * std::norm(b[n]) * std::pow(r, -2.0 * static_cast<double>(n)));
  }
  AreaReport report;
  report.value = kPi * (r * r - tail_sum.value());
  report.method = AreaMethod::series;
  report.order = tail.degree();
  report.est_error = 4.0 * std::numeric_limits<double>::epsilon() * kPi * (r * r + tail_sum.value());
  if (report.value < 0.0) {
    report.warnings.emplace_back("negative area: the map cannot be univalent on |z| > r");
  }
  return report;
}

std::vector<Complex> image_curve(const LaurentTail& tail, double r, int nodes) {
  std::vector<Complex> pts(static_cast<std::size_t>(nodes));
  for (int k = 0; k < nodes; ++k) {
    pts[static_cast<std::size_t>(k)] = tail.map(std::polar(r, 2.0 * kPi * k / nodes));
  }
  return pts;
}

AreaReport gronwall_area_quadrature(const LaurentTail& tail, double r, int nodes) {
  if (!(r > 0.0)) throw DomainError("gronwall_area_quadrature: r must be positive");
  if (nodes < 8) throw DomainError("gronwall_area_quadrature: need at least 8 nodes");
  auto area_with = [&](int n) {
    std::vector<Complex> pts(static_cast<std::size_t>(n));
    std::vector<Complex> tangents(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
      const Complex z = std::polar(r, 2.0 * kPi * k / n);
      pts[static_cast<std::size_t>(k)] = tail.map(z);
      tangents[static_cast<std::size_t>(k)] = Complex{0.0, 1.0} * z * tail.map_derivative(z);
    }
    return curve_area_spectral(pts, tangents, 2.0 * kPi);
  };
  AreaReport report;
  report.value = area_with(nodes);
  report.method = AreaMethod::quadrature;
  report.order = nodes;
  report.est_error = std::abs(report.value - area_with(nodes / 2));
  return report;
}

TailCheck univalent_tail_check(const LaurentTail& tail) {
  CompensatedSum s;
  const auto& b = tail.coefficients();
  for (std::size_t n = 1; n < b.size(); ++n) s.add(static_cast<double>(n) * std::norm(b[n]));
  const double slack = 1.0 - s.value();
  return {slack >= 0.0, slack};
}

double annulus_norm(const FormalSeries& f, double r, double R) {
  if (r < 0.0 || !(r < R)) throw DomainError("annulus_norm: need 0 <= r < R");
  if (f.coeff(-1) != Complex{}) {
    throw UnsupportedError("annulus_norm: nonzero coefficient at exponent -1 (logarithmic term)");
  }
  if (r == 0.0 && !f.is_taylor()) {
    throw DomainError("annulus_norm: negative powers need r > 0");
  }
  CompensatedSum acc;
  for (const auto& [n, a] : f.terms()) {
    const double p = 2.0 * n + 2.0;
    acc.add((std::pow(R, p) - std::pow(r, p)) / (n + 1.0) * std::norm(a));
  }
  return kPi * acc.value();
}

double annulus_norm_quadrature(const FormalSeries& f, double r, double R, int n_rad, int n_ang) {
  return disk_integral([&](Complex z) { return std::norm(evaluate(f, z)); }, r, R, n_rad, n_ang);
}

std::vector<CoefficientBound> coefficient_bounds_report(const FormalSeries& f, double r, double R,
                                                        int kmax) {
  require_taylor(f, "coefficient_bounds_report");
  if (r < 0.0 || !(r < R)) throw DomainError("coefficient_bounds_report: need 0 <= r < R");
  const double norm = annulus_norm(f, r, R);
  std::vector<CoefficientBound> rows;
  double factorial = 1.0;
  for (int k = 0; k <= kmax; ++k) {
    if (k > 0) factorial *= k;
    const double p = 2.0 * k + 2.0;
    const double shell = std::pow(R, p) - std::pow(r, p);
    CoefficientBound row;
    row.k = k;
    row.derivative_magnitude = factorial * std::abs(f.coeff(k));
    if (k == 0) {
      row.naive_bound = norm / shell;
      row.naive_bound_on_square = true;
    } else if (k == 1) {
      row.naive_bound = 2.0 * norm / shell;
      row.naive_bound_on_square = true;
    } else {
      row.naive_bound = factorial * (k + 1.0) / shell * norm;
    }
    row.derived_bound = factorial * std::sqrt(norm * (k + 1.0) / (kPi * shell));
    row.derived_holds = row.derivative_magnitude <= row.derived_bound * (1.0 + 1e-12) + 1e-300;
    rows.push_back(row);
  }
  return rows;
}

double circle_mean_square(const FormalSeries& f, double r) {
  if (!(r > 0.0)) throw DomainError("circle_mean_square: r must be positive");
  CompensatedSum acc;
  for (const auto& [n, a] : f.terms()) acc.add(std::norm(a) * std::pow(r, 2.0 * n));
  return acc.value();
}

double circle_mean_square_quadrature(const FormalSeries& f, double r, int nodes) {
  if (!(r > 0.0)) throw DomainError("circle_mean_square_quadrature: r must be positive");
  const Complex total = periodic_trapezoid(
      [&](double t) { return Complex{std::norm(evaluate(f, std::polar(r, t))), 0.0}; }, nodes,
      2.0 * kPi);
  return total.real() / (2.0 * kPi);
}

double radial_area(const FormalSeries& f, double r, MapOrientation orientation) {
  if (!(r > 0.0)) throw DomainError("radial_area: r must be positive");
  CompensatedSum acc;
  for (const auto& [n, a] : f.terms()) acc.add(n * std::norm(a) * std::pow(r, 2.0 * n));
  const double interior = kPi * acc.value();
  return orientation == MapOrientation::interior_map ? interior : -interior;
}

AreaReport green_boundary_area(const FormalSeries& f, double r, int nodes) {
  if (!(r > 0.0)) throw DomainError("green_boundary_area: r must be positive");
  if (nodes < 16) throw DomainError("green_boundary_area: need at least 16 nodes");
  const FormalSeries df = derivative(f);
  // dz = i z d theta, so (1/2i) f' conj(f) dz = (1/2) z f' conj(f) d theta.
  const Complex total = periodic_trapezoid(
      [&](double t) {
        const Complex z = std::polar(r, t);
        return 0.5 * z * evaluate(df, z) * std::conj(evaluate(f, z));
      },
      nodes, 2.0 * kPi);
  AreaReport report;
  report.value = total.real();
  report.method = AreaMethod::quadrature;
  report.order = nodes;
  report.est_error = std::abs(total.imag());
  return report;
}

double dirichlet_area(const FormalSeries& f) {
  CompensatedSum acc;
  for (const auto& [n, a] : f.terms()) acc.add(n * std::norm(a));
  return kPi * acc.value();
}

double double_contour_functional(const FormalSeries& f, FunctionalVariant variant, int nodes) {
  require_taylor(f, "double_contour_functional");
  if (variant == FunctionalVariant::coefficient) return 4.0 * kPi * dirichlet_area(f);

  if (nodes < 4) throw DomainError("double_contour_functional: need at least 4 nodes");
  const FormalSeries df = derivative(f);
  std::vector<Complex> pts(static_cast<std::size_t>(nodes));
  std::vector<Complex> vals(pts.size());
  std::vector<double> diag(pts.size());
  for (std::size_t k = 0; k < pts.size(); ++k) {
    pts[k] = std::polar(1.0, 2.0 * kPi * static_cast<double>(k) / nodes);
    vals[k] = evaluate(f, pts[k]);
    diag[k] = std::norm(evaluate(df, pts[k]));
  }
  CompensatedSum acc;
  for (std::size_t j = 0; j < pts.size(); ++j) {
    for (std::size_t k = 0; k < pts.size(); ++k) {
      acc.add(j == k ? diag[j] : std::norm(vals[j] - vals[k]) / std::norm(pts[j] - pts[k]));
    }
  }
  const double h = 2.0 * kPi / nodes;
  return acc.value() * h * h;
}

double area_from_functional(double functional) {
  if (functional < 0.0) throw DomainError("area_from_functional: functional must be >= 0");
  return functional / (4.0 * kPi);
}

double zfprime_area(const FormalSeries& f, int trunc) {
  const FormalSeries c = cauchy_product(log_derivative_coeffs(f, trunc), f, trunc);
  return dirichlet_area(c);
}

double zfprime_area_quadrature(const FormalSeries& f, int n_rad, int n_ang) {
  const FormalSeries d1 = derivative(f);
  const FormalSeries d2 = derivative(d1);
  return disk_integral(
      [&](Complex z) { return std::norm(evaluate(d1, z) + z * evaluate(d2, z)); }, 0.0, 1.0, n_rad,
      n_ang);
}

}  // namespace confarea
