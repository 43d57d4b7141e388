#include "confarea/regions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "confarea/compensated_sum.hpp"
#include "confarea/error.hpp"
#include "confarea/quadrature.hpp"

namespace confarea {

namespace {

constexpr double kPi = std::numbers::pi;

// Godfrey's coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos{
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

// log(Gamma(x - alpha) / Gamma(x + 1)). For large x the two Stirling series
// are subtracted analytically so the O(x log x) parts cancel exactly.
double log_gamma_ratio(double x, double alpha) {
  if (x < 50.0) return std::lgamma(x - alpha) - std::lgamma(x + 1.0);
  auto correction = [](double z) {
    const double iz = 1.0 / z;
    const double iz2 = iz * iz;
    return iz * (1.0 / 12.0 - iz2 * (1.0 / 360.0 - iz2 / 1260.0));
  };
  return -(1.0 + alpha) * std::log(x) + (x - alpha - 0.5) * std::log1p(-alpha / x) -
         (x + 0.5) * std::log1p(1.0 / x) + (1.0 + alpha) + correction(x - alpha) -
         correction(x + 1.0);
}

void require_m(int m, const char* op) {
  if (m < 1) throw DomainError(std::string(op) + ": m must be >= 1");
}

void require_alpha(double alpha, const char* op) {
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError(std::string(op) + ": alpha must lie in (0, 1]");
  }
}

double unit_disk_ratio_log(Complex zp, const char* op) {
  const double s2 = std::norm(zp);
  if (!(s2 > 0.0 && s2 < 1.0)) throw DomainError(std::string(op) + ": need 0 < |z_p| < 1");
  return std::log(std::abs((1.0 - s2) / s2));
}

}  // namespace

double gamma(double x) {
  if (!(x > 0.0)) throw DomainError("gamma: argument must be positive");
  if (x < 0.5) return gamma(x + 1.0) / x;
  const double z = x - 1.0;
  double sum = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) sum += kLanczos[i] / (z + static_cast<double>(i));
  const double t = z + kLanczosG + 0.5;
  // t^{z+1/2} e^{-t} through exp(log) so large arguments overflow only at the end.
  return std::sqrt(2.0 * kPi) * std::exp((z + 0.5) * std::log(t) - t) * sum;
}

LaurentTail lemniscate_tail(int m, int trunc) {
  require_m(m, "lemniscate_tail");
  if (trunc < 0) throw DomainError("lemniscate_tail: trunc must be >= 0");
  const auto c = binomial_expansion(m, trunc);
  std::vector<Complex> b(static_cast<std::size_t>(std::max(m * trunc, 1)));
  for (int n = 1; n <= trunc; ++n) {
    b[static_cast<std::size_t>(m * n - 1)] = c.terms[static_cast<std::size_t>(n)];
  }
  return LaurentTail(std::move(b));
}

TailEstimate binomial_square_tail(double alpha, double c0, double c1, long long n_cut) {
  require_alpha(alpha, "binomial_square_tail");
  if (n_cut < 0) throw DomainError("binomial_square_tail: n_cut must be >= 0");

  // Explicit terms n_cut + 1 .. n_switch.
  constexpr long long kSwitch = 64;
  const long long n_switch = std::max(n_cut, kSwitch);
  CompensatedSum explicit_sum;
  double c = 1.0;
  for (long long n = 0; n < n_switch; ++n) {
    c = c * (alpha - static_cast<double>(n)) / static_cast<double>(n + 1);
    const long long k = n + 1;
    if (k > n_cut) explicit_sum.add((c0 + c1 * static_cast<double>(k)) * c * c);
  }

  // C_n vanishes for n > alpha when alpha is an integer.
  if (alpha == std::floor(alpha)) return {explicit_sum.value(), 0.0};

  const double g = gamma(1.0 - alpha);
  const double scale = alpha * alpha / (g * g);  // 1 / Gamma(-alpha)^2
  auto h = [&](double x) {
    return (c0 + c1 * x) * std::exp(2.0 * log_gamma_ratio(x, alpha)) * scale;
  };

  // \int_N^inf h(x) dx with x = N e^y; x h(x) decays like e^{-2 alpha y}.
  const double n0 = static_cast<double>(n_switch);
  const double y_max = 40.0 / (2.0 * alpha);
  const int panels = static_cast<int>(std::ceil(y_max / 4.0));
  const QuadratureRule ref = gauss_legendre(16);
  CompensatedSum integral;
  const double width = y_max / panels;
  for (int p = 0; p < panels; ++p) {
    const double mid = (p + 0.5) * width;
    for (std::size_t i = 0; i < ref.nodes.size(); ++i) {
      const double x = n0 * std::exp(mid + 0.5 * width * ref.nodes[i]);
      integral.add(0.5 * width * ref.weights[i] * h(x) * x);
    }
  }

  const double d = 0.01 * n0;
  const double h_n = h(n0);
  const double h1 = (8.0 * (h(n0 + d) - h(n0 - d)) - (h(n0 + 2.0 * d) - h(n0 - 2.0 * d))) / (12.0 * d);
  const double h3 =
      (h(n0 + 2.0 * d) - 2.0 * h(n0 + d) + 2.0 * h(n0 - d) - h(n0 - 2.0 * d)) / (2.0 * d * d * d);
  const double remainder = integral.value() - 0.5 * h_n - h1 / 12.0 + h3 / 720.0;

  return {explicit_sum.value() + remainder, std::abs(h3 / 720.0)};
}

AreaReport lemniscate_area_series(int m, int trunc, TailMode mode) {
  require_m(m, "lemniscate_area_series");
  if (trunc < 1) throw DomainError("lemniscate_area_series: trunc must be >= 1");
  const auto c = binomial_expansion(m, trunc);
  CompensatedSum s;
  s.add(1.0);
  for (int n = 1; n <= trunc; ++n) {
    const double cn = c.terms[static_cast<std::size_t>(n)];
    s.add((1.0 - static_cast<double>(m) * n) * cn * cn);
  }
  const TailEstimate tail = binomial_square_tail(1.0 / m, 1.0, -static_cast<double>(m), trunc);

  AreaReport report;
  report.method = AreaMethod::series;
  report.order = trunc;
  if (mode == TailMode::none) {
    report.value = kPi * s.value();
    report.est_error = kPi * std::abs(tail.value);
    if (report.est_error > 1e-8) {
      report.warnings.emplace_back("truncated partial sum; estimated remainder " +
                                   std::to_string(report.est_error));
    }
  } else {
    report.value = kPi * (s.value() + tail.value);
    report.est_error = kPi * tail.est_error + 1e-14 * std::abs(report.value);
  }
  return report;
}

AreaReport lemniscate_area_closed(int m) {
  require_m(m, "lemniscate_area_closed");
  const double inv_m = 1.0 / m;
  AreaReport report;
  report.value = std::pow(2.0, 2.0 * inv_m - 1.0) * gamma(inv_m + 0.5) / gamma(inv_m + 1.0) *
                 std::sqrt(kPi);
  report.method = AreaMethod::closed_form;
  report.order = 0;
  report.est_error = 1e-14 * report.value;
  return report;
}

namespace {

// m \int_0^{pi/2m} cos^{2/m}(m phi) d phi in t = pi/2m - phi, where the
// integrand is sin^{2/m}(m t) ~ (m t)^{2/m} at t = 0.
double lemniscate_polar_integral(int m, int order) {
  const double p = 2.0 / m;
  const double t_end = kPi / (2.0 * m);
  const double t_split = t_end * 1e-3;
  constexpr int kGradedPanels = 50;
  const double t_min = std::ldexp(t_split, -kGradedPanels);
  const QuadratureRule ref = gauss_legendre(order);
  auto f = [&](double t) { return std::pow(std::sin(m * t), p); };

  CompensatedSum acc;
  // Analytic leading term on [0, t_min].
  acc.add(std::pow(m, p) * std::pow(t_min, p + 1.0) / (p + 1.0));
  double lo = t_min;
  while (lo < t_end) {
    const double hi = std::min(2.0 * lo, t_end);
    const double mid = 0.5 * (lo + hi);
    const double half = 0.5 * (hi - lo);
    for (std::size_t i = 0; i < ref.nodes.size(); ++i) {
      acc.add(half * ref.weights[i] * f(mid + half * ref.nodes[i]));
    }
    lo = hi;
  }
  return m * acc.value();
}

}  // namespace

AreaReport lemniscate_area_polar(int m, int order) {
  require_m(m, "lemniscate_area_polar");
  if (order < 16) throw DomainError("lemniscate_area_polar: order must be >= 16");
  const double scale = std::pow(2.0, 2.0 / m);
  const double fine = scale * lemniscate_polar_integral(m, order);
  const double coarse = scale * lemniscate_polar_integral(m, order / 2);
  AreaReport report;
  report.value = fine;
  report.method = AreaMethod::quadrature;
  report.order = order;
  report.est_error = std::abs(fine - coarse);
  return report;
}

namespace {

BinomialSumResult binomial_sum(double alpha, bool weighted) {
  constexpr long long kMaxTerms = 1'000'000;
  constexpr double kStop = 1e-14;
  BinomialSumResult result;
  CompensatedSum acc;
  double c = 1.0;
  long long k = 0;
  acc.add(weighted ? 0.0 : 1.0);
  while (k < kMaxTerms) {
    c = c * (alpha - static_cast<double>(k)) / static_cast<double>(k + 1);
    ++k;
    const double term = (weighted ? static_cast<double>(k) : 1.0) * c * c;
    acc.add(term);
    if (term < kStop) break;
  }
  result.partial_sum = acc.value();
  result.terms_used = k;
  const TailEstimate tail =
      binomial_square_tail(alpha, weighted ? 0.0 : 1.0, weighted ? 1.0 : 0.0, k);
  result.tail = tail.value;
  result.tail_error = tail.est_error;
  result.numeric = result.partial_sum + result.tail;
  return result;
}

}  // namespace

BinomialSumResult binomial_sq_sum(double alpha) {
  require_alpha(alpha, "binomial_sq_sum");
  BinomialSumResult r = binomial_sum(alpha, false);
  const double g = gamma(alpha + 1.0);
  r.closed_form = gamma(2.0 * alpha + 1.0) / (g * g);
  return r;
}

BinomialSumResult binomial_sq_weighted_sum(double alpha) {
  require_alpha(alpha, "binomial_sq_weighted_sum");
  BinomialSumResult r = binomial_sum(alpha, true);
  const double g = gamma(alpha);
  r.closed_form = gamma(2.0 * alpha) / (g * g);
  return r;
}

AreaReport cardioid_area(int order, double scale) {
  if (order < 8) throw DomainError("cardioid_area: order must be >= 8");
  const Complex total = periodic_trapezoid(
      [&](double t) {
        const double r = scale * (1.0 + std::cos(t));
        return Complex{0.5 * r * r, 0.0};
      },
      order, 2.0 * kPi);
  AreaReport report;
  report.value = total.real();
  report.method = AreaMethod::quadrature;
  report.order = order;
  report.est_error = 4.0 * std::numeric_limits<double>::epsilon() * report.value;
  return report;
}

PointMassSpec::PointMassSpec(std::vector<Complex> points) : points_(std::move(points)) {
  for (std::size_t i = 0; i < points_.size(); ++i) {
    const double a = std::abs(points_[i]);
    if (!(a > 0.0 && a < 1.0)) throw DomainError("PointMassSpec: need 0 < |z_p| < 1");
    for (std::size_t j = 0; j < i; ++j) {
      if (points_[j] == points_[i]) throw DomainError("PointMassSpec: repeated point");
    }
  }
}

double pointmass_I(Complex zp) { return unit_disk_ratio_log(zp, "pointmass_I"); }

double pointmass_J(Complex zp) {
  return 0.5 + 2.0 * std::norm(zp) * unit_disk_ratio_log(zp, "pointmass_J");
}

double pointmass_I_oracle(Complex zp) {
  unit_disk_ratio_log(zp, "pointmass_I_oracle");
  const double s2 = std::norm(zp);
  return principal_value_radial([s2](double r) { return 2.0 * r / (r * r - s2); }, std::abs(zp));
}

double pointmass_J_oracle(Complex zp) {
  unit_disk_ratio_log(zp, "pointmass_J_oracle");
  const double s2 = std::norm(zp);
  return principal_value_radial(
      [s2](double r) { return r * (r * r + 3.0 * s2) / (r * r - s2); }, std::abs(zp));
}

PointMassSums pointmass_sums(const PointMassSpec& spec) {
  PointMassSums out;
  CompensatedSum sum_i;
  CompensatedSum sum_j;
  double product = 1.0;
  double weighted_log = 0.0;
  for (const Complex& zp : spec.points()) {
    sum_i.add(kPi * pointmass_I(zp));
    sum_j.add(2.0 * kPi * pointmass_J(zp));
    const double s2 = std::norm(zp);
    const double ratio = (1.0 - s2) / s2;
    product *= ratio;
    weighted_log += std::log(std::pow(ratio, 2.0 * s2));
  }
  out.sum_I = sum_i.value();
  out.sum_J = sum_j.value();
  const double m = static_cast<double>(spec.points().size());
  out.sum_I_aggregate = spec.points().empty() ? 0.0 : kPi * std::log(std::abs(product));
  out.sum_J_aggregate = m * kPi + 2.0 * kPi * weighted_log;
  return out;
}

}  // namespace confarea
