#include "confarea/interpolation.hpp"

#include <cmath>
#include <numbers>

#include "confarea/chebyshev.hpp"
#include "confarea/compensated_sum.hpp"
#include "confarea/error.hpp"

namespace confarea {

namespace {
constexpr double kNodeSnap = 1e-14;
constexpr double kErrorFloor = 1e-13;
}  // namespace

NodeSet chebyshev_nodes(int n) {
  if (n < 1) throw DomainError("chebyshev_nodes: n must be >= 1");
  std::vector<double> nodes(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) {
    nodes[static_cast<std::size_t>(k - 1)] = std::cos(k * std::numbers::pi / (n + 1));
  }
  // cos is exactly odd; pin the mirror pairs and the middle node.
  for (int k = 0; k < n / 2; ++k) {
    nodes[static_cast<std::size_t>(n - 1 - k)] = -nodes[static_cast<std::size_t>(k)];
  }
  if (n % 2 == 1) nodes[static_cast<std::size_t>(n / 2)] = 0.0;
  return NodeSet(std::move(nodes));
}

Complex joukowski(Complex w) {
  if (w == Complex{}) throw DomainError("joukowski: w = 0");
  return 0.5 * (w + 1.0 / w);
}

Complex inverse_joukowski(Complex z) {
  // sqrt(z - 1) sqrt(z + 1) keeps the branch cut on [-1, 1].
  Complex w = z + std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
  if (w == Complex{}) w = z - std::sqrt(z - 1.0) * std::sqrt(z + 1.0);
  Complex other = 1.0 / w;
  if (std::abs(std::abs(w) - std::abs(other)) <= 1e-14) {
    if (w.imag() < other.imag()) std::swap(w, other);
    return w;
  }
  return std::abs(w) >= std::abs(other) ? w : other;
}

Complex nodal_polynomial(int n, Complex z, NodalForm form) {
  if (n < 1) throw DomainError("nodal_polynomial: n must be >= 1");
  const double scale = std::ldexp(1.0, -n);
  switch (form) {
    case NodalForm::product: {
      Complex acc{1.0, 0.0};
      const NodeSet nodes = chebyshev_nodes(n);
      for (double zk : nodes.nodes()) acc *= (z - zk);
      return acc;
    }
    case NodalForm::joukowski: {
      const Complex w = inverse_joukowski(z);
      if (std::abs(w * w - 1.0) < 1e-4) return scale * chebyshev_U(n, z);
      const Complex wn = std::pow(w, n + 1);
      return scale * (wn - 1.0 / wn) / (w - 1.0 / w);
    }
    case NodalForm::chebyshev:
      return scale * chebyshev_U(n, z);
  }
  return {};
}

AnalyticSampler::AnalyticSampler(std::function<Complex(Complex)> evaluator, double R)
    : evaluator_(std::move(evaluator)), R_(R) {
  if (!(R > 1.0)) throw DomainError("AnalyticSampler: R must exceed 1");
}

ChebyshevUInterpolant::ChebyshevUInterpolant(const AnalyticSampler& f, int n) : n_(n) {
  if (n < 1) throw DomainError("lagrange_interpolate: n must be >= 1");
  nodes_ = chebyshev_nodes(n).nodes();
  samples_.reserve(nodes_.size());
  slopes_.reserve(nodes_.size());
  for (double zk : nodes_) {
    samples_.push_back(f(zk));
    slopes_.push_back(chebyshev_U_derivative(n, zk));
  }
}

Complex ChebyshevUInterpolant::operator()(Complex z) const {
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    if (std::abs(z - nodes_[k]) <= kNodeSnap) return samples_[k];
  }
  // omega_n(z) / omega_n'(z_k) = U_n(z) / U_n'(z_k); the 2^{-n} cancels. The same
  // weights interpolate 1 exactly, so U_n(z) = 1 / sum_k 1/((z - z_k) U_n'(z_k)); dividing
  // by that sum instead of multiplying by a recurrence value of U_n keeps roundoff flat in n.
  ComplexCompensatedSum num;
  ComplexCompensatedSum den;
  for (std::size_t k = 0; k < nodes_.size(); ++k) {
    const Complex w = 1.0 / ((z - nodes_[k]) * slopes_[k]);
    num.add(samples_[k] * w);
    den.add(w);
  }
  return num.value() / den.value();
}

Complex lagrange_interpolate(const AnalyticSampler& f, int n, Complex z) {
  return ChebyshevUInterpolant(f, n)(z);
}

std::vector<ErrorPoint> interpolation_error_curve(const AnalyticSampler& f,
                                                  std::span<const int> n_range,
                                                  std::span<const double> eval_points) {
  for (double x : eval_points) {
    if (!(x >= -1.0 && x <= 1.0)) {
      throw DomainError("interpolation_error_curve: evaluation points must lie in [-1, 1]");
    }
  }
  std::vector<Complex> exact;
  exact.reserve(eval_points.size());
  for (double x : eval_points) exact.push_back(f(x));

  std::vector<ErrorPoint> curve;
  for (int n : n_range) {
    const ChebyshevUInterpolant interp(f, n);
    double worst = 0.0;
    for (std::size_t i = 0; i < eval_points.size(); ++i) {
      worst = std::max(worst, std::abs(exact[i] - interp(eval_points[i])));
    }
    curve.push_back({n, worst});
  }
  return curve;
}

std::vector<double> default_eval_points() {
  std::vector<double> pts;
  pts.reserve(181);
  for (int i = -90; i <= 90; ++i) pts.push_back(i / 100.0);
  return pts;
}

RateFit convergence_rate(std::span<const ErrorPoint> curve) {
  std::vector<double> xs;
  std::vector<double> ys;
  for (const auto& p : curve) {
    if (p.max_error > kErrorFloor && std::isfinite(p.max_error)) {
      xs.push_back(p.n);
      ys.push_back(std::log(p.max_error));
    }
  }
  if (xs.size() < 4) {
    throw InsufficientDataError("convergence_rate: fewer than 4 points above the precision floor");
  }
  const double count = static_cast<double>(xs.size());
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= count;
  my /= count;
  double sxy = 0.0;
  double sxx = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxy += (xs[i] - mx) * (ys[i] - my);
    sxx += (xs[i] - mx) * (xs[i] - mx);
  }
  RateFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  fit.log_R = -fit.slope;
  fit.points_used = static_cast<int>(xs.size());
  return fit;
}

double expected_log_R(Complex singularity) { return std::log(std::abs(inverse_joukowski(singularity))); }

}  // namespace confarea
