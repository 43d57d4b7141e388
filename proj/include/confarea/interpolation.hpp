#pragma once

#include <complex>
#include <functional>
#include <span>
#include <vector>

namespace confarea {

using Complex = std::complex<double>;

/// Zeros z_k = cos(k pi / (n + 1)), k = 1..n, of U_n: strictly decreasing,
/// symmetric about 0.
class NodeSet {
 public:
  int n() const { return static_cast<int>(nodes_.size()); }
  const std::vector<double>& nodes() const { return nodes_; }

 private:
  friend NodeSet chebyshev_nodes(int n);
  explicit NodeSet(std::vector<double> nodes) : nodes_(std::move(nodes)) {}
  std::vector<double> nodes_;
};

/// Throws DomainError for n < 1.
NodeSet chebyshev_nodes(int n);

/// z = (w + 1/w) / 2. Throws DomainError for w = 0.
Complex joukowski(Complex w);

/// Root of w^2 - 2 z w + 1 = 0 with |w| >= 1; on |w| = 1 the root with
/// nonnegative imaginary part.
Complex inverse_joukowski(Complex z);

enum class NodalForm { product, joukowski, chebyshev };

/// omega_n(z) = prod (z - z_k) = U_n(z) / 2^n
///            = 2^{-n} (w^{n+1} - w^{-n-1}) / (w - w^{-1}),  z = joukowski(w).
/// The joukowski form falls back to the chebyshev form when w is within 1e-4
/// of +-1, where the quotient is a removable 0/0.
Complex nodal_polynomial(int n, Complex z, NodalForm form);

/// A function analytic inside the ellipse E_R = {|z + sqrt(z^2 - 1)| = R}.
class AnalyticSampler {
 public:
  /// Throws DomainError unless R > 1.
  AnalyticSampler(std::function<Complex(Complex)> evaluator, double R);

  Complex operator()(Complex z) const { return evaluator_(z); }
  double R() const { return R_; }

 private:
  std::function<Complex(Complex)> evaluator_;
  double R_;
};

/// Degree n-1 interpolant at the zeros of U_n in the nodal form
/// L(z) = sum_k omega_n(z) / ((z - z_k) omega_n'(z_k)) f(z_k),
/// with omega_n'(z_k) from the differentiated U recurrence. Samples are taken
/// once at construction.
class ChebyshevUInterpolant {
 public:
  ChebyshevUInterpolant(const AnalyticSampler& f, int n);

  /// Returns f(z_k) exactly when |z - z_k| <= 1e-14.
  Complex operator()(Complex z) const;
  int n() const { return n_; }

 private:
  int n_;
  std::vector<double> nodes_;
  std::vector<Complex> samples_;
  std::vector<Complex> slopes_;  // U_n'(z_k)
};

/// Throws DomainError for n < 1.
Complex lagrange_interpolate(const AnalyticSampler& f, int n, Complex z);

struct ErrorPoint {
  int n = 0;
  double max_error = 0.0;
};

/// max_x |f(x) - L_{n-1}(x)| over the evaluation points for each n.
/// Throws DomainError for an evaluation point outside [-1, 1].
std::vector<ErrorPoint> interpolation_error_curve(const AnalyticSampler& f,
                                                  std::span<const int> n_range,
                                                  std::span<const double> eval_points);

/// 181 equispaced points on [-0.9, 0.9]. Near +-1 the nodal polynomial grows
/// like n + 1, which slows the observed decay over short n ranges.
std::vector<double> default_eval_points();

struct RateFit {
  double log_R = 0.0;  // -slope
  double slope = 0.0;
  double intercept = 0.0;
  int points_used = 0;
};

/// Least-squares slope of log(max_error) against n over points with
/// max_error > 1e-13. Throws InsufficientDataError for fewer than 4 points.
RateFit convergence_rate(std::span<const ErrorPoint> curve);

/// log |w(s)| for the singularity s: the rate the fit should recover.
double expected_log_R(Complex singularity);

}  // namespace confarea
