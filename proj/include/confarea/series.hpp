#pragma once

#include <complex>
#include <map>
#include <span>
#include <utility>
#include <vector>

namespace confarea {

using Complex = std::complex<double>;

/// Truncated Laurent/Taylor series stored sparsely as exponent -> coefficient
/// over a declared exponent range [min_exp, max_exp]. Absent exponents are
/// zero. Immutable once built.
class FormalSeries {
 public:
  using Term = std::pair<int, Complex>;

  /// The zero series on [0, 0].
  FormalSeries() = default;

  /// Throws ConstructionError on duplicate exponents, exponents outside
  /// [min_exp, max_exp], or min_exp > max_exp. Zero coefficients are dropped.
  static FormalSeries make(std::span<const Term> terms, int min_exp, int max_exp);

  int min_exp() const { return min_exp_; }
  int max_exp() const { return max_exp_; }
  const std::map<int, Complex>& terms() const { return coeffs_; }

  Complex coeff(int exponent) const;

  /// True when no stored exponent is negative.
  bool is_taylor() const;
  bool is_zero() const { return coeffs_.empty(); }

  friend bool operator==(const FormalSeries&, const FormalSeries&) = default;

 private:
  FormalSeries(std::map<int, Complex> coeffs, int min_exp, int max_exp)
      : coeffs_(std::move(coeffs)), min_exp_(min_exp), max_exp_(max_exp) {}

  std::map<int, Complex> coeffs_;
  int min_exp_ = 0;
  int max_exp_ = 0;
};

/// Coefficients C_n^alpha of (1 + u)^alpha, n = 0..trunc.
struct BinomialCoefficientSequence {
  double alpha = 1.0;
  std::vector<double> terms;
};

FormalSeries make_series(std::span<const FormalSeries::Term> terms, int min_exp, int max_exp);

/// Sum of coeff * z^e in ascending exponent order with compensated
/// accumulation. Throws DomainError for z = 0 when negative powers are stored.
Complex evaluate(const FormalSeries& s, Complex z);

FormalSeries derivative(const FormalSeries& s);

/// Termwise sum over the union of exponent ranges.
FormalSeries operator+(const FormalSeries& f, const FormalSeries& g);
FormalSeries operator*(Complex scale, const FormalSeries& f);

/// Truncated Cauchy (convolution) product, exponents 0..trunc.
/// Throws UnsupportedError when either input has negative powers.
FormalSeries cauchy_product(const FormalSeries& f, const FormalSeries& g, int trunc);

/// Coefficientwise product f_n * g_n, exponents 0..trunc.
FormalSeries hadamard_product(const FormalSeries& f, const FormalSeries& g, int trunc);

/// (1/2 pi i) \oint_{|w| = r} f(w) g(z/w) dw/w by the periodic trapezoid rule.
/// Equals evaluate(hadamard_product(f, g, .), z) whenever the contour lies in
/// the common annulus of convergence.
Complex hadamard_contour(const FormalSeries& f, const FormalSeries& g, Complex z, double r,
                         int nodes = 256);

/// C_n^alpha by the recurrence C_{n+1} = C_n (alpha - n) / (n + 1).
BinomialCoefficientSequence binomial_coefficients(double alpha, int trunc);

/// C_n^{1/m}. Throws DomainError for m < 1 or trunc < 0.
BinomialCoefficientSequence binomial_expansion(int m, int trunc);

/// Coefficients 1, b_1, b_2, ... of z f'(z) / f(z) for f = a_1 z + a_2 z^2 + ...,
/// exponents 0..trunc. Throws DegenerateInputError if a_1 = 0 or a_0 != 0.
FormalSeries log_derivative_coeffs(const FormalSeries& f, int trunc);

}  // namespace confarea
