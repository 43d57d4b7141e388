#include "confarea/series.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "confarea/compensated_sum.hpp"
#include "confarea/error.hpp"

namespace confarea {

namespace {

Complex int_pow(Complex z, int e) {
  if (e < 0) return 1.0 / int_pow(z, -e);
  Complex result{1.0, 0.0};
  Complex base = z;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

void require_taylor(const FormalSeries& s, const char* op) {
  if (!s.is_taylor()) {
    throw UnsupportedError(std::string(op) + ": Laurent input with negative powers is not supported");
  }
}

}  // namespace

FormalSeries FormalSeries::make(std::span<const Term> terms, int min_exp, int max_exp) {
  if (min_exp > max_exp) {
    throw ConstructionError("min_exp " + std::to_string(min_exp) + " exceeds max_exp " +
                            std::to_string(max_exp));
  }
  std::map<int, Complex> coeffs;
  std::map<int, bool> seen;
  for (const auto& [e, c] : terms) {
    if (e < min_exp || e > max_exp) {
      throw ConstructionError("exponent " + std::to_string(e) + " outside [" +
                              std::to_string(min_exp) + ", " + std::to_string(max_exp) + "]");
    }
    if (!seen.emplace(e, true).second) {
      throw ConstructionError("duplicate exponent " + std::to_string(e));
    }
    if (c != Complex{0.0, 0.0}) coeffs.emplace(e, c);
  }
  return FormalSeries(std::move(coeffs), min_exp, max_exp);
}

Complex FormalSeries::coeff(int exponent) const {
  auto it = coeffs_.find(exponent);
  return it == coeffs_.end() ? Complex{} : it->second;
}

bool FormalSeries::is_taylor() const { return coeffs_.empty() || coeffs_.begin()->first >= 0; }

FormalSeries make_series(std::span<const FormalSeries::Term> terms, int min_exp, int max_exp) {
  return FormalSeries::make(terms, min_exp, max_exp);
}

Complex evaluate(const FormalSeries& s, Complex z) {
  if (z == Complex{} && !s.is_taylor()) {
    throw DomainError("evaluate: z = 0 with negative powers present");
  }
  ComplexCompensatedSum acc;
  for (const auto& [e, c] : s.terms()) {
    if (e == 0) {
      acc.add(c);
    } else if (z != Complex{}) {
      acc.add(c * int_pow(z, e));
    }
  }
  return acc.value();
}

FormalSeries derivative(const FormalSeries& s) {
  std::vector<FormalSeries::Term> out;
  for (const auto& [e, c] : s.terms()) {
    if (e != 0) out.emplace_back(e - 1, static_cast<double>(e) * c);
  }
  const int lo = s.min_exp() >= 0 ? std::max(s.min_exp() - 1, 0) : s.min_exp() - 1;
  const int hi = std::max(lo, s.max_exp() - 1);
  return FormalSeries::make(out, lo, hi);
}

FormalSeries operator+(const FormalSeries& f, const FormalSeries& g) {
  std::map<int, Complex> sum = f.terms();
  for (const auto& [e, c] : g.terms()) sum[e] += c;
  std::vector<FormalSeries::Term> out(sum.begin(), sum.end());
  return FormalSeries::make(out, std::min(f.min_exp(), g.min_exp()),
                            std::max(f.max_exp(), g.max_exp()));
}

FormalSeries operator*(Complex scale, const FormalSeries& f) {
  std::vector<FormalSeries::Term> out;
  for (const auto& [e, c] : f.terms()) out.emplace_back(e, scale * c);
  return FormalSeries::make(out, f.min_exp(), f.max_exp());
}

FormalSeries cauchy_product(const FormalSeries& f, const FormalSeries& g, int trunc) {
  require_taylor(f, "cauchy_product");
  require_taylor(g, "cauchy_product");
  if (trunc < 0) throw DomainError("cauchy_product: trunc must be >= 0");
  std::vector<FormalSeries::Term> out;
  for (int n = 0; n <= trunc; ++n) {
    ComplexCompensatedSum acc;
    for (const auto& [j, fj] : f.terms()) {
      if (j > n) break;
      acc.add(fj * g.coeff(n - j));
    }
    out.emplace_back(n, acc.value());
  }
  return FormalSeries::make(out, 0, trunc);
}

FormalSeries hadamard_product(const FormalSeries& f, const FormalSeries& g, int trunc) {
  require_taylor(f, "hadamard_product");
  require_taylor(g, "hadamard_product");
  if (trunc < 0) throw DomainError("hadamard_product: trunc must be >= 0");
  std::vector<FormalSeries::Term> out;
  for (const auto& [n, fn] : f.terms()) {
    if (n > trunc) break;
    out.emplace_back(n, fn * g.coeff(n));
  }
  return FormalSeries::make(out, 0, trunc);
}

Complex hadamard_contour(const FormalSeries& f, const FormalSeries& g, Complex z, double r,
                         int nodes) {
  require_taylor(f, "hadamard_contour");
  require_taylor(g, "hadamard_contour");
  if (r <= 0.0) throw DomainError("hadamard_contour: radius must be positive");
  if (nodes < 4) throw DomainError("hadamard_contour: need at least 4 nodes");
  // With w = r e^{i theta}, dw / (2 pi i w) = d theta / (2 pi).
  ComplexCompensatedSum acc;
  for (int k = 0; k < nodes; ++k) {
    const double theta = 2.0 * std::numbers::pi * k / nodes;
    const Complex w = std::polar(r, theta);
    acc.add(evaluate(f, w) * evaluate(g, z / w));
  }
  return acc.value() / static_cast<double>(nodes);
}

BinomialCoefficientSequence binomial_coefficients(double alpha, int trunc) {
  if (trunc < 0) throw DomainError("binomial_coefficients: trunc must be >= 0");
  BinomialCoefficientSequence seq{alpha, {}};
  seq.terms.reserve(static_cast<std::size_t>(trunc) + 1);
  double c = 1.0;
  seq.terms.push_back(c);
  for (int n = 0; n < trunc; ++n) {
    c = c * (alpha - n) / (n + 1);
    seq.terms.push_back(c);
  }
  return seq;
}

BinomialCoefficientSequence binomial_expansion(int m, int trunc) {
  if (m < 1) throw DomainError("binomial_expansion: m must be >= 1");
  return binomial_coefficients(1.0 / m, trunc);
}

FormalSeries log_derivative_coeffs(const FormalSeries& f, int trunc) {
  require_taylor(f, "log_derivative_coeffs");
  if (trunc < 0) throw DomainError("log_derivative_coeffs: trunc must be >= 0");
  const Complex a1 = f.coeff(1);
  if (f.coeff(0) != Complex{}) {
    throw DegenerateInputError("log_derivative_coeffs: f(0) must vanish");
  }
  if (a1 == Complex{}) throw DegenerateInputError("log_derivative_coeffs: a_1 = 0");

  // Match z^p in (sum_j b_j z^j)(sum_n a_n z^n) = sum_n n a_n z^n:
  //   b_{p-1} a_1 = p a_p - sum_{j=0}^{p-2} b_j a_{p-j}.
  std::vector<Complex> b;
  b.reserve(static_cast<std::size_t>(trunc) + 1);
  for (int p = 1; p <= trunc + 1; ++p) {
    ComplexCompensatedSum acc;
    acc.add(static_cast<double>(p) * f.coeff(p));
    for (int j = 0; j + 2 <= p; ++j) acc.add(-b[static_cast<std::size_t>(j)] * f.coeff(p - j));
    b.push_back(acc.value() / a1);
  }
  std::vector<FormalSeries::Term> out;
  for (int j = 0; j <= trunc; ++j) out.emplace_back(j, b[static_cast<std::size_t>(j)]);
  return FormalSeries::make(out, 0, trunc);
}

}  // namespace confarea
