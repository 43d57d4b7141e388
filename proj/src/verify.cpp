#include "confarea/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <map>
#include <numbers>

#include "confarea/chebyshev.hpp"
#include "confarea/error.hpp"
#include "confarea/interpolation.hpp"
#include "confarea/random.hpp"
#include "confarea/regions.hpp"

namespace confarea {

namespace {

constexpr double kPi = std::numbers::pi;

class Collector {
 public:
  explicit Collector(std::string suite) : suite_(std::move(suite)) {}

  void check(std::string name, double residual, double tolerance) {
    results_.push_back({suite_, std::move(name), residual, tolerance,
                        std::isfinite(residual) && residual <= tolerance});
  }
  std::vector<CheckResult> take() { return std::move(results_); }

 private:
  std::string suite_;
  std::vector<CheckResult> results_;
};

double rel(double a, double b) { return std::abs(a - b) / std::max(std::abs(b), 1e-300); }

std::vector<CheckResult> parseval_suite() {
  Collector out("parseval");
  Rng rng(0x9a25e7a1);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const FormalSeries f = random_laurent(rng, rng.integer(1, 8));
    for (double r : {0.5, 1.0, 2.0}) {
      worst = std::max(worst, std::abs(circle_mean_square(f, r) - circle_mean_square_quadrature(f, r)));
    }
  }
  out.check("coefficient form vs 256-node trapezoid, 50 Laurent polynomials", worst, 1e-10);
  return out.take();
}

std::vector<CheckResult> gronwall_suite(const std::optional<LaurentTail>& user_tail) {
  Collector out("gronwall");
  const LaurentTail ellipse({0.0, 1.0});
  out.check("ellipse b1=1, r=2 equals 15 pi / 4",
            rel(gronwall_area(ellipse, 2.0).value, 15.0 * kPi / 4.0), 1e-14);
  out.check("ellipse b1=1, r=2 vs boundary quadrature",
            rel(gronwall_area(ellipse, 2.0).value, gronwall_area_quadrature(ellipse, 2.0).value), 1e-8);

  Rng rng(0x6e0a7a11);
  double worst = 0.0;
  int monotone_violations = 0;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Complex> b(static_cast<std::size_t>(rng.integer(2, 9)));
    for (auto& c : b) c = rng.complex_in_box(1.0);
    LaurentTail tail(b);
    // Rescale b_n (n >= 1) so that slack = 1 - sum n |b_n|^2 lands in [0.5, 1].
    const double load = 1.0 - univalent_tail_check(tail).slack;
    const double target = rng.uniform(0.0, 0.5);
    if (load > 0.0) {
      const double s = std::sqrt(target / load);
      for (std::size_t n = 1; n < b.size(); ++n) b[n] *= s;
      tail = LaurentTail(b);
    }
    for (double r : {2.0, 3.0}) {
      worst = std::max(worst, rel(gronwall_area(tail, r).value, gronwall_area_quadrature(tail, r).value));
    }
    double prev = gronwall_area(tail, 1.0).value;
    for (int k = 1; k <= 20; ++k) {
      const double cur = gronwall_area(tail, 1.0 + 0.1 * k).value;
      if (!(cur > prev)) ++monotone_violations;
      prev = cur;
    }
  }
  out.check("admissible tails, r in {2,3}: series vs boundary quadrature", worst, 1e-8);
  out.check("area strictly increasing on r in [1, 3] (violations)", monotone_violations, 0.0);

  if (user_tail) {
    for (double r : {1.0, 2.0}) {
      const double series = gronwall_area(*user_tail, r).value;
      const double quad = gronwall_area_quadrature(*user_tail, r, 1024).value;
      out.check("user tail, r=" + std::to_string(static_cast<int>(r)) + ": series vs boundary quadrature",
                std::abs(series - quad) / std::max(1.0, std::abs(series)), 1e-8);
    }
  }
  return out.take();
}

std::vector<CheckResult> gamma_suite() {
  Collector out("gamma-identities");
  double worst = 0.0;
  for (int i = 0; i <= 299; ++i) {
    const double x = 0.1 + i * 0.1;
    worst = std::max(worst, rel(gamma(x), std::tgamma(x)));
  }
  out.check("gamma vs std::tgamma on [0.1, 30]", worst, 1e-12);
  for (int m = 1; m <= 5; ++m) {
    const double alpha = 1.0 / m;
    const auto plain = binomial_sq_sum(alpha);
    const auto weighted = binomial_sq_weighted_sum(alpha);
    out.check("sum (C_k^a)^2 = Gamma(2a+1)/Gamma(a+1)^2, a=1/" + std::to_string(m),
              std::abs(plain.numeric - plain.closed_form), 1e-6);
    out.check("sum k (C_k^a)^2 = Gamma(2a)/Gamma(a)^2, a=1/" + std::to_string(m),
              std::abs(weighted.numeric - weighted.closed_form), 1e-6);
  }
  return out.take();
}

std::vector<CheckResult> pointmass_suite() {
  Collector out("pointmass");
  Rng rng(0x70175a55);
  double worst_i = 0.0;
  double worst_j = 0.0;
  double worst_identity = 0.0;
  std::vector<Complex> pts;
  for (int k = 0; k < 20; ++k) {
    const Complex zp = rng.complex_in_annulus(0.2, 0.8);
    pts.push_back(zp);
    worst_i = std::max(worst_i, std::abs(pointmass_I(zp) - pointmass_I_oracle(zp)));
    worst_j = std::max(worst_j, std::abs(pointmass_J(zp) - pointmass_J_oracle(zp)));
    worst_identity = std::max(
        worst_identity, std::abs(pointmass_J(zp) - 0.5 - 2.0 * std::norm(zp) * pointmass_I(zp)));
  }
  out.check("I_p closed form vs principal-value oracle, 20 points", worst_i, 1e-6);
  out.check("J_p closed form vs principal-value oracle, 20 points", worst_j, 1e-6);
  out.check("J_p = 1/2 + 2|z_p|^2 I_p", worst_identity, 1e-12);
  const auto sums = pointmass_sums(PointMassSpec(pts));
  out.check("sum pi I_p equals the product form", std::abs(sums.sum_I - sums.sum_I_aggregate), 1e-10);
  out.check("sum 2 pi J_p equals the product form", std::abs(sums.sum_J - sums.sum_J_aggregate), 1e-10);
  return out.take();
}

std::vector<CheckResult> lemniscate_suite() {
  Collector out("lemniscate");
  double worst = 0.0;
  double worst_rearrangement = 0.0;
  for (int m = 1; m <= 8; ++m) {
    const double s = lemniscate_area_series(m, 200).value;
    const double c = lemniscate_area_closed(m).value;
    const double p = lemniscate_area_polar(m, 64).value;
    worst = std::max({worst, std::abs(s - c), std::abs(s - p), std::abs(c - p)});
    worst_rearrangement =
        std::max(worst_rearrangement, std::abs(gronwall_area(lemniscate_tail(m, 200), 1.0).value -
                                               lemniscate_area_series(m, 200, TailMode::none).value));
  }
  out.check("series / closed form / polar agree, m = 1..8", worst, 1e-5);
  out.check("Gronwall at r=1 equals the rearranged partial sum", worst_rearrangement, 1e-10);
  out.check("m = 1 area equals pi", std::abs(lemniscate_area_series(1, 200).value - kPi), 1e-10);
  out.check("m = 2 area equals 2", std::abs(lemniscate_area_series(2, 200).value - 2.0), 1e-6);
  return out.take();
}

std::vector<CheckResult> area_functional_suite() {
  Collector out("area-functional");
  Rng rng(0xa2ea0001);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    const FormalSeries f = random_taylor(rng, rng.integer(1, 8), 1);
    const std::array<double, 4> v{
        green_boundary_area(f, 1.0).value,
        area_from_functional(double_contour_functional(f, FunctionalVariant::coefficient)),
        area_from_functional(double_contour_functional(f, FunctionalVariant::quadrature)),
        dirichlet_area(f)};
    for (std::size_t i = 0; i < v.size(); ++i) {
      for (std::size_t j = i + 1; j < v.size(); ++j) worst = std::max(worst, std::abs(v[i] - v[j]));
    }
  }
  out.check("Green / functional (2 variants) / pi sum n|a_n|^2 pairwise", worst, 1e-8);
  return out.take();
}

std::vector<CheckResult> orthogonality_suite() {
  Collector out("orthogonality");
  for (double c : {0.3, std::log(2.0), 1.0}) {
    const auto geom = EllipseGeometry::from_c(c);
    const auto gram = gram_matrix(ChebyshevFamily::U, 6, geom);
    double off = 0.0;
    double diag = 0.0;
    for (int i = 0; i <= 6; ++i) {
      const double gii = gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)].real();
      diag = std::max(diag, rel(gii, bergman_norm_U(i, geom)));
      for (int j = 0; j <= 6; ++j) {
        if (i == j) continue;
        const double gjj = gram[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)].real();
        off = std::max(off, std::abs(gram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]) /
                                std::sqrt(gii * gjj));
      }
    }
    const std::string tag = "c=" + std::to_string(c);
    out.check("U Gram off-diagonal relative, " + tag, off, 1e-7);
    out.check("U Gram diagonal vs closed-form norm, " + tag, diag, 1e-7);

    const auto pgram = gram_matrix(ChebyshevFamily::P, 6, geom);
    double dev = 0.0;
    for (int i = 0; i <= 6; ++i) {
      for (int j = 0; j <= 6; ++j) {
        dev = std::max(dev, std::abs(pgram[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                                     (i == j ? 1.0 : 0.0)));
      }
    }
    out.check("P Gram equals identity, " + tag, dev, 1e-7);
  }
  double forms = 0.0;
  for (int n = 0; n <= 20; ++n) {
    for (int k = 0; k <= 19; ++k) {
      const auto geom = EllipseGeometry::from_c(0.1 + 0.1 * k);
      forms = std::max(forms, rel(bergman_norm_U(n, geom), bergman_norm_U_sinh(n, geom)));
    }
  }
  out.check("rho form and sinh form of the norm agree", forms, 1e-12);

  const auto half = EllipseGeometry::from_c(0.5);
  double tprime = 0.0;
  for (int n = 1; n <= 6; ++n) tprime = std::max(tprime, rel(tprime_area_quadrature(n, half), tprime_area(n, half)));
  out.check("T_n' area closed form vs quadrature, n = 1..6, c = 0.5", tprime, 1e-7);
  out.check("T_1' area equals pi a b", rel(tprime_area(1, half), kPi * half.a() * half.b()), 1e-12);
  return out.take();
}

std::vector<CheckResult> interpolation_suite() {
  Collector out("interpolation");
  struct Case {
    const char* name;
    std::function<Complex(Complex)> f;
    Complex singularity;
    int nmax;
  };
  const std::vector<Case> cases{
      {"1/(x-2)", [](Complex x) { return 1.0 / (x - 2.0); }, 2.0, 24},
      {"1/(x^2+1)", [](Complex x) { return 1.0 / (x * x + 1.0); }, Complex{0.0, 1.0}, 40},
      {"1/(x+1.5)", [](Complex x) { return 1.0 / (x + 1.5); }, -1.5, 30},
  };
  const auto pts = default_eval_points();
  for (const auto& c : cases) {
    const double expected = expected_log_R(c.singularity);
    const AnalyticSampler f(c.f, std::exp(expected));
    std::vector<int> ns;
    for (int n = 4; n <= c.nmax; ++n) ns.push_back(n);
    const auto fit = convergence_rate(interpolation_error_curve(f, ns, pts));
    out.check(std::string("fitted log R for ") + c.name + " (relative deviation)",
              std::abs(fit.log_R - expected) / expected, 0.05);
  }
  Rng rng(0x1e7e0001);
  double worst = 0.0;
  for (int n = 1; n <= 20; ++n) {
    for (int j = 0; j < n; ++j) {
      const AnalyticSampler mono([j](Complex z) { return std::pow(z, j); }, 2.0);
      const ChebyshevUInterpolant interp(mono, n);
      for (int t = 0; t < 20; ++t) {
        const double x = rng.uniform(-1.0, 1.0);
        worst = std::max(worst, std::abs(interp(x) - std::pow(x, j)));
      }
    }
  }
  out.check("monomials x^j, j < n <= 20, reproduced", worst, 1e-11);
  return out.take();
}

std::vector<CheckResult> bounds_suite() {
  Collector out("coefficient-bounds");
  Rng rng(0xb0d5b0d5);
  int violations = 0;
  for (int trial = 0; trial < 100; ++trial) {
    const FormalSeries f = random_taylor(rng, rng.integer(0, 8));
    const double R = rng.uniform(0.5, 2.0);
    const double r = rng.uniform(0.0, 0.9) * R;
    for (const auto& row : coefficient_bounds_report(f, r, R, 8)) violations += row.derived_holds ? 0 : 1;
  }
  out.check("derived bounds hold on 100 random series (violations)", violations, 0.0);
  double tight = 0.0;
  for (int k = 0; k <= 4; ++k) {
    const std::vector<FormalSeries::Term> term{{k, Complex{0.7, -0.4}}};
    const auto f = FormalSeries::make(term, 0, k);
    const auto row = coefficient_bounds_report(f, 0.3, 1.4, k).back();
    tight = std::max(tight, rel(row.derivative_magnitude, row.derived_bound));
  }
  out.check("single-term series attain the bound, k = 0..4", tight, 1e-10);
  return out.take();
}

std::vector<CheckResult> cardioid_suite() {
  Collector out("cardioid");
  out.check("cardioid area equals 3 pi / 8", std::abs(cardioid_area(64).value - 3.0 * kPi / 8.0), 1e-12);
  return out.take();
}

std::vector<CheckResult> zfprime_suite() {
  Collector out("zfprime");
  Rng rng(0x2f00f001);
  double worst = 0.0;
  for (int trial = 0; trial < 20; ++trial) {
    FormalSeries f = random_taylor(rng, rng.integer(1, 8), 1);
    if (std::abs(f.coeff(1)) < 0.1) f = f + random_taylor(rng, 1, 1);
    worst = std::max(worst, rel(zfprime_area(f, 16), zfprime_area_quadrature(f)));
  }
  out.check("pi sum p|c_p|^2 vs disk quadrature of |f' + z f''|^2", worst, 1e-7);
  return out.take();
}

using SuiteFn = std::function<std::vector<CheckResult>(const std::optional<LaurentTail>&)>;

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> suites{
      {"parseval", [](const auto&) { return parseval_suite(); }},
      {"gronwall", [](const auto& t) { return gronwall_suite(t); }},
      {"gamma-identities", [](const auto&) { return gamma_suite(); }},
      {"pointmass", [](const auto&) { return pointmass_suite(); }},
      {"lemniscate", [](const auto&) { return lemniscate_suite(); }},
      {"area-functional", [](const auto&) { return area_functional_suite(); }},
      {"orthogonality", [](const auto&) { return orthogonality_suite(); }},
      {"interpolation", [](const auto&) { return interpolation_suite(); }},
      {"coefficient-bounds", [](const auto&) { return bounds_suite(); }},
      {"cardioid", [](const auto&) { return cardioid_suite(); }},
      {"zfprime", [](const auto&) { return zfprime_suite(); }},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    n.emplace_back("all");
    return n;
  }();
  return names;
}

bool is_known_suite(const std::string& name) {
  const auto& names = suite_names();
  return std::find(names.begin(), names.end(), name) != names.end();
}

std::vector<CheckResult> run_suite(const std::string& name, const std::optional<LaurentTail>& user_tail) {
  if (!is_known_suite(name)) throw DomainError("unknown suite '" + name + "'");
  std::vector<CheckResult> results;
  for (const auto& [suite, fn] : registry()) {
    if (name == "all" || name == suite) {
      auto part = fn(user_tail);
      results.insert(results.end(), part.begin(), part.end());
    }
  }
  return results;
}

}  // namespace confarea
