#include <cmath>

#include "confarea/error.hpp"
#include "confarea/quadrature.hpp"
#include "confarea/random.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace confarea;
using testing::pi;

TEST_CASE("gauss-legendre small rules") {
  const auto one = gauss_legendre(1);
  CHECK(std::abs(one.nodes[0]) < 1e-16);
  CHECK(one.weights[0] == doctest::Approx(2.0).epsilon(1e-15));

  const auto two = gauss_legendre(2);
  CHECK(two.nodes[0] == doctest::Approx(-1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(two.nodes[1] == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(two.weights[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(two.weights[1] == doctest::Approx(1.0).epsilon(1e-15));

  const auto unit = gauss_legendre(2, 0.0, 1.0);
  CHECK(std::abs(unit.integrate([](double x) { return x * x * x; }) - 0.25) < 1e-16);
}

TEST_CASE("property: gauss-legendre is exact to degree 2n-1") {
  Rng rng(17);
  for (int n : {2, 4, 8, 16}) {
    for (int trial = 0; trial < 5; ++trial) {
      std::vector<double> c(static_cast<std::size_t>(2 * n));
      for (auto& x : c) x = rng.uniform(-1.0, 1.0);
      const double a = rng.uniform(-2.0, 0.0);
      const double b = rng.uniform(0.5, 2.0);
      double exact = 0.0;
      for (std::size_t k = 0; k < c.size(); ++k) {
        const double p = static_cast<double>(k + 1);
        exact += c[k] * (std::pow(b, p) - std::pow(a, p)) / p;
      }
      const double got = gauss_legendre(n, a, b).integrate([&](double x) {
        double s = 0.0;
        for (std::size_t k = c.size(); k-- > 0;) s = s * x + c[k];
        return s;
      });
      CHECK(std::abs(got - exact) <= 1e-12 * std::max(1.0, std::abs(exact)));
    }
  }
}

TEST_CASE("gauss-legendre weights sum to interval length for large n") {
  for (int n : {64, 256, 512}) {
    const auto rule = gauss_legendre(n, 0.0, 3.0);
    double s = 0.0;
    for (double w : rule.weights) s += w;
    CHECK(std::abs(s - 3.0) < 1e-12);
    for (std::size_t i = 1; i < rule.nodes.size(); ++i) CHECK(rule.nodes[i] > rule.nodes[i - 1]);
  }
}

TEST_CASE("periodic trapezoid") {
  CHECK(std::abs(periodic_trapezoid([](double t) { return std::polar(1.0, t); }, 16, 2 * pi)) < 1e-14);
  CHECK(std::abs(periodic_trapezoid([](double) { return Complex{1.0}; }, 16, 2 * pi) - 2 * pi) < 1e-14);
  const auto g = [](double t) { return Complex{std::norm(1.0 + std::polar(1.0, t))}; };
  CHECK(std::abs(periodic_trapezoid(g, 8, 2 * pi) - 4 * pi) < 1e-13);
  CHECK_THROWS_AS(periodic_trapezoid(g, 3, 2 * pi), DomainError);
}

TEST_CASE("property: trapezoid decays spectrally on exp(cos t)") {
  const auto g = [](double t) { return Complex{std::exp(std::cos(t))}; };
  const double exact = 2 * pi * std::cyl_bessel_i(0.0, 1.0);
  const double e8 = std::abs(periodic_trapezoid(g, 8, 2 * pi) - exact);
  const double e16 = std::abs(periodic_trapezoid(g, 16, 2 * pi) - exact);
  CHECK(e16 * 1e4 <= e8 + 1e-15);
}

TEST_CASE("disk integral") {
  CHECK(std::abs(disk_integral([](Complex) { return 1.0; }, 0.0, 1.0) - pi) < 1e-12);
  CHECK(std::abs(disk_integral([](Complex z) { return std::norm(z); }, 0.0, 1.0) - pi / 2) < 1e-12);
  CHECK(std::abs(disk_integral([](Complex) { return 1.0; }, 0.5, 1.0) - 0.75 * pi) < 1e-12);
  CHECK_THROWS_AS(disk_integral([](Complex) { return 1.0; }, 1.0, 0.5), DomainError);
}

TEST_CASE("property: disk integral reproduces annulus areas") {
  Rng rng(99);
  for (int trial = 0; trial < 10; ++trial) {
    const double r = rng.uniform(0.0, 2.0);
    const double R = r + rng.uniform(0.1, 2.0);
    const double got = disk_integral([](Complex) { return 1.0; }, r, R);
    CHECK(std::abs(got - pi * (R * R - r * r)) <= 1e-12 * pi * R * R);
  }
}

TEST_CASE("shoelace area") {
  const std::vector<Complex> square{{0, 0}, {1, 0}, {1, 1}, {0, 1}};
  CHECK(curve_area_shoelace(square) == doctest::Approx(1.0));
  const std::vector<Complex> reversed(square.rbegin(), square.rend());
  CHECK(curve_area_shoelace(reversed) == doctest::Approx(-1.0));

  const int n = 512;
  std::vector<Complex> circle, tangent;
  for (int k = 0; k < n; ++k) {
    const double t = 2 * pi * k / n;
    circle.push_back(std::polar(1.0, t));
    tangent.push_back(Complex{0.0, 1.0} * std::polar(1.0, t));
  }
  const double polygon = curve_area_shoelace(circle);
  CHECK(std::abs(polygon - pi) < 1e-4);
  CHECK(std::abs(polygon - 0.5 * n * std::sin(2 * pi / n)) < 1e-12);
  CHECK(std::abs(curve_area_spectral(circle, tangent, 2 * pi) - pi) < 1e-12);

  const std::vector<Complex> two{{0, 0}, {1, 0}};
  CHECK_THROWS_AS(curve_area_shoelace(two), DomainError);
}

TEST_CASE("principal value radial integrals") {
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(principal_value_radial([](double r) { return 2 * r / (r * r - 0.5); }, s)) < 1e-8);
  CHECK(std::abs(principal_value_radial([](double r) { return 1.0 / (r - 0.5); }, 0.5)) < 1e-8);
  CHECK(std::abs(principal_value_radial([](double r) { return r * r; }, 0.3) - 1.0 / 3.0) < 1e-10);

  // log((1-s)/s) for an off-centre simple pole
  const double t = 0.3;
  CHECK(std::abs(principal_value_radial([t](double r) { return 1.0 / (r - t); }, t) - std::log((1 - t) / t)) <
        1e-8);

  CHECK_THROWS_AS(principal_value_radial([](double r) { return r; }, 0.0), DomainError);
  CHECK_THROWS_AS(principal_value_radial([](double r) { return r; }, 1.0), DomainError);
}
