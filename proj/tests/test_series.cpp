#include <cmath>

#include "confarea/error.hpp"
#include "confarea/json_io.hpp"
#include "confarea/random.hpp"
#include "confarea/series.hpp"
#include "doctest.h"
#include "support.hpp"

using namespace confarea;
using testing::series;

TEST_CASE("make stores terms sparsely and echoes input") {
  const auto id = series({{1, {1.0, 0.0}}}, 0, 1);
  CHECK(id.coeff(1) == Complex{1.0, 0.0});
  CHECK(id.coeff(0) == Complex{});
  CHECK(id.is_taylor());

  const auto f = series({{-1, 1.0}, {1, 1.0}}, -1, 1);
  CHECK(f.terms().size() == 2);
  CHECK_FALSE(f.is_taylor());

  const auto c = series({{0, {2.0, 3.0}}}, 0, 0);
  CHECK(c.coeff(0) == Complex{2.0, 3.0});

  // zero coefficients are not stored
  CHECK(series({{3, 0.0}}, 0, 5).is_zero());
}

TEST_CASE("make rejects duplicate and out-of-range exponents") {
  CHECK_THROWS_AS(series({{1, 1.0}, {1, 2.0}}, 0, 2), ConstructionError);
  CHECK_THROWS_AS(series({{3, 1.0}}, 0, 2), ConstructionError);
  CHECK_THROWS_AS(series({{-1, 1.0}}, 0, 2), ConstructionError);
}

TEST_CASE("evaluate") {
  const auto f = series({{-1, 1.0}, {1, 1.0}}, -1, 1);
  CHECK(std::abs(evaluate(f, 2.0) - 2.5) < 1e-15);
  CHECK(std::abs(evaluate(series({{1, 1.0}}, 0, 1), {0.0, 1.0}) - Complex{0.0, 1.0}) < 1e-15);

  std::vector<FormalSeries::Term> geo;
  for (int n = 0; n <= 20; ++n) geo.emplace_back(n, 1.0);
  const auto g = FormalSeries::make(geo, 0, 20);
  CHECK(std::abs(evaluate(g, 0.5) - 2.0) < 1e-6);

  CHECK_THROWS_AS(evaluate(f, 0.0), DomainError);
  CHECK(std::abs(evaluate(series({{2, 1.0}}, 0, 2), 0.0)) == 0.0);
}

TEST_CASE("derivative") {
  CHECK(derivative(series({{2, 1.0}}, 0, 2)) == series({{1, 2.0}}, 0, 1));
  const auto d = derivative(series({{-1, 1.0}}, -1, -1));
  CHECK(d.coeff(-2) == Complex{-1.0, 0.0});
  CHECK(d.terms().size() == 1);
  CHECK(derivative(series({{0, 5.0}}, 0, 0)).is_zero());
}

TEST_CASE("cauchy product") {
  const auto p = cauchy_product(series({{0, 1.0}, {1, 1.0}}, 0, 1), series({{0, 1.0}, {1, -1.0}}, 0, 1), 2);
  CHECK(p.coeff(0) == Complex{1.0, 0.0});
  CHECK(p.coeff(1) == Complex{});
  CHECK(p.coeff(2) == Complex{-1.0, 0.0});

  Rng rng(11);
  const auto f = random_taylor(rng, 6);
  const auto one = series({{0, 1.0}}, 0, 0);
  const auto fo = cauchy_product(f, one, 6);
  for (int n = 0; n <= 6; ++n) CHECK(std::abs(fo.coeff(n) - f.coeff(n)) < 1e-15);

  std::vector<FormalSeries::Term> geo;
  for (int n = 0; n <= 10; ++n) geo.emplace_back(n, 1.0);
  const auto g = FormalSeries::make(geo, 0, 10);
  const auto gg = cauchy_product(g, g, 3);
  for (int n = 0; n <= 3; ++n) CHECK(gg.coeff(n) == Complex{double(n + 1), 0.0});
  CHECK(gg.max_exp() <= 3);

  CHECK_THROWS_AS(cauchy_product(series({{-1, 1.0}}, -1, 0), one, 3), UnsupportedError);
}

TEST_CASE("hadamard product") {
  std::vector<FormalSeries::Term> geo;
  for (int n = 0; n <= 10; ++n) geo.emplace_back(n, 1.0);
  const auto g = FormalSeries::make(geo, 0, 10);
  CHECK(hadamard_product(g, g, 10) == g);

  Rng rng(3);
  CHECK(hadamard_product(random_taylor(rng, 5), FormalSeries{}, 5).is_zero());

  const auto h = hadamard_product(series({{0, 1.0}, {1, 2.0}}, 0, 1), series({{0, 3.0}, {1, 5.0}}, 0, 1), 4);
  CHECK(h.coeff(0) == Complex{3.0, 0.0});
  CHECK(h.coeff(1) == Complex{10.0, 0.0});
  CHECK_THROWS_AS(hadamard_product(series({{-2, 1.0}}, -2, 0), g, 3), UnsupportedError);
}

TEST_CASE("hadamard product matches its contour integral") {
  Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_taylor(rng, 6);
    const auto g = random_taylor(rng, 6);
    const Complex z = rng.complex_in_box(0.5);
    const Complex direct = evaluate(hadamard_product(f, g, 6), z);
    CHECK(std::abs(hadamard_contour(f, g, z, 1.0) - direct) < 1e-12);
  }
}

TEST_CASE("binomial coefficients") {
  const auto one = binomial_expansion(1, 4);
  REQUIRE(one.terms.size() == 5);
  CHECK(one.terms[0] == 1.0);
  CHECK(one.terms[1] == 1.0);
  CHECK(one.terms[2] == 0.0);
  CHECK(one.terms[4] == 0.0);

  const auto half = binomial_expansion(2, 3);
  CHECK(half.terms[1] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(half.terms[2] == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(half.terms[3] == doctest::Approx(0.0625).epsilon(1e-15));

  CHECK_THROWS_AS(binomial_expansion(0, 3), DomainError);

  // (1+u)^a (1+u)^b = (1+u)^{a+b}
  const auto a = binomial_coefficients(1.0 / 3.0, 12).terms;
  const auto b = binomial_coefficients(0.25, 12).terms;
  const auto ab = binomial_coefficients(1.0 / 3.0 + 0.25, 12).terms;
  for (std::size_t n = 0; n <= 12; ++n) {
    double s = 0.0;
    for (std::size_t k = 0; k <= n; ++k) s += a[k] * b[n - k];
    CHECK(std::abs(s - ab[n]) < 1e-14);
  }
}

TEST_CASE("log derivative coefficients") {
  const auto one = log_derivative_coeffs(series({{1, 1.0}}, 0, 1), 5);
  CHECK(one.coeff(0) == Complex{1.0, 0.0});
  for (int p = 1; p <= 5; ++p) CHECK(one.coeff(p) == Complex{});

  const auto f = series({{1, 1.0}, {2, 1.0}}, 0, 2);
  const auto b = log_derivative_coeffs(f, 6);
  CHECK(std::abs(b.coeff(1) - 1.0) < 1e-15);
  CHECK(std::abs(b.coeff(2) + 1.0) < 1e-15);

  CHECK_THROWS_AS(log_derivative_coeffs(series({{2, 1.0}}, 0, 2), 4), DegenerateInputError);
}

TEST_CASE("property: (z f'/f) f = z f' on random series") {
  Rng rng(21);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = random_taylor(rng, 6, 1);
    if (std::abs(f.coeff(1)) < 0.1) continue;
    const int trunc = 10;
    const auto b = log_derivative_coeffs(f, trunc);
    const auto lhs = cauchy_product(b, f, trunc + 1);
    for (int p = 1; p <= trunc + 1; ++p) {
      CHECK(std::abs(lhs.coeff(p) - double(p) * f.coeff(p)) < 1e-9 * std::pow(10.0, p / 4.0));
    }
  }
}

TEST_CASE("property: derivative commutes with evaluation by finite difference") {
  Rng rng(8);
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_laurent(rng, 5);
    const Complex z = rng.complex_in_annulus(0.7, 1.3);
    const double h = 1e-6;
    const Complex fd = (evaluate(f, z + h) - evaluate(f, z - h)) / (2.0 * h);
    CHECK(std::abs(evaluate(derivative(f), z) - fd) < 1e-6 * (1.0 + std::abs(fd)));
  }
}

TEST_CASE("series round trips through JSON") {
  Rng rng(4);
  const auto f = random_laurent(rng, 4);
  CHECK(series_from_json(to_json(f)) == f);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"({"min_exp":0})")), ParseError);
  CHECK_THROWS_AS(series_from_json(nlohmann::json::parse(R"({"min_exp":0,"max_exp":1,"coeffs":[[1,1]]})")),
                  ParseError);
  CHECK_THROWS_AS(
      series_from_json(nlohmann::json::parse(R"({"min_exp":0,"max_exp":1,"coeffs":[[1,1,0],[1,2,0]]})")),
      ParseError);
}

TEST_CASE("format_double prints 17 significant digits") {
  CHECK(format_double(0.1) == "0.10000000000000001");
  CHECK(format_double(2.0) == "2");
  CHECK(std::stod(format_double(std::numbers::pi)) == std::numbers::pi);
}
