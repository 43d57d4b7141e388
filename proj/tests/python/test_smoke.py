import math

import pytest

import confarea as ca


def series(terms, lo, hi):
    return ca.FormalSeries(terms, lo, hi)


def test_gronwall_ellipse():
    r = ca.gronwall_area(ca.LaurentTail([0, 1]), 2.0)
    assert r.value == pytest.approx(15 * math.pi / 4, rel=1e-14)
    assert r.method == ca.AreaMethod.series
    q = ca.gronwall_area_quadrature(ca.LaurentTail([0, 1]), 2.0)
    assert q.value == pytest.approx(r.value, rel=1e-10)


def test_series_ops():
    f = series([(-1, 1), (1, 1)], -1, 1)
    assert f(2) == pytest.approx(2.5)
    assert f.derivative().coeff(-2) == -1
    p = ca.cauchy_product(series([(0, 1), (1, 1)], 0, 1), series([(0, 1), (1, -1)], 0, 1), 2)
    assert p.coeff(2) == -1
    with pytest.raises(ValueError):
        series([(1, 1), (1, 2)], 0, 2)


def test_lemniscate_three_ways():
    for m in range(1, 9):
        s = ca.lemniscate_area_series(m).value
        assert s == pytest.approx(ca.lemniscate_area_closed(m).value, abs=1e-5)
        assert s == pytest.approx(ca.lemniscate_area_polar(m).value, abs=1e-5)
    assert ca.lemniscate_area_series(2).value == pytest.approx(2.0, abs=1e-6)


def test_gamma_and_sums():
    assert ca.gamma(0.5) == pytest.approx(math.sqrt(math.pi), rel=1e-13)
    with pytest.raises(ValueError):
        ca.gamma(0.0)
    num, closed = ca.binomial_sq_sum(0.5)
    assert closed == pytest.approx(4 / math.pi)
    assert num == pytest.approx(closed, abs=1e-6)


def test_area_functionals():
    f = series([(1, 1), (2, 1)], 0, 2)
    assert ca.dirichlet_area(f) == pytest.approx(3 * math.pi)
    assert ca.area_from_functional(ca.double_contour_functional(f)) == pytest.approx(3 * math.pi)
    assert ca.green_boundary_area(f, 1.0).value == pytest.approx(3 * math.pi)
    assert ca.zfprime_area(f, 8) == pytest.approx(9 * math.pi)


def test_bergman():
    g = ca.EllipseGeometry.from_c(math.log(2))
    assert ca.bergman_norm_U(0, g) == pytest.approx(15 * math.pi / 16)
    G = ca.gram_matrix(ca.ChebyshevFamily.P, 4, g)
    for i in range(5):
        for j in range(5):
            assert abs(G[i][j] - (1 if i == j else 0)) < 1e-7


def test_interpolation_rate():
    R = 2 + math.sqrt(3)
    curve = ca.interpolation_error_curve(lambda x: 1 / (x - 2), R, list(range(4, 25)))
    assert len(curve) == 21
    rate = ca.convergence_rate(curve)
    assert abs(rate - math.log(R)) / math.log(R) < 0.05
    assert ca.inverse_joukowski(0) == pytest.approx(1j)
    assert ca.chebyshev_nodes(2) == pytest.approx([0.5, -0.5])


def test_pointmass():
    z = complex(0, math.sqrt(0.2))
    assert ca.pointmass_I(z) == pytest.approx(math.log(4))
    assert ca.pointmass_I_oracle(z) == pytest.approx(math.log(4), abs=1e-6)


def test_verify_and_cli():
    checks = ca.run_suite("gamma-identities")
    assert checks and all(c["pass"] for c in checks)
    code, out, err = ca.run_cli(["area", "--region", "circle", "--r", "1"])
    assert code == 0
    assert out.startswith("region,")
    code, _, _ = ca.run_cli(["area", "--region", "nowhere"])
    assert code == 2
