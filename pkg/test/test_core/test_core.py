import cmath
import math

import numpy as np
import pytest

from rogerswh._core import (
    add_constant,
    bound_estimate_check,
    boundary_phase,
    cbf_grid,
    check_cbf,
    check_rogers,
    classify,
    derivative_bound_check,
    difference_quotient,
    evaluate,
    imag_integrability,
    log_polar_grid,
    mobius_inverse,
)
from rogerswh._curve import zeta
from rogerswh._helpers import DomainViolation, ImaginaryAxis, NotRealValue
from rogerswh.model import RogersFunction
from test import testtools


def test_evaluate(bm_drift, risk):
    assert evaluate(bm_drift(1.0), 1.0) == pytest.approx(0.5 - 1j, rel=1e-15)
    assert evaluate(risk, 1.0) == pytest.approx((1 + 4j) / 17 - 1j, rel=1e-14)


def test_evaluate__arrays(bm_drift):
    f = bm_drift(0.5)
    points = np.array([1 + 1j, 2 - 0.5j, 0.1 + 3j])
    testtools.assert_close(evaluate(f, points), points**2 / 2 - 0.5j * points, rtol=1e-15)


def test_evaluate__left_half_plane_by_symmetry(stable):
    f = stable(1.5, rho=0.6)
    for xi in testtools.right_half_plane_points():
        mirrored = -xi.conjugate()
        assert evaluate(f, mirrored) == pytest.approx(evaluate(f, xi).conjugate(), rel=1e-14)


def test_evaluate__imaginary_axis(bm):
    with pytest.raises(ImaginaryAxis):
        evaluate(bm, 2j)
    assert evaluate(bm, 2j, side="right") == pytest.approx(-2.0, rel=1e-6)


@pytest.mark.parametrize("name", ["bm", "cauchy", "risk"])
def test_check_rogers(name, request):
    f = request.getfixturevalue(name)
    report = check_rogers(f)
    assert report.passed
    assert report.n_points == len(log_polar_grid())


def test_check_rogers__stable_family(stable):
    for alpha, rho in [(0.6, 0.3), (1.2, 0.5), (1.8, 0.55), (0.5, 1.0)]:
        assert check_rogers(stable(alpha, rho=rho)).passed


def test_check_rogers__fails_on_corrupted_square():
    rotation = cmath.exp(0.01j)
    f = RogersFunction(lambda z: rotation * z**2, label="corrupted")
    report = check_rogers(f)
    assert not report.passed
    assert report.max_violation > 1e-3


def test_check_rogers__absolute_violation(bm):
    f = RogersFunction(lambda z: -1000 * z**2, label="negative square")
    grid = [2.0 + 0j, 1 + 1j]
    absolute = check_rogers(f, grid, relative=False)
    assert absolute.max_violation == pytest.approx(2000.0)
    assert absolute.worst_point == 2.0
    assert check_rogers(f, grid).max_violation == pytest.approx(1.0)
    assert check_rogers(bm, grid, relative=False).max_violation == 0.0


def test_check_cbf():
    assert check_cbf(np.sqrt).passed
    assert check_cbf(lambda w: w / (1 + w)).passed
    assert check_cbf(np.log1p).passed
    assert not check_cbf(testtools.corrupted(np.sqrt)).passed
    assert not check_cbf(lambda w: -w).passed
    assert not check_cbf(lambda w: w**2).passed


def test_check_cbf__scalar_callable():
    report = check_cbf(lambda w: complex(cmath.sqrt(w)), vectorised=False)
    assert report.passed
    assert report.n_points == len(cbf_grid())


def test_grids():
    grid = log_polar_grid()
    assert np.all(grid.real >= 0)
    assert len(grid) == 17 * 23
    upper = cbf_grid()
    assert np.all(upper.imag >= 0)
    assert np.any(upper.imag == 0)


def test_classify(bm, stable):
    info = classify(bm)
    assert info.f_at_zero == 0.0
    assert info.f_at_infinity == math.inf
    assert not info.bounded
    assert not info.degenerate
    assert classify(stable(0.5, rho=0.5)).f_at_infinity == math.inf


def test_classify__bounded():
    f = RogersFunction(lambda z: z / (z - 4j), label="compound poisson")
    info = classify(f)
    assert info.bounded
    assert info.f_at_zero == pytest.approx(0.0, abs=1e-9)
    assert info.f_at_infinity == pytest.approx(1.0, rel=1e-6)


def test_classify__killed():
    f = RogersFunction(lambda z: 2 + z / (1 + z), label="killed")
    info = classify(f)
    assert info.f_at_zero == pytest.approx(2.0, rel=1e-6)
    assert info.f_at_infinity == pytest.approx(3.0, rel=1e-6)


def test_classify__degenerate_and_zero():
    drift = RogersFunction(lambda z: -2j * z, label="drift")
    info = classify(drift)
    assert info.degenerate
    assert info.drift == pytest.approx(2.0)
    assert classify(RogersFunction(lambda z: 0 * z, label="zero")).zero


def test_classify__memoised(bm):
    assert classify(bm) is classify(bm)


def test_mobius_inverse():
    zeta0, zeta_inf = 0.5 + 1j, 2 + 3j
    d = zeta_inf - zeta0
    for w in (1 + 1j, 0.2 - 3j, 7.0):
        u = zeta0 + d * w / (w + d)
        assert mobius_inverse(u, zeta0, zeta_inf) == pytest.approx(w, rel=1e-13)


def test_add_constant(bm):
    g = add_constant(bm, 3.0)
    assert g(1 + 1j) == pytest.approx(3 + 1j)
    assert g.prime(1 + 1j) == pytest.approx(1 + 1j)


def test_prime__finite_differences():
    f = RogersFunction(lambda z: np.power(z, 1.5))
    assert f.prime(2.0) == pytest.approx(1.5 * math.sqrt(2), rel=1e-8)
    assert f.prime(1e-9 + 1j) == pytest.approx(1.5 * cmath.sqrt(1j), rel=1e-5)
    with pytest.raises(DomainViolation):
        f.prime(-1.0)


def test_difference_quotient__brownian(bm):
    g = difference_quotient(bm, 1.5)
    assert g.memo["lam"] == pytest.approx(1.125)
    for xi in (1 + 2j, 1.5 + 1e-6, 0.01, 40 - 3j):
        assert g(xi) == pytest.approx(2.0, rel=1e-9)


def test_difference_quotient__is_rogers(stable):
    f = stable(1.5, rho=0.6)
    sample = zeta(f, 1.0)
    g = difference_quotient(f, sample.zeta)
    assert check_rogers(g, tol=1e-8).passed
    assert g(1e-9) == pytest.approx(1 / sample.lam, rel=1e-6)


def test_difference_quotient__continuous_at_zeta(stable):
    f = stable(1.2, rho=0.5)
    z = zeta(f, 2.0).zeta
    inside = difference_quotient(f, z)(z + 1e-6 * abs(z))
    outside = difference_quotient(f, z)(z + 2e-4 * abs(z))
    assert inside == pytest.approx(outside, rel=1e-3)


def test_difference_quotient__errors(bm):
    with pytest.raises(NotRealValue):
        difference_quotient(bm, 1 + 1j)
    with pytest.raises(DomainViolation):
        difference_quotient(bm, -1.0)


def test_boundary_phase(bm, stable):
    assert boundary_phase(bm, 1.0) == pytest.approx(math.pi, abs=1e-6)
    f = stable(1.5, rho=0.5)
    assert boundary_phase(f, 2.0) == pytest.approx(0.75 * math.pi, abs=1e-6)
    assert boundary_phase(f, -2.0) == pytest.approx(0.75 * math.pi, abs=1e-6)
    with pytest.raises(DomainViolation):
        boundary_phase(f, 0.0)


@pytest.mark.parametrize("name", ["bm", "cauchy", "risk"])
def test_estimates(name, request):
    f = request.getfixturevalue(name)
    assert derivative_bound_check(f).passed
    assert bound_estimate_check(f).passed
    assert bound_estimate_check(f, r=10.0).passed


def test_imag_integrability(bm_drift, bm):
    result = imag_integrability(bm_drift(1.0))
    assert result.value.real == pytest.approx(math.pi / 2, rel=1e-8)
    assert imag_integrability(bm).value.real == pytest.approx(0.0, abs=1e-12)
