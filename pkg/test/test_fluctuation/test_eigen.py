import math

import pytest

from rogerswh._helpers import DomainViolation, NotBalanced, Side
from rogerswh.catalog import make, stable_convert
from rogerswh.fluctuation import (
    EigenBasis,
    completeness_check,
    conjectured_sup_cdf,
    eigenfunction_g_laplace,
    eigenfunction_laplace,
    stable_eigenfunction,
    stable_eigenfunction_laplace,
    stable_phases,
    theta,
)
from rogerswh.model import Stable
from test import testtools


def test_stable_phases():
    up, down = stable_phases(stable_convert(1.2, rho=0.5))
    assert up == pytest.approx(0.1 * math.pi)
    assert down == pytest.approx(0.1 * math.pi)
    for alpha in (0.5, 1.0, 1.7):
        up, down = stable_phases(stable_convert(alpha, rho=0.5))
        assert up == pytest.approx((2 - alpha) * math.pi / 8)
    up, down = stable_phases(stable_convert(1.5, rho=0.6))
    assert up == pytest.approx(0.02 * math.pi)
    assert down == pytest.approx(0.12 * math.pi)


@pytest.mark.parametrize("alpha,rho", [(0.6, 0.3), (1.2, 0.5), (1.8, 0.55), (1.5, 0.6), (0.8, 0.3)])
@pytest.mark.parametrize("r", [0.5, 1.0, 8.0])
def test_theta_matches_stable_phases(stable, alpha, rho, r):
    f = stable(alpha, rho=rho)
    phases = theta(f, r)
    up, down = stable_phases(f.spec.params)
    assert phases.theta_up == pytest.approx(up, abs=1e-5)
    assert phases.theta_down == pytest.approx(down, abs=1e-5)
    assert phases.for_side("down") == phases.theta_down


def test_theta__not_balanced(bm_drift):
    with pytest.raises(NotBalanced):
        theta(bm_drift(1.0), 2.0)


def test_eigenfunction_laplace__brownian(bm):
    """F(r; x) = sin(r x) for the Brownian motion"""
    r, xi = 2.0, 1.5
    for side in ("up", "down"):
        assert eigenfunction_laplace(bm, side, r, xi) == pytest.approx(r / (xi**2 + r**2), rel=1e-8)
        assert abs(eigenfunction_g_laplace(bm, side, r, xi)) < 1e-8


def test_eigen_basis(bm):
    basis = EigenBasis(bm, 2.0)
    assert basis.anchors(Side.UP) == (2j, -2j)
    assert basis.phase(Side.UP) == pytest.approx(0.0, abs=1e-9)
    with pytest.raises(DomainViolation):
        basis.lf(Side.UP, -0.5)


@testtools.slow
def test_eigenfunction_laplace__stable(stable):
    f = stable(1.5, rho=0.6)
    p = f.spec.params
    for side in ("up", "down"):
        general = eigenfunction_laplace(f, side, 1.0, 2.0)
        explicit = stable_eigenfunction_laplace(p, side, 1.0, 2.0)
        assert general == pytest.approx(explicit, rel=1e-5)


@testtools.slow
def test_completeness__brownian(bm):
    assert completeness_check(bm, 1.0, 2.5) == pytest.approx(1.0, abs=1e-5)


@testtools.slow
def test_stable_eigenfunction__cauchy():
    p = stable_convert(1.0, rho=0.5)
    near_zero = stable_eigenfunction(p, "up", 1.0, 1e-9)
    assert near_zero.oscillatory_part == pytest.approx(math.sin(math.pi / 8), rel=1e-6)
    first = stable_eigenfunction(p, "up", 1.0, 0.5)
    second = stable_eigenfunction(p, "up", 1.0, 2.0)
    assert 0 < second.g < first.g


def test_stable_eigenfunction_laplace__errors():
    p = stable_convert(1.5, rho=0.6)
    with pytest.raises(DomainViolation):
        stable_eigenfunction_laplace(p, "up", 1.0, -2.0)


def test_conjectured_sup_cdf__guarded():
    p = stable_convert(1.5, rho=0.5)
    with pytest.raises(DomainViolation):
        conjectured_sup_cdf(p, 1.0, 1.0)
    with pytest.raises(DomainViolation):
        conjectured_sup_cdf(stable_convert(1.5, rho=0.6), 1.0, 1.0, experimental=True)


def test_make_and_theta_agree_on_symmetric_cauchy():
    f = make(Stable(stable_convert(1.0, rho=0.5)))
    assert theta(f, 2.0).theta_up == pytest.approx(math.pi / 8, abs=1e-6)
