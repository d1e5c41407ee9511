import math

import numpy as np
import pytest
from scipy import special

from rogerswh._helpers import DomainViolation, GammaPole, OutOfRange, RhoDegenerate
from rogerswh._quad import integrate_halfline
from rogerswh.catalog import stable_convert
from rogerswh.fluctuation import _eigen, _stable_sup, stable1_sup_density, stable_mellin, stable_sup_laplace
from rogerswh.fluctuation._stable_sup import log_power_quotient
from rogerswh.model import QuadOptions
from test import testtools


def test_stable_sup_laplace__gaussian_value():
    assert stable_sup_laplace(stable_convert(2.0, k=1.0), 1.0, 1.0) == pytest.approx(0.427584, abs=1e-6)


@testtools.slow
@pytest.mark.parametrize("t", [0.5, 1.0, 3.0])
@pytest.mark.parametrize("xi", [0.2, 1.0, 4.0])
def test_stable_sup_laplace__gaussian_grid(t, xi):
    p = stable_convert(2.0, k=2.0)
    assert stable_sup_laplace(p, t, xi) == pytest.approx(special.erfcx(2 * xi * math.sqrt(t)), abs=1e-6)


def test_stable_sup_laplace__side_and_symmetry():
    p = stable_convert(1.5, beta=0.0)
    assert stable_sup_laplace(p, 1.0, 1.0, "up") == pytest.approx(stable_sup_laplace(p, 1.0, 1.0, "down"))
    value = stable_sup_laplace(p, 1.0, 1.0)
    assert 0 < value < 1


def test_stable_sup_laplace__scaling():
    """sup_{s <= t} X_s has the law of t^(1/alpha) sup_{s <= 1} X_s"""
    p = stable_convert(1.2, rho=0.45)
    t = 2.5
    assert stable_sup_laplace(p, t, 1.0) == pytest.approx(stable_sup_laplace(p, 1.0, t ** (1 / 1.2)), rel=1e-8)


def test_stable_sup_laplace__errors():
    with pytest.raises(RhoDegenerate):
        stable_sup_laplace(stable_convert(0.5, rho=1.0), 1.0, 1.0)
    with pytest.raises(OutOfRange):
        stable_sup_laplace(stable_convert(1.5), 0.0, 1.0)
    with pytest.raises(OutOfRange):
        stable_sup_laplace(stable_convert(1.5), 1.0, -1.0)


def test_log_power_quotient_is_continuous():
    u = 2.0
    v = np.array([u * (1 - 2e-4), u * (1 - 1e-5), u, u * (1 + 1e-5), u * (1 + 2e-4)])
    values = log_power_quotient(v, u, 1.5)
    expected = -math.log(1.5) - 0.5 * math.log(u)
    np.testing.assert_allclose(values, expected, atol=1e-3)
    assert values[2] == pytest.approx(expected, rel=1e-14)
    assert not np.any(log_power_quotient(v, u, 1.0))


@testtools.slow
@pytest.mark.parametrize("rho", [0.3, 0.5, 0.7])
def test_stable1_sup_density_integrates_to_one(rho):
    p = stable_convert(1.0, rho=rho)

    def density(x):
        return np.array([stable1_sup_density(p, 1.0, float(xi)) for xi in x])

    total = integrate_halfline(density, QuadOptions(rel_tol=1e-7), points=(1.0,))
    assert total.value.real == pytest.approx(1.0, abs=1e-3)


def test_stable1_sup_density__errors():
    with pytest.raises(DomainViolation):
        stable1_sup_density(stable_convert(1.5), 1.0, 1.0)
    with pytest.raises(OutOfRange):
        stable1_sup_density(stable_convert(1.0, rho=0.5), 1.0, 0.0)
    assert stable1_sup_density(stable_convert(1.0, rho=0.5), 1.0, 1.0) > 0


@pytest.mark.parametrize("sigma", [1.0, 3.0])
def test_stable_mellin__gaussian(sigma):
    p = stable_convert(2.0, k=1.0)
    assert stable_mellin(p, 1.0, sigma, 0.5) == pytest.approx(1.44641, rel=1e-5)


def test_stable_mellin__errors():
    p = stable_convert(2.0, k=1.0)
    with pytest.raises(GammaPole):
        stable_mellin(p, 1.0, 1.0, 2.0)
    with pytest.raises(GammaPole):
        stable_mellin(p, 1.0, 1.0, 0.0)
    with pytest.raises(OutOfRange):
        stable_mellin(p, 1.0, 1.0, 1.5)
    with pytest.raises(OutOfRange):
        stable_mellin(p, 0.0, 1.0, 0.5)


def test_quad_options_reach_the_exponent(mocker):
    p = stable_convert(1.5, rho=0.6)
    opts = QuadOptions(rel_tol=1e-8)
    sup_spy = mocker.spy(_stable_sup, "sup_exponent")
    value = stable_sup_laplace(p, 1.0, 1.0, opts=opts)
    assert sup_spy.call_count > 0
    assert all(call.args[3] is opts for call in sup_spy.call_args_list)
    assert value == pytest.approx(stable_sup_laplace(p, 1.0, 1.0), abs=1e-6)
    eigen_spy = mocker.spy(_eigen, "eigen_exponent")
    _eigen.stable_eigenfunction(p, "up", 1.0, 0.5, opts=opts)
    assert eigen_spy.call_count > 0
    assert all(call.args[3] is opts for call in eigen_spy.call_args_list)
