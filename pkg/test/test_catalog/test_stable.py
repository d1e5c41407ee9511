import cmath
import math

import pytest

from rogerswh._helpers import AlphaOneSkewed, OutOfRange
from rogerswh.catalog import rho_range, stable_convert


def test_symmetric():
    p = stable_convert(1.5, beta=0.0, k=2.0)
    assert p.rho == pytest.approx(0.5)
    assert p.a == pytest.approx(2**1.5)
    assert p.c_up == pytest.approx(p.c_down)
    assert p.balanced


@pytest.mark.parametrize("alpha,rho", [(0.6, 0.3), (0.7, 0.4), (1.2, 0.5), (1.5, 0.6), (1.8, 0.55)])
def test_rho_round_trip(alpha, rho):
    p = stable_convert(alpha, rho=rho, k=1.3)
    assert p.rho == pytest.approx(rho)
    assert p.k == pytest.approx(1.3)
    again = stable_convert(alpha, a=p.a)
    assert again.rho == pytest.approx(rho, abs=1e-12)
    assert again.beta == pytest.approx(p.beta, abs=1e-12)
    via_beta = stable_convert(alpha, beta=p.beta, k=p.k)
    assert via_beta.a == pytest.approx(p.a, rel=1e-12)
    via_weights = stable_convert(alpha, c_up=p.c_up, c_down=p.c_down)
    assert via_weights.a == pytest.approx(p.a, rel=1e-12)


def test_theta_is_constant_spine_argument():
    p = stable_convert(1.5, rho=0.6)
    assert p.theta == pytest.approx(math.pi * p.rho - math.pi / 2)


def test_one_sided():
    up_only = stable_convert(0.5, c_up=1.0, c_down=0.0)
    assert up_only.rho == pytest.approx(1.0)
    assert up_only.beta == pytest.approx(1.0)
    down_only = stable_convert(1.5, c_up=0.0, c_down=1.0)
    assert down_only.rho == pytest.approx(1 / 1.5)
    assert down_only.balanced


def test_alpha_one():
    p = stable_convert(1.0, c=1.0, b=1.0)
    assert p.a == 1 - 1j
    assert p.beta is None
    assert p.rho == pytest.approx(0.75)
    assert p.k == pytest.approx(1.0)
    cauchy = stable_convert(1.0, rho=0.5)
    assert cauchy.a == pytest.approx(1.0)


def test_dual():
    p = stable_convert(1.5, rho=0.6)
    d = p.dual()
    assert d.rho == pytest.approx(0.4)
    assert d.a == p.a.conjugate()
    assert d.beta == pytest.approx(-p.beta)
    assert d.dual().a == p.a
    assert d.dual().rho == pytest.approx(p.rho)


def test_rho_range():
    assert rho_range(0.8) == (0.0, 1.0)
    assert rho_range(2.0) == (0.5, 0.5)
    lo, hi = rho_range(1.5)
    assert lo == pytest.approx(1 / 3)
    assert hi == pytest.approx(2 / 3)


@pytest.mark.parametrize(
    "alpha,kwargs",
    [
        (0.0, {}),
        (2.5, {}),
        (1.5, {"rho": 0.9}),
        (1.0, {"rho": 1.0}),
        (1.2, {"beta": 1.5}),
        (1.5, {"k": -1.0}),
        (1.5, {"c_up": -1.0, "c_down": 1.0}),
        (1.5, {"c_up": 0.0, "c_down": 0.0}),
        (1.5, {"c": 1.0}),
        (1.0, {"c": -1.0}),
        (1.0, {"c_up": 1.0}),
        (1.5, {"a": 0}),
        (1.5, {"a": cmath.exp(1j)}),
    ],
)
def test_out_of_range(alpha, kwargs):
    with pytest.raises(OutOfRange):
        stable_convert(alpha, **kwargs)


def test_alpha_one_skewed():
    with pytest.raises(AlphaOneSkewed):
        stable_convert(1.0, beta=0.5)
