import math

import numpy as np
import pytest

from rogerswh._core import check_rogers, transform
from rogerswh._helpers import DomainViolation, ZeroFunction
from rogerswh.model import RogersFunction, TransformKind
from test import testtools

POINTS = testtools.right_half_plane_points()


def _values(f, points=POINTS):
    return np.array([f(p) for p in points])


def test_inv_reflect(bm):
    g = transform(bm, TransformKind.INV_REFLECT)
    testtools.assert_close(_values(g), 2.0, atol=1e-12)


def test_recip_inv(stable):
    f = stable(1.5, rho=0.6)
    g = transform(f, "recip_inv")
    a = f.spec.params.a
    expected = np.array([np.power(p, 1.5) / a for p in POINTS])
    testtools.assert_close(_values(g), expected, rtol=1e-12)


def test_square_inv(bm):
    g = transform(bm, TransformKind.SQUARE_INV)
    testtools.assert_close(_values(g), 0.5, rtol=1e-12)


def test_power_sandwich(bm):
    g = transform(bm, TransformKind.POWER_SANDWICH, alpha=0.5)
    expected = 0.5 * np.power(np.array(POINTS), 1.5)
    testtools.assert_close(_values(g), expected, rtol=1e-12)
    with pytest.raises(DomainViolation):
        transform(bm, TransformKind.POWER_SANDWICH, alpha=1.5)


def test_compose_cbf(bm):
    g = transform(bm, TransformKind.COMPOSE_CBF, g="sqrt")
    testtools.assert_close(_values(g), np.array(POINTS) / math.sqrt(2), rtol=1e-12)
    h = transform(bm, TransformKind.COMPOSE_CBF, g="power", p=0.25)
    assert h(4.0) == pytest.approx(8**0.25)
    custom = transform(bm, TransformKind.COMPOSE_CBF, g=lambda w: w / (1 + w))
    assert custom(2.0) == pytest.approx(2 / 3)


def test_compose_cbf__errors(bm):
    with pytest.raises(DomainViolation):
        transform(bm, TransformKind.COMPOSE_CBF, g="cube")
    with pytest.raises(DomainViolation):
        transform(bm, TransformKind.COMPOSE_CBF, g="power", p=2.0)


def test_bounded_complement():
    f = RogersFunction(lambda z: z / (z - 4j), label="compound poisson")
    g = transform(f, TransformKind.BOUNDED_COMPLEMENT, c=2.0)
    xi = 1 + 1j
    assert g(xi) == pytest.approx(2 - (1 / xi) / (1 / xi - 4j), rel=1e-14)
    assert check_rogers(g).passed
    with pytest.raises(DomainViolation):
        transform(f, TransformKind.BOUNDED_COMPLEMENT, c=0.5)


def test_bounded_complement__unbounded(bm):
    with pytest.raises(DomainViolation):
        transform(bm, TransformKind.BOUNDED_COMPLEMENT, c=1.0)


def test_translate_and_mobius(bm_drift):
    f = bm_drift(1.0)
    g = transform(f, TransformKind.TRANSLATE, zeta0=1j)
    assert g(2.0) == pytest.approx(f(2 + 1j), rel=1e-14)
    same = transform(f, TransformKind.MOBIUS, zeta0=1j)
    assert same(2.0) == pytest.approx(g(2.0))
    h = transform(f, TransformKind.MOBIUS, zeta0=1j, zeta_inf=3j)
    d = 2j
    assert h(2.0) == pytest.approx(f(1j + d * 2 / (2 + d)), rel=1e-14)
    with pytest.raises(DomainViolation):
        transform(f, TransformKind.TRANSLATE, zeta0=-1.0)
    with pytest.raises(DomainViolation):
        transform(f, TransformKind.MOBIUS, zeta0=1j, zeta_inf=1j)


def test_dual(bm_drift):
    g = transform(bm_drift(1.0), TransformKind.DUAL)
    expected = bm_drift(-1.0)
    testtools.assert_close(_values(g), _values(expected), rtol=1e-14)
    assert g.prime(1 + 1j) == pytest.approx(expected.prime(1 + 1j))


@pytest.mark.parametrize(
    "kind,params",
    [
        (TransformKind.INV_REFLECT, {}),
        (TransformKind.RECIP_INV, {}),
        (TransformKind.SQUARE_INV, {}),
        (TransformKind.POWER_SANDWICH, {"alpha": 0.3}),
        (TransformKind.COMPOSE_CBF, {"g": "log1p"}),
        (TransformKind.DUAL, {}),
    ],
)
def test_transforms_stay_rogers(risk, kind, params):
    assert check_rogers(transform(risk, kind, **params), tol=1e-8).passed


def test_reciprocal_of_zero_function():
    zero = RogersFunction(lambda z: 0 * z, label="zero")
    with pytest.raises(ZeroFunction):
        transform(zero, TransformKind.INV_REFLECT)
    with pytest.raises(ZeroFunction):
        transform(zero, TransformKind.RECIP_INV)
