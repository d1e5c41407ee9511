"""Supremum functionals of strictly stable processes in closed integral form.

With rho = P(X_t > 0), the Laplace transform of sup_{s <= t} X_s is a single integral in u whose integrand carries
exp(I(u) + J(u)); I and J are integrals in v that depend on (alpha, rho, u) only and are cached across calls.
"""

import functools
import math
from typing import Optional, Union

import numpy as np
from scipy import special

from .. import _msgs as msgs
from .._helpers import DomainViolation, GammaPole, OutOfRange, RhoDegenerate, Side
from .._quad import DEFAULT_OPTIONS, integrate_halfline, integrate_interval, settle
from ..catalog import make
from ..model import QuadOptions, Stable, StableParams
from ._supremum import extreme_laplace_resolvent

SERIES_RADIUS = 1e-4
EXPONENT_CACHE_SIZE = 1 << 16


def side_rho(p: StableParams, side: Union[Side, str]) -> float:
    """rho of the process whose supremum is taken: rho for the up side, 1 - rho for the down side."""
    if not 0 < p.rho < 1:
        raise RhoDegenerate(msgs.RHO_DEGENERATE_MSG.format(p.rho))
    return p.rho if Side.decode(side) is Side.UP else 1 - p.rho


def log_power_quotient(v: np.ndarray, u: float, alpha: float) -> np.ndarray:
    """log((v - u) / (v^alpha - u^alpha)), continued through v = u by its second-order expansion."""
    if alpha == 1:
        return np.zeros_like(v)
    x = (v - u) / u
    near = np.abs(x) < SERIES_RADIUS
    with np.errstate(all="ignore"):
        direct = np.log(np.abs(x) / np.abs(np.expm1(alpha * np.log1p(x))))
    series = -np.log(alpha) - np.log1p((alpha - 1) * x / 2 + (alpha - 1) * (alpha - 2) * x**2 / 6)
    return (1 - alpha) * math.log(u) + np.where(near, series, direct)


@functools.lru_cache(maxsize=EXPONENT_CACHE_SIZE)
def sup_exponent(alpha: float, rho: float, u: float, opts: Optional[QuadOptions] = None) -> float:
    """I(u) + J(u) in the integrand of the stable supremum transform; cached per (alpha, rho, u, opts)."""
    opts = opts or DEFAULT_OPTIONS
    s1, c1 = math.sin(rho * math.pi), math.cos(rho * math.pi)
    s2, c2 = math.sin(2 * rho * math.pi), math.cos(2 * rho * math.pi)

    def i_kernel(v: np.ndarray) -> np.ndarray:
        weight = s1 / (1 + 2 * v * c1 + v**2)
        return weight * (log_power_quotient(v, u, alpha) + 0.5 * np.log(u**2 - 2 * u * v * c2 + v**2))

    def j_kernel(v: np.ndarray) -> np.ndarray:
        weight = (1 + v * c1) / (1 + 2 * v * c1 + v**2) / v
        return weight * np.angle(u - v * c2 + 1j * v * s2)

    i_part = settle(integrate_halfline(i_kernel, opts, points=(u, 1.0)), "stable supremum exponent")
    j_part = settle(integrate_halfline(j_kernel, opts, points=(u, 1.0)), "stable supremum exponent")
    return (i_part.value.real + j_part.value.real) / math.pi


def _sup_weight(alpha: float, rho: float, u: float, opts: Optional[QuadOptions] = None) -> float:
    s1, c1 = math.sin(rho * math.pi), math.cos(rho * math.pi)
    return s1 / (1 + 2 * u * c1 + u**2) * math.exp(sup_exponent(alpha, rho, u, opts))


def stable_sup_laplace(
    p: StableParams,
    t: float,
    xi: float,
    side: Union[Side, str] = Side.UP,
    opts: Optional[QuadOptions] = None,
) -> float:
    """E exp(-xi sup_{s <= t} X_s) for a strictly stable X (the infimum of X for the down side).

    >>> from rogerswh.catalog import stable_convert
    >>> round(stable_sup_laplace(stable_convert(2.0, k=1.0), 1.0, 1.0), 6)
    0.427584
    """
    rho = side_rho(p, side)
    if not (t > 0 and xi > 0):
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("(t, xi)", (t, xi), "(0, inf)^2"))
    alpha = p.alpha
    scale = p.c_abs * t * xi**alpha

    def integrand(u: np.ndarray) -> np.ndarray:
        out = np.zeros(len(u))
        for i, ui in enumerate(u):
            decay = scale * ui**alpha
            if decay > 745:
                continue
            out[i] = ui ** (-(2 - alpha) * rho) * _sup_weight(alpha, rho, float(ui), opts) * math.exp(-decay)
        return out * alpha / math.pi

    result = settle(integrate_halfline(integrand, opts, points=(1.0,)), "stable_sup_laplace")
    return float(result.value.real)


def stable1_sup_density(
    p: StableParams, t: float, x: float, side: Union[Side, str] = Side.UP, opts: Optional[QuadOptions] = None
) -> float:
    """Density of sup_{s <= t} X_s at x > 0 for a strictly stable X with alpha = 1."""
    if p.alpha != 1:
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"alpha = {p.alpha}", "stable1_sup_density"))
    rho = side_rho(p, side)
    if not (t > 0 and x > 0):
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("(t, x)", (t, x), "(0, inf)^2"))
    scale = p.c_abs * t
    u = x / scale
    return u ** (-rho) * _sup_weight(1.0, rho, u, opts) / (math.pi * scale)


def _is_gamma_pole(z: float) -> bool:
    return z <= 0 and float(z).is_integer()


def stable_mellin(
    p: StableParams,
    t: float,
    sigma: float,
    s: float,
    side: Union[Side, str] = Side.UP,
    opts: Optional[QuadOptions] = None,
) -> float:
    """E (sup_{u <= t} X_u)^(-s) for 0 < s < alpha rho, through the resolvent kappa(sigma; 0+) / kappa(sigma; xi).

    The moment equals (t sigma)^(-s/alpha) / (Gamma(s) Gamma(1 - s/alpha)) int R(sigma, xi) xi^(s-1) dxi for every
    sigma > 0.
    """
    side = Side.decode(side)
    rho = side_rho(p, side)
    for z in (s, 1 - s / p.alpha):
        if _is_gamma_pole(z):
            raise GammaPole(msgs.GAMMA_POLE_MSG.format(z))
    if not 0 < s < rho * p.alpha:
        raise OutOfRange(msgs.MOMENT_STRIP_MSG.format(s, rho * p.alpha))
    if not (t > 0 and sigma > 0):
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("(t, sigma)", (t, sigma), "(0, inf)^2"))
    f = make(Stable(p))
    cf = f.closed_forms
    closed = cf is not None and (cf.kappa_up if side is Side.UP else cf.kappa_down) is not None
    method = "closed_form" if closed else "direct"

    def resolvent(xi: np.ndarray) -> np.ndarray:
        return np.array([extreme_laplace_resolvent(f, side, sigma, float(x), method, opts=opts) for x in xi])

    low = settle(
        integrate_interval(lambda xi: (resolvent(xi) - 1) * xi ** (s - 1), 0.0, 1.0, opts, log_scale=True),
        "stable_mellin",
    )
    high = settle(integrate_halfline(lambda xi: resolvent(xi) * xi ** (s - 1), opts, lower=1.0), "stable_mellin")
    total = 1 / s + low.value.real + high.value.real
    return float((t * sigma) ** (-s / p.alpha) / (special.gamma(s) * special.gamma(1 - s / p.alpha)) * total)
