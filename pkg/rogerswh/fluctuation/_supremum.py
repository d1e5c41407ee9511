"""Laplace transforms of the supremum and infimum functionals of a Levy process with a balanced exponent f.

E exp(-xi sup X) is an integral along the curve of real values of f. Its integrand carries the normalised factor
Psi_r(xi) = g_up(xi) / g_up(0+) of the difference quotient g = f_[zeta(r)].
"""

import math
from typing import Callable, Optional, Sequence, Tuple, Union

import numpy as np

from .. import _msgs as msgs
from .._core import classify, difference_quotient
from .._curve import curve_at, require_balanced, zeta as curve_point
from .._extended import shifted
from .._helpers import LOGGER, DomainViolation, NotOnCurve, OutOfRange, Side
from .._quad import DEFAULT_OPTIONS, extrapolate_limit, integrate_halfline, settle
from .._wiener_hopf import _require_nonzero, side_curve, wh_ratio, wh_zero_ratio
from ..model import CurveGrid, CurveSample, QuadOptions, RogersFunction, SupremumQuery

PSI_EPS_LADDER = (1e-2, 1e-3, 1e-4)
PSI_METHODS = ("ladder", "direct")
RESOLVENT_METHODS = ("ladder", "direct", "curve", "closed_form")

Weight = Callable[[float], float]


def _check_method(method: str, allowed: Sequence[str], what: str) -> None:
    if method not in allowed:
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"method '{method}'", f"{what} {tuple(allowed)}"))


def _check_positive(name: str, value: float) -> None:
    if not value > 0:
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format(name, value, "(0, inf)"))


def outer_options(opts: Optional[QuadOptions]) -> Tuple[QuadOptions, QuadOptions]:
    """Inner and outer tolerances of a nested quadrature; the outer one is never tighter than 1e-8."""
    inner = opts or DEFAULT_OPTIONS
    return inner, inner.with_rel_tol(max(inner.rel_tol, 1e-8))


def quotient_at(f: RogersFunction, r: float) -> Tuple[CurveSample, RogersFunction]:
    """The curve point at radius r and the difference quotient f_[zeta(r)]."""
    _check_positive("r", r)
    sample = curve_point(f, r)
    if sample.on_axis or not sample.zeta.real > 0:
        raise NotOnCurve(msgs.NOT_ON_CURVE_MSG.format(r))
    return sample, difference_quotient(f, sample.zeta)


def _psi(
    g: RogersFunction,
    side: Side,
    xi: float,
    at_zero: float,
    method: str,
    eps_ladder: Sequence[float],
    opts: Optional[QuadOptions],
) -> complex:
    if method == "direct":
        return wh_zero_ratio(g, side, xi, opts, f_at_zero=at_zero).value
    seq = [(eps, wh_ratio(g, side, xi, eps, opts).value) for eps in sorted(eps_ladder, reverse=True)]
    limit = extrapolate_limit(seq)
    if limit.err_estimate > 1e-6 * abs(limit.value):
        LOGGER.debug(f"psi extrapolation at xi={xi}: spread {limit.err_estimate:.3g}")
    return limit.value


def psi_ratio(
    f: RogersFunction,
    side: Union[Side, str],
    r: float,
    xi: float,
    eps_ladder: Sequence[float] = PSI_EPS_LADDER,
    method: str = "ladder",
    opts: Optional[QuadOptions] = None,
) -> complex:
    """Psi_r(xi) = g_up(xi) / g_up(0+) for g = f_[zeta(r)] (g_down for the down side).

    The "ladder" method extrapolates g_up(xi) / g_up(eps) to eps = 0; "direct" evaluates the limit as one integral.

    >>> from rogerswh.catalog import make, stable_convert
    >>> from rogerswh.model import Stable
    >>> round(psi_ratio(make(Stable(stable_convert(2.0))), "up", 1.0, 3.0).real, 8)
    1.0
    """
    side = Side.decode(side)
    _check_method(method, PSI_METHODS, "psi_ratio")
    _check_positive("xi", xi)
    require_balanced(f, "psi_ratio")
    sample, g = quotient_at(f, r)
    return _psi(g, side, xi, sample.r**2 / sample.lam, method, eps_ladder, opts)


def psi_ratio_curve(
    f: RogersFunction,
    side: Union[Side, str],
    r: float,
    xi: float,
    eps: float = 1e-4,
    opts: Optional[QuadOptions] = None,
) -> complex:
    """g_up(xi) / g_up(eps) for g = f_[zeta(r)] as an integral of log g along the curve of real values of f.

    The up ratio is exp((1/pi) int Re[(zeta'/(xi + i zeta) - zeta'/(eps + i zeta)) log g(zeta)] ds); the down
    ratio takes -i zeta in place of i zeta. Small eps approximates `psi_ratio`.
    """
    side = Side.decode(side)
    _check_positive("xi", xi)
    _check_positive("eps", eps)
    require_balanced(f, "psi_ratio_curve")
    _, g = quotient_at(f, r)
    sign = 1j if side is Side.UP else -1j

    def integrand(s: np.ndarray) -> np.ndarray:
        z, dz, _, _ = side_curve(f, Side.UP, s)
        log_g = np.log(np.asarray(g(z, side="right")))
        kernel = dz / (xi + sign * z) - dz / (eps + sign * z)
        return (kernel * log_g).real / math.pi

    result = settle(integrate_halfline(integrand, opts, points=(xi, eps, r)), "psi_ratio_curve")
    return complex(math.exp(result.value.real))


def _sup_integral(
    f: RogersFunction,
    side: Side,
    xi: float,
    weight: Weight,
    what: str,
    grid: Optional[CurveGrid],
    opts: Optional[QuadOptions],
    method: str,
    eps_ladder: Sequence[float],
) -> float:
    """(1/pi) int Psi_r(xi) xi Re zeta / (xi^2 -+ 2 xi Im zeta + r^2) (lambda'/lambda) weight(lambda) dr."""
    require_balanced(f, what, grid)
    inner, outer = outer_options(opts)
    sign = -2.0 if side is Side.UP else 2.0

    def integrand(r: np.ndarray) -> np.ndarray:
        c = curve_at(f, r)
        out = np.zeros(len(r), dtype=complex)
        for i, (radius, z, lam, dlam) in enumerate(zip(r, c.zeta, c.lam, c.lam_prime)):
            w = weight(float(lam))
            if w == 0.0:
                continue
            z = complex(z)
            g = difference_quotient(f, z)
            psi = _psi(g, side, xi, radius**2 / lam, method, eps_ladder, inner)
            kernel = xi * z.real / (xi**2 + sign * xi * z.imag + radius**2)
            out[i] = psi * kernel * dlam / lam * w
        return out / math.pi

    result = settle(integrate_halfline(integrand, outer, points=(xi,)), what)
    return float(result.value.real)


def extreme_laplace(
    f: RogersFunction,
    q: SupremumQuery,
    grid: Optional[CurveGrid] = None,
    opts: Optional[QuadOptions] = None,
    method: str = "direct",
    eps_ladder: Sequence[float] = PSI_EPS_LADDER,
) -> float:
    """E exp(-xi sup_{s <= t} X_s) for the up side and E exp(xi inf_{s <= t} X_s) for the down side.

    Every abscissa of the integral along the curve costs one factor of a difference quotient, computed by `method`
    as in `psi_ratio`.
    """
    side = Side.decode(q.side)
    _check_positive("t", q.t)
    _check_positive("xi", q.xi)
    _check_method(method, PSI_METHODS, "extreme_laplace")
    t = float(q.t)

    def decay(lam: float) -> float:
        return math.exp(-t * lam) if t * lam < 745 else 0.0

    return _sup_integral(f, side, float(q.xi), decay, "extreme_laplace", grid, opts, method, eps_ladder)


def _closed_resolvent(f: RogersFunction, side: Side, sigma: float, xi: float) -> float:
    cf = f.closed_forms
    kappa = None if cf is None else (cf.kappa_up if side is Side.UP else cf.kappa_down)
    if kappa is None:
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f.label, "closed form kappa"))
    values = np.asarray(kappa(complex(sigma), np.array([0.0, xi], dtype=complex)))
    return float((values[0] / values[1]).real)


def extreme_laplace_resolvent(
    f: RogersFunction,
    side: Union[Side, str],
    sigma: float,
    xi: float,
    method: str = "ladder",
    grid: Optional[CurveGrid] = None,
    opts: Optional[QuadOptions] = None,
    eps_ladder: Sequence[float] = PSI_EPS_LADDER,
) -> float:
    """kappa_up(sigma; 0+) / kappa_up(sigma; xi), the time-Laplace transform sigma int e^{-sigma t} E e^{-xi sup} dt.

    Methods: "ladder" extrapolates f_up(sigma; eps) / f_up(sigma; xi) to eps = 0, "direct" evaluates the eps -> 0
    limit as one integral, "curve" integrates the supremum formula with sigma / (sigma + lambda) in place of
    exp(-t lambda) (balanced f only), and "closed_form" uses the catalog's kappa.
    """
    side = Side.decode(side)
    _check_positive("sigma", sigma)
    _check_positive("xi", xi)
    _check_method(method, RESOLVENT_METHODS, "extreme_laplace_resolvent")
    _require_nonzero(f)
    if method == "closed_form":
        return _closed_resolvent(f, side, sigma, xi)
    if method == "curve":

        def killed(lam: float) -> float:
            return sigma / (sigma + lam)

        return _sup_integral(f, side, xi, killed, "extreme_laplace_resolvent", grid, opts, "direct", eps_ladder)
    g = shifted(f, sigma)
    if method == "direct":
        ratio = wh_zero_ratio(g, side, xi, opts, f_at_zero=classify(f).f_at_zero + sigma)
        return float(1 / ratio.value.real)
    seq = [(eps, wh_ratio(g, side, eps, xi, opts).value) for eps in sorted(eps_ladder, reverse=True)]
    limit = extrapolate_limit(seq)
    LOGGER.debug(f"resolvent extrapolation at sigma={sigma}, xi={xi}: spread {limit.err_estimate:.3g}")
    return float(limit.value.real)
