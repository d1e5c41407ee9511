"""Generalised eigenfunctions F_up(r; x), F_down(r; x) of a Levy process killed on leaving the half-line.

F_up(r; x) = e^{bx} sin(ax + theta_up(r)) - G_up(r; x) with zeta_f(r) = a + ib, where G_up is completely monotone.
Everything here is computed through Laplace transforms in x, which only need Wiener-Hopf factors of the difference
quotient f_[zeta(r)]; strictly stable processes additionally admit G as an explicit integral.
"""

import cmath
import functools
import math
from typing import Callable, Dict, Optional, Tuple, Union

import numpy as np

from .. import _msgs as msgs
from .._core import difference_quotient
from .._curve import curve_at, require_balanced
from .._helpers import LOGGER, DomainViolation, Side
from .._quad import DEFAULT_OPTIONS, integrate_halfline, integrate_pv, settle
from .._wiener_hopf import wh_factor, wh_ratio, wh_zero_ratio
from ..catalog import make
from ..model import CurveGrid, EigenfunctionSample, PhaseData, QuadOptions, RogersFunction, Stable, StableParams
from ._stable_sup import log_power_quotient, side_rho
from ._supremum import _check_positive, outer_options, quotient_at

PHASE_TOL = 1e-6
EXPONENT_CACHE_SIZE = 1 << 16


def _clamped(phase: float) -> float:
    return 0.0 if -1e-9 < phase < 0 else phase


class EigenBasis:
    """The difference quotient g = f_[zeta] together with the anchors of the eigenfunction transforms.

    The up transform has its poles at i conj(zeta) and -i zeta, the down transform at i zeta and -i conj(zeta);
    g_up(i conj zeta) and g_down(i zeta) are evaluated once per side.
    """

    def __init__(self, f: RogersFunction, zeta: complex, opts: Optional[QuadOptions] = None) -> None:
        self.zeta = complex(zeta)
        self.g = difference_quotient(f, self.zeta)
        self.opts = opts
        self._anchor_values: Dict[Side, complex] = {}

    def anchors(self, side: Side) -> Tuple[complex, complex]:
        z = self.zeta
        if side is Side.UP:
            return 1j * z.conjugate(), -1j * z
        return 1j * z, -1j * z.conjugate()

    def anchor_value(self, side: Side) -> complex:
        if side not in self._anchor_values:
            self._anchor_values[side] = wh_factor(self.g, side, self.anchors(side)[0], self.opts).value
        return self._anchor_values[side]

    def phase(self, side: Side) -> float:
        return _clamped(cmath.phase(self.anchor_value(side)))

    def _check_xi(self, side: Side, xi: complex) -> None:
        if not xi.real > self.anchors(side)[0].real:
            raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"xi = {xi}", "the eigenfunction transform"))

    def lf(self, side: Side, xi: complex) -> complex:
        """Laplace transform of F(r; .) at xi."""
        xi = complex(xi)
        self._check_xi(side, xi)
        anchor, mirror = self.anchors(side)
        factor = wh_factor(self.g, side, xi, self.opts).value
        return self.zeta.real * factor / abs(self.anchor_value(side)) / ((xi - anchor) * (xi - mirror))

    def lg(self, side: Side, xi: complex) -> complex:
        """Laplace transform of G(r; .) at xi."""
        xi = complex(xi)
        self._check_xi(side, xi)
        anchor, mirror = self.anchors(side)
        value = self.anchor_value(side)
        oscillatory = (value / (xi - anchor) - value.conjugate() / (xi - mirror)) / (2j * abs(value))
        return oscillatory - self.lf(side, xi)


def theta(
    f: RogersFunction, r: float, grid: Optional[CurveGrid] = None, opts: Optional[QuadOptions] = None
) -> PhaseData:
    """Phases theta_up(r) = Arg g_up(i conj zeta) and theta_down(r) = Arg g_down(i zeta) for g = f_[zeta_f(r)].

    The two satisfy theta_up - theta_down = -Arg zeta'(r); a larger mismatch is logged as a warning.
    """
    require_balanced(f, "theta", grid)
    sample, _ = quotient_at(f, r)
    basis = EigenBasis(f, sample.zeta, opts)
    up, down = basis.phase(Side.UP), basis.phase(Side.DOWN)
    expected = -cmath.phase(sample.zeta_prime)
    if abs(up - down - expected) > PHASE_TOL:
        LOGGER.warning(f"phase mismatch at r={r}: theta_up - theta_down = {up - down:.12g}, expected {expected:.12g}")
    return PhaseData(float(r), up, down)


def stable_phases(p: StableParams) -> Tuple[float, float]:
    """(theta_up, theta_down) of a strictly stable exponent; they do not depend on r."""
    rho, alpha = p.rho, p.alpha
    return (1 - rho) * (1 - alpha * rho) * math.pi / 2, rho * (1 - alpha * (1 - rho)) * math.pi / 2


def _basis(f: RogersFunction, r: float, opts: Optional[QuadOptions]) -> EigenBasis:
    sample, _ = quotient_at(f, r)
    return EigenBasis(f, sample.zeta, opts)


def eigenfunction_laplace(
    f: RogersFunction,
    side: Union[Side, str],
    r: float,
    xi: complex,
    grid: Optional[CurveGrid] = None,
    opts: Optional[QuadOptions] = None,
) -> complex:
    """int_0^inf e^{-xi x} F(r; x) dx = Re zeta g_up(xi) / (|g_up(i conj zeta)| (xi + i zeta)(xi - i conj zeta)).

    The down transform uses g_down, |g_down(i zeta)| and the conjugate poles. Re xi must exceed the growth rate of
    the oscillatory part.
    """
    side = Side.decode(side)
    require_balanced(f, "eigenfunction_laplace", grid)
    return _basis(f, r, opts).lf(side, xi)


def eigenfunction_g_laplace(
    f: RogersFunction,
    side: Union[Side, str],
    r: float,
    xi: complex,
    grid: Optional[CurveGrid] = None,
    opts: Optional[QuadOptions] = None,
) -> complex:
    """Laplace transform of the completely monotone part G(r; x), the transform of the sine term minus that of F."""
    side = Side.decode(side)
    require_balanced(f, "eigenfunction_g_laplace", grid)
    return _basis(f, r, opts).lg(side, xi)


def completeness_check(
    f: RogersFunction,
    xi1: float,
    xi2: float,
    grid: Optional[CurveGrid] = None,
    opts: Optional[QuadOptions] = None,
) -> float:
    """(xi1 + xi2) (2/pi) int LF_up(r; xi1) LF_down(r; xi2) |zeta'(r)| dr, equal to 1 when the eigenfunctions are
    complete.

    Every abscissa evaluates four Wiener-Hopf factors; this is a slow consistency check.
    """
    _check_positive("xi1", xi1)
    _check_positive("xi2", xi2)
    require_balanced(f, "completeness_check", grid)
    inner, outer = outer_options(opts)

    def integrand(r: np.ndarray) -> np.ndarray:
        c = curve_at(f, r)
        out = np.zeros(len(r), dtype=complex)
        for i, (z, dz) in enumerate(zip(c.zeta, c.zeta_prime)):
            basis = EigenBasis(f, complex(z), inner)
            out[i] = basis.lf(Side.UP, xi1) * basis.lf(Side.DOWN, xi2) * abs(dz)
        return out

    result = settle(integrate_halfline(integrand, outer, points=(xi1, xi2)), "completeness_check")
    return float((xi1 + xi2) * 2 / math.pi * result.value.real)


@functools.lru_cache(maxsize=EXPONENT_CACHE_SIZE)
def eigen_exponent(alpha: float, rho: float, u: float, opts: Optional[QuadOptions] = None) -> float:
    """I(u) + J(u) in the integral representation of G for a strictly stable process."""
    opts = opts or DEFAULT_OPTIONS
    s1, c1 = math.sin(rho * math.pi), math.cos(rho * math.pi)
    s2, c2 = math.sin(2 * rho * math.pi), math.cos(2 * rho * math.pi)

    def near(v: np.ndarray) -> np.ndarray:
        return u**2 - 2 * u * v * c1 + v**2

    def far(v: np.ndarray) -> np.ndarray:
        return 1 - 2 * v * c2 + v**2

    def i_kernel(v: np.ndarray) -> np.ndarray:
        weight = 2 * u * s1 / near(v) - s2 / far(v)
        return weight * (log_power_quotient(v, 1.0, alpha) + 0.5 * np.log(far(v)))

    def j_kernel(v: np.ndarray) -> np.ndarray:
        with np.errstate(divide="ignore"):
            weight = (2 * v - 2 * u * c1) / near(v) + 1 / (1 - v) - (v - c2) / far(v)
        return weight * np.angle(1 - v * c2 + 1j * v * s2)

    i_part = settle(integrate_halfline(i_kernel, opts, points=(u, 1.0)), "stable eigenfunction exponent")
    j_part = settle(integrate_pv(j_kernel, 1.0, opts), "stable eigenfunction exponent")
    return (j_part.value.real - i_part.value.real) / (2 * math.pi)


def _stable_g(alpha: float, rho: float, weight: Callable[[float], complex], opts: Optional[QuadOptions]) -> complex:
    """(1/pi) sqrt(alpha sin(rho pi) / 2) int w(u) exp(I(u) + J(u)) weight(u) du."""
    spread = alpha * math.pi * rho
    s_a, c_a = math.sin(spread), math.cos(spread)
    scale = math.sqrt(alpha * math.sin(rho * math.pi) / 2) / math.pi

    def integrand(u: np.ndarray) -> np.ndarray:
        out = np.zeros(len(u), dtype=complex)
        for i, ui in enumerate(u):
            w = weight(float(ui))
            if w == 0:
                continue
            power = ui**alpha
            kernel = s_a * power / (1 + 2 * power * c_a + power**2)
            out[i] = kernel * math.exp(eigen_exponent(alpha, rho, float(ui), opts)) * w
        return out

    return scale * settle(integrate_halfline(integrand, opts, points=(1.0,)), "stable eigenfunction").value


def _stable_shape(p: StableParams, side: Union[Side, str]) -> Tuple[float, float, float]:
    """(rho, cos, sin) of the side: e^{bx} sin(ax + theta) with zeta = r (sin(rho pi) - i cos(rho pi))."""
    rho = side_rho(p, side)
    return rho, math.cos(rho * math.pi), math.sin(rho * math.pi)


def stable_eigenfunction(
    p: StableParams,
    side: Union[Side, str],
    r: float,
    x: float,
    opts: Optional[QuadOptions] = None,
) -> EigenfunctionSample:
    """F(r; x) = exp(-r x cos(rho pi)) sin(r x sin(rho pi) + theta) - G(r x) for a strictly stable process.

    The down side replaces rho by 1 - rho.
    """
    _check_positive("r", r)
    _check_positive("x", x)
    rho, c1, s1 = _stable_shape(p, side)
    phase = (1 - rho) * (1 - p.alpha * rho) * math.pi / 2
    y = r * x
    oscillatory = math.exp(-y * c1) * math.sin(y * s1 + phase)

    def decay(u: float) -> float:
        return math.exp(-y * u) if y * u < 745 else 0.0

    g = _stable_g(p.alpha, rho, decay, opts).real
    return EigenfunctionSample(float(r), float(x), oscillatory - g, oscillatory, g)


def stable_eigenfunction_laplace(
    p: StableParams,
    side: Union[Side, str],
    r: float,
    xi: float,
    opts: Optional[QuadOptions] = None,
) -> complex:
    """Laplace transform in x of `stable_eigenfunction`, from the explicit G."""
    _check_positive("r", r)
    rho, c1, s1 = _stable_shape(p, side)
    phase = (1 - rho) * (1 - p.alpha * rho) * math.pi / 2
    growth = complex(-r * c1, r * s1)
    if not xi > growth.real:
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"xi = {xi}", "the eigenfunction transform"))
    rotation = cmath.exp(1j * phase)
    oscillatory = (rotation / (xi - growth) - rotation.conjugate() / (xi - growth.conjugate())) / 2j
    g = _stable_g(p.alpha, rho, lambda u: 1 / (xi + r * u), opts)
    return oscillatory - g


def conjectured_sup_cdf(
    p: StableParams,
    t: float,
    x: float,
    *,
    experimental: bool = False,
    opts: Optional[QuadOptions] = None,
) -> float:
    """P(sup_{s <= t} X_s < x) = M int F_up(r; x) exp(-t c r^alpha) c alpha r^(alpha-1) dr for rho <= 1/2.

    The prefactor M = |g_up(i conj zeta)| / g_up(0+) for g = f_[zeta_f(1)] does not depend on r. The formula has
    not been proven, so it must be requested with `experimental=True`.
    """
    if not experimental:
        raise DomainViolation(msgs.EXPERIMENTAL_MSG.format("conjectured_sup_cdf"))
    rho = side_rho(p, Side.UP)
    if rho > 0.5:
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"rho = {rho}", "conjectured_sup_cdf (rho <= 1/2)"))
    _check_positive("t", t)
    _check_positive("x", x)
    LOGGER.info(f"conjectured_sup_cdf: evaluating an unproven formula at t={t}, x={x}")
    f = make(Stable(p))
    inner, outer = outer_options(opts)
    alpha, c = p.alpha, p.c_abs
    sample, g = quotient_at(f, 1.0)
    anchor = wh_ratio(g, Side.UP, 1j * sample.zeta.conjugate(), 1.0, inner).value
    prefactor = abs(anchor) * wh_zero_ratio(g, Side.UP, 1.0, inner, f_at_zero=1 / sample.lam).value.real

    def integrand(r: np.ndarray) -> np.ndarray:
        out = np.zeros(len(r))
        for i, radius in enumerate(r):
            decay = t * c * radius**alpha
            if decay > 745:
                continue
            value = stable_eigenfunction(p, Side.UP, float(radius), x, inner).value
            out[i] = value * math.exp(-decay) * c * alpha * radius ** (alpha - 1)
        return out

    result = settle(integrate_halfline(integrand, outer, points=(1 / x,)), "conjectured_sup_cdf")
    return float(prefactor * result.value.real)
