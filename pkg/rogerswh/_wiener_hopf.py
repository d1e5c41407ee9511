"""Wiener-Hopf factors f_up, f_down of a Rogers function, f(xi) = f_up(-i xi) f_down(i xi).

The factors are complete Bernstein functions, unique up to a constant; here they are normalised by
f_up(1) = f_down(1). The default path integrates log f along the real axis; balanced functions also admit an
integral along their curve of real values.
"""

import cmath
import math
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple, Union

import numpy as np

from . import _msgs as msgs
from ._core import classify, mobius_inverse
from ._curve import curve_at, require_balanced
from ._helpers import (
    AXIS_OFFSET,
    LOGGER,
    BranchCut,
    DomainViolation,
    End,
    Side,
    ZeroFunction,
)
from ._quad import extrapolate_limit, integrate_halfline, settle
from .model import (
    CurveGrid,
    GridCheckReport,
    PathKind,
    QuadOptions,
    QuadResult,
    RogersFunction,
    TransformKind,
    WHValue,
)

Logs = Callable[[np.ndarray], Sequence[np.ndarray]]
# (weight w, point a, sign s, index k of the logarithm) stands for w L_k(r) / (a + s i r)
AxisTerm = Tuple[complex, complex, int, int]
Extra = Callable[[np.ndarray, Sequence[np.ndarray]], np.ndarray]

# Points with Re a < NEAR_AXIS |Im a| have their kernel pole subtracted.
NEAR_AXIS = 1e-3


def _require_nonzero(f: RogersFunction) -> None:
    if f(1 + 0j) == 0:
        raise ZeroFunction(msgs.ZERO_FUNCTION_MSG.format("Wiener-Hopf factors"))


def _scales(*points: complex) -> Sequence[float]:
    return [abs(p) for p in points if abs(p) > 0]


def _right(xi: complex) -> complex:
    """xi moved to Re xi >= AXIS_OFFSET (1 + |xi|) when it lies on or just right of the imaginary axis."""
    xi = complex(xi)
    floor = AXIS_OFFSET * (1 + abs(xi))
    if 0 <= xi.real < floor and (xi.imag != 0 or xi.real == 0):
        LOGGER.debug(f"approaching {xi} from the right half-plane")
        return complex(floor, xi.imag)
    return xi


def _log_f(f: RogersFunction) -> Logs:
    def logs(r: np.ndarray) -> Sequence[np.ndarray]:
        return (np.log(f(r.astype(complex))),)

    return logs


def _axis_integral(
    logs: Logs,
    terms: Sequence[AxisTerm],
    opts: Optional[QuadOptions],
    points: Sequence[float] = (),
    extra: Optional[Extra] = None,
) -> QuadResult:
    """(1/2pi) sum_k w_k int_R L_k(r) / (a_k + s_k i r) dr, folded onto (0, inf) with L(-r) = conj L(r).

    Every a_k must satisfy Re a_k > 0, and the weights of each L_k must make the sum integrable. When a_k is close
    to the imaginary axis the kernel has a pole next to r0 = -s_k Im a_k: L_k - L_k(r0) is integrated instead and
    the constant comes back through int_R dr / (a + s i r) = pi, the integral taken symmetrically. `extra` adds a
    term of its own to the folded integrand.
    """
    anchors: List[Optional[complex]] = []
    cuts = list(points)
    for _, a, s, k in terms:
        r0 = -s * a.imag
        if r0 == 0 or a.real >= NEAR_AXIS * abs(a.imag):
            anchors.append(None)
            continue
        level = complex(logs(np.array([abs(r0)]))[k][0])
        anchors.append(level if r0 > 0 else level.conjugate())
        cuts.append(abs(r0))

    def integrand(r: np.ndarray) -> np.ndarray:
        values = logs(r)
        total = np.zeros(r.shape, dtype=complex) if extra is None else extra(r, values).astype(complex)
        for (w, a, s, k), c in zip(terms, anchors):
            level = values[k] if c is None else values[k] - c
            mirror = np.conj(values[k]) if c is None else np.conj(values[k]) - c
            total += w * (level / (a + s * 1j * r) + mirror / (a - s * 1j * r))
        return total

    constant = math.pi * sum(w * c for (w, _, _, _), c in zip(terms, anchors) if c is not None)
    result = integrate_halfline(integrand, opts, points=cuts) + QuadResult(complex(constant), 0.0)
    return result.scaled(1 / (2 * math.pi))


def _exp_value(log_result: QuadResult, path: PathKind = PathKind.REAL_AXIS) -> WHValue:
    value = cmath.exp(log_result.value)
    return WHValue(value, abs(value) * log_result.err_estimate, path, log_result.converged)


def wh_ratio(
    f: RogersFunction, side: Union[Side, str], xi1: complex, xi2: complex, opts: Optional[QuadOptions] = None
) -> WHValue:
    """f_up(xi1) / f_up(xi2) (or the f_down ratio), independent of the normalisation.

    >>> from rogerswh.catalog import make
    >>> from rogerswh.model import BrownianDrift
    >>> round(wh_ratio(make(BrownianDrift(0.0)), "up", 4, 1).value.real, 8)
    4.0
    """
    side = Side.decode(side)
    _require_nonzero(f)
    xi1, xi2 = complex(xi1), complex(xi2)
    if xi1 == xi2:
        return WHValue(1 + 0j, 0.0, PathKind.REAL_AXIS)
    if xi1.real < 0 or xi2.real < 0:
        first, second = wh_factor(f, side, xi1, opts), wh_factor(f, side, xi2, opts)
        value = first.value / second.value
        err = abs(value) * (first.err / abs(first.value) + second.err / abs(second.value))
        return WHValue(value, err, PathKind.REAL_AXIS)
    xi1, xi2 = _right(xi1), _right(xi2)
    s = 1 if side is Side.UP else -1
    terms = [(1, xi1, s, 0), (-1, xi2, s, 0)]
    log_result = settle(_axis_integral(_log_f(f), terms, opts, _scales(xi1, xi2)), "wh_ratio")
    return _exp_value(log_result)


def wh_product(f: RogersFunction, xi1: complex, xi2: complex, opts: Optional[QuadOptions] = None) -> WHValue:
    """f_up(xi1) f_down(xi2), which does not depend on the normalisation."""
    _require_nonzero(f)
    xi1, xi2 = _right(xi1), _right(xi2)
    if xi1.real < 0 or xi2.real < 0:
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format((xi1, xi2), "wh_product"))
    terms = [(1, xi1, 1, 0), (1, xi2, -1, 0)]
    return _exp_value(settle(_axis_integral(_log_f(f), terms, opts, _scales(xi1, xi2)), "wh_product"))


def wh_norm(f: RogersFunction, opts: Optional[QuadOptions] = None) -> float:
    """The common value f_up(1) = f_down(1) = sqrt(f_up(1) f_down(1))."""
    key = ("wh_norm", opts)
    if key not in f.memo:
        f.memo[key] = math.sqrt(wh_product(f, 1.0, 1.0, opts).value.real)
    norm: float = f.memo[key]
    return norm


def wh_factor(f: RogersFunction, side: Union[Side, str], xi: complex, opts: Optional[QuadOptions] = None) -> WHValue:
    """Normalised factor at any xi off (-inf, 0].

    In the left half-plane the factor comes from the other one: f_up(xi) = f(i xi) / f_down(-xi) and
    f_down(xi) = f(-i xi) / f_up(-xi).
    """
    side = Side.decode(side)
    xi = complex(xi)
    if xi.imag == 0 and xi.real <= 0:
        raise BranchCut(msgs.BRANCH_CUT_MSG.format(xi, "(-inf, 0]"))
    if xi.real < 0:
        other = wh_factor(f, side.opposite, -xi, opts)
        numerator = complex(f(1j * xi if side is Side.UP else -1j * xi))
        value = numerator / other.value
        return WHValue(value, abs(value) * other.err / abs(other.value), other.path, other.converged)
    norm = wh_norm(f, opts)
    ratio = wh_ratio(f, side, xi, 1.0, opts)
    return WHValue(norm * ratio.value, norm * ratio.err, ratio.path, ratio.converged)


def factor_function(
    f: RogersFunction, side: Union[Side, str], opts: Optional[QuadOptions] = None
) -> Callable[[Any], Any]:
    """xi -> normalised factor, evaluated point by point over an array."""
    side = Side.decode(side)

    def factor(xi: Any) -> Any:
        points = np.asarray(xi, dtype=complex)
        values = np.array([wh_factor(f, side, p, opts).value for p in points.ravel()]).reshape(points.shape)
        return complex(values) if points.ndim == 0 else values

    return factor


def side_curve(f: RogersFunction, side: Side, r: np.ndarray) -> Tuple[Any, Any, Any, Any]:
    """(zeta, zeta', lambda, lambda') at the radii r, with zeta conjugated for the down factor."""
    c = curve_at(f, r)
    if side is Side.DOWN:
        return np.conj(c.zeta), np.conj(c.zeta_prime), c.lam, c.lam_prime
    return c.zeta, c.zeta_prime, c.lam, c.lam_prime


def _curve_logs(
    f: RogersFunction, side: Side, xi1: float, xi2: float, opts: Optional[QuadOptions]
) -> Tuple[QuadResult, QuadResult]:
    def log_form(r: np.ndarray) -> np.ndarray:
        z, dz, lam, _ = side_curve(f, side, r)
        kernel = dz / (1j * xi1 - z) - dz / (1j * xi2 - z)
        return -kernel.imag * np.log(lam) / math.pi

    def arg_form(r: np.ndarray) -> np.ndarray:
        z, _, lam, dlam = side_curve(f, side, r)
        return np.angle((z - 1j * xi2) / (z - 1j * xi1)) * dlam / lam / math.pi

    points = _scales(xi1, xi2)
    return integrate_halfline(log_form, opts, points=points), integrate_halfline(arg_form, opts, points=points)


def wh_ratio_curve(
    f: RogersFunction,
    side: Union[Side, str],
    xi1: float,
    xi2: float,
    grid: Optional[CurveGrid] = None,
    opts: Optional[QuadOptions] = None,
) -> WHValue:
    """The factor ratio of a balanced f from its curve of real values.

    Both the log-lambda form and its integrated-by-parts Arg form are evaluated; the Arg form is returned and the
    disagreement between the two is added to the error.
    """
    side = Side.decode(side)
    require_balanced(f, "wh_ratio_curve", grid)
    if not (xi1 > 0 and xi2 > 0):
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format((xi1, xi2), "wh_ratio_curve (positive reals)"))
    if xi1 == xi2:
        return WHValue(1 + 0j, 0.0, PathKind.CURVE)
    log_part, arg_part = _curve_logs(f, side, float(xi1), float(xi2), opts)
    settle(arg_part, "wh_ratio_curve")
    value = cmath.exp(arg_part.value.real)
    spread = abs(value - cmath.exp(log_part.value.real))
    return WHValue(value, abs(value) * arg_part.err_estimate + spread, PathKind.CURVE, log_part.converged)


def _end_ratio(f: RogersFunction, f_tilde: RogersFunction, at: End) -> float:
    if at is End.ZERO:
        radii = np.array([1e-6, 1e-7, 1e-8])
        params = radii
    else:
        radii = np.array([1e6, 1e7, 1e8])
        params = 1 / radii
    ratios = np.asarray(f(radii.astype(complex))) / np.asarray(f_tilde(radii.astype(complex)))
    limit = extrapolate_limit(list(zip(params, ratios)))
    if not (limit.value.real > 0 and abs(limit.value.imag) <= 1e-6 * abs(limit.value)):
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"lim f/f_tilde = {limit.value}", "wh_limit_ratio"))
    return float(limit.value.real)


def wh_limit_ratio(
    f: RogersFunction,
    f_tilde: RogersFunction,
    side: Union[Side, str],
    at: Union[End, str],
    opts: Optional[QuadOptions] = None,
) -> WHValue:
    """lim f_up / f_tilde_up (or the f_down limit) at 0 or at infinity, given that f / f_tilde has a positive limit.

    The limit is (f_up(1) / f_tilde_up(1)) exp(-(1/pi) int log|f/f_tilde| / (1 + r^2) dr) (lim f/f_tilde)^(1/2)
    exp((1/pi) int w(r) Arg(f/f_tilde) dr), with w = 1/(r(1 + r^2)) at zero and w = -r/(1 + r^2) at infinity for
    the up factor, and the opposite weights for the down factor.
    """
    side, at = Side.decode(side), End(at)
    sign = 1.0 if side is Side.UP else -1.0

    def log_modulus(r: np.ndarray) -> np.ndarray:
        z = r.astype(complex)
        return np.log(np.abs(f(z) / f_tilde(z))) / (1 + r**2)

    def weighted_arg(r: np.ndarray) -> np.ndarray:
        z = r.astype(complex)
        weight = 1 / (r * (1 + r**2)) if at is End.ZERO else -r / (1 + r**2)
        return sign * weight * np.angle(f(z) / f_tilde(z))

    modulus = settle(integrate_halfline(log_modulus, opts), "wh_limit_ratio")
    phase = settle(integrate_halfline(weighted_arg, opts), "wh_limit_ratio")
    limit = _end_ratio(f, f_tilde, at)
    norm = wh_norm(f, opts) / wh_norm(f_tilde, opts)
    value = norm * math.exp((phase.value.real - modulus.value.real) / math.pi) * math.sqrt(limit)
    err = value * (modulus.err_estimate + phase.err_estimate) / math.pi
    return WHValue(complex(value), err, PathKind.REAL_AXIS)


def wh_zero_ratio(
    f: RogersFunction,
    side: Union[Side, str],
    xi: complex,
    opts: Optional[QuadOptions] = None,
    f_at_zero: Optional[float] = None,
) -> WHValue:
    """f_up(xi) / f_up(0+) (or the f_down ratio) for f with f(0+) > 0, as the limit eps -> 0 of the ratio at eps.

    The limit is exp((1/2pi) int_0^inf [L/(xi + ir) + conj L/(xi - ir) - 2 Im L / r] dr - log f(0+) / 2) with
    L = log f(r) for the up factor; the down factor takes -ir in place of ir and +2 Im L / r.
    """
    side = Side.decode(side)
    if f_at_zero is None:
        f_at_zero = classify(f).f_at_zero
    if not f_at_zero > 0:
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"f(0+) = {f_at_zero}", "wh_zero_ratio"))
    xi = _right(complex(xi))
    s = 1 if side is Side.UP else -1

    def imaginary_part(r: np.ndarray, values: Sequence[np.ndarray]) -> np.ndarray:
        return -2 * s * values[0].imag / r

    terms = [(1, xi, s, 0)]
    result = settle(_axis_integral(_log_f(f), terms, opts, _scales(xi), imaginary_part), "wh_zero_ratio")
    value = cmath.exp(result.value - 0.5 * math.log(f_at_zero))
    return WHValue(value, abs(value) * result.err_estimate, PathKind.REAL_AXIS)


Combine = Callable[[complex, complex], complex]


def _mapped(kind: TransformKind, side: Side, xi: complex, params: Dict[str, Any]) -> Tuple[Side, complex, Combine]:
    """Side and point at which a factor of f is evaluated, and how its value combines into the factor of g."""
    if kind is TransformKind.INV_REFLECT:
        return side, xi, lambda x, v: x / v
    if kind is TransformKind.RECIP_INV:
        return side.opposite, 1 / xi, lambda x, v: 1 / v
    if kind is TransformKind.SQUARE_INV:
        return side.opposite, 1 / xi, lambda x, v: x * v
    if kind is TransformKind.DUAL:
        return side.opposite, xi, lambda x, v: v
    if kind in (TransformKind.TRANSLATE, TransformKind.MOBIUS):
        zeta0 = complex(params["zeta0"])
        zeta_inf = params.get("zeta_inf")
        d = None if zeta_inf is None else complex(zeta_inf) - zeta0

        def u(w: complex) -> complex:
            return w + zeta0 if d is None else zeta0 + d * w / (w + d)

        point = -1j * u(1j * xi) if side is Side.UP else 1j * u(-1j * xi)
        return side, point, lambda x, v: v
    raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(kind.value, "transformed_factors"))


def transformed_factors(
    f: RogersFunction,
    kind: Union[TransformKind, str],
    side: Union[Side, str],
    xi1: complex,
    xi2: complex = 1.0,
    opts: Optional[QuadOptions] = None,
    **params: Any,
) -> WHValue:
    """g_up(xi1) / g_up(xi2) (or the down ratio) for g = transform(f, kind, **params), through the factors of f.

    Supported kinds: xi^2/f, 1/f(1/xi), xi^2 f(1/xi), the dual, and the translation / Mobius change of variable.
    """
    kind, side = TransformKind(kind), Side.decode(side)
    values = []
    err = 0.0
    for xi in (complex(xi1), complex(xi2)):
        f_side, point, combine = _mapped(kind, side, xi, params)
        factor = wh_factor(f, f_side, point, opts)
        values.append(combine(xi, factor.value))
        err += factor.err / abs(factor.value)
    value = values[0] / values[1]
    return WHValue(value, abs(value) * err, PathKind.REAL_AXIS)


def nearly_balanced_point(xi: complex, side: Union[Side, str], zeta0: complex, zeta_inf: Optional[complex]) -> complex:
    """Point w with f_up(xi) proportional to g_up(w) for g = f o u (and likewise for the down factor)."""
    side = Side.decode(side)
    if zeta_inf is None:
        inverse = (1j * xi - zeta0) if side is Side.UP else (-1j * xi - zeta0)
    else:
        inverse = mobius_inverse(1j * xi if side is Side.UP else -1j * xi, zeta0, zeta_inf)
    return complex(-1j * inverse if side is Side.UP else 1j * inverse)


def factor_sandwich_check(
    f: RogersFunction, xs: Optional[Sequence[float]] = None, opts: Optional[QuadOptions] = None, tol: float = 1e-8
) -> GridCheckReport:
    """sqrt(|f(1)|/2) xi/(1 + xi) <= f_up(xi), f_down(xi) <= sqrt(2|f(1)|)(1 + xi) on positive reals."""
    points = np.asarray(np.geomspace(1e-3, 1e3, 13) if xs is None else xs, dtype=float)
    f1 = abs(complex(f(1 + 0j)))
    lower = math.sqrt(f1 / 2) * points / (1 + points)
    upper = math.sqrt(2 * f1) * (1 + points)
    worst = np.zeros(len(points))
    for side in Side:
        values = np.array([abs(wh_factor(f, side, x, opts).value) for x in points])
        worst = np.maximum(worst, np.maximum(values / upper - 1, 1 - values / lower))
    violation = np.maximum(worst, 0.0)
    index = int(np.argmax(violation))
    return GridCheckReport(
        len(points) * 2, float(violation[index]), complex(points[index]), bool(violation[index] <= tol), "sandwich"
    )
