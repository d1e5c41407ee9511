import math
from typing import Any, Callable, Optional, Sequence, Union

import numpy as np

from . import _msgs as msgs
from ._helpers import (
    AXIS_OFFSET,
    LOGGER,
    DomainViolation,
    Inconclusive,
    NotRealValue,
    ZeroFunction,
)
from ._quad import extrapolate_limit, integrate_halfline
from .model import (
    Classification,
    GridCheckReport,
    QuadOptions,
    QuadResult,
    RogersFunction,
    TransformKind,
)

Grid = Union[Sequence[complex], np.ndarray]

NAMED_CBF: dict = {  # type: ignore
    "sqrt": lambda w, **_: np.sqrt(w),
    "power": lambda w, p=0.5, **_: np.power(w, p),
    "resolvent": lambda w, **_: w / (1 + w),
    "log1p": lambda w, **_: np.log1p(w),
}

DERIVATIVE_BOUND = 4 * (1 + math.sqrt(2))


def evaluate(f: RogersFunction, xi: Any, side: Optional[str] = None) -> Any:
    """f(xi) anywhere off the imaginary axis; on the axis only with side='right' (limit from the right)."""
    return f(xi, side=side)


def log_polar_grid(n_radii: int = 17, n_angles: int = 12, r_min: float = 1e-4, r_max: float = 1e4) -> np.ndarray:
    """Points of the right half-plane on geometric circles, with angles crowding towards the imaginary axis."""
    half = np.concatenate([np.linspace(0.0, 0.9, n_angles - 3), [0.97, 0.995, 0.999]]) * (math.pi / 2)
    angles = np.unique(np.concatenate([-half, half]))
    radii = np.geomspace(r_min, r_max, n_radii)
    grid: np.ndarray = (radii[:, None] * np.exp(1j * angles)[None, :]).ravel()
    return grid


def cbf_grid(n_radii: int = 13, r_min: float = 1e-3, r_max: float = 1e3) -> np.ndarray:
    """Upper half-plane points (angles clustered at 0 and pi) together with points of (0, inf)."""
    fractions = np.array([1e-3, 1e-2, 0.1, 0.25, 0.4, 0.5, 0.6, 0.75, 0.9, 0.99, 0.999])
    radii = np.geomspace(r_min, r_max, n_radii)
    upper = (radii[:, None] * np.exp(1j * math.pi * fractions)[None, :]).ravel()
    grid: np.ndarray = np.concatenate([upper, radii.astype(complex)])
    return grid


def _report(name: str, points: np.ndarray, violation: np.ndarray, tol: float) -> GridCheckReport:
    violation = np.where(np.isfinite(violation), violation, np.inf)
    worst = int(np.argmax(violation))
    max_violation = float(violation[worst])
    return GridCheckReport(len(points), max_violation, complex(points[worst]), max_violation <= tol, name)


def check_rogers(
    f: RogersFunction, grid: Optional[Grid] = None, tol: float = 1e-10, relative: bool = True
) -> GridCheckReport:
    """Re(f(xi)/xi) >= 0 on the grid.

    The violation at xi is max(0, -Re(f(xi)/xi)), divided by |f(xi)/xi| unless `relative` is false. The relative
    measure keeps rounding noise of large values below `tol` on grids spanning many decades.
    """
    points = np.asarray(log_polar_grid() if grid is None else grid, dtype=complex)
    q = f(points) / points
    violation = np.maximum(0.0, -q.real)
    if relative:
        violation = violation / np.maximum(np.abs(q), np.finfo(float).tiny)
    return _report("rogers", points, violation, tol)


def check_cbf(
    g: Callable[[Any], Any], grid: Optional[Grid] = None, tol: float = 1e-8, vectorised: bool = True
) -> GridCheckReport:
    """Complete Bernstein test: Im g >= 0 on the upper half-plane and g >= 0 on (0, inf)."""
    points = np.asarray(cbf_grid() if grid is None else grid, dtype=complex)
    if vectorised:
        values = np.asarray(g(points), dtype=complex)
    else:
        values = np.array([complex(g(p)) for p in points])
    scale = np.maximum(np.abs(values), np.finfo(float).tiny)
    on_axis = points.imag == 0
    violation = np.where(
        on_axis,
        np.maximum(np.abs(values.imag), np.maximum(0.0, -values.real)),
        np.maximum(0.0, -values.imag),
    )
    return _report("cbf", points, violation / scale, tol)


def _end_value(scales: np.ndarray, values: np.ndarray, towards_zero: bool) -> Optional[float]:
    """Limit of f at one end of a geometric ladder; inf for power growth, 0 for power decay, None if unclear."""
    magnitudes = np.abs(values)
    if np.all(magnitudes == 0):
        return 0.0
    with np.errstate(all="ignore"):
        slopes = np.diff(np.log10(magnitudes)) / np.diff(np.log10(scales))
    outer = slopes[:2] if towards_zero else slopes[-2:]
    if np.all(np.isfinite(outer)):
        growing = outer < -0.02 if towards_zero else outer > 0.02
        decaying = outer > 0.02 if towards_zero else outer < -0.02
        steady = abs(outer[0] - outer[1]) < 0.1 * max(abs(outer[0]), abs(outer[1]))
        if np.all(growing) and steady:
            return math.inf
        if np.all(decaying) and steady and towards_zero:
            return 0.0
    if towards_zero:
        seq = list(zip(scales[2::-1], values[2::-1]))
    else:
        seq = list(zip(1 / scales[-3:], values[-3:]))
    limit = extrapolate_limit(seq)
    size = max(abs(limit.value), 1e-12)
    if limit.err_estimate > 1e-3 * size + 1e-12 or abs(limit.value.imag) > 1e-6 * size + 1e-12:
        return None
    return float(limit.value.real)


def classify(f: RogersFunction, probe_scales: Optional[Sequence[float]] = None) -> Classification:
    """Boundedness, end values and degeneracy of f from geometric probes on (0, inf)."""
    if probe_scales is None and "classification" in f.memo:
        cached: Classification = f.memo["classification"]
        return cached
    scales = np.asarray(probe_scales if probe_scales is not None else 10.0 ** np.arange(-8, 9), dtype=float)
    values = np.asarray(f(scales.astype(complex)), dtype=complex)
    if np.all(values == 0):
        result = Classification(0.0, 0.0, True, False, True)
    else:
        q = values / scales
        drift = -float(np.mean(q.imag))
        rms = float(np.sqrt(np.mean(np.abs(q + 1j * drift) ** 2)))
        if drift != 0 and rms <= 1e-10 * abs(drift):
            result = Classification(0.0, math.inf, False, True, False, drift)
        else:
            at_zero = _end_value(scales, values, towards_zero=True)
            at_infinity = _end_value(scales, values, towards_zero=False)
            if at_zero is None or at_infinity is None or at_zero == math.inf:
                raise Inconclusive(msgs.INCONCLUSIVE_MSG.format(f"end values of {f.label} are not settled"))
            result = Classification(at_zero, at_infinity, at_infinity < math.inf, False, False)
    if probe_scales is None:
        f.memo["classification"] = result
    return result


def _checked_alpha(alpha: float) -> float:
    if not -1 <= alpha <= 1:
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"alpha = {alpha}", "the power sandwich"))
    return float(alpha)


def _resolve_cbf(g: Any, params: dict) -> Callable[[Any], Any]:  # type: ignore
    if callable(g):
        return g  # type: ignore
    if g not in NAMED_CBF:
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"'{g}'", "the named CBF table"))
    named = NAMED_CBF[g]
    extra = {k: v for k, v in params.items() if k != "g"}
    if "p" in extra and not 0 <= extra["p"] <= 1:
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"p = {extra['p']}", "power CBF"))
    return lambda w: named(w, **extra)


def transform(f: RogersFunction, kind: Union[TransformKind, str], **params: Any) -> RogersFunction:
    """Apply one of the operations that map Rogers functions to Rogers functions."""
    kind = TransformKind(kind)
    ev = f.evaluator
    derivative = None
    if kind is TransformKind.INV_REFLECT:
        if classify(f).zero:
            raise ZeroFunction(msgs.ZERO_FUNCTION_MSG.format("reciprocal"))

        def evaluator(z: np.ndarray) -> np.ndarray:
            return z**2 / ev(z)

    elif kind is TransformKind.RECIP_INV:
        if classify(f).zero:
            raise ZeroFunction(msgs.ZERO_FUNCTION_MSG.format("reciprocal"))

        def evaluator(z: np.ndarray) -> np.ndarray:
            return 1 / ev(1 / z)

    elif kind is TransformKind.SQUARE_INV:

        def evaluator(z: np.ndarray) -> np.ndarray:
            return z**2 * ev(1 / z)

    elif kind is TransformKind.POWER_SANDWICH:
        alpha = _checked_alpha(params["alpha"])

        def evaluator(z: np.ndarray) -> np.ndarray:
            return np.power(z, 1 - alpha) * ev(np.power(z, alpha))

    elif kind is TransformKind.COMPOSE_CBF:
        g = _resolve_cbf(params["g"], params)

        def evaluator(z: np.ndarray) -> np.ndarray:
            return np.asarray(g(ev(z)), dtype=complex)

    elif kind is TransformKind.BOUNDED_COMPLEMENT:
        c = float(params["c"])
        info = classify(f)
        if not info.bounded or c < info.f_at_infinity - 1e-9 * max(1.0, abs(info.f_at_infinity)):
            raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"c = {c}", "the bounded complement"))

        def evaluator(z: np.ndarray) -> np.ndarray:
            return c - ev(1 / z)

    elif kind is TransformKind.TRANSLATE:
        zeta0 = complex(params["zeta0"])
        if zeta0.real < 0:
            raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"zeta0 = {zeta0}", "translation"))

        def evaluator(z: np.ndarray) -> np.ndarray:
            return np.asarray(f(z + zeta0, side="right"))

    elif kind is TransformKind.MOBIUS:
        zeta0 = complex(params["zeta0"])
        zeta_inf = params.get("zeta_inf")
        if zeta_inf is None:
            return transform(f, TransformKind.TRANSLATE, zeta0=zeta0)
        d = complex(zeta_inf) - zeta0
        if zeta0.real < 0 or d == 0:
            raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"({zeta0}, {zeta_inf})", "the Mobius map"))

        def evaluator(z: np.ndarray) -> np.ndarray:
            return np.asarray(f(zeta0 + d * z / (z + d), side="right"))

    elif kind is TransformKind.DUAL:

        def evaluator(z: np.ndarray) -> np.ndarray:
            return np.conj(ev(np.conj(z)))

        if f.derivative is not None:
            fd = f.derivative

            def derivative(z: np.ndarray) -> np.ndarray:
                return np.conj(fd(np.conj(z)))

    return RogersFunction(evaluator, derivative=derivative, label=f"{kind.value}({f.label})")


def mobius_inverse(xi: Any, zeta0: complex, zeta_inf: complex) -> Any:
    """u^{-1}(xi) = (zeta0 - zeta_inf)(xi - zeta0) / (xi - zeta_inf)."""
    return (zeta0 - zeta_inf) * (xi - zeta0) / (xi - zeta_inf)


def add_constant(f: RogersFunction, c: complex) -> RogersFunction:
    ev = f.evaluator
    return RogersFunction(lambda z: ev(z) + c, derivative=f.derivative, label=f"{f.label} + {c}")


def difference_quotient(f: RogersFunction, zeta: complex, tol: float = 1e-10) -> RogersFunction:
    """f_[zeta](xi) = (xi - zeta)(xi + conj zeta) / (f(xi) - f(zeta)), for zeta with f(zeta) > 0.

    Within 1e-4|zeta| of zeta the quotient is replaced by its first-order expansion in h = xi - zeta.
    """
    zeta = complex(zeta)
    if zeta.real < 0:
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format(f"zeta = {zeta}", "the difference quotient"))
    value = complex(f(zeta, side="right"))
    if abs(value.imag) > tol * max(1.0, abs(value)) or not value.real > 0:
        raise NotRealValue(msgs.NOT_REAL_VALUE_MSG.format(value))
    lam = value.real
    base = zeta if zeta.real > 0 else zeta + AXIS_OFFSET * (1 + abs(zeta))
    d1 = complex(f.prime(base))
    d2 = f.second(base)
    radius = 1e-4 * abs(zeta)
    ev = f.evaluator

    def evaluator(z: np.ndarray) -> np.ndarray:
        h = z - zeta
        near = np.abs(h) < radius
        with np.errstate(all="ignore"):
            direct = h * (z + zeta.conjugate()) / (ev(z) - lam)
        series = (h + 2 * zeta.real) / (d1 + 0.5 * d2 * h)
        return np.where(near, series, direct)

    quotient = RogersFunction(evaluator, label=f"{f.label}_[{zeta:.6g}]")
    quotient.memo["zeta"] = zeta
    quotient.memo["lam"] = lam
    return quotient


def boundary_phase(f: RogersFunction, s: float, t_ladder: Sequence[float] = (1e-3, 1e-4, 1e-5, 1e-6)) -> float:
    """phi(s) = -sign(s) lim_{t -> 0+} Arg f(t - is), clamped to [0, pi]."""
    if s == 0:
        raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format("s = 0", "the boundary phase"))
    ladder = np.asarray(t_ladder, dtype=float)
    values = np.asarray(f(ladder - 1j * s), dtype=complex)
    args = np.angle(values)
    if s > 0 and args[0] > math.pi / 2:
        args[0] -= 2 * math.pi
    elif s < 0 and args[0] < -math.pi / 2:
        args[0] += 2 * math.pi
    args = np.unwrap(args)
    jumps = np.abs(np.diff(args))
    if len(jumps) > 1 and np.any(jumps[1:] > 1.5 * jumps[:-1] + 1e-12):
        raise Inconclusive(msgs.INCONCLUSIVE_MSG.format(f"Arg f(t - {s}i) oscillates as t -> 0"))
    limit = extrapolate_limit(list(zip(ladder, args.astype(complex))))
    phi = -math.copysign(1.0, s) * limit.value.real
    excess = max(0.0, phi - math.pi, -phi)
    if excess > 1e-8:
        LOGGER.warning(f"boundary phase at s={s} exceeds [0, pi] by {excess:.3g}; clamped")
    return min(max(phi, 0.0), math.pi)


def derivative_bound_check(f: RogersFunction, grid: Optional[Grid] = None, tol: float = 1e-8) -> GridCheckReport:
    """|xi f'(xi) / f(xi)| <= 4(1 + sqrt 2)(1 - |Im xi|/|xi|)^{-1} |xi| / Re xi."""
    points = np.asarray(log_polar_grid() if grid is None else grid, dtype=complex)
    points = points[points.real > 0]
    ratio = np.abs(points * f.prime(points) / f(points))
    modulus = np.abs(points)
    bound = DERIVATIVE_BOUND / (1 - np.abs(points.imag) / modulus) * (modulus / points.real)
    return _report("derivative", points, np.maximum(0.0, ratio / bound - 1), tol)


def bound_estimate_check(
    f: RogersFunction, grid: Optional[Grid] = None, r: float = 1.0, tol: float = 1e-10
) -> GridCheckReport:
    """Two-sided estimate of |f(xi)| by |f(r)| on the right half-plane."""
    points = np.asarray(log_polar_grid() if grid is None else grid, dtype=complex)
    points = points[points.real > 0]
    modulus = np.abs(points)
    ref = abs(complex(f(complex(r))))
    upper = math.sqrt(2) * (r**2 + modulus**2) / r**2 * (modulus / points.real) * ref
    lower = (1 / math.sqrt(2)) * modulus**2 / (r**2 + modulus**2) * (points.real / modulus) * ref
    value = np.abs(f(points))
    violation = np.maximum(np.maximum(0.0, value / upper - 1), np.maximum(0.0, 1 - value / lower))
    return _report("bound", points, violation, tol)


def imag_integrability(f: RogersFunction, opts: Optional[QuadOptions] = None) -> QuadResult:
    """The finite integral of |Im f(xi)| / (xi (1 + xi^2)) over (0, inf)."""

    def integrand(x: np.ndarray) -> np.ndarray:
        return np.abs(np.asarray(f(x.astype(complex))).imag) / (x * (1 + x**2))

    return integrate_halfline(integrand, opts)
