"""Concrete Rogers functions with their known analytic data.

Closed forms serve as oracles: curves of real values, normalised Wiener-Hopf factors f_up, f_down with
f_up(1) = f_down(1), and extended factors kappa(tau; xi) normalised by kappa_up(1; 1) = kappa_down(1; 1).
"""

import cmath
import math
from typing import Any, Callable, Dict, Tuple

import numpy as np

from .. import _msgs as msgs
from .._core import transform
from .._helpers import InvalidSpec, RogersError
from ..model import (
    BrownianDrift,
    ClosedFormData,
    Drift,
    FunctionSpec,
    RiskProcess,
    RogersFunction,
    Stable,
    StableParams,
    StableWithDrift,
    Sum,
    Transformed,
)

MAX_DEPTH = 8


def _brownian(spec: BrownianDrift) -> RogersFunction:
    b = float(spec.b)
    if not math.isfinite(b):
        raise InvalidSpec(msgs.INVALID_SPEC_MSG.format(f"b = {b} must be finite"))
    abs_b = abs(b)
    sign = math.copysign(1.0, b) if b != 0 else 0.0

    def zeta(r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        return np.where(r >= abs_b, np.sqrt(np.maximum(r**2 - b**2, 0.0)) + 1j * b, 1j * r * sign)

    def lam(r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        return np.where(r >= abs_b, r**2 / 2, abs_b * r - r**2 / 2)

    def zeta_prime(r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        with np.errstate(divide="ignore"):
            return np.where(r > abs_b, r / np.sqrt(np.maximum(r**2 - b**2, 0.0)) + 0j, 1j * sign)

    def lam_prime(r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        return np.where(r >= abs_b, r, abs_b - r)

    # 1/2 xi^2 - i b xi = 1/2 (-i xi)(i xi + 2b)
    if b >= 0:
        up_c = math.sqrt((1 + 2 * b) / 2)

        def wh_up(xi: np.ndarray) -> np.ndarray:
            return up_c * xi

        def wh_down(xi: np.ndarray) -> np.ndarray:
            return (xi + 2 * b) / math.sqrt(2 * (1 + 2 * b))

    else:
        down_c = math.sqrt((1 - 2 * b) / 2)

        def wh_up(xi: np.ndarray) -> np.ndarray:
            return (xi - 2 * b) / math.sqrt(2 * (1 - 2 * b))

        def wh_down(xi: np.ndarray) -> np.ndarray:
            return down_c * xi

    s1 = math.sqrt(b**2 + 2)
    scale = math.sqrt((1 + s1 + b) / (2 * (1 + s1 - b)))

    def kappa_up(tau: complex, xi: np.ndarray) -> np.ndarray:
        return scale * (xi + np.sqrt(b**2 + 2 * complex(tau)) - b)

    def kappa_down(tau: complex, xi: np.ndarray) -> np.ndarray:
        return (xi + np.sqrt(b**2 + 2 * complex(tau)) + b) / (2 * scale)

    closed = ClosedFormData(
        zeta=zeta,
        lam=lam,
        zeta_prime=zeta_prime,
        lam_prime=lam_prime,
        wh_up=wh_up,
        wh_down=wh_down,
        kappa_up=kappa_up,
        kappa_down=kappa_down,
        balanced=b == 0,
        nearly_balanced=True,
        spine=(abs_b, math.inf),
    )
    return RogersFunction(
        lambda z: z**2 / 2 - 1j * b * z,
        derivative=lambda z: z - 1j * b,
        closed_forms=closed,
        label=spec.label or f"brownian_drift(b={b:g})",
        spec=spec,
    )


def _stable_closed_forms(p: StableParams) -> ClosedFormData:
    alpha, c = p.alpha, p.c_abs
    rotation = cmath.exp(1j * p.theta)
    root_c = math.sqrt(c)
    up_power, down_power = p.rho * alpha, (1 - p.rho) * alpha
    kappa_up = kappa_down = None
    if alpha == 2:
        k = math.sqrt(p.a.real)

        def kappa_up(tau: complex, xi: np.ndarray) -> np.ndarray:
            return k * xi + np.sqrt(complex(tau))

        kappa_down = kappa_up

    return ClosedFormData(
        zeta=lambda r: np.asarray(r, dtype=float) * rotation,
        lam=lambda r: c * np.asarray(r, dtype=float) ** alpha,
        zeta_prime=lambda r: np.full(np.shape(r), rotation, dtype=complex),
        lam_prime=lambda r: alpha * c * np.asarray(r, dtype=float) ** (alpha - 1),
        wh_up=lambda xi: root_c * np.power(xi, up_power),
        wh_down=lambda xi: root_c * np.power(xi, down_power),
        kappa_up=kappa_up,
        kappa_down=kappa_down,
        balanced=p.balanced,
        nearly_balanced=p.balanced,
        spine=(0.0, math.inf) if p.balanced else None,
    )


def _stable(spec: Stable) -> RogersFunction:
    p = spec.params
    a, alpha = p.a, p.alpha
    return RogersFunction(
        lambda z: a * np.power(z, alpha),
        derivative=lambda z: alpha * a * np.power(z, alpha - 1),
        closed_forms=_stable_closed_forms(p),
        label=spec.label or f"stable(alpha={alpha:g}, rho={p.rho:.6g})",
        spec=spec,
    )


def _stable_with_drift(spec: StableWithDrift) -> RogersFunction:
    p, b = spec.params, float(spec.b)
    a, alpha = p.a, p.alpha
    return RogersFunction(
        lambda z: a * np.power(z, alpha) - 1j * b * z,
        derivative=lambda z: alpha * a * np.power(z, alpha - 1) - 1j * b,
        label=spec.label or f"stable_with_drift(alpha={alpha:g}, b={b:g})",
        spec=spec,
    )


def _drift(spec: Drift) -> RogersFunction:
    b = float(spec.b)
    return RogersFunction(
        lambda z: -1j * b * z,
        derivative=lambda z: np.full(np.shape(z), -1j * b, dtype=complex),
        label=spec.label or f"drift(b={b:g})",
        spec=spec,
    )


def risk_roots(a: float, b: float, tau: complex) -> Tuple[complex, complex]:
    """p, q with f(xi) + tau = b(-i xi + p)(i xi + q) / (i xi + a) for the risk process."""
    shift = 1 - a * b + tau
    disc = np.sqrt(complex(shift**2 + 4 * a * b * tau))
    return (shift + disc) / (2 * b), (disc - shift) / (2 * b)


def _risk(spec: RiskProcess) -> RogersFunction:
    a, b = float(spec.a), float(spec.b)
    if not (a > 0 and b > 0):
        raise InvalidSpec(msgs.INVALID_SPEC_MSG.format(f"risk process needs a > 0 and b > 0, got a={a}, b={b}"))
    radius = math.sqrt(a / b)
    r0, r_inf = max(a - radius, 0.0), a + radius

    def on_circle(r: np.ndarray) -> np.ndarray:
        return (r > r0) & (r < r_inf)

    def _xy(r: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
        y = (a**2 + r**2 - a / b) / (2 * a)
        return np.sqrt(np.maximum(r**2 - y**2, 0.0)), y

    def zeta(r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        x, y = _xy(r)
        return np.where(on_circle(r), x + 1j * y, 1j * r)

    def lam(r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(on_circle(r), b * r**2 / a, r / (r - a) + b * r)

    def zeta_prime(r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        x, y = _xy(r)
        dy = r / a
        with np.errstate(divide="ignore", invalid="ignore"):
            dx = (r - y * dy) / x
        return np.where(on_circle(r), dx + 1j * dy, 1j)

    def lam_prime(r: np.ndarray) -> np.ndarray:
        r = np.asarray(r, dtype=float)
        with np.errstate(divide="ignore", invalid="ignore"):
            return np.where(on_circle(r), 2 * b * r / a, b - a / (r - a) ** 2)

    p1, q1 = risk_roots(a, b, 1.0)
    scale = np.sqrt(b * (1 + q1) / ((1 + a) * (1 + p1)))
    p0, q0 = risk_roots(a, b, 0.0)
    scale0 = np.sqrt(b * (1 + q0) / ((1 + a) * (1 + p0)))

    def kappa_up(tau: complex, xi: np.ndarray) -> np.ndarray:
        p, _ = risk_roots(a, b, tau)
        return scale * (xi + p)

    def kappa_down(tau: complex, xi: np.ndarray) -> np.ndarray:
        _, q = risk_roots(a, b, tau)
        return (b / scale) * (xi + q) / (xi + a)

    closed = ClosedFormData(
        zeta=zeta,
        lam=lam,
        zeta_prime=zeta_prime,
        lam_prime=lam_prime,
        wh_up=lambda xi: scale0 * (xi + p0),
        wh_down=lambda xi: (b / scale0) * (xi + q0) / (xi + a),
        kappa_up=kappa_up,
        kappa_down=kappa_down,
        balanced=False,
        nearly_balanced=True,
        spine=(r0, r_inf),
    )
    return RogersFunction(
        lambda z: z / (z - 1j * a) - 1j * b * z,
        derivative=lambda z: -1j * a / (z - 1j * a) ** 2 - 1j * b,
        closed_forms=closed,
        label=spec.label or f"risk_process(a={a:g}, b={b:g})",
        spec=spec,
    )


def _sum(spec: Sum, depth: int) -> RogersFunction:
    if not spec.terms:
        raise InvalidSpec(msgs.INVALID_SPEC_MSG.format("a sum needs at least one term"))
    parts = []
    for term in spec.terms:
        if not term.weight >= 0:
            raise InvalidSpec(msgs.INVALID_SPEC_MSG.format(f"weight {term.weight} must be nonnegative"))
        parts.append((float(term.weight), _make(term.spec, depth + 1)))

    def evaluator(z: np.ndarray) -> np.ndarray:
        return sum(w * f.evaluator(z) for w, f in parts)  # type: ignore

    derivative = None
    if all(f.derivative is not None for _, f in parts):

        def derivative(z: np.ndarray) -> np.ndarray:
            return sum(w * f.derivative(z) for w, f in parts)  # type: ignore

    label = spec.label or " + ".join(f"{w:g}*{f.label}" for w, f in parts)
    return RogersFunction(evaluator, derivative=derivative, label=label, spec=spec)


def _transformed(spec: Transformed, depth: int) -> RogersFunction:
    inner = _make(spec.inner, depth + 1)
    try:
        f = transform(inner, spec.kind, **spec.params)
    except (KeyError, TypeError) as exc:
        raise InvalidSpec(msgs.INVALID_SPEC_MSG.format(f"transform '{spec.kind}' parameters: {exc}"))
    return RogersFunction(f.evaluator, f.derivative, label=spec.label or f.label, spec=spec)


_BUILDERS: Dict[type, Callable[[Any], RogersFunction]] = {
    BrownianDrift: _brownian,
    Stable: _stable,
    StableWithDrift: _stable_with_drift,
    Drift: _drift,
    RiskProcess: _risk,
}


def _make(spec: FunctionSpec, depth: int) -> RogersFunction:
    if depth > MAX_DEPTH:
        raise InvalidSpec(msgs.SPEC_TOO_DEEP_MSG.format(MAX_DEPTH))
    if isinstance(spec, Sum):
        return _sum(spec, depth)
    if isinstance(spec, Transformed):
        return _transformed(spec, depth)
    builder = _BUILDERS.get(type(spec))
    if builder is None:
        raise InvalidSpec(msgs.UNKNOWN_FAMILY_MSG.format(type(spec).__name__))
    return builder(spec)


def make(spec: FunctionSpec) -> RogersFunction:
    """Build the Rogers function described by `spec`, with closed forms where the family has them."""
    try:
        return _make(spec, 1)
    except InvalidSpec:
        raise
    except RogersError as exc:
        raise InvalidSpec(msgs.INVALID_SPEC_MSG.format(exc.value))


def closed_forms(f: RogersFunction) -> ClosedFormData:
    return f.closed_forms if f.closed_forms is not None else ClosedFormData()
