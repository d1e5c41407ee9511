"""The curve of real values of a Rogers function.

On each centred circle of radius r the function Im f(r e^{i theta}) / cos(theta) increases with theta, so the point
zeta_f(r) where f is real is found by bisection on the sign of Im f. A constant sign means the curve has left the
right half-plane at this radius and zeta_f(r) is the axis point ir (Im f < 0 throughout) or -ir (Im f > 0).
"""

import math
from typing import List, Optional, Tuple

import numpy as np

from . import _msgs as msgs
from ._core import transform
from ._helpers import LOGGER, NotBalanced, OutOfRange, RogersError, RootNotBracketed
from .model import (
    BalanceClass,
    CurveArrays,
    CurveGrid,
    CurveSample,
    RogersFunction,
    TransformKind,
)

ANGLE_GAP = 1e-9
BISECTION_STEPS = 60
DERIVATIVE_STEP = 1e-5
DEFAULT_MARGIN = math.pi / 36


def _bisect(f: RogersFunction, r: np.ndarray) -> Tuple[np.ndarray, np.ndarray]:
    """zeta_f at the radii r together with the on-axis flags, by bisection on the angle."""
    lo = np.full(r.shape, -math.pi / 2 + ANGLE_GAP)
    hi = np.full(r.shape, math.pi / 2 - ANGLE_GAP)
    with np.errstate(all="ignore"):
        sign_lo = np.sign(np.asarray(f(r * np.exp(1j * lo))).imag)
        sign_hi = np.sign(np.asarray(f(r * np.exp(1j * hi))).imag)
    if not (np.all(np.isfinite(sign_lo)) and np.all(np.isfinite(sign_hi))):
        bad = r[~(np.isfinite(sign_lo) & np.isfinite(sign_hi))]
        raise RootNotBracketed(msgs.ROOT_NOT_BRACKETED_MSG.format(float(bad[0])))
    above = (sign_lo >= 0) & (sign_hi > 0)
    below = (sign_lo < 0) & (sign_hi <= 0)
    for _ in range(BISECTION_STEPS):
        mid = (lo + hi) / 2
        with np.errstate(all="ignore"):
            value = np.asarray(f(r * np.exp(1j * mid))).imag
        if not np.all(np.isfinite(value)):
            raise RootNotBracketed(msgs.ROOT_NOT_BRACKETED_MSG.format(float(r[~np.isfinite(value)][0])))
        positive = value > 0
        hi = np.where(positive, mid, hi)
        lo = np.where(positive, lo, mid)
    zeta = r * np.exp(1j * (lo + hi) / 2)
    zeta = np.where(above, -1j * r, np.where(below, 1j * r, zeta))
    return zeta, above | below


def _numeric_curve(f: RogersFunction, r: np.ndarray) -> CurveArrays:
    h = DERIVATIVE_STEP * r
    zeta, on_axis = _bisect(f, r)
    zeta_plus, _ = _bisect(f, r + h)
    zeta_minus, _ = _bisect(f, r - h)
    lam = np.asarray(f(zeta, side="right")).real
    lam_plus = np.asarray(f(zeta_plus, side="right")).real
    lam_minus = np.asarray(f(zeta_minus, side="right")).real
    return CurveArrays(
        r=r,
        zeta=zeta,
        lam=lam,
        zeta_prime=(zeta_plus - zeta_minus) / (2 * h),
        lam_prime=(lam_plus - lam_minus) / (2 * h),
        on_axis=on_axis,
    )


def curve_at(f: RogersFunction, r: np.ndarray) -> CurveArrays:
    """Spine data at an array of radii, from closed forms when the family provides them."""
    r = np.atleast_1d(np.asarray(r, dtype=float))
    if np.any(r <= 0):
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("r", float(r.min()), "(0, inf)"))
    cf = f.closed_forms
    if cf is not None and cf.has_curve and cf.zeta_prime is not None and cf.lam_prime is not None:
        zeta = np.asarray(cf.zeta(r), dtype=complex)  # type: ignore
        return CurveArrays(
            r=r,
            zeta=zeta,
            lam=np.asarray(cf.lam(r), dtype=float),  # type: ignore
            zeta_prime=np.asarray(cf.zeta_prime(r), dtype=complex),
            lam_prime=np.asarray(cf.lam_prime(r), dtype=float),
            on_axis=zeta.real == 0,
        )
    return _numeric_curve(f, r)


def zeta(f: RogersFunction, r: float) -> CurveSample:
    """The point zeta_f(r) of the curve of real values, with lambda_f(r) and both derivatives in r.

    >>> from rogerswh.catalog import make
    >>> from rogerswh.model import BrownianDrift
    >>> zeta(make(BrownianDrift(1.0)), 2.0).lam
    2.0
    """
    arrays = curve_at(f, np.array([r], dtype=float))
    return CurveSample(
        r=float(r),
        zeta=complex(arrays.zeta[0]),
        lam=float(arrays.lam[0]),
        zeta_prime=complex(arrays.zeta_prime[0]),
        lam_prime=float(arrays.lam_prime[0]),
        on_axis=bool(arrays.on_axis[0]),
    )


def _runs(r: np.ndarray, on_axis: np.ndarray) -> List[Tuple[float, float]]:
    runs: List[Tuple[float, float]] = []
    start: Optional[float] = None
    prev = r[0]
    for radius, axis in zip(r, on_axis):
        if not axis and start is None:
            start = float(radius)
        if axis and start is not None:
            runs.append((start, float(prev)))
            start = None
        prev = radius
    if start is not None:
        runs.append((start, float(r[-1])))
    return runs


def curve_grid(
    f: RogersFunction,
    r_min: float = 1e-4,
    r_max: float = 1e4,
    n: int = 129,
    margin: float = DEFAULT_MARGIN,
) -> CurveGrid:
    """Log-spaced spine samples over [r_min, r_max] with the runs of off-axis samples."""
    if not 0 < r_min < r_max:
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("(r_min, r_max)", (r_min, r_max), "0 < r_min < r_max"))
    if n < 16:
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("n", n, "[16, inf)"))
    r = np.geomspace(r_min, r_max, n)
    arrays = curve_at(f, r)
    samples = [
        CurveSample(float(radius), complex(z), float(lam), complex(dz), float(dlam), bool(axis))
        for radius, z, lam, dz, dlam, axis in zip(
            r, arrays.zeta, arrays.lam, arrays.zeta_prime, arrays.lam_prime, arrays.on_axis
        )
    ]
    off_axis = ~np.asarray(arrays.on_axis, dtype=bool)
    sup_arg = float(np.max(np.abs(np.angle(arrays.zeta[off_axis])))) if np.any(off_axis) else math.pi / 2
    if np.any(~off_axis):
        sup_arg = math.pi / 2
    return CurveGrid(samples, _runs(r, np.asarray(arrays.on_axis)), sup_arg, margin, function=f)


def _edge(f: RogersFunction, r_axis: float, r_curve: float, steps: int = 40) -> float:
    """Radius where the spine meets the imaginary axis, between an on-axis and an off-axis radius."""
    for _ in range(steps):
        mid = math.sqrt(r_axis * r_curve)
        _, axis = _bisect(f, np.array([mid]))
        if axis[0]:
            r_axis = mid
        else:
            r_curve = mid
    return math.sqrt(r_axis * r_curve)


def spine_ends(grid: CurveGrid) -> Tuple[float, float, complex, Optional[complex]]:
    """Refined ends (r0, r_inf) of the single run of off-axis samples with the axis points zeta(r0), zeta(r_inf).

    The run is taken to reach 0 (or infinity) when it reaches the first (or last) grid sample.
    """
    f = grid.function
    samples = grid.samples
    first = next(i for i, s in enumerate(samples) if not s.on_axis)
    last = max(i for i, s in enumerate(samples) if not s.on_axis)
    r0, zeta0 = 0.0, 0j
    if first > 0:
        below = samples[first - 1]
        r0 = _edge(f, below.r, samples[first].r)
        zeta0 = below.zeta * (r0 / below.r)
    r_inf, zeta_inf = math.inf, None
    if last < len(samples) - 1:
        above = samples[last + 1]
        r_inf = _edge(f, above.r, samples[last].r)
        zeta_inf = above.zeta * (r_inf / above.r)
    return r0, r_inf, zeta0, zeta_inf


def classify_balance(grid: CurveGrid, margin: Optional[float] = None) -> BalanceClass:
    """Balanced, nearly balanced (balanced after a Mobius change of variable) or neither."""
    margin = grid.margin if margin is None else margin
    if grid.decades < 4:
        return BalanceClass.INCONCLUSIVE
    on_axis = any(s.on_axis for s in grid.samples)
    if not on_axis and grid.balanced_sup_arg <= math.pi / 2 - margin:
        return BalanceClass.BALANCED
    if len(grid.gamma_interval) != 1:
        return BalanceClass.NEITHER
    if grid.function is None:
        return BalanceClass.INCONCLUSIVE
    f: RogersFunction = grid.function
    _, _, zeta0, zeta_inf = spine_ends(grid)
    try:
        g = transform(f, TransformKind.MOBIUS, zeta0=zeta0, zeta_inf=zeta_inf)
        inner = curve_grid(g, grid.samples[0].r, grid.samples[-1].r, len(grid.samples), margin)
    except RogersError as exc:
        LOGGER.debug(f"mobius check for {f.label} failed: {exc.value}")
        return BalanceClass.NEITHER
    inner_on_axis = any(s.on_axis for s in inner.samples)
    if not inner_on_axis and inner.balanced_sup_arg <= math.pi / 2 - margin:
        return BalanceClass.NEARLY_BALANCED
    return BalanceClass.NEITHER


def require_balanced(f: RogersFunction, what: str, grid: Optional[CurveGrid] = None) -> None:
    """Raise NotBalanced unless f is balanced, trusting the closed-form flag when the family has one."""
    cf = f.closed_forms
    if cf is not None and cf.balanced is not None:
        if cf.balanced:
            verdict = BalanceClass.BALANCED
        else:
            verdict = BalanceClass.NEARLY_BALANCED if cf.nearly_balanced else BalanceClass.NEITHER
    elif "balance" in f.memo and grid is None:
        verdict = f.memo["balance"]
    else:
        verdict = classify_balance(grid if grid is not None else curve_grid(f))
        if grid is None:
            f.memo["balance"] = verdict
    if verdict is not BalanceClass.BALANCED:
        raise NotBalanced(msgs.NOT_BALANCED_MSG.format(what, verdict.value))
