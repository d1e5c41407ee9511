"""Adaptive quadrature on (0, inf), principal values, limit extrapolation and a few special functions.

Integrands are vectorised: they receive a float ndarray of abscissae and return an ndarray of (complex) values.
"""

import math
from typing import Any, Callable, List, Optional, Sequence, Tuple

import numpy as np
from scipy import special
from sortedcontainers import SortedKeyList

from . import _msgs as msgs
from ._helpers import LOGGER, BranchCut, InsufficientData, NonConvergent, PathTooCoarse
from .model import QuadOptions, QuadResult

Integrand = Callable[[np.ndarray], Any]

# Gauss-Kronrod 7/15 abscissae and weights on [-1, 1] (positive half, descending).
_XGK = np.array(
    [
        0.991455371120812639206854697526329,
        0.949107912342758524526189684047851,
        0.864864423359769072789712788640926,
        0.741531185599394439863864773280788,
        0.586087235467691130294144845693013,
        0.405845151377397166906606412076961,
        0.207784955007898467600689403773245,
        0.000000000000000000000000000000000,
    ]
)
_WGK = np.array(
    [
        0.022935322010529224963732008058970,
        0.063092092629978553290700663189204,
        0.104790010322250183839876322541518,
        0.140653259715525918745189590510238,
        0.169004726639267902826583426598550,
        0.190350578064785409913256402421014,
        0.204432940075298892414161999234649,
        0.209482141084727828012999174891714,
    ]
)
_WG = np.array(
    [
        0.129484966168869693270611432679082,
        0.279705391489276667901467771423780,
        0.381830050505118944950369775488975,
        0.417959183673469387755102040816327,
    ]
)

NODES = np.concatenate([-_XGK[:7], [0.0], _XGK[6::-1]])
KRONROD_WEIGHTS = np.concatenate([_WGK[:7], [_WGK[7]], _WGK[6::-1]])
GAUSS_WEIGHTS = np.zeros(15)
GAUSS_WEIGHTS[[1, 3, 5]] = _WG[:3]
GAUSS_WEIGHTS[7] = _WG[3]
GAUSS_WEIGHTS[[9, 11, 13]] = _WG[2::-1]

_EPS = np.finfo(float).eps
_PANEL_WIDTH = 6.0

DEFAULT_OPTIONS = QuadOptions()


class _Panel:
    __slots__ = ("a", "b", "value", "err", "mass")

    def __init__(self, a: float, b: float, value: complex, err: float, mass: float) -> None:
        self.a = a
        self.b = b
        self.value = value
        self.err = err
        self.mass = mass


def _gk15(h: Integrand, a: np.ndarray, b: np.ndarray) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Kronrod values, QUADPACK-style error estimates and integrals of |h| for a batch of panels."""
    center = 0.5 * (a + b)
    half = 0.5 * (b - a)
    x = center[:, None] + half[:, None] * NODES[None, :]
    with np.errstate(all="ignore"):
        y = np.asarray(h(x.ravel()), dtype=complex).reshape(x.shape)
    bad = ~np.isfinite(y)
    y = np.where(bad, 0.0, y)
    kronrod = half * (y @ KRONROD_WEIGHTS)
    gauss = half * (y @ GAUSS_WEIGHTS)
    mean = kronrod / np.where(half == 0, 1.0, 2 * half)
    resasc = np.abs(half) * (np.abs(y - mean[:, None]) @ KRONROD_WEIGHTS)
    resabs = np.abs(half) * (np.abs(y) @ KRONROD_WEIGHTS)
    diff = np.abs(kronrod - gauss)
    with np.errstate(all="ignore"):
        ratio = 200 * diff / np.where(resasc > 0, resasc, 1.0)
        scaled = np.where(resasc > 0, resasc * np.minimum(1.0, ratio**1.5), diff)
    err = np.maximum(scaled, 50 * _EPS * resabs)
    err = np.where(bad.any(axis=1), np.inf, err)
    return kronrod, err, resabs


def _adaptive(h: Integrand, breaks: Sequence[float], opts: QuadOptions, tail_err: float = 0.0) -> QuadResult:
    """Globally adaptive GK15. `tail_err` (truncated tails) enters the error estimate but not the stopping rule."""
    edges = np.asarray(sorted(set(float(v) for v in breaks)))
    a, b = edges[:-1], edges[1:]
    values, errs, masses = _gk15(h, a, b)
    panels = SortedKeyList(
        (_Panel(*p) for p in zip(a.tolist(), b.tolist(), values.tolist(), errs.tolist(), masses.tolist())),
        key=lambda p: -p.err,
    )
    evaluations = 15 * len(a)
    converged = True
    while True:
        total = sum(p.value for p in panels)
        err_total = sum(p.err for p in panels)
        # cancellation below roundoff of the integral of |h| cannot be resolved
        roundoff = 100 * _EPS * sum(p.mass for p in panels)
        tolerance = max(opts.abs_tol, opts.rel_tol * abs(total), roundoff)
        if err_total <= tolerance:
            break
        if len(panels) >= opts.max_subdivisions:
            converged = False
            break
        budget = min(32, opts.max_subdivisions - len(panels))
        share = tolerance / (len(panels) + 1)
        worst: List[_Panel] = []
        while panels and len(worst) < budget and (not worst or panels[0].err > share):
            worst.append(panels.pop(0))
        mid = np.array([0.5 * (p.a + p.b) for p in worst])
        lo = np.array([p.a for p in worst])
        hi = np.array([p.b for p in worst])
        if np.any((mid <= lo) | (mid >= hi)):
            panels.update(worst)
            converged = False
            break
        values, errs, masses = _gk15(h, np.concatenate([lo, mid]), np.concatenate([mid, hi]))
        left = np.concatenate([lo, mid]).tolist()
        right = np.concatenate([mid, hi]).tolist()
        panels.update(_Panel(*p) for p in zip(left, right, values.tolist(), errs.tolist(), masses.tolist()))
        evaluations += 30 * len(worst)
    total = sum(p.value for p in panels)
    err_total = sum(p.err for p in panels) + tail_err
    if not converged:
        LOGGER.debug(f"quadrature stopped with {len(panels)} panels, value {total}, error {err_total:.3g}")
    return QuadResult(complex(total), float(err_total), converged, evaluations)


def settle(result: QuadResult, what: str) -> QuadResult:
    """`result` itself when it converged; otherwise NonConvergent carrying it, attributed to `what`."""
    if not result.converged:
        raise NonConvergent(msgs.NON_CONVERGENT_OP_MSG.format(what, result.err_estimate), result=result)
    return result


def _tail(h: Integrand, s: float) -> float:
    with np.errstate(all="ignore"):
        value = np.asarray(h(np.array([s])), dtype=complex)[0]
    return float(abs(value)) if np.isfinite(value) else 0.0


def _log_breaks(lo_s: float, hi_s: float, cuts: Sequence[float]) -> List[float]:
    n = max(2, int(math.ceil((hi_s - lo_s) / _PANEL_WIDTH)))
    breaks = list(np.linspace(lo_s, hi_s, n + 1))
    breaks.extend(c for c in cuts if lo_s < c < hi_s)
    return breaks


def integrate_halfline(
    g: Integrand,
    opts: Optional[QuadOptions] = None,
    points: Sequence[float] = (),
    lower: float = 0.0,
) -> QuadResult:
    """Integrate g over (lower, inf) after the substitution r = lower + e^s.

    Power-law behaviour at both ends becomes exponential decay in s. `points` are abscissae (in r) of interior
    kinks or integrable singularities; the s-grid is split there. Never raises on non-convergence.
    """
    opts = opts or DEFAULT_OPTIONS
    span = opts.log_span

    def h(s: np.ndarray) -> Any:
        es = np.exp(s)
        return np.asarray(g(lower + es)) * es

    cuts = [math.log(p - lower) for p in points if p > lower]
    tails = _tail(h, -span) + _tail(h, span)
    return _adaptive(h, _log_breaks(-span, span, cuts), opts, tail_err=tails)


def integrate_interval(
    g: Integrand,
    a: float,
    b: float,
    opts: Optional[QuadOptions] = None,
    points: Sequence[float] = (),
    log_scale: bool = False,
) -> QuadResult:
    """Integrate g over the finite interval (a, b).

    With `log_scale` the substitution r = a + e^s resolves an integrable singularity at the left end point.
    """
    opts = opts or DEFAULT_OPTIONS
    if not b > a:
        return QuadResult(0j, 0.0)
    if log_scale:
        span = opts.log_span

        def h(s: np.ndarray) -> Any:
            es = np.exp(s)
            return np.asarray(g(a + es)) * es

        top = math.log(b - a)
        cuts = [math.log(p - a) for p in points if a < p < b]
        return _adaptive(h, _log_breaks(top - 2 * span, top, cuts), opts, tail_err=_tail(h, top - 2 * span))
    breaks = list(np.linspace(a, b, 5))
    breaks.extend(p for p in points if a < p < b)
    return _adaptive(g, breaks, opts)


def integrate_pv(
    g: Integrand,
    pole: float,
    opts: Optional[QuadOptions] = None,
    lower: float = 0.0,
    upper: float = math.inf,
) -> QuadResult:
    """Principal value of the integral of g over (lower, upper) with a simple pole at `pole`.

    Symmetric excisions (pole - eps, pole + eps) over `opts.pv_ladder` are integrated and the excision width is
    extrapolated to zero.
    """
    opts = opts or DEFAULT_OPTIONS
    scale = min(1.0, (pole - lower) / (2 * opts.pv_ladder[0]))
    if upper < math.inf:
        scale = min(scale, (upper - pole) / (2 * opts.pv_ladder[0]))
    ladder = [eps * scale for eps in opts.pv_ladder]
    delta = ladder[0]
    outer = integrate_interval(g, lower, pole - delta, opts, log_scale=lower == 0.0)
    if upper == math.inf:
        outer = outer + integrate_halfline(g, opts, lower=pole + delta)
    else:
        outer = outer + integrate_interval(g, pole + delta, upper, opts)

    def symmetric(x: np.ndarray) -> Any:
        return np.asarray(g(pole + x)) + np.asarray(g(pole - x))

    sequence = [(delta, outer.value)]
    err, converged, evaluations = outer.err_estimate, outer.converged, outer.evaluations
    for eps in ladder[1:]:
        inner = integrate_interval(symmetric, eps, delta, opts)
        sequence.append((eps, outer.value + inner.value))
        err = max(err, outer.err_estimate + inner.err_estimate)
        converged = converged and inner.converged
        evaluations += inner.evaluations
    limit = extrapolate_limit(sequence)
    return QuadResult(limit.value, limit.err_estimate + err, converged, evaluations)


def extrapolate_limit(
    seq: Sequence[Tuple[float, complex]], limit_point: float = 0.0, method: str = "richardson"
) -> QuadResult:
    """Extrapolate a sequence of (parameter, value) pairs to the parameter value `limit_point`.

    `richardson` fits a polynomial in the parameter (Neville's scheme); `wynn` applies the epsilon algorithm to the
    values alone. The error proxy is the disagreement of the last two extrapolants.

    >>> round(extrapolate_limit([(0.1, 1.1), (0.01, 1.01), (0.001, 1.001)]).value.real, 12)
    1.0
    """
    if len(seq) < 3:
        raise InsufficientData(msgs.INSUFFICIENT_DATA_MSG.format(3, len(seq)))
    distance = [abs(p - limit_point) for p, _ in seq]
    if any(d2 >= d1 for d1, d2 in zip(distance, distance[1:])):
        raise InsufficientData(msgs.NON_MONOTONE_LADDER_MSG)
    params = np.array([p - limit_point for p, _ in seq], dtype=float)
    values = np.array([v for _, v in seq], dtype=complex)
    if method == "wynn":
        full, previous = _wynn(values), _wynn(values[:-1])
    else:
        full, previous = _neville(params, values), _neville(params[1:], values[1:])
    return QuadResult(complex(full), float(abs(full - previous)))


def _neville(params: np.ndarray, values: np.ndarray) -> complex:
    table = values.copy()
    n = len(params)
    for m in range(1, n):
        for i in range(n - m):
            table[i] = (params[i + m] * table[i] - params[i] * table[i + 1]) / (params[i + m] - params[i])
    return complex(table[0])


def _wynn(values: np.ndarray) -> complex:
    previous = np.zeros(len(values) + 1, dtype=complex)
    current = values.astype(complex)
    best = current[-1]
    column = 0
    while len(current) > 1:
        diff = current[1:] - current[:-1]
        if np.any(diff == 0):
            break
        following = previous[1 : len(current)] + 1 / diff
        previous, current = current, following
        column += 1
        if column % 2 == 0:
            best = current[-1]
    return complex(best)


def dilog(z: Any) -> Any:
    """Principal dilogarithm Li(z) = -int_0^z log(1 - w) dw / w on C minus [1, inf).

    Li(1) = pi^2 / 6 is accepted as the limit from below the cut.
    """
    arr = np.asarray(z, dtype=complex)
    on_cut = (arr.imag == 0) & (arr.real > 1)
    if np.any(on_cut):
        raise BranchCut(msgs.BRANCH_CUT_MSG.format(arr[on_cut].flat[0] if arr.ndim else complex(arr), "[1, inf)"))
    values = special.spence(1 - arr)
    return complex(values) if np.ndim(z) == 0 else values


def continuous_log_samples(values: Any, max_step: float = 0.9 * math.pi) -> np.ndarray:
    """log of sampled values along a path, with the argument continued from sample to sample.

    The first sample uses the principal branch. Raises PathTooCoarse when the path passes through zero or two
    neighbouring samples differ in argument by `max_step` or more.
    """
    v = np.asarray(values, dtype=complex).ravel()
    zeros = np.flatnonzero(v == 0)
    if zeros.size:
        raise PathTooCoarse(msgs.PATH_HITS_ZERO_MSG.format(int(zeros[0])))
    steps = np.angle(v[1:] / v[:-1])
    coarse = np.flatnonzero(np.abs(steps) >= max_step)
    if coarse.size:
        raise PathTooCoarse(msgs.PATH_TOO_COARSE_MSG.format(int(coarse[0]), float(steps[coarse[0]])))
    arg = np.angle(v[0]) + np.concatenate([[0.0], np.cumsum(steps)])
    result: np.ndarray = np.log(np.abs(v)) + 1j * arg
    return result


def winding_number(values: Any, max_step: float = 0.9 * math.pi) -> int:
    """Number of turns around zero of a closed sampled path (the last sample joins the first)."""
    v = np.asarray(values, dtype=complex).ravel()
    logs = continuous_log_samples(np.concatenate([v, v[:1]]), max_step)
    return int(round((logs[-1].imag - logs[0].imag) / (2 * math.pi)))
