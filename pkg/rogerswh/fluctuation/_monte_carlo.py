"""Monte Carlo estimates of supremum functionals of strictly stable processes.

Paths are random walks with stable increments on a grid of n_steps points; the discretisation bias of the grid
supremum is reduced by Richardson extrapolation against the same path observed on every other grid point.
"""

import math
from concurrent.futures import ThreadPoolExecutor
from typing import Optional, Sequence, Tuple, Union

import numpy as np
from scipy import stats

from .. import _msgs as msgs
from .._helpers import LOGGER, OutOfRange, Side
from ..model import MCEstimate, MonteCarloSummary, StableParams

CHUNK_SAMPLES = 1 << 22


def stable_standard(alpha: float, beta: float, size: Tuple[int, ...], rng: np.random.Generator) -> np.ndarray:
    """Standard stable variates S(alpha, beta) for alpha != 1 by the Chambers-Mallows-Stuck transform."""
    v = rng.uniform(-math.pi / 2, math.pi / 2, size)
    w = rng.standard_exponential(size)
    skew = beta * math.tan(math.pi * alpha / 2)
    shift = math.atan(skew) / alpha
    scale = (1 + skew**2) ** (1 / (2 * alpha))
    return (
        scale
        * np.sin(alpha * (v + shift))
        / np.cos(v) ** (1 / alpha)
        * (np.cos(v - alpha * (v + shift)) / w) ** ((1 - alpha) / alpha)
    )


def increments(p: StableParams, dt: float, size: Tuple[int, ...], rng: np.random.Generator) -> np.ndarray:
    """Increments over time dt of the process with exponent a xi^alpha."""
    if p.alpha == 1:
        return p.a.real * dt * rng.standard_cauchy(size) - p.a.imag * dt
    return p.k * dt ** (1 / p.alpha) * stable_standard(p.alpha, p.beta or 0.0, size, rng)


def _chunk(
    p: StableParams, t: float, n_paths: int, n_steps: int, seed: np.random.SeedSequence
) -> Tuple[np.ndarray, np.ndarray]:
    rng = np.random.default_rng(seed)
    path = np.cumsum(increments(p, t / n_steps, (n_paths, n_steps), rng), axis=1)
    fine = np.maximum(path.max(axis=1), 0.0)
    coarse = np.maximum(path[:, 1::2].max(axis=1), 0.0)
    return fine, coarse


def _estimate(label: float, fine: np.ndarray, coarse: np.ndarray, gain: float) -> MCEstimate:
    y = fine + gain * (fine - coarse)
    return MCEstimate(float(label), float(np.mean(y)), float(stats.sem(y)))


def mc_sup(
    p: StableParams,
    t: float,
    n_paths: int,
    n_steps: int,
    seed: int,
    xis: Sequence[float] = (1.0,),
    levels: Sequence[float] = (),
    side: Union[Side, str] = Side.UP,
    workers: Optional[int] = None,
) -> MonteCarloSummary:
    """Estimates of E exp(-xi sup_{s <= t} X_s) for each xi and of P(sup_{s <= t} X_s <= x) for each level x.

    Paths are split into chunks, each with its own stream spawned from `seed`, so results are reproducible for any
    number of workers.
    """
    side = Side.decode(side)
    if not t > 0:
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("t", t, "(0, inf)"))
    if n_paths < 2:
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("n_paths", n_paths, "[2, inf)"))
    if n_steps < 2 or n_steps & (n_steps - 1):
        raise OutOfRange(msgs.NOT_POWER_OF_TWO_MSG.format("n_steps", n_steps))
    params = p if side is Side.UP else p.dual()
    rows = max(1, CHUNK_SAMPLES // n_steps)
    sizes = [min(rows, n_paths - start) for start in range(0, n_paths, rows)]
    streams = np.random.SeedSequence(seed).spawn(len(sizes))
    LOGGER.debug(f"mc_sup: {n_paths} paths of {n_steps} steps in {len(sizes)} chunks")
    with ThreadPoolExecutor(max_workers=workers) as pool:
        parts = list(pool.map(lambda job: _chunk(params, t, job[0], n_steps, job[1]), zip(sizes, streams)))
    fine = np.concatenate([part[0] for part in parts])
    coarse = np.concatenate([part[1] for part in parts])
    gain = 1 / (2 ** (1 / p.alpha) - 1)
    estimates = [_estimate(xi, np.exp(-xi * fine), np.exp(-xi * coarse), gain) for xi in xis]
    cdf = [_estimate(x, (fine <= x).astype(float), (coarse <= x).astype(float), gain) for x in levels]
    return MonteCarloSummary(n_paths, n_steps, seed, estimates, cdf)
