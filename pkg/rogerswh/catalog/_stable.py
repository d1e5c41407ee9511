import cmath
import math
from typing import Optional

from .. import _msgs as msgs
from .._helpers import AlphaOneSkewed, OutOfRange
from ..model import StableParams

_TOL = 1e-12


def _check_alpha(alpha: float) -> float:
    if not 0 < alpha <= 2:
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("alpha", alpha, "(0, 2]"))
    return float(alpha)


def rho_range(alpha: float) -> tuple:  # type: ignore
    """Admissible positivity parameters: [0, 1] for alpha <= 1, [1 - 1/alpha, 1/alpha] above."""
    if alpha <= 1:
        return 0.0, 1.0
    return 1 - 1 / alpha, 1 / alpha


def _from_a(alpha: float, a: complex) -> StableParams:
    if a == 0:
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("a", a, "C \\ {0}"))
    arg_a = cmath.phase(a)
    bound = min(alpha, 2 - alpha) * math.pi / 2
    if alpha != 1 and abs(arg_a) > bound + _TOL:
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("Arg a", arg_a, f"[-{bound:.17g}, {bound:.17g}]"))
    if alpha == 1 and abs(arg_a) > math.pi / 2 + _TOL:
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("Re a", a.real, "[0, inf)"))
    rho = 0.5 - arg_a / (alpha * math.pi)
    k = max(a.real, 0.0) ** (1 / alpha)
    beta: Optional[float]
    c_up: Optional[float]
    c_down: Optional[float]
    if alpha == 1:
        beta = c_up = c_down = None
    else:
        half = alpha * math.pi / 2
        cos_h, sin_h = math.cos(half), math.sin(half)
        sign = 1.0 if alpha < 1 else -1.0
        total = sign * a.real / cos_h
        spread = 0.0 if abs(sin_h) < _TOL else sign * a.imag / sin_h
        c_up = max((total - spread) / 2, 0.0)
        c_down = max((total + spread) / 2, 0.0)
        tan_h = math.tan(half)
        beta = 0.0 if abs(tan_h) < _TOL or alpha == 2 else -math.tan(arg_a) / tan_h
    return StableParams(alpha=alpha, a=complex(a), rho=rho, k=k, beta=beta, c_up=c_up, c_down=c_down)


def stable_convert(
    alpha: float,
    *,
    beta: Optional[float] = None,
    rho: Optional[float] = None,
    k: float = 1.0,
    c_up: Optional[float] = None,
    c_down: Optional[float] = None,
    c: Optional[float] = None,
    b: Optional[float] = None,
    a: Optional[complex] = None,
) -> StableParams:
    """Build all parametrisations of a strictly stable exponent from one of them.

    Accepted inputs are (alpha, beta, k), (alpha, rho, k), (alpha, c_up, c_down), (1, c, b) with a = c - ib,
    or the coefficient `a` itself.

    >>> stable_convert(2.0, beta=0.0).rho
    0.5
    """
    alpha = _check_alpha(alpha)
    if a is not None:
        return _from_a(alpha, complex(a))
    if c is not None or b is not None:
        if alpha != 1:
            raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("alpha", alpha, "{1} for a = c - ib"))
        c, b = float(c or 0.0), float(b or 0.0)
        if c < 0:
            raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("c", c, "[0, inf)"))
        return _from_a(alpha, complex(c, -b))
    if c_up is not None or c_down is not None:
        if alpha == 1:
            raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("alpha", alpha, "alpha != 1 for jump weights"))
        c_up, c_down = float(c_up or 0.0), float(c_down or 0.0)
        if c_up < 0 or c_down < 0 or c_up + c_down == 0:
            raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("(c_up, c_down)", (c_up, c_down), "[0, inf)^2 \\ {0}"))
        rot = cmath.exp(-1j * alpha * math.pi / 2)
        value = rot * c_up + rot.conjugate() * c_down
        return _from_a(alpha, value if alpha < 1 else -value)
    if k <= 0:
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("k", k, "(0, inf)"))
    if beta is not None:
        if not -1 <= beta <= 1:
            raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("beta", beta, "[-1, 1]"))
        if alpha == 1 and beta != 0:
            raise AlphaOneSkewed(msgs.ALPHA_ONE_SKEWED_MSG.format(beta))
        tan_h = 0.0 if alpha in (1, 2) else math.tan(alpha * math.pi / 2)
        params = _from_a(alpha, k**alpha * complex(1, -beta * tan_h))
        kept_beta = params.beta if alpha == 1 else beta
        return StableParams(params.alpha, params.a, params.rho, params.k, kept_beta, params.c_up, params.c_down)
    rho = 0.5 if rho is None else float(rho)
    lo, hi = rho_range(alpha)
    if not lo - _TOL <= rho <= hi + _TOL or (alpha == 1 and rho in (0.0, 1.0)):
        raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("rho", rho, f"[{lo:.17g}, {hi:.17g}]"))
    params = _from_a(alpha, k**alpha * complex(1, -math.tan((2 * rho - 1) * alpha * math.pi / 2)))
    return StableParams(params.alpha, params.a, rho, params.k, params.beta, params.c_up, params.c_down)
