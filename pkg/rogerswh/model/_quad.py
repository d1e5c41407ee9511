import dataclasses
from dataclasses import dataclass
from typing import Tuple

from .. import _msgs as msgs
from .._helpers import OutOfRange


@dataclass(frozen=True)
class QuadOptions:
    """Tolerances shared by every quadrature in the package.

    :param rel_tol: relative tolerance of the total integral.
    :param abs_tol: absolute tolerance, used when the integral is close to zero.
    :param max_subdivisions: upper bound on the number of panels of one adaptive integral.
    :param log_span: half-lines are integrated over r = e^s with |s| <= log_span; the remaining tails enter the
        error estimate.
    :param pv_ladder: excision half-widths used by principal value integrals, strictly decreasing, at least three.
    """

    rel_tol: float = 1e-10
    abs_tol: float = 1e-13
    max_subdivisions: int = 400
    log_span: float = 46.0
    pv_ladder: Tuple[float, ...] = (1 / 8, 1 / 16, 1 / 32, 1 / 64)

    def __post_init__(self) -> None:
        if not self.rel_tol > 0:
            raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("rel_tol", self.rel_tol, "(0, inf)"))
        if not self.abs_tol > 0:
            raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("abs_tol", self.abs_tol, "(0, inf)"))
        if self.max_subdivisions < 1:
            raise OutOfRange(msgs.OUT_OF_RANGE_MSG.format("max_subdivisions", self.max_subdivisions, "[1, inf)"))
        ladder = self.pv_ladder
        if len(ladder) < 3 or any(b >= a for a, b in zip(ladder, ladder[1:])) or ladder[-1] <= 0:
            raise OutOfRange(msgs.STRICTLY_DECREASING_MSG.format("pv_ladder"))

    def with_rel_tol(self, rel_tol: float) -> "QuadOptions":
        return dataclasses.replace(self, rel_tol=rel_tol)


@dataclass(frozen=True)
class QuadResult:
    value: complex
    err_estimate: float
    converged: bool = True
    evaluations: int = 0

    def __add__(self, other: "QuadResult") -> "QuadResult":
        return QuadResult(
            self.value + other.value,
            self.err_estimate + other.err_estimate,
            self.converged and other.converged,
            self.evaluations + other.evaluations,
        )

    def scaled(self, factor: complex) -> "QuadResult":
        return QuadResult(self.value * factor, self.err_estimate * abs(factor), self.converged, self.evaluations)
