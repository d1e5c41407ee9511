import math
from dataclasses import dataclass
from typing import Optional


@dataclass(frozen=True)
class StableParams:
    """All parametrisations of one strictly stable exponent f(xi) = a xi^alpha.

    `beta`, `c_up` and `c_down` are None for alpha = 1, where a = c - ib carries a drift instead of skewness.
    """

    alpha: float
    a: complex
    rho: float
    k: float
    beta: Optional[float]
    c_up: Optional[float]
    c_down: Optional[float]

    @property
    def c_abs(self) -> float:
        return abs(self.a)

    @property
    def arg_a(self) -> float:
        return math.atan2(self.a.imag, self.a.real)

    @property
    def theta(self) -> float:
        """Constant argument of the spine, -Arg(a) / alpha."""
        return -self.arg_a / self.alpha

    @property
    def balanced(self) -> bool:
        return abs(self.arg_a) < self.alpha * math.pi / 2

    def dual(self) -> "StableParams":
        """Parameters of the dual process -X."""
        return StableParams(
            alpha=self.alpha,
            a=self.a.conjugate(),
            rho=1 - self.rho,
            k=self.k,
            beta=None if self.beta is None else -self.beta,
            c_up=self.c_down,
            c_down=self.c_up,
        )
