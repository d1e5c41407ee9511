import enum
from dataclasses import dataclass, field
from typing import List, Optional

from .._helpers import Side


class PathKind(str, enum.Enum):
    REAL_AXIS = "real_axis"
    CURVE = "curve"


@dataclass(frozen=True)
class WHValue:
    value: complex
    err: float
    path: PathKind
    converged: bool = True


@dataclass(frozen=True)
class KappaValue:
    tau: complex
    xi: complex
    kappa_dot: complex
    kappa_up: Optional[complex] = None
    kappa_down: Optional[complex] = None
    err: float = 0.0
    converged: bool = True


@dataclass(frozen=True)
class SupremumQuery:
    t: float
    xi: float
    side: Side = Side.UP


@dataclass(frozen=True)
class PhaseData:
    r: float
    theta_up: float
    theta_down: float

    def for_side(self, side: Side) -> float:
        return self.theta_up if Side.decode(side) is Side.UP else self.theta_down


@dataclass(frozen=True)
class EigenfunctionSample:
    r: float
    x: float
    value: float
    oscillatory_part: float
    g: float


@dataclass(frozen=True)
class MCEstimate:
    xi: float
    value: float
    stderr: float


@dataclass(frozen=True)
class MonteCarloSummary:
    n_paths: int
    n_steps: int
    seed: int
    estimates: List[MCEstimate] = field(default_factory=list)
    cdf: List[MCEstimate] = field(default_factory=list)  # xi holds the level x of P(sup <= x)

    def to_dict(self) -> dict:  # type: ignore
        return {
            "n_paths": self.n_paths,
            "n_steps": self.n_steps,
            "seed": self.seed,
            "estimates": [{"xi": e.xi, "value": e.value, "stderr": e.stderr} for e in self.estimates],
            "cdf": [{"x": e.xi, "value": e.value, "stderr": e.stderr} for e in self.cdf],
        }
