import enum
from dataclasses import dataclass
from typing import Any, List, Tuple

import numpy as np


class BalanceClass(str, enum.Enum):
    BALANCED = "balanced"
    NEARLY_BALANCED = "nearly_balanced"
    NEITHER = "neither"
    INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class CurveSample:
    r: float
    zeta: complex
    lam: float
    zeta_prime: complex
    lam_prime: float
    on_axis: bool

    @property
    def arg_zeta(self) -> float:
        return float(np.angle(self.zeta))


@dataclass(frozen=True)
class CurveArrays:
    """Vectorised spine data at the radii `r` (the form integrands consume)."""

    r: Any
    zeta: Any
    lam: Any
    zeta_prime: Any
    lam_prime: Any
    on_axis: Any


@dataclass(frozen=True)
class CurveGrid:
    samples: List[CurveSample]
    gamma_interval: List[Tuple[float, float]]
    balanced_sup_arg: float
    margin: float
    function: Any = None

    @property
    def decades(self) -> float:
        if not self.samples:
            return 0.0
        return float(np.log10(self.samples[-1].r / self.samples[0].r))
