from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple, Union

from ._rogers import TransformKind
from ._stable import StableParams


@dataclass(frozen=True)
class BrownianDrift:
    """1/2 xi^2 - i b xi"""

    b: float
    label: Optional[str] = None


@dataclass(frozen=True)
class Stable:
    params: StableParams
    label: Optional[str] = None


@dataclass(frozen=True)
class StableWithDrift:
    params: StableParams
    b: float
    label: Optional[str] = None


@dataclass(frozen=True)
class Drift:
    b: float
    label: Optional[str] = None


@dataclass(frozen=True)
class RiskProcess:
    """xi / (xi - a i) - i b xi: unit-rate exponential claims of mean 1/a against premium rate b."""

    a: float
    b: float
    label: Optional[str] = None


@dataclass(frozen=True)
class SumTerm:
    weight: float
    spec: "FunctionSpec"


@dataclass(frozen=True)
class Sum:
    terms: Tuple[SumTerm, ...]
    label: Optional[str] = None


@dataclass(frozen=True)
class Transformed:
    kind: TransformKind
    inner: "FunctionSpec"
    params: Dict[str, Any] = field(default_factory=dict)
    label: Optional[str] = None


FunctionSpec = Union[BrownianDrift, Stable, StableWithDrift, Drift, RiskProcess, Sum, Transformed]
