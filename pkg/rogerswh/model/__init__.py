from ._config import CliConfig, OutputFormat
from ._curve import BalanceClass, CurveArrays, CurveGrid, CurveSample
from ._quad import QuadOptions, QuadResult
from ._rogers import (
    Classification,
    ClosedFormData,
    GridCheckReport,
    RogersFunction,
    TransformKind,
)
from ._spec import (
    BrownianDrift,
    Drift,
    FunctionSpec,
    RiskProcess,
    Stable,
    StableWithDrift,
    Sum,
    SumTerm,
    Transformed,
)
from ._stable import StableParams
from ._values import (
    EigenfunctionSample,
    KappaValue,
    MCEstimate,
    MonteCarloSummary,
    PathKind,
    PhaseData,
    SupremumQuery,
    WHValue,
)

__all__ = [
    "CliConfig",
    "OutputFormat",
    "BalanceClass",
    "CurveArrays",
    "CurveGrid",
    "CurveSample",
    "QuadOptions",
    "QuadResult",
    "Classification",
    "ClosedFormData",
    "GridCheckReport",
    "RogersFunction",
    "TransformKind",
    "BrownianDrift",
    "Drift",
    "FunctionSpec",
    "RiskProcess",
    "Stable",
    "StableWithDrift",
    "Sum",
    "SumTerm",
    "Transformed",
    "StableParams",
    "EigenfunctionSample",
    "KappaValue",
    "MCEstimate",
    "MonteCarloSummary",
    "PathKind",
    "PhaseData",
    "SupremumQuery",
    "WHValue",
]
