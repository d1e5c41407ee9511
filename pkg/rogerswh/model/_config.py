import enum
from dataclasses import dataclass
from typing import Optional, Tuple

from .._helpers import Side


class OutputFormat(str, enum.Enum):
    CSV = "csv"
    JSON = "json"


@dataclass(frozen=True)
class CliConfig:
    command: str
    spec_path: Optional[str] = None
    output: Optional[str] = None  # stdout when None
    format: OutputFormat = OutputFormat.CSV
    rel_tol: Optional[float] = None
    grid: Tuple[float, float, int] = (1e-2, 1e2, 64)
    tau: Tuple[float, ...] = (1.0,)
    xi: Tuple[float, ...] = ()  # (1.0,) for the supremum commands
    t: Tuple[float, ...] = (1.0,)
    x: Tuple[float, ...] = ()
    side: Side = Side.UP
    method: Optional[str] = None
    seed: int = 0
    paths: int = 10_000
    steps: int = 1024
    workers: Optional[int] = None
    verbose: bool = False
    experimental: bool = False
