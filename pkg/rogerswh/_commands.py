"""
Helper classes and methods used by the command mixins: flag value converters, the command registry and the result
table every command returns.
"""

import csv
import json
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterable, List, Optional, Sequence, TextIO, Tuple

from . import _msgs as msgs
from ._helpers import LOGGER, CliError, NonConvergent

SUPPORTED_COMMANDS: Dict[str, "Signature"] = dict()  # command name => Signature


class CliType:
    @classmethod
    def decode(cls, value: str) -> Any:
        raise NotImplementedError


class Int(CliType):
    """Converter for integer flag values"""

    @classmethod
    def decode(cls, value: str) -> int:
        try:
            return int(value)
        except ValueError:
            raise CliError(msgs.INVALID_INT_MSG.format(value))


class Float(CliType):
    """Converter for finite floating-point flag values"""

    @classmethod
    def decode(cls, value: str) -> float:
        try:
            out = float(value)
            if not math.isfinite(out):
                raise ValueError
            return out
        except ValueError:
            raise CliError(msgs.INVALID_FLOAT_MSG.format(value))


class FloatList(CliType):
    """Comma separated floats, e.g. `0.5,1,2`"""

    @classmethod
    def decode(cls, value: str) -> Tuple[float, ...]:
        return tuple(Float.decode(item.strip()) for item in value.split(",") if item.strip())


class Grid(CliType):
    """Radial grid `rmin,rmax,n` with 0 < rmin < rmax and n >= 2"""

    @classmethod
    def decode(cls, value: str) -> Tuple[float, float, int]:
        parts = value.split(",")
        if len(parts) != 3:
            raise CliError(msgs.INVALID_GRID_MSG.format(value))
        try:
            r_min, r_max, n = float(parts[0]), float(parts[1]), int(parts[2])
        except ValueError:
            raise CliError(msgs.INVALID_GRID_MSG.format(value))
        if not (0 < r_min < r_max and n >= 2):
            raise CliError(msgs.INVALID_GRID_MSG.format(value))
        return r_min, r_max, n


def choice(value: str, allowed: Sequence[str]) -> str:
    if value.lower() not in allowed:
        raise CliError(msgs.INVALID_CHOICE_MSG.format(value, ", ".join(allowed)))
    return value.lower()


class Signature:
    def __init__(self, name: str, func_name: str, required: Tuple[str, ...] = ()) -> None:
        self.name = name
        self.func_name = func_name
        self.required = required

    def check_required(self, present: Dict[str, Any]) -> None:
        for flag in self.required:
            if present.get(flag) is None:
                raise CliError(msgs.MISSING_FLAG_MSG.format(self.name, flag))

    def __repr__(self) -> str:
        return f"Signature({self.name})"


def command(name: str, required: Tuple[str, ...] = ("spec",)) -> Callable:  # type:ignore
    def decorator(func: Callable[..., Any]) -> Callable[..., Any]:
        SUPPORTED_COMMANDS[name] = Signature(name, func.__name__, required)
        return func

    return decorator


def format_value(value: Any) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return "{:.17g}".format(value)
    return str(value)


@dataclass
class Table:
    """Rows of one command's output; `converged` is false on rows whose computation did not converge."""

    columns: List[str]
    rows: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def converged(self) -> bool:
        return all(row.get("converged", True) for row in self.rows)

    @property
    def passed(self) -> bool:
        return all(row.get("passed", True) for row in self.rows)

    def write(self, stream: TextIO, fmt: str) -> None:
        if fmt == "json":
            json.dump({"columns": self.columns, "rows": self.rows}, stream, sort_keys=True)
            stream.write("\n")
            return
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(self.columns)
        for row in self.rows:
            writer.writerow([format_value(row.get(column, "")) for column in self.columns])


def cell(compute: Callable[[], Dict[str, Any]], missing: Dict[str, Any]) -> Dict[str, Any]:
    """Run one table cell; non-convergence is flagged in-band with the partial value when one is available."""
    try:
        row = compute()
        row.setdefault("converged", True)
        return row
    except NonConvergent as exc:
        LOGGER.warning(f"cell {missing}: {exc.value}")
        row = dict(missing)
        partial = getattr(exc.result, "value", None)
        row["value"] = float(partial.real) if partial is not None else math.nan
        row["converged"] = False
        return row


def run_cells(
    jobs: Iterable[Tuple[Callable[[], Dict[str, Any]], Dict[str, Any]]], workers: Optional[int] = None
) -> List[Dict[str, Any]]:
    """Compute table cells in parallel, keeping the order of `jobs`."""
    jobs = list(jobs)
    with ThreadPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(lambda job: cell(*job), jobs))


def complex_columns(prefix: str, value: complex) -> Dict[str, float]:
    return {f"{prefix}_re": float(value.real), f"{prefix}_im": float(value.imag)}
