"""Command-line front end: `rogerswh COMMAND --spec FILE [flags]`.

Exit status is 2 for a bad command line or spec, 1 when any requested cell failed to converge (or a check failed),
and 0 otherwise.
"""

import contextlib
import dataclasses
import json
import logging
import sys
from typing import IO, Any, Dict, Iterator, List, Optional, Sequence, Union

from . import _msgs as msgs
from ._command_args_parsing import extract_args
from ._commands import SUPPORTED_COMMANDS, FloatList, Grid, Table, choice, format_value
from ._helpers import LOGGER, CliError, InvalidSpec, RogersError, Side
from .catalog import make, spec_from_json
from .commands_mixins import (
    CheckCommandsMixin,
    FunctionCommandsMixin,
    SupremumCommandsMixin,
    WienerHopfCommandsMixin,
)
from .model import CliConfig, MonteCarloSummary, OutputFormat, QuadOptions, RogersFunction

FLAGS = (
    "*spec",
    "*out",
    "*format",
    ".rtol",
    "*grid",
    "*tau",
    "*xi",
    "*t",
    "*x",
    "*side",
    "*method",
    "+seed",
    "+paths",
    "+steps",
    "+workers",
    "verbose",
    "experimental",
)

Result = Union[Table, MonteCarloSummary]


def parse_config(argv: Sequence[str]) -> CliConfig:
    """Build the configuration of one run from its arguments; raises CliError on a bad command line."""
    if not argv:
        raise CliError(msgs.MISSING_COMMAND_MSG.format(", ".join(sorted(SUPPORTED_COMMANDS))))
    name = argv[0]
    if name not in SUPPORTED_COMMANDS:
        raise CliError(msgs.UNKNOWN_COMMAND_MSG.format(name, ", ".join(sorted(SUPPORTED_COMMANDS))))
    values, _ = extract_args(argv[1:], FLAGS)
    given = {flag.lstrip("*.+"): value for flag, value in zip(FLAGS, values)}
    SUPPORTED_COMMANDS[name].check_required(given)
    if given["rtol"] is not None and not given["rtol"] > 0:
        raise CliError(msgs.POSITIVE_TOLERANCE_MSG.format(given["rtol"]))
    config = CliConfig(command=name, spec_path=given["spec"], output=given["out"], rel_tol=given["rtol"])
    updates: Dict[str, Any] = {}
    if given["format"] is not None:
        updates["format"] = OutputFormat(choice(given["format"], [f.value for f in OutputFormat]))
    if given["grid"] is not None:
        updates["grid"] = Grid.decode(given["grid"])
    for key in ("tau", "xi", "t", "x"):
        if given[key] is not None:
            updates[key] = FloatList.decode(given[key])
    if given["side"] is not None:
        updates["side"] = Side(choice(given["side"], [s.value for s in Side]))
    for key in ("method", "seed", "paths", "steps", "workers"):
        if given[key] is not None:
            updates[key] = given[key]
    updates["verbose"] = given["verbose"]
    updates["experimental"] = given["experimental"]
    return dataclasses.replace(config, **updates)


def load_function(path: str) -> RogersFunction:
    try:
        with open(path, encoding="utf-8") as stream:
            text = stream.read()
    except OSError as exc:
        raise CliError(msgs.UNREADABLE_SPEC_MSG.format(path, exc.strerror))
    return make(spec_from_json(text))


def write_result(result: Result, stream: IO[str], fmt: OutputFormat) -> None:
    if isinstance(result, Table):
        result.write(stream, fmt.value)
        return
    if fmt is OutputFormat.JSON:
        json.dump(result.to_dict(), stream, sort_keys=True)
        stream.write("\n")
        return
    stream.write("kind,point,value,stderr\n")
    for kind, estimates in (("laplace", result.estimates), ("cdf", result.cdf)):
        for e in estimates:
            stream.write(",".join([kind, format_value(e.xi), format_value(e.value), format_value(e.stderr)]) + "\n")


@contextlib.contextmanager
def _output(path: Optional[str]) -> Iterator[IO[str]]:
    if path is None:
        yield sys.stdout
        return
    with open(path, "w", encoding="utf-8", newline="") as stream:
        yield stream


class RogersCli(
    FunctionCommandsMixin,
    WienerHopfCommandsMixin,
    SupremumCommandsMixin,
    CheckCommandsMixin,
):
    def __init__(self, config: CliConfig) -> None:
        """Runner for one command.

        Configuration options:
        - `command`: one of eval, curve, wh, kappa, sup, stable-sup, check, mc.
        - `spec_path`: JSON function spec (--spec).
        - `output`, `format`: destination file (stdout by default) and csv or json (--out, --format).
        - `rel_tol`: relative quadrature tolerance (--rtol).
        - `grid`: radial grid rmin,rmax,n for eval and curve (--grid).
        - `tau`, `xi`, `t`, `x`: comma separated value lists spanning the output table.
        - `side`: up (supremum) or down (infimum).
        - `method`: how difference-quotient factors are computed by `sup` (ladder or direct).
        - `seed`, `paths`, `steps`: Monte Carlo settings; `steps` must be a power of two.
        - `workers`: threads used for table cells and Monte Carlo chunks.
        """
        super(RogersCli, self).__init__()
        self.config = config
        self._opts: Optional[QuadOptions] = None if config.rel_tol is None else QuadOptions(rel_tol=config.rel_tol)
        self._workers: Optional[int] = config.workers

    def execute(self) -> Result:
        sig = SUPPORTED_COMMANDS[self.config.command]
        assert self.config.spec_path is not None
        f = load_function(self.config.spec_path)
        func = getattr(self, sig.func_name)
        result: Result = func(self.config, f)
        return result


def run(argv: Sequence[str], stream: Optional[IO[str]] = None) -> int:
    """Run one command; returns the exit status."""
    try:
        config = parse_config(argv)
    except (CliError, InvalidSpec) as exc:
        sys.stderr.write(f"error: {exc.value}\n")
        return 2
    logging.basicConfig(level=logging.DEBUG if config.verbose else logging.WARNING)
    try:
        result = RogersCli(config).execute()
    except (CliError, InvalidSpec) as exc:
        sys.stderr.write(f"error: {exc.value}\n")
        return 2
    except RogersError as exc:
        LOGGER.error(f"{config.command} failed: {exc.value}")
        sys.stderr.write(f"error: {exc.value}\n")
        return 1
    if stream is not None:
        write_result(result, stream, config.format)
    else:
        with _output(config.output) as out:
            write_result(result, out, config.format)
    if isinstance(result, Table) and not (result.converged and result.passed):
        return 1
    return 0


def main(argv: Optional[List[str]] = None) -> None:
    sys.exit(run(sys.argv[1:] if argv is None else argv))
