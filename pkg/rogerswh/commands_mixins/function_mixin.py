from typing import Any, Dict, Optional

import numpy as np

from .._commands import Table, command, complex_columns
from .._core import evaluate
from .._curve import curve_grid
from ..model import CliConfig, QuadOptions, RogersFunction


class FunctionCommandsMixin:

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super(FunctionCommandsMixin, self).__init__(*args, **kwargs)
        self._opts: Optional[QuadOptions]
        self._workers: Optional[int]

    @staticmethod
    def _radii(config: CliConfig) -> np.ndarray:
        r_min, r_max, n = config.grid
        return np.geomspace(r_min, r_max, n)

    @command("eval")
    def eval_(self, config: CliConfig, f: RogersFunction) -> Table:
        """f at the --xi points, or on the radial --grid when no points are given."""
        points = np.asarray(config.xi if config.xi else self._radii(config), dtype=complex)
        values = np.atleast_1d(evaluate(f, points, side="right"))
        table = Table(["xi", "value_re", "value_im"])
        for xi, value in zip(points, values):
            table.rows.append({"xi": float(xi.real), **complex_columns("value", complex(value))})
        return table

    @command("curve")
    def curve(self, config: CliConfig, f: RogersFunction) -> Table:
        """Samples of the curve of real values on the radial --grid."""
        r_min, r_max, n = config.grid
        grid = curve_grid(f, r_min, r_max, max(n, 16))
        table = Table(["r", "zeta_re", "zeta_im", "arg_zeta", "lam", "zeta_prime_re", "zeta_prime_im", "on_axis"])
        for sample in grid.samples:
            row: Dict[str, Any] = {
                "r": sample.r,
                **complex_columns("zeta", sample.zeta),
                "arg_zeta": sample.arg_zeta,
                "lam": sample.lam,
                **complex_columns("zeta_prime", sample.zeta_prime),
                "on_axis": sample.on_axis,
            }
            table.rows.append(row)
        return table
