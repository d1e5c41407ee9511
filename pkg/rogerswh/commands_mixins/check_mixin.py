from typing import Any, Dict, List, Optional

import numpy as np

from .._commands import Table, command
from .._core import bound_estimate_check, cbf_grid, check_cbf, check_rogers, classify, derivative_bound_check
from .._curve import classify_balance, curve_grid
from .._helpers import RogersError, Side
from .._wiener_hopf import factor_function, factor_sandwich_check, wh_product
from ..model import CliConfig, GridCheckReport, QuadOptions, RogersFunction

FACTORISATION_POINTS = (0.25, 1.0, 4.0)
FACTORISATION_TOL = 1e-7


class CheckCommandsMixin:

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super(CheckCommandsMixin, self).__init__(*args, **kwargs)
        self._opts: Optional[QuadOptions]
        self._workers: Optional[int]

    @staticmethod
    def _report_row(report: GridCheckReport) -> Dict[str, Any]:
        return {
            "check": report.name,
            "passed": report.passed,
            "max_violation": report.max_violation,
            "detail": f"{report.n_points} points, worst at {report.worst_point:.6g}",
        }

    def _factorisation(self, f: RogersFunction) -> Dict[str, Any]:
        worst = 0.0
        for xi in FACTORISATION_POINTS:
            product = wh_product(f, -1j * xi, 1j * xi, self._opts).value
            value = complex(f(complex(xi)))
            worst = max(worst, abs(product - value) / abs(value))
        return {
            "check": "factorisation",
            "passed": worst <= FACTORISATION_TOL,
            "max_violation": worst,
            "detail": "f(xi) = f_up(-i xi) f_down(i xi) at xi in " + ",".join(map(str, FACTORISATION_POINTS)),
        }

    @command("check")
    def check(self, config: CliConfig, f: RogersFunction) -> Table:
        """Invariant suite for one function: one pass/fail row per check."""
        rows: List[Dict[str, Any]] = [
            self._report_row(check_rogers(f)),
            self._report_row(derivative_bound_check(f)),
            self._report_row(bound_estimate_check(f)),
        ]
        info = classify(f)
        rows.append(
            {
                "check": "classify",
                "passed": True,
                "max_violation": 0.0,
                "detail": f"f(0+)={info.f_at_zero:.6g} f(inf-)={info.f_at_infinity:.6g} bounded={info.bounded}",
            }
        )
        r_min, r_max, n = config.grid
        verdict = classify_balance(curve_grid(f, min(r_min, 1e-3), max(r_max, 1e3), max(n, 64)))
        rows.append({"check": "balance", "passed": True, "max_violation": 0.0, "detail": verdict.value})
        try:
            rows.append(self._factorisation(f))
            rows.append(self._report_row(factor_sandwich_check(f, opts=self._opts)))
            grid = cbf_grid(n_radii=7)
            for side in Side:
                report = check_cbf(factor_function(f, side, self._opts), grid, vectorised=False)
                row = self._report_row(report)
                row["check"] = f"cbf_{side.value}"
                rows.append(row)
        except RogersError as exc:
            rows.append({"check": "wiener_hopf", "passed": False, "max_violation": np.inf, "detail": exc.value})
        table = Table(["check", "passed", "max_violation", "detail"])
        table.rows.extend(rows)
        return table
