import math
from typing import Any, Dict, Optional

from .._commands import Table, command, complex_columns, run_cells
from .._extended import kappa
from .._helpers import Side
from .._wiener_hopf import wh_factor
from ..model import CliConfig, QuadOptions, RogersFunction


class WienerHopfCommandsMixin:

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super(WienerHopfCommandsMixin, self).__init__(*args, **kwargs)
        self._opts: Optional[QuadOptions]
        self._workers: Optional[int]

    @command("wh", required=("spec", "xi"))
    def wh(self, config: CliConfig, f: RogersFunction) -> Table:
        """Normalised factors f_up(xi), f_down(xi) at every --xi point."""

        def job(side: Side, xi: float) -> Dict[str, Any]:
            factor = wh_factor(f, side, xi, self._opts)
            return {
                "side": side.value,
                "xi": xi,
                **complex_columns("value", factor.value),
                "err": factor.err,
                "converged": factor.converged,
            }

        jobs = [
            ((lambda s=side, x=xi: job(s, x)), {"side": side.value, "xi": xi}) for xi in config.xi for side in Side
        ]
        table = Table(["side", "xi", "value_re", "value_im", "err", "converged"])
        table.rows.extend(run_cells(jobs, self._workers))
        return table

    @command("kappa", required=("spec", "tau", "xi"))
    def kappa(self, config: CliConfig, f: RogersFunction) -> Table:
        """Extended factors kappa_up, kappa_down and kappa_dot over the --tau x --xi grid."""

        def job(tau: float, xi: float) -> Dict[str, Any]:
            up = kappa(f, Side.UP, tau, xi, self._opts)
            down = kappa(f, Side.DOWN, tau, xi, self._opts)
            assert up.kappa_up is not None and down.kappa_down is not None
            return {
                "tau": tau,
                "xi": xi,
                "kappa_up": float(up.kappa_up.real),
                "kappa_down": float(down.kappa_down.real),
                "kappa_dot": float(up.kappa_dot.real),
                "err": up.err + down.err,
                "converged": up.converged and down.converged,
            }

        jobs = [
            ((lambda t=tau, x=xi: job(t, x)), {"tau": tau, "xi": xi, "kappa_up": math.nan, "kappa_down": math.nan})
            for tau in config.tau
            for xi in config.xi
        ]
        table = Table(["tau", "xi", "kappa_up", "kappa_down", "kappa_dot", "err", "converged"])
        table.rows.extend(run_cells(jobs, self._workers))
        return table
