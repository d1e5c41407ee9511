from typing import Any, Dict, Optional

from .. import _msgs as msgs
from .._commands import Table, command, run_cells
from .._helpers import CliError
from ..fluctuation import (
    conjectured_sup_cdf,
    extreme_laplace,
    mc_sup,
    stable1_sup_density,
    stable_sup_laplace,
)
from ..model import CliConfig, MonteCarloSummary, QuadOptions, RogersFunction, Stable, StableParams, SupremumQuery


DEFAULT_XI = (1.0,)


def stable_params(f: RogersFunction, what: str) -> StableParams:
    if not isinstance(f.spec, Stable):
        raise CliError(msgs.DOMAIN_VIOLATION_MSG.format(f.label, f"'{what}' (stable family only)"))
    return f.spec.params


class SupremumCommandsMixin:

    def __init__(self, *args: Any, **kwargs: Any) -> None:
        super(SupremumCommandsMixin, self).__init__(*args, **kwargs)
        self._opts: Optional[QuadOptions]
        self._workers: Optional[int]

    @command("sup")
    def sup(self, config: CliConfig, f: RogersFunction) -> Table:
        """E exp(-xi sup X_t) (or the infimum transform for --side down) over the --t x --xi grid."""
        method = config.method or "direct"
        xis = config.xi or DEFAULT_XI

        def job(t: float, xi: float) -> Dict[str, Any]:
            value = extreme_laplace(f, SupremumQuery(t, xi, config.side), opts=self._opts, method=method)
            return {"t": t, "xi": xi, "value": value}

        jobs = [((lambda t=t, x=xi: job(t, x)), {"t": t, "xi": xi}) for t in config.t for xi in xis]
        table = Table(["t", "xi", "value", "converged"])
        table.rows.extend(run_cells(jobs, self._workers))
        return table

    @command("stable-sup")
    def stable_sup(self, config: CliConfig, f: RogersFunction) -> Table:
        """Stable supremum transform over --t x --xi; with --x and alpha = 1 the density of the supremum instead.

        With --experimental and --x the conjectured distribution function P(sup X_t < x) is tabulated.
        """
        p = stable_params(f, "stable-sup")
        xis = config.xi or DEFAULT_XI
        if config.x and config.experimental:

            def cdf_job(t: float, x: float) -> Dict[str, Any]:
                value = conjectured_sup_cdf(p, t, x, experimental=True, opts=self._opts)
                return {"t": t, "x": x, "value": value}

            jobs = [((lambda t=t, x=x: cdf_job(t, x)), {"t": t, "x": x}) for t in config.t for x in config.x]
            table = Table(["t", "x", "value", "converged"])
        elif config.x:

            def density_job(t: float, x: float) -> Dict[str, Any]:
                return {"t": t, "x": x, "value": stable1_sup_density(p, t, x, config.side, self._opts)}

            jobs = [((lambda t=t, x=x: density_job(t, x)), {"t": t, "x": x}) for t in config.t for x in config.x]
            table = Table(["t", "x", "value", "converged"])
        else:

            def laplace_job(t: float, xi: float) -> Dict[str, Any]:
                return {"t": t, "xi": xi, "value": stable_sup_laplace(p, t, xi, config.side, self._opts)}

            jobs = [((lambda t=t, x=xi: laplace_job(t, x)), {"t": t, "xi": xi}) for t in config.t for xi in xis]
            table = Table(["t", "xi", "value", "converged"])
        table.rows.extend(run_cells(jobs, self._workers))
        return table

    @command("mc")
    def mc(self, config: CliConfig, f: RogersFunction) -> MonteCarloSummary:
        """Monte Carlo estimates of E exp(-xi sup X_t) at every --xi and of P(sup X_t <= x) at every --x."""
        p = stable_params(f, "mc")
        if len(config.t) != 1:
            raise CliError(msgs.SYNTAX_ERROR_MSG.format("--t (mc takes one time)"))
        return mc_sup(
            p,
            config.t[0],
            config.paths,
            config.steps,
            config.seed,
            xis=config.xi or DEFAULT_XI,
            levels=config.x,
            side=config.side,
            workers=self._workers,
        )
