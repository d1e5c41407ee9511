from ._core import (
    add_constant,
    bound_estimate_check,
    boundary_phase,
    cbf_grid,
    check_cbf,
    check_rogers,
    classify,
    derivative_bound_check,
    difference_quotient,
    evaluate,
    imag_integrability,
    log_polar_grid,
    mobius_inverse,
    transform,
)
from ._curve import classify_balance, curve_at, curve_grid, require_balanced, spine_ends, zeta
from ._extended import (
    kappa,
    kappa_curve,
    kappa_dot,
    kappa_limit,
    shifted,
    stable1_kappa,
    xwh_boundary,
    xwh_boundary_beyond,
    xwh_boundary_product,
    xwh_duality,
    xwh_integral_identity,
    xwh_product,
    xwh_ratio,
)
from ._helpers import Side
from ._quad import (
    DEFAULT_OPTIONS,
    continuous_log_samples,
    dilog,
    extrapolate_limit,
    integrate_halfline,
    integrate_interval,
    integrate_pv,
    winding_number,
)
from ._wiener_hopf import (
    factor_function,
    factor_sandwich_check,
    nearly_balanced_point,
    transformed_factors,
    wh_factor,
    wh_limit_ratio,
    wh_norm,
    wh_product,
    wh_ratio,
    wh_ratio_curve,
    wh_zero_ratio,
)
from .fluctuation import (
    completeness_check,
    conjectured_sup_cdf,
    eigenfunction_g_laplace,
    eigenfunction_laplace,
    extreme_laplace,
    extreme_laplace_resolvent,
    mc_sup,
    psi_ratio,
    psi_ratio_curve,
    stable1_sup_density,
    stable_eigenfunction,
    stable_eigenfunction_laplace,
    stable_mellin,
    stable_phases,
    stable_sup_laplace,
    theta,
)

try:
    from importlib import metadata
except ImportError:  # for Python < 3.8
    import importlib_metadata as metadata  # type: ignore
try:
    __version__ = metadata.version("rogerswh")
except metadata.PackageNotFoundError:  # running from a source checkout
    __version__ = "0+unknown"
__author__ = "Daniel Moran"
__maintainer__ = "Daniel Moran"
__email__ = "daniel@moransoftware.ca"
__license__ = "BSD-3-Clause"

__all__ = [
    "Side",
    "DEFAULT_OPTIONS",
    "integrate_halfline",
    "integrate_interval",
    "integrate_pv",
    "extrapolate_limit",
    "dilog",
    "continuous_log_samples",
    "winding_number",
    "evaluate",
    "log_polar_grid",
    "cbf_grid",
    "check_rogers",
    "check_cbf",
    "classify",
    "transform",
    "mobius_inverse",
    "add_constant",
    "difference_quotient",
    "boundary_phase",
    "derivative_bound_check",
    "bound_estimate_check",
    "imag_integrability",
    "zeta",
    "curve_at",
    "curve_grid",
    "spine_ends",
    "classify_balance",
    "require_balanced",
    "wh_ratio",
    "wh_product",
    "wh_norm",
    "wh_factor",
    "factor_function",
    "wh_ratio_curve",
    "wh_limit_ratio",
    "wh_zero_ratio",
    "transformed_factors",
    "nearly_balanced_point",
    "factor_sandwich_check",
    "shifted",
    "xwh_ratio",
    "xwh_product",
    "kappa_dot",
    "kappa",
    "kappa_curve",
    "kappa_limit",
    "stable1_kappa",
    "xwh_boundary",
    "xwh_boundary_product",
    "xwh_boundary_beyond",
    "xwh_duality",
    "xwh_integral_identity",
    "psi_ratio",
    "psi_ratio_curve",
    "extreme_laplace",
    "extreme_laplace_resolvent",
    "stable_sup_laplace",
    "stable1_sup_density",
    "stable_mellin",
    "theta",
    "stable_phases",
    "eigenfunction_laplace",
    "eigenfunction_g_laplace",
    "completeness_check",
    "stable_eigenfunction",
    "stable_eigenfunction_laplace",
    "conjectured_sup_cdf",
    "mc_sup",
]
