from ._eigen import (
    EigenBasis,
    completeness_check,
    conjectured_sup_cdf,
    eigenfunction_g_laplace,
    eigenfunction_laplace,
    stable_eigenfunction,
    stable_eigenfunction_laplace,
    stable_phases,
    theta,
)
from ._monte_carlo import mc_sup
from ._stable_sup import stable1_sup_density, stable_mellin, stable_sup_laplace
from ._supremum import extreme_laplace, extreme_laplace_resolvent, psi_ratio, psi_ratio_curve

__all__ = [
    "EigenBasis",
    "completeness_check",
    "conjectured_sup_cdf",
    "eigenfunction_g_laplace",
    "eigenfunction_laplace",
    "stable_eigenfunction",
    "stable_eigenfunction_laplace",
    "stable_phases",
    "theta",
    "mc_sup",
    "stable1_sup_density",
    "stable_mellin",
    "stable_sup_laplace",
    "extreme_laplace",
    "extreme_laplace_resolvent",
    "psi_ratio",
    "psi_ratio_curve",
]
