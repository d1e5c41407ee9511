from ._codec import spec_from_json, spec_to_json
from ._families import MAX_DEPTH, closed_forms, make, risk_roots
from ._stable import rho_range, stable_convert

__all__ = [
    "spec_from_json",
    "spec_to_json",
    "MAX_DEPTH",
    "closed_forms",
    "make",
    "risk_roots",
    "rho_range",
    "stable_convert",
]
