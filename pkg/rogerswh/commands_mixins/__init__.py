from .check_mixin import CheckCommandsMixin
from .function_mixin import FunctionCommandsMixin
from .supremum_mixin import SupremumCommandsMixin
from .wiener_hopf_mixin import WienerHopfCommandsMixin

__all__ = [
    "CheckCommandsMixin",
    "FunctionCommandsMixin",
    "SupremumCommandsMixin",
    "WienerHopfCommandsMixin",
]
