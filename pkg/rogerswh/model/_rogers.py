import enum
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Optional, Tuple, Union

import numpy as np
import numpy.typing as npt

from .. import _msgs as msgs
from .._helpers import AXIS_OFFSET, ImaginaryAxis, DomainViolation

ComplexArray = npt.NDArray[np.complex128]
FloatArray = npt.NDArray[np.float64]
Evaluator = Callable[[ComplexArray], ComplexArray]
CurveMap = Callable[[FloatArray], Any]
KappaMap = Callable[[complex, ComplexArray], ComplexArray]
ArrayLike = Union[complex, float, npt.ArrayLike]


class TransformKind(str, enum.Enum):
    INV_REFLECT = "inv_reflect"  # xi^2 / f(xi)
    RECIP_INV = "recip_inv"  # 1 / f(1/xi)
    SQUARE_INV = "square_inv"  # xi^2 f(1/xi)
    POWER_SANDWICH = "power_sandwich"  # xi^(1-alpha) f(xi^alpha)
    COMPOSE_CBF = "compose_cbf"  # g(f(xi))
    BOUNDED_COMPLEMENT = "bounded_complement"  # c - f(1/xi)
    TRANSLATE = "translate"  # f(xi + zeta0)
    MOBIUS = "mobius"  # f(u(xi))
    DUAL = "dual"  # conj f(conj xi)


@dataclass(frozen=True)
class ClosedFormData:
    """Analytic data known for a catalog family.

    Curve maps take an array of radii. Factor maps take an array of points in the right half-plane and return the
    normalised Wiener-Hopf factors; kappa maps take (tau, xi).
    """

    zeta: Optional[CurveMap] = None
    lam: Optional[CurveMap] = None
    zeta_prime: Optional[CurveMap] = None
    lam_prime: Optional[CurveMap] = None
    wh_up: Optional[Evaluator] = None
    wh_down: Optional[Evaluator] = None
    kappa_up: Optional[KappaMap] = None
    kappa_down: Optional[KappaMap] = None
    balanced: Optional[bool] = None
    nearly_balanced: Optional[bool] = None
    spine: Optional[Tuple[float, float]] = None  # |gamma_f| as an open interval (r0, r_inf)

    @property
    def has_curve(self) -> bool:
        return self.zeta is not None and self.lam is not None


@dataclass(frozen=True)
class Classification:
    f_at_zero: float
    f_at_infinity: float  # math.inf when unbounded
    bounded: bool
    degenerate: bool
    zero: bool
    drift: Optional[float] = None  # c in f(xi) = -ic xi when degenerate


@dataclass(frozen=True)
class GridCheckReport:
    n_points: int
    max_violation: float
    worst_point: complex
    passed: bool
    name: str = ""


@dataclass(frozen=True, eq=False)
class RogersFunction:
    """A Rogers function given by its values on the right half-plane.

    `evaluator` is only ever called with points of positive real part; values on the left half-plane come from
    f(xi) = conj f(-conj xi). The optional `derivative` follows the same rule.
    """

    evaluator: Evaluator
    derivative: Optional[Evaluator] = None
    closed_forms: Optional[ClosedFormData] = None
    label: str = "f"
    spec: Any = None
    memo: Dict[str, Any] = field(default_factory=dict, repr=False, compare=False)

    def __call__(self, xi: ArrayLike, side: Optional[str] = None) -> Any:
        z = _prepare(xi, side)
        left = z.real < 0
        w = np.where(left, -np.conj(z), z)
        values = np.asarray(self.evaluator(w), dtype=complex)
        values = np.where(left, np.conj(values), values)
        return complex(values) if np.ndim(xi) == 0 else values

    def prime(self, xi: ArrayLike) -> Any:
        """f'(xi) for Re xi > 0, by the analytic derivative when known, else by finite differences."""
        z = np.asarray(xi, dtype=complex)
        if np.any(z.real <= 0):
            raise DomainViolation(msgs.DOMAIN_VIOLATION_MSG.format("xi", "the derivative"))
        if self.derivative is not None:
            values = np.asarray(self.derivative(z), dtype=complex)
        else:
            h = 1e-6 * np.maximum(np.abs(z), 1.0)
            central = z.real > h
            hz = np.where(central, h, 0.0)
            values = np.where(
                central,
                (self.evaluator(z + hz) - self.evaluator(z - hz)) / (2 * np.where(central, h, 1.0)),
                (-3 * self.evaluator(z) + 4 * self.evaluator(z + h) - self.evaluator(z + 2 * h)) / (2 * h),
            )
        return complex(values) if np.ndim(xi) == 0 else values

    def second(self, xi: complex) -> complex:
        h = 1e-4 * max(abs(xi), 1.0)
        if xi.real > h:
            return complex((self(xi + h) - 2 * self(xi) + self(xi - h)) / h**2)
        return complex((self(xi) - 2 * self(xi + h) + self(xi + 2 * h)) / h**2)


def _prepare(xi: ArrayLike, side: Optional[str]) -> ComplexArray:
    z = np.asarray(xi, dtype=complex)
    on_axis = z.real == 0
    if np.any(on_axis):
        if side is None:
            raise ImaginaryAxis(msgs.IMAGINARY_AXIS_MSG.format(z[on_axis].flat[0] if z.ndim else complex(z)))
        shift = AXIS_OFFSET * (1 + np.abs(z))
        z = np.where(on_axis, z + (shift if side == "right" else -shift), z)
    return z
