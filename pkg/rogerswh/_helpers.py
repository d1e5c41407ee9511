import enum
import logging
from typing import Any

LOGGER = logging.getLogger("rogerswh")


class RogersError(Exception):
    """Base class for every error raised by the library; the message is kept in `value`."""

    def __init__(self, value: str) -> None:
        assert isinstance(value, str)
        super().__init__(value)
        self.value = value


class NonConvergent(RogersError):
    """A quadrature or extrapolation missed its tolerance. The best available result is kept in `result`."""

    def __init__(self, value: str, result: Any = None) -> None:
        super().__init__(value)
        self.result = result


class InsufficientData(RogersError):
    pass


class BranchCut(RogersError):
    pass


class PathTooCoarse(RogersError):
    pass


class ImaginaryAxis(RogersError):
    pass


class Inconclusive(RogersError):
    pass


class ZeroFunction(RogersError):
    pass


class DomainViolation(RogersError):
    pass


class NotRealValue(RogersError):
    pass


class InvalidSpec(RogersError):
    pass


class OutOfRange(RogersError):
    pass


class AlphaOneSkewed(OutOfRange):
    pass


class RootNotBracketed(RogersError):
    pass


class NotBalanced(RogersError):
    pass


class TauOnCut(RogersError):
    pass


class NotOnCurve(RogersError):
    pass


class RhoDegenerate(RogersError):
    pass


class GammaPole(RogersError):
    pass


class CliError(RogersError):
    """Bad command line; the front end exits with status 2."""

    pass


class Side(str, enum.Enum):
    UP = "up"
    DOWN = "down"

    @classmethod
    def decode(cls, value: "Side | str") -> "Side":
        return value if isinstance(value, Side) else cls(str(value).lower())

    @property
    def opposite(self) -> "Side":
        return Side.DOWN if self is Side.UP else Side.UP


# Axis evaluations are approached from Re xi = AXIS_OFFSET * (1 + |xi|).
AXIS_OFFSET = 1e-8


class End(str, enum.Enum):
    ZERO = "zero"
    INFINITY = "infinity"
