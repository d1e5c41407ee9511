import pytest

from rogerswh import _msgs as msgs
from rogerswh._helpers import (
    AlphaOneSkewed,
    CliError,
    NonConvergent,
    OutOfRange,
    RogersError,
    Side,
)
from rogerswh.model import QuadResult


def test_error_value():
    exc = OutOfRange(msgs.OUT_OF_RANGE_MSG.format("alpha", 3, "(0, 2]"))
    assert exc.value == "alpha = 3 is out of range (0, 2]"
    assert str(exc) == exc.value
    assert isinstance(exc, RogersError)


def test_error_hierarchy():
    assert issubclass(AlphaOneSkewed, OutOfRange)
    assert issubclass(CliError, RogersError)


def test_non_convergent_keeps_partial_result():
    partial = QuadResult(1.5 + 0j, 0.1, False)
    exc = NonConvergent(msgs.NON_CONVERGENT_OP_MSG.format("wh_ratio", 0.1), result=partial)
    assert exc.result is partial
    assert "wh_ratio" in exc.value


def test_side():
    assert Side.decode("UP") is Side.UP
    assert Side.decode(Side.DOWN) is Side.DOWN
    assert Side.UP.opposite is Side.DOWN
    assert Side.DOWN.opposite is Side.UP
    with pytest.raises(ValueError):
        Side.decode("sideways")
