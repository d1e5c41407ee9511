import math
from typing import Any, Callable, Sequence

import numpy as np
import pytest

slow = pytest.mark.slow


def assert_close(actual: Any, expected: Any, rtol: float = 1e-8, atol: float = 0.0) -> None:
    """Elementwise |actual - expected| <= atol + rtol |expected| for real or complex values and arrays"""
    actual = np.asarray(actual, dtype=complex)
    expected = np.asarray(expected, dtype=complex)
    bound = atol + rtol * np.abs(expected)
    error = np.abs(actual - expected)
    assert np.all(error <= bound), f"{actual} != {expected} (error {np.max(error):.3g})"


def relative_error(actual: complex, expected: complex) -> float:
    return abs(complex(actual) - complex(expected)) / abs(complex(expected))


def right_half_plane_points() -> Sequence[complex]:
    """A small fixed sample of the right half-plane, away from the axis"""
    radii = (0.05, 0.5, 1.0, 3.0, 40.0)
    angles = (-1.3, -0.6, 0.0, 0.4, 1.2)
    return [r * complex(math.cos(a), math.sin(a)) for r in radii for a in angles]


def corrupted(values: Callable[[Any], Any], phase: float = 0.01) -> Callable[[Any], Any]:
    """A function whose values are rotated by a small fixed phase"""
    rotation = complex(math.cos(phase), math.sin(phase))

    def wrapped(z: Any) -> Any:
        return rotation * np.asarray(values(z))

    return wrapped
