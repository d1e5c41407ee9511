import json
import math
from typing import Any, Callable, Dict

import pytest

from rogerswh.catalog import make, stable_convert
from rogerswh.model import BrownianDrift, RiskProcess, RogersFunction, Stable


@pytest.fixture
def bm() -> RogersFunction:
    """1/2 xi^2, the exponent of a standard Brownian motion"""
    return make(BrownianDrift(0.0))


@pytest.fixture
def bm_drift() -> Callable[[float], RogersFunction]:
    def factory(b: float) -> RogersFunction:
        return make(BrownianDrift(b))

    return factory


@pytest.fixture
def stable() -> Callable[..., RogersFunction]:
    """Stable exponents from any parametrisation accepted by stable_convert"""

    def factory(alpha: float, **kwargs: Any) -> RogersFunction:
        return make(Stable(stable_convert(alpha, **kwargs)))

    return factory


@pytest.fixture
def cauchy() -> RogersFunction:
    return make(Stable(stable_convert(1.0, c=1.0)))


@pytest.fixture
def risk() -> RogersFunction:
    return make(RiskProcess(4.0, 1.0))


@pytest.fixture
def gaussian_params():
    """Stable alpha = 2 parameters with f(xi) = 1/2 xi^2"""
    return stable_convert(2.0, k=1 / math.sqrt(2))


@pytest.fixture
def spec_file(tmp_path) -> Callable[[Dict[str, Any]], str]:
    """Writes a JSON function spec and returns its path"""
    counter = iter(range(1000))

    def write(spec: Dict[str, Any]) -> str:
        path = tmp_path / f"spec{next(counter)}.json"
        path.write_text(json.dumps(spec), encoding="utf-8")
        return str(path)

    return write
