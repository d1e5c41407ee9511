import json

import pytest

from rogerswh._helpers import InvalidSpec
from rogerswh.catalog import MAX_DEPTH, make, spec_from_json, spec_to_json, stable_convert
from rogerswh.model import BrownianDrift, RiskProcess, Stable, StableWithDrift, Sum, TransformKind, Transformed


def test_decode_families():
    assert spec_from_json('{"family": "brownian_drift", "b": 1}') == BrownianDrift(1.0)
    assert spec_from_json({"family": "risk_process", "a": 4, "b": 1, "label": "r"}) == RiskProcess(4.0, 1.0, "r")
    spec = spec_from_json(b'{"family": "stable", "alpha": 1.5, "rho": 0.6}')
    assert isinstance(spec, Stable)
    assert spec.params.rho == pytest.approx(0.6)
    spec = spec_from_json({"family": "stable_with_drift", "alpha": 0.5, "c_up": 1, "c_down": 1, "drift": 2})
    assert isinstance(spec, StableWithDrift)
    assert spec.b == 2.0
    assert spec.params.rho == pytest.approx(0.5)


def test_decode_stable_through_a():
    spec = spec_from_json({"family": "stable", "alpha": 1.0, "a": [1.0, -1.0]})
    assert spec.params.a == 1 - 1j
    assert spec.params.rho == pytest.approx(0.75)


def test_decode_nested():
    text = json.dumps(
        {
            "family": "sum",
            "terms": [
                {"weight": 1, "spec": {"family": "brownian_drift", "b": 0}},
                {
                    "weight": 2,
                    "spec": {
                        "family": "transform",
                        "kind": "translate",
                        "params": {"zeta0": [0, 1]},
                        "inner": {"family": "drift", "b": 1},
                    },
                },
            ],
        }
    )
    spec = spec_from_json(text)
    assert isinstance(spec, Sum)
    inner = spec.terms[1].spec
    assert isinstance(inner, Transformed)
    assert inner.kind is TransformKind.TRANSLATE
    assert inner.params["zeta0"] == 1j
    f = make(spec)
    assert f(2.0) == pytest.approx(2.0 + 2 * (-1j) * (2 + 1j))


def test_encode_then_decode_nested():
    spec = Transformed(
        TransformKind.MOBIUS,
        Stable(stable_convert(1.2, rho=0.45), label="s"),
        {"zeta0": 0.5 + 0j, "zeta_inf": 1 + 2j},
        label="m",
    )
    again = spec_from_json(json.dumps(spec_to_json(spec)))
    assert again.kind is TransformKind.MOBIUS
    assert again.params == {"zeta0": 0.5 + 0j, "zeta_inf": 1 + 2j}
    assert again.label == "m"
    assert again.inner.label == "s"
    assert again.inner.params.a == pytest.approx(spec.inner.params.a, rel=1e-15)


def test_encode_callable_parameter():
    spec = Transformed(TransformKind.COMPOSE_CBF, BrownianDrift(0.0), {"g": lambda w: w})
    with pytest.raises(InvalidSpec):
        spec_to_json(spec)


@pytest.mark.parametrize(
    "data",
    [
        "{not json",
        "[1, 2]",
        {"family": "levy"},
        {"b": 1.0},
        {"family": "brownian_drift", "b": 1.0, "sigma": 1.0},
        {"family": "brownian_drift"},
        {"family": "brownian_drift", "b": "1.0"},
        {"family": "brownian_drift", "b": True},
        {"family": "stable", "alpha": 3.0},
        {"family": "stable", "alpha": 1.5, "rho": 0.9},
        {"family": "stable", "alpha": 1.5, "a": 2.0},
        {"family": "sum", "terms": []},
        {"family": "sum", "terms": [{"weight": -1, "spec": {"family": "drift", "b": 1}}]},
        {"family": "sum", "terms": [{"spec": {"family": "drift", "b": 1}}]},
        {"family": "transform", "kind": "rotate", "inner": {"family": "drift", "b": 1}},
        {"family": "transform", "kind": "dual"},
        {"family": "transform", "kind": "dual", "params": [], "inner": {"family": "drift", "b": 1}},
    ],
)
def test_decode__invalid(data):
    with pytest.raises(InvalidSpec):
        spec_from_json(data)


def test_decode__depth():
    data = {"family": "brownian_drift", "b": 0}
    for _ in range(MAX_DEPTH - 1):
        data = {"family": "transform", "kind": "dual", "inner": data}
    assert isinstance(spec_from_json(data), Transformed)
    with pytest.raises(InvalidSpec):
        spec_from_json({"family": "transform", "kind": "dual", "inner": data})
