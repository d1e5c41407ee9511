import json
from typing import Any, Dict, Mapping, Union

from .. import _msgs as msgs
from .._helpers import InvalidSpec, RogersError
from ..model import (
    BrownianDrift,
    Drift,
    FunctionSpec,
    RiskProcess,
    Stable,
    StableWithDrift,
    Sum,
    SumTerm,
    TransformKind,
    Transformed,
)
from ._families import MAX_DEPTH
from ._stable import stable_convert

_STABLE_KEYS = {"alpha", "beta", "rho", "k", "c_up", "c_down", "c", "b", "a"}
_ALLOWED_KEYS = {
    "brownian_drift": {"b"},
    "stable": _STABLE_KEYS,
    "stable_with_drift": _STABLE_KEYS | {"drift"},
    "drift": {"b"},
    "risk_process": {"a", "b"},
    "sum": {"terms"},
    "transform": {"kind", "params", "inner"},
}


def _number(data: Mapping[str, Any], key: str, family: str) -> float:
    if key not in data:
        raise InvalidSpec(msgs.INVALID_SPEC_MSG.format(f"family '{family}' requires '{key}'"))
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise InvalidSpec(msgs.INVALID_SPEC_MSG.format(f"'{key}' must be a number, got {value!r}"))
    return float(value)


def _stable_params(data: Mapping[str, Any], family: str) -> Any:
    kwargs: Dict[str, Any] = {}
    for key in ("beta", "rho", "k", "c_up", "c_down", "c", "b"):
        if key in data:
            kwargs[key] = _number(data, key, family)
    if "a" in data:
        value = data["a"]
        if not (isinstance(value, list) and len(value) == 2):
            raise InvalidSpec(msgs.INVALID_SPEC_MSG.format("'a' must be a pair [re, im]"))
        kwargs["a"] = complex(float(value[0]), float(value[1]))
    try:
        return stable_convert(_number(data, "alpha", family), **kwargs)
    except RogersError as exc:
        raise InvalidSpec(msgs.INVALID_SPEC_MSG.format(exc.value))


def _decode(data: Any, depth: int) -> FunctionSpec:
    if depth > MAX_DEPTH:
        raise InvalidSpec(msgs.SPEC_TOO_DEEP_MSG.format(MAX_DEPTH))
    if not isinstance(data, Mapping):
        raise InvalidSpec(msgs.INVALID_SPEC_MSG.format(f"expected an object, got {type(data).__name__}"))
    family = data.get("family")
    if family not in _ALLOWED_KEYS:
        raise InvalidSpec(msgs.UNKNOWN_FAMILY_MSG.format(family))
    for key in data:
        if key not in _ALLOWED_KEYS[family] | {"family", "label"}:
            raise InvalidSpec(msgs.UNKNOWN_SPEC_KEY_MSG.format(key, family))
    label = data.get("label")
    if family == "brownian_drift":
        return BrownianDrift(_number(data, "b", family), label)
    if family == "drift":
        return Drift(_number(data, "b", family), label)
    if family == "risk_process":
        return RiskProcess(_number(data, "a", family), _number(data, "b", family), label)
    if family == "stable":
        return Stable(_stable_params(data, family), label)
    if family == "stable_with_drift":
        return StableWithDrift(_stable_params(data, family), _number(data, "drift", family), label)
    if family == "sum":
        terms = data.get("terms")
        if not isinstance(terms, list) or not terms:
            raise InvalidSpec(msgs.INVALID_SPEC_MSG.format("'terms' must be a nonempty list"))
        decoded = []
        for term in terms:
            if not isinstance(term, Mapping) or set(term) != {"weight", "spec"}:
                raise InvalidSpec(msgs.INVALID_SPEC_MSG.format("sum terms are {'weight': w, 'spec': {...}}"))
            weight = _number(term, "weight", family)
            if weight < 0:
                raise InvalidSpec(msgs.INVALID_SPEC_MSG.format(f"weight {weight} must be nonnegative"))
            decoded.append(SumTerm(weight, _decode(term["spec"], depth + 1)))
        return Sum(tuple(decoded), label)
    try:
        kind = TransformKind(data.get("kind"))
    except ValueError:
        raise InvalidSpec(msgs.INVALID_SPEC_MSG.format(f"unknown transform kind {data.get('kind')!r}"))
    params = data.get("params", {})
    if not isinstance(params, Mapping):
        raise InvalidSpec(msgs.INVALID_SPEC_MSG.format("'params' must be an object"))
    if "inner" not in data:
        raise InvalidSpec(msgs.INVALID_SPEC_MSG.format("family 'transform' requires 'inner'"))
    decoded_params = {
        k: (complex(v[0], v[1]) if isinstance(v, list) and len(v) == 2 else v) for k, v in params.items()
    }
    return Transformed(kind, _decode(data["inner"], depth + 1), decoded_params, label)


def spec_from_json(data: Union[str, bytes, Mapping[str, Any]]) -> FunctionSpec:
    """Decode a function spec from a JSON document or an already parsed object.

    >>> spec_from_json('{"family": "brownian_drift", "b": 1.0}')
    BrownianDrift(b=1.0, label=None)
    """
    if isinstance(data, (str, bytes)):
        try:
            data = json.loads(data)
        except ValueError as exc:
            raise InvalidSpec(msgs.INVALID_SPEC_MSG.format(f"malformed JSON: {exc}"))
    return _decode(data, 1)


def spec_to_json(spec: FunctionSpec) -> Dict[str, Any]:
    """Inverse of `spec_from_json`; stable parameters are written through the exact coefficient a."""
    out: Dict[str, Any]
    if isinstance(spec, BrownianDrift):
        out = {"family": "brownian_drift", "b": spec.b}
    elif isinstance(spec, Drift):
        out = {"family": "drift", "b": spec.b}
    elif isinstance(spec, RiskProcess):
        out = {"family": "risk_process", "a": spec.a, "b": spec.b}
    elif isinstance(spec, (Stable, StableWithDrift)):
        p = spec.params
        out = {"family": "stable", "alpha": p.alpha, "a": [p.a.real, p.a.imag]}
        if isinstance(spec, StableWithDrift):
            out.update(family="stable_with_drift", drift=spec.b)
    elif isinstance(spec, Sum):
        out = {"family": "sum", "terms": [{"weight": t.weight, "spec": spec_to_json(t.spec)} for t in spec.terms]}
    elif isinstance(spec, Transformed):
        for key, value in spec.params.items():
            if callable(value):
                raise InvalidSpec(msgs.INVALID_SPEC_MSG.format(f"parameter '{key}' is not serializable"))
        params = {k: ([v.real, v.imag] if isinstance(v, complex) else v) for k, v in spec.params.items()}
        out = {"family": "transform", "kind": spec.kind.value, "params": params, "inner": spec_to_json(spec.inner)}
    else:
        raise InvalidSpec(msgs.UNKNOWN_FAMILY_MSG.format(type(spec).__name__))
    if spec.label is not None:
        out["label"] = spec.label
    return out
