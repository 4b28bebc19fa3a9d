"""JSON manifests for point sets and rational functions.

A manifest looks like::

    {"schema": 1, "p": 5, "d": 2, "role": "set", "data": [[0, 0], [1, 1]]}
    {"schema": 1, "p": 3, "d": 1, "role": "function", "data": ["1/2", "0", "-3"]}

Function values are listed in lexicographic point order as ``"num/den"``
strings.  No floats are accepted anywhere.
"""

from __future__ import annotations

import json
from fractions import Fraction
from importlib import resources
from pathlib import Path
from typing import Any

from .ffvec import PointSet, is_prime
from .fourier import RationalFunction

SCHEMA = 1
FIXTURE_PREFIX = "fixture:"


class ManifestError(ValueError):
    pass


def _read(source: str) -> Any:
    if source.startswith(FIXTURE_PREFIX):
        name = source[len(FIXTURE_PREFIX):]
        ref = resources.files("fftile") / "fixtures" / f"{name}.json"
        if not ref.is_file():
            raise ManifestError(f"no fixture named {name!r}")
        return json.loads(ref.read_text())
    try:
        return json.loads(Path(source).read_text())
    except OSError as exc:
        raise ManifestError(f"cannot read {source}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ManifestError(f"{source} is not valid JSON: {exc}") from exc


def fixture_names() -> list:
    folder = resources.files("fftile") / "fixtures"
    return sorted(f.name[:-5] for f in folder.iterdir() if f.name.endswith(".json"))


def _header(doc: Any) -> tuple:
    if not isinstance(doc, dict):
        raise ManifestError("manifest must be a JSON object")
    if doc.get("schema") != SCHEMA:
        raise ManifestError(f"unsupported schema {doc.get('schema')!r}")
    p, d = doc.get("p"), doc.get("d")
    if not isinstance(p, int) or not is_prime(p):
        raise ManifestError(f"p = {p!r} is not a prime")
    if not isinstance(d, int) or d < 1:
        raise ManifestError(f"d = {d!r} is not a positive dimension")
    return p, d, doc.get("role"), doc.get("data")


def parse(doc: Any) -> PointSet | RationalFunction:
    p, d, role, data = _header(doc)
    if not isinstance(data, list):
        raise ManifestError("data must be a list")
    if role == "set":
        pts = []
        for x in data:
            if (not isinstance(x, list) or len(x) != d
                    or not all(isinstance(a, int) and not isinstance(a, bool) and 0 <= a < p for a in x)):
                raise ManifestError(f"invalid point {x!r} for F_{p}^{d}")
            pts.append(tuple(x))
        if len(set(pts)) != len(pts):
            raise ManifestError("duplicate points in set manifest")
        return PointSet(p, d, tuple(pts))
    if role == "function":
        if len(data) != p ** d:
            raise ManifestError(f"function needs {p ** d} values, got {len(data)}")
        vals = []
        for v in data:
            if isinstance(v, bool) or not isinstance(v, (str, int)):
                raise ManifestError(f"invalid value {v!r}; use integers or 'num/den' strings")
            try:
                vals.append(Fraction(v))
            except (ValueError, ZeroDivisionError) as exc:
                raise ManifestError(f"invalid rational {v!r}") from exc
            if isinstance(v, str) and ("." in v or "e" in v.lower()):
                raise ManifestError(f"decimal value {v!r} not allowed; use 'num/den'")
        return RationalFunction(p, d, tuple(vals))
    raise ManifestError(f"unknown role {role!r}")


def load(source: str) -> PointSet | RationalFunction:
    return parse(_read(source))


def load_set(source: str) -> PointSet:
    obj = load(source)
    if not isinstance(obj, PointSet):
        raise ManifestError(f"{source} holds a function, expected a point set")
    return obj


def load_function(source: str) -> RationalFunction:
    """A function manifest, or the indicator of a set manifest."""
    obj = load(source)
    if isinstance(obj, PointSet):
        return RationalFunction.indicator(obj)
    return obj


def dump_set(E: PointSet) -> dict:
    return {"schema": SCHEMA, "p": E.p, "d": E.d, "role": "set", "data": E.to_list()}


def dump_function(f: RationalFunction) -> dict:
    return {"schema": SCHEMA, "p": f.p, "d": f.d, "role": "function",
            "data": [str(v) for v in f.values]}
