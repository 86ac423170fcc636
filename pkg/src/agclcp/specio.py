"""Reading construction specs from JSON.

A spec looks like::

    {"curve": {"kind": "elliptic", "a": "1", "b": "0", "c": "0",
               "field": {"p": 2, "m": 2}},
     "G": [{"point": ["0", "1", "0"], "mult": 6}, ...],
     "H": [...],
     "D": [["0", "1", "1"], ...] | "auto"}

Points may be given with or without the trailing z = 1, and ``"O"`` names the
point at infinity.  Errors carry the JSON path of the offending field.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from pathlib import Path

from .agcode import AgCodeSpec
from .curve import ELLIPTIC, LINE, Curve, Divisor, Point, elliptic_curve, projective_line, rational_points
from .gf import field_from_json


class SpecError(ValueError):
    def __init__(self, path: str, message: str):
        super().__init__(f"{path}: {message}")
        self.path = path


@dataclass(frozen=True)
class PairSpec:
    curve: Curve
    G: Divisor
    H: Divisor
    D: tuple[Point, ...]

    def specs(self) -> tuple[AgCodeSpec, AgCodeSpec]:
        return AgCodeSpec(self.curve, self.G, self.D), AgCodeSpec(self.curve, self.H, self.D)


def _wrap(path: str, fn, *args):
    try:
        return fn(*args)
    except SpecError:
        raise
    except (ValueError, KeyError, TypeError) as exc:
        raise SpecError(path, str(exc)) from None


def parse_curve(obj, path: str = "curve") -> Curve:
    if not isinstance(obj, dict):
        raise SpecError(path, "expected an object")
    kind = obj.get("kind")
    if "field" not in obj:
        raise SpecError(f"{path}.field", "missing")
    F = _wrap(f"{path}.field", field_from_json, obj["field"])
    if kind == LINE:
        return projective_line(F)
    if kind == ELLIPTIC:
        for key in ("a", "b", "c"):
            if key not in obj:
                raise SpecError(f"{path}.{key}", "missing")
        return _wrap(path, elliptic_curve, F, obj["a"], obj["b"], obj["c"])
    raise SpecError(f"{path}.kind", f"expected 'line' or 'elliptic', got {kind!r}")


def parse_point(curve: Curve, obj, path: str) -> Point:
    if obj == "O":
        return curve.infinity
    if not isinstance(obj, list):
        raise SpecError(path, "expected a coordinate list or 'O'")
    width = 2 if curve.kind == LINE else 3
    coords = list(obj) + [1] if len(obj) == width - 1 else obj
    return _wrap(path, curve.point, coords)


def parse_divisor(curve: Curve, obj, path: str) -> Divisor:
    if not isinstance(obj, list):
        raise SpecError(path, "expected a list of {point, mult} entries")
    items = []
    for i, entry in enumerate(obj):
        p = f"{path}[{i}]"
        if not isinstance(entry, dict) or "point" not in entry or "mult" not in entry:
            raise SpecError(p, "expected {\"point\": ..., \"mult\": ...}")
        if not isinstance(entry["mult"], int):
            raise SpecError(f"{p}.mult", "expected an integer")
        items.append((parse_point(curve, entry["point"], f"{p}.point"), entry["mult"]))
    return Divisor(items)


def parse_pair(obj) -> PairSpec:
    if not isinstance(obj, dict):
        raise SpecError("$", "expected an object")
    for key in ("curve", "G", "H"):
        if key not in obj:
            raise SpecError(key, "missing")
    curve = parse_curve(obj["curve"])
    G = parse_divisor(curve, obj["G"], "G")
    H = parse_divisor(curve, obj["H"], "H")
    Dobj = obj.get("D", "auto")
    if Dobj == "auto":
        taken = G.support | H.support
        D = tuple(P for P in rational_points(curve) if P not in taken)
    elif isinstance(Dobj, list):
        D = tuple(parse_point(curve, P, f"D[{i}]") for i, P in enumerate(Dobj))
    else:
        raise SpecError("D", "expected a point list or 'auto'")
    for name, div in (("G", G), ("H", H)):
        for i, P in enumerate(D):
            if P in div.support:
                raise SpecError(f"D[{i}]", f"point {P} lies in supp({name})")
    if len(set(D)) != len(D):
        raise SpecError("D", "points must be distinct")
    return PairSpec(curve, G, H, D)


def load_pair(path: str | Path) -> PairSpec:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise SpecError(str(path), exc.strerror or str(exc)) from None
    try:
        obj = json.loads(text)
    except json.JSONDecodeError as exc:
        raise SpecError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None
    return parse_pair(obj)


def pair_to_json(pair: PairSpec) -> dict:
    return {
        "curve": pair.curve.to_json(),
        "G": pair.G.to_json(),
        "H": pair.H.to_json(),
        "D": [P.to_json() for P in pair.D],
    }
