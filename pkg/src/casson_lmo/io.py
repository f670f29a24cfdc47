"""JSON input and output.

Two input shapes are accepted::

    {"pd": [[a, b, c, d], ...], "components": n, "framings": [f1, ..., fn]}
    {"linking_matrix": [[...], ...], "conway": {"1": [...], "1,2": [...], ...}}

Sublink keys and component numbers are 1-based.  Conway coefficient lists
are little-endian in z.  Rationals are written as integers or "p/q".
"""

from __future__ import annotations

import json
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Mapping, Union

from .errors import ArgumentError, ParseError
from .links import FramedLink, LinkInvariantData, framed_link

__all__ = [
    "format_rational",
    "parse_rational",
    "parse_components",
    "link_from_json",
    "data_from_json",
    "data_to_json",
    "load_input",
]


def format_rational(x: Union[Fraction, int]) -> str:
    x = Fraction(x)
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def parse_rational(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ParseError(f"not a rational: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"not a rational: {value!r}") from None
    if isinstance(value, float) and value.is_integer():
        return Fraction(int(value))
    raise ParseError(f"not a rational: {value!r}")


def parse_components(text: str, n: int | None = None) -> list[int]:
    """'1,3' -> [0, 2]."""
    try:
        out = [int(t) - 1 for t in text.split(",") if t.strip()]
    except ValueError:
        raise ParseError(f"bad component list {text!r}") from None
    if not out:
        raise ParseError("empty component list")
    if len(set(out)) != len(out):
        raise ParseError(f"repeated component in {text!r}")
    if min(out) < 0 or (n is not None and max(out) >= n):
        raise ParseError(f"component out of range in {text!r}")
    return sorted(out)


def link_from_json(obj: Mapping[str, Any]) -> FramedLink:
    try:
        pd = obj["pd"]
        framings = [int(f) for f in obj["framings"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad link input: {exc}") from exc
    components = obj.get("components", len(framings))
    if not isinstance(components, int) or components != len(framings):
        raise ParseError(f"{len(framings)} framings for {components} components")
    try:
        return framed_link(pd, framings, components)
    except ArgumentError as exc:
        raise ParseError(str(exc)) from exc


def data_from_json(obj: Mapping[str, Any]) -> LinkInvariantData:
    try:
        matrix = [[int(v) for v in row] for row in obj["linking_matrix"]]
        raw = obj.get("conway", {})
        if not isinstance(raw, Mapping):
            raise TypeError("conway must be an object")
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"bad invariant data: {exc}") from exc
    n = len(matrix)
    table = {}
    for key, coeffs in raw.items():
        comps = frozenset(parse_components(key, n))
        if comps in table:
            raise ParseError(f"sublink {key!r} given twice")
        if not isinstance(coeffs, list):
            raise ParseError(f"coefficients for {key!r} must be a list")
        table[comps] = tuple(parse_rational(c) for c in coeffs)
    try:
        return LinkInvariantData(tuple(map(tuple, matrix)), table)
    except ArgumentError as exc:
        raise ParseError(str(exc)) from exc


def data_to_json(data: LinkInvariantData) -> dict:
    conway = {}
    for I in sorted(data.conway, key=lambda s: (len(s), sorted(s))):
        key = ",".join(str(i + 1) for i in sorted(I))
        conway[key] = [format_rational(c) for c in data.conway[I]]
    return {"linking_matrix": [list(row) for row in data.matrix], "conway": conway}


def load_input(source: Union[str, Path, Mapping[str, Any]]) -> tuple[LinkInvariantData, FramedLink | None]:
    """Read either input shape; '-' reads standard input."""
    if not isinstance(source, (str, Path)):
        obj = source
    else:
        try:
            if str(source) == "-":
                text = sys.stdin.read()
            else:
                text = Path(source).read_text()
            obj = json.loads(text)
        except OSError as exc:
            raise ParseError(f"cannot read {source}: {exc}") from exc
        except json.JSONDecodeError as exc:
            raise ParseError(f"invalid JSON: {exc}") from exc
    if not isinstance(obj, Mapping):
        raise ParseError("input must be a JSON object")
    if "pd" in obj:
        L = link_from_json(obj)
        return LinkInvariantData.from_link(L), L
    if "linking_matrix" in obj:
        return data_from_json(obj), None
    raise ParseError("input needs either 'pd' or 'linking_matrix'")
