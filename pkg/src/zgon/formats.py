"""Text and JSON forms of points, intervals and arcs.

Points print as ``p:n``, intervals as ``(p1:n1, p2:n2; h)`` and arcs as
``(p1:n1 | p2:n2)``. Every parser accepts exactly what the printer emits, plus
free whitespace.
"""

from __future__ import annotations

import json
import re

from .core import Point
from .rep import Interval
from .stable import Arc

_PT = r"\s*(-?\d+)\s*:\s*(-?\d+)\s*"
_POINT = re.compile(rf"^{_PT}$")
_INTERVAL = re.compile(rf"^\s*\({_PT},{_PT};\s*([01])\s*\)\s*$")
_ARC = re.compile(rf"^\s*\({_PT}\|{_PT}\)\s*$")


class ParseError(ValueError):
    pass


def parse_point(s: str) -> Point:
    mt = _POINT.match(s)
    if not mt:
        raise ParseError(f"not a point: {s!r}")
    return Point(int(mt[1]), int(mt[2]))


def parse_interval(s: str) -> Interval:
    mt = _INTERVAL.match(s)
    if not mt:
        raise ParseError(f"not an interval: {s!r}")
    return Interval(Point(int(mt[1]), int(mt[2])), Point(int(mt[3]), int(mt[4])), int(mt[5]))


def parse_arc(s: str) -> Arc:
    mt = _ARC.match(s)
    if not mt:
        raise ParseError(f"not an arc: {s!r}")
    return Arc(Point(int(mt[1]), int(mt[2])), Point(int(mt[3]), int(mt[4])))


def parse_object(s: str) -> Interval | Arc:
    """An interval or an arc, told apart by the separator."""
    return parse_arc(s) if "|" in s else parse_interval(s)


def fmt(x) -> str:
    return str(x)


# JSON carries objects in their text form so that a dump can be fed back to the parsers.

def to_json(obj) -> str:
    return json.dumps(_encode(obj), sort_keys=True)


def _encode(obj):
    if isinstance(obj, (Point, Interval, Arc)):
        return str(obj)
    if isinstance(obj, dict):
        return {str(k): _encode(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_encode(v) for v in obj]
    return obj


def object_from_json(s: str) -> Interval | Arc | Point:
    text = json.loads(s)
    if not isinstance(text, str):
        raise ParseError("expected a JSON string")
    if _POINT.match(text):
        return parse_point(text)
    return parse_object(text)
