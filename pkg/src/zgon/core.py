"""The infinity-gon Z_m: points, their order, a rational embedding and the Kupisch function.

Angles are exact rationals measured in units of pi, so ``Fraction(1)`` is the
angle pi and the full turn is ``Fraction(2)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import floor
from typing import Iterator

TURN = Fraction(2)


class ConfigurationError(ValueError):
    """Raised when objects from incompatible configurations are mixed."""


class DomainError(ValueError):
    """Raised when an operation is called outside the hypotheses it is stated under."""


@dataclass(frozen=True, order=True)
class Point:
    """An element ``(copy, index)`` of Z_m; the dataclass order is the order of Z_m."""

    copy: int
    index: int

    def succ(self) -> Point:
        return Point(self.copy, self.index + 1)

    def pred(self) -> Point:
        return Point(self.copy, self.index - 1)

    def shifted(self, k: int) -> Point:
        return Point(self.copy, self.index + k)

    def __str__(self) -> str:
        return f"{self.copy}:{self.index}"


@dataclass(frozen=True, order=True)
class Lifted:
    """A point of Z_m lifted to the real line: ``base + 2*winding*pi``.

    Every base point embeds into (0, 2pi), so comparing ``(winding, base)``
    lexicographically is the same as comparing the real numbers.
    """

    winding: int
    base: Point

    def __str__(self) -> str:
        return f"{self.base}{self.winding:+d}T" if self.winding else str(self.base)


@dataclass(frozen=True)
class Embedding:
    """Strictly increasing map of Z_m into (0, 2) (units of pi).

    Copy ``p`` occupies the open arc ``(2(p-1)/m, 2p/m)``; inside it the index
    ``n`` is squashed by ``n/(c + |n|)``. ``c = 1`` is the default layout; any
    other positive ``c`` gives an alternative embedding with the same order type.
    """

    m: int
    c: Fraction = Fraction(1)

    def __post_init__(self):
        if self.m < 1:
            raise ConfigurationError(f"m must be positive, got {self.m}")
        if self.c <= 0:
            raise ConfigurationError("squashing constant must be positive")

    def accumulation(self, p: int) -> Fraction:
        """Angle of accumulation point ``p`` (1-based); point 1 sits at 0."""
        return Fraction(2 * (p - 1), self.m)

    def __call__(self, z: Point) -> Fraction:
        return _embed(self.m, self.c, z.copy, z.index)

    def locate(self, s: Fraction) -> Point | None:
        """Return ``z`` with ``s`` in ``[embed(z), embed(z+))``, or None at an accumulation angle.

        ``s`` must already lie in ``[0, 2)``.
        """
        scaled = s * self.m / 2
        if scaled.denominator == 1:
            return None
        p = floor(scaled) + 1
        y = (s - self.accumulation(p)) * self.m - 1  # in (-1, 1)
        if y >= 0:
            n = floor(self.c * y / (1 - y))
        else:
            n = floor(self.c * y / (1 + y))
        return Point(p, n)


@lru_cache(maxsize=1 << 16)
def _embed(m: int, c: Fraction, p: int, n: int) -> Fraction:
    squash = Fraction(n) / (c + abs(n))
    return Fraction(2 * (p - 1), m) + (1 + squash) / m


@dataclass(frozen=True)
class Gon:
    """The configuration of Z_m (the number ``m`` of copies of the integers)."""

    m: int
    embedding: Embedding | None = None

    def __post_init__(self):
        if not isinstance(self.m, int) or self.m < 1:
            raise ConfigurationError(f"m must be a positive integer, got {self.m!r}")
        if self.embedding is None:
            object.__setattr__(self, "embedding", Embedding(self.m))
        elif self.embedding.m != self.m:
            raise ConfigurationError("embedding built for a different m")

    def check(self, *points: Point) -> None:
        for z in points:
            if not 1 <= z.copy <= self.m:
                raise ConfigurationError(f"point {z} does not belong to Z_{self.m}")

    def compare(self, a: Point, b: Point) -> int:
        """Three-way comparison: -1, 0 or 1."""
        self.check(a, b)
        return (a > b) - (a < b)

    def embed(self, z: Point) -> Fraction:
        self.check(z)
        return self.embedding(z)

    def points(self, window: int) -> list[Point]:
        """All points with ``|index| <= window``, in increasing order."""
        return [Point(p, n) for p in range(1, self.m + 1) for n in range(-window, window + 1)]

    def kupisch(self, t: Fraction) -> Fraction:
        """Maximal interval length allowed from start angle ``t`` (units of pi)."""
        t = Fraction(t)
        s = t - TURN * floor(t / TURN)
        z = self.embedding.locate(s)
        if z is None:
            return TURN
        return TURN + self.embedding(z.succ()) - s

    def iter_turn(self, window: int) -> Iterator[tuple[Point, Fraction]]:
        for z in self.points(window):
            yield z, self.embedding(z)


def compare(a: Point, b: Point, gon: Gon) -> int:
    return gon.compare(a, b)


def succ(a: Point) -> Point:
    return a.succ()


def pred(a: Point) -> Point:
    return a.pred()
