"""Exact sparse Gaussian elimination over the rationals or a prime field."""

from __future__ import annotations

from fractions import Fraction
from typing import Hashable, Iterable, Mapping

import numpy as np

PRIME = 65521


class Field:
    """Arithmetic in Q (``modulus=None``) or in GF(modulus)."""

    def __init__(self, modulus: int | None = None):
        self.modulus = modulus

    @property
    def name(self) -> str:
        return "rational" if self.modulus is None else f"GF({self.modulus})"

    def coerce(self, x):
        if self.modulus is None:
            # integers stay plain ints; 0/1 systems then never touch Fraction
            if isinstance(x, int):
                return x
            x = Fraction(x)
            return x.numerator if x.denominator == 1 else x
        return int(x) % self.modulus

    def inv(self, x):
        if self.modulus is None:
            return x if x in (1, -1) else 1 / Fraction(x)
        return pow(x, -1, self.modulus)

    def reduce(self, x):
        return x if self.modulus is None else x % self.modulus

    def __eq__(self, other):
        return isinstance(other, Field) and other.modulus == self.modulus

    def __hash__(self):
        return hash(self.modulus)

    def __repr__(self):
        return f"Field({self.modulus})"


RATIONAL = Field()


def field_named(name: str) -> Field:
    if name == "rational":
        return RATIONAL
    if name == "prime":
        return Field(PRIME)
    raise ValueError(f"unknown field {name!r}")


class Eliminator:
    """Incremental row reduction of sparse rows ``{variable: coefficient}``.

    Each stored pivot row is reduced against every pivot that existed when it
    was inserted, which is enough to read off rank and a nullspace basis.
    """

    def __init__(self, field: Field = RATIONAL):
        self.field = field
        self.pivots: dict[Hashable, dict] = {}
        self.order: dict[Hashable, int] = {}

    @property
    def rank(self) -> int:
        return len(self.pivots)

    def add(self, row: Mapping[Hashable, object]) -> bool:
        """Insert a row; return True when it was independent of the previous ones."""
        F = self.field
        r = {}
        for v, c in row.items():
            c = F.coerce(c)
            if c:
                r[v] = c
        while True:
            hits = [v for v in r if v in self.pivots]
            if not hits:
                break
            v = min(hits, key=self.order.__getitem__)
            c = r[v]
            for w, d in self.pivots[v].items():
                x = F.reduce(r.get(w, 0) - c * d)
                if x:
                    r[w] = x
                else:
                    r.pop(w, None)
        if not r:
            return False
        v = max(r)
        inv = F.inv(r[v])
        self.pivots[v] = {w: F.reduce(c * inv) for w, c in r.items()}
        self.order[v] = len(self.order)
        return True

    def nullspace(self, variables: Iterable[Hashable]) -> list[dict]:
        """Basis of the solution space, one vector per free variable."""
        F = self.field
        free = [v for v in variables if v not in self.pivots]
        # the newest pivot row mentions only free variables; resolve backwards
        expr: dict[Hashable, dict] = {}
        for v in sorted(self.pivots, key=self.order.__getitem__, reverse=True):
            e: dict = {}
            for w, c in self.pivots[v].items():
                if w == v:
                    continue
                for f, d in (expr[w].items() if w in expr else ((w, 1),)):
                    x = F.reduce(e.get(f, 0) - c * d)
                    if x:
                        e[f] = x
                    else:
                        e.pop(f, None)
            expr[v] = e
        one = F.coerce(1)
        basis = []
        for f in free:
            vec = {f: one}
            for v, e in expr.items():
                if f in e:
                    vec[v] = e[f]
            basis.append(vec)
        return basis


def rank(matrix, field: Field = RATIONAL) -> int:
    el = Eliminator(field)
    for row in np.asarray(matrix, dtype=object):
        el.add({j: c for j, c in enumerate(row) if c})
    return el.rank


def matmul(A: np.ndarray, B: np.ndarray, field: Field = RATIONAL) -> np.ndarray:
    """Product of object-dtype matrices; zero-sized shapes are fine."""
    if A.shape[1] == 0:
        return zeros(A.shape[0], B.shape[1])
    out = A.dot(B)
    if field.modulus is not None:
        out = out % field.modulus
    return out


def zeros(rows: int, cols: int) -> np.ndarray:
    return np.zeros((rows, cols), dtype=object)
