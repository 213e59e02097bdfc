"""The stable category C_{-1,m}: admissible arcs of Z_m and their calculus.

Arc arithmetic such as ``a1 - 2`` acts on the index inside the copy; order
comparisons use the order of Z_m. Hom spaces are read off the interval-level
hammocks through the bijection ``phi``; the arc-level closed forms are kept
alongside as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import NamedTuple

import networkx as nx

from .core import ConfigurationError, DomainError, Gon, Point
from .rep import (
    Interval,
    almost_split_sequence,
    derived,
    in_hminus,
    in_hplus,
    is_in_I,
    proj_factor_dim,
    hom_dim_rep,
)


@dataclass(frozen=True, order=True)
class Arc:
    a1: Point
    a2: Point

    def __str__(self) -> str:
        return f"({self.a1} | {self.a2})"


def arc(i1: int, i2: int, p: int = 1, q: int | None = None) -> Arc:
    """Shorthand: ``arc(3, 0)`` is the arc (1:3 | 1:0)."""
    return Arc(Point(p, i1), Point(p if q is None else q, i2))


def phi(U: Interval) -> Arc:
    if not is_in_I(U) or U.is_projective():
        raise DomainError(f"{U} is not a non-projective interval")
    if U.h == 0:
        return Arc(Point(U.u2.copy, 2 * U.u2.index - 1), Point(U.u1.copy, 2 * U.u1.index))
    return Arc(Point(U.u1.copy, 2 * U.u1.index), Point(U.u2.copy, 2 * U.u2.index - 1))


@lru_cache(maxsize=1 << 18)
def _phi_inv(a: Arc) -> Interval | None:
    i1, i2 = a.a1.index, a.a2.index
    if (i1 - i2) % 2 == 0:
        return None
    if i1 % 2:
        U = Interval(Point(a.a2.copy, i2 // 2), Point(a.a1.copy, (i1 + 1) // 2), 0)
    else:
        U = Interval(Point(a.a1.copy, i1 // 2), Point(a.a2.copy, (i2 + 1) // 2), 1)
    if not is_in_I(U) or U.is_projective():
        return None
    return U


def phi_inv(a: Arc) -> Interval:
    U = _phi_inv(a)
    if U is None:
        raise DomainError(f"{a} is not admissible")
    return U


def is_admissible(a: Arc) -> bool:
    return _phi_inv(a) is not None


def is_admissible_closed_form(a: Arc) -> bool:
    """``a1 >= a2 + 1`` in Z_m with odd index difference."""
    return a.a1 >= a.a2.shifted(1) and (a.a1.index - a.a2.index) % 2 == 1


def _check(*arcs: Arc) -> None:
    for a in arcs:
        if not is_admissible(a):
            raise DomainError(f"{a} is not admissible")


def shift(a: Arc, k: int = 1) -> Arc:
    """``Sigma^k a``: clockwise rotation by ``k`` steps."""
    _check(a)
    return Arc(a.a1.shifted(-k), a.a2.shifted(-k))


def tau(a: Arc) -> Arc:
    _check(a)
    return Arc(a.a1.shifted(2), a.a2.shifted(2))


# -- Hom spaces ----------------------------------------------------------------

def in_Hplus(a: Arc, b: Arc) -> bool:
    return in_hplus(phi_inv(a), phi_inv(b))


def in_Hminus_shifted(a: Arc, b: Arc) -> bool:
    """Membership of ``b`` in ``H^-(Sigma^{-1} a)``."""
    return in_hminus(derived(phi_inv(a)).SigmaInvU, phi_inv(b))


def hom_dim(a: Arc, b: Arc) -> int:
    return int(in_Hplus(a, b) or in_Hminus_shifted(a, b))


def _same_parity(x: Point, y: Point) -> bool:
    return (x.index - y.index) % 2 == 0


def hplus_closed_form(a: Arc, b: Arc) -> bool:
    return a.a2.shifted(1) <= b.a1 <= a.a1 and b.a2 <= a.a2 and _same_parity(b.a1, a.a1)


def hminus_closed_form(a: Arc, b: Arc) -> bool:
    return b.a1 >= a.a1 and a.a2 <= b.a2 <= a.a1.shifted(-1) and _same_parity(b.a1, a.a1)


def hom_dim_closed_form(a: Arc, b: Arc) -> int:
    s = Arc(a.a1.shifted(1), a.a2.shifted(1))
    return int(hplus_closed_form(a, b) or hminus_closed_form(s, b))


def stable_hom_dim_via_rep(a: Arc, b: Arc) -> int:
    U, V = phi_inv(a), phi_inv(b)
    return hom_dim_rep(U, V) - proj_factor_dim(U, V)


def serre_dual_check(a: Arc, b: Arc) -> bool:
    return hom_dim(a, b) == hom_dim(b, shift(a, -1))


def compose_nonzero_stable(a: Arc, b: Arc, c: Arc) -> bool:
    """Whether ``g f != 0`` for nonzero ``f: a -> b`` and ``g: b -> c``."""
    if hom_dim(a, b) != 1 or hom_dim(b, c) != 1:
        raise DomainError("both morphisms must exist")
    if not hom_dim(a, c):
        return False
    b_plus, b_minus = in_Hplus(a, b), in_Hminus_shifted(a, b)
    c_plus, c_minus = in_Hplus(a, c), in_Hminus_shifted(a, c)
    return (
        (b_plus and c_plus and in_Hplus(b, c))
        or (b_plus and c_minus and in_Hminus_shifted(b, c))
        or (b_minus and c_minus and in_Hplus(b, c))
    )


# -- AR theory -------------------------------------------------------------------

class AlmostSplitTriangle(NamedTuple):
    left: Arc
    middle: list[Arc]
    right: Arc
    shift_of_left: Arc


def almost_split_triangle(a: Arc) -> AlmostSplitTriangle:
    left = tau(a)
    if a.a1 == a.a2.shifted(1):
        middle = [Arc(a.a1.shifted(2), a.a2)]
    else:
        middle = [Arc(a.a1, a.a2.shifted(2)), Arc(a.a1.shifted(2), a.a2)]
    return AlmostSplitTriangle(left, middle, a, shift(left))


def stabilized_sequence(U: Interval) -> AlmostSplitTriangle:
    """Image under phi of the almost split sequence starting at U, projectives dropped."""
    seq = almost_split_sequence(U)
    middle = [phi(X) for X in seq.middle if not X.is_projective()]
    left = phi(seq.left)
    return AlmostSplitTriangle(left, sorted(middle), phi(seq.right), shift(left))


def irreducible(a: Arc, b: Arc) -> bool:
    return b in (Arc(a.a1, a.a2.shifted(-2)), Arc(a.a1.shifted(-2), a.a2))


def irreducible_targets(a: Arc) -> list[Arc]:
    out = [Arc(a.a1, a.a2.shifted(-2)), Arc(a.a1.shifted(-2), a.a2)]
    return [b for b in out if is_admissible(b)]


def spherical_profile(a: Arc, n_lo: int, n_hi: int) -> list[int]:
    """``dim Hom(a, Sigma^n a)`` for ``n`` in ``[n_lo, n_hi]``."""
    return [hom_dim(a, shift(a, n)) for n in range(n_lo, n_hi + 1)]


# -- enumeration ---------------------------------------------------------------------

def arcs(gon: Gon, window: int) -> list[Arc]:
    """Admissible arcs with both indices in ``[-window, window]``."""
    pts = gon.points(window)
    return [Arc(x, y) for x in pts for y in pts if is_admissible(Arc(x, y))]


def in_window(a: Arc, window: int) -> bool:
    return abs(a.a1.index) <= window and abs(a.a2.index) <= window


def component_label(a: Arc) -> tuple[int, int, int]:
    """``(p, q, i)``: copies of the endpoints and parity of ``a1``."""
    return a.a1.copy, a.a2.copy, a.a1.index % 2


def thick_closure(seed: Arc, window: int, gon: Gon | None = None) -> set[Arc]:
    """Thick closure of ``seed`` inside the finite window, built from shifts and AR triangles.

    A triangle is used only when all its terms lie in the window; two known
    terms force the third (summands of a known middle term included).
    """
    gon = gon or Gon(1)
    if gon.m != 1:
        raise ConfigurationError("thick generation is only established for m = 1")
    _check(seed)
    universe = set(arcs(gon, window))
    known: set[Arc] = set()

    def add_orbit(x: Arc) -> bool:
        grew = False
        for k in range(-4 * window - 4, 4 * window + 5):
            y = Arc(x.a1.shifted(-k), x.a2.shifted(-k))
            if y in universe and y not in known:
                known.add(y)
                grew = True
        return grew

    add_orbit(seed)
    triangles = []
    for a in universe:
        t = almost_split_triangle(a)
        if t.left in universe and all(x in universe for x in t.middle):
            triangles.append(t)
    changed = True
    while changed:
        changed = False
        for t in triangles:
            new = []
            mid_known = all(x in known for x in t.middle)
            if t.left in known and t.right in known and not mid_known:
                new.extend(t.middle)
            elif mid_known and (t.left in known) != (t.right in known):
                new.append(t.right if t.left in known else t.left)
            for x in new:
                if x not in known:
                    changed |= add_orbit(x)
    return known


def ar_quiver(gon: Gon, window: int) -> nx.DiGraph:
    """Irreducible arrows between admissible arcs of the window."""
    g = nx.DiGraph()
    vertices = arcs(gon, window)
    for a in vertices:
        g.add_node(a, component=component_label(a))
    for a in vertices:
        for b in irreducible_targets(a):
            if in_window(b, window):
                g.add_edge(a, b)
    return g


def component_count(g: nx.DiGraph) -> int:
    return nx.number_weakly_connected_components(g)
