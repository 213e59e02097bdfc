"""Closed-form calculus of the abelian category rep(Z_m, kappa).

Indecomposables are strings over intervals ``(u1, u2 + 2h pi]`` with endpoints
in Z_m. Everything here works on the order of Z_m and on winding numbers only;
no angle is ever computed.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import NamedTuple

from .core import DomainError, Gon, Lifted, Point


@dataclass(frozen=True, order=True)
class Interval:
    """The interval ``(u1, u2 + 2h pi]``."""

    u1: Point
    u2: Point
    h: int

    @property
    def start(self) -> Lifted:
        return Lifted(0, self.u1)

    @property
    def end(self) -> Lifted:
        return Lifted(self.h, self.u2)

    def is_simple(self) -> bool:
        return self.h == 0 and self.u2 == self.u1.succ()

    def is_projective(self) -> bool:
        return self.h == 1 and self.u2 == self.u1.succ()

    def points(self) -> list[Point] | None:
        """Points ``z`` of Z_m with ``(z, z+]`` inside the interval, or None when infinite."""
        if self.h == 0 and self.u1.copy == self.u2.copy:
            return [Point(self.u1.copy, n) for n in range(self.u1.index, self.u2.index)]
        return None

    def __str__(self) -> str:
        return f"({self.u1}, {self.u2}; {self.h})"


def simple(z: Point) -> Interval:
    return Interval(z, z.succ(), 0)


def projective(z: Point) -> Interval:
    return Interval(z, z.succ(), 1)


def is_in_I(U: Interval) -> bool:
    """Membership ``u1+ <= u2 + 2h pi <= u1+ + 2pi``."""
    s = (U.u1.copy, U.u1.index + 1)
    e = (U.u2.copy, U.u2.index)
    # (0, s) <= (h, e) <= (1, s) compared as lifted points
    if U.h == 0:
        return e >= s
    return U.h == 1 and e <= s


def check_interval(U: Interval, gon: Gon | None = None) -> Interval:
    if gon is not None:
        gon.check(U.u1, U.u2)
    if not is_in_I(U):
        raise DomainError(f"{U} is not an interval of I")
    return U


class Derived(NamedTuple):
    U1: Interval | None
    U2: Interval | None
    Uminus: Interval
    SigmaU: Interval | None
    SigmaInvU: Interval | None
    Uprime: Interval


@lru_cache(maxsize=1 << 18)
def derived(U: Interval) -> Derived:
    check_interval(U)
    u1, u2, h = U.u1, U.u2, U.h
    proj = U.is_projective()
    return Derived(
        U1=None if proj else Interval(u1.pred(), u2, h),
        U2=None if U.is_simple() else Interval(u1, u2.pred(), h),
        Uminus=Interval(u1.pred(), u2.pred(), h),
        SigmaU=None if proj else Interval(u2.pred(), u1, 1 - h),
        SigmaInvU=None if proj else Interval(u2, u1.succ(), 1 - h),
        Uprime=Interval(u2.pred(), u1.succ(), 1 - h),
    )


def sigma(U: Interval) -> Interval:
    d = derived(U)
    if d.SigmaU is None:
        raise DomainError(f"shift of the projective {U} is not defined")
    return d.SigmaU


def sigma_inv(U: Interval) -> Interval:
    d = derived(U)
    if d.SigmaInvU is None:
        raise DomainError(f"inverse shift of the projective {U} is not defined")
    return d.SigmaInvU


# -- Hom spaces ---------------------------------------------------------------

def left_intersect_nonempty(V: Interval, U: Interval, n: int) -> bool:
    """Whether ``(V + 2n pi)`` left-intersects ``U`` nontrivially."""
    lo = Lifted(0, U.u1.succ())
    if n == 0:
        return V.u1 <= U.u1 and lo <= V.end <= U.end
    if n == -1:
        return V.h == 1 and lo <= Lifted(0, V.u2) <= U.end
    return False


def windings(U: Interval, V: Interval) -> list[int]:
    """Windings ``n`` in {0, -1} contributing a summand to Hom(U, V)."""
    return [n for n in (0, -1) if left_intersect_nonempty(V, U, n)]


def hom_dim_rep(U: Interval, V: Interval) -> int:
    if U == V and U.is_projective():
        return 2
    return len(windings(U, V))


def _hplus(U: Interval, V: Interval) -> bool:
    if U.h == 0:
        return V.h == 0 and V.u1 <= U.u1 and U.u1.succ() <= V.u2 <= U.u2
    return V.h == 1 and U.u2 <= V.u1 <= U.u1 and V.u2 <= U.u2


def _hminus(U: Interval, V: Interval) -> bool:
    if U.h == 0:
        return V.h == 0 and U.u1 <= V.u1 <= U.u2.pred() and V.u2 >= U.u2
    return V.h == 1 and V.u1 >= U.u1 and U.u2 <= V.u2 <= U.u1


def _pset(U: Interval, V: Interval) -> bool:
    if U.h == 0:
        first = Lifted(-V.h, V.u1) <= Lifted(0, U.u1) and V.u2 >= U.u2
        second = V.u1 <= U.u1 and V.end >= Lifted(0, U.u2)
        return first or second
    return V.h == 1 and V.u1 <= U.u1 and V.u2 >= U.u2


def in_hplus(U: Interval | None, V: Interval) -> bool:
    """Membership of V in the hammock H+(U); H+ of nothing is empty."""
    return U is not None and _hplus(U, V)


def in_hminus(U: Interval | None, V: Interval) -> bool:
    return U is not None and _hminus(U, V)


def in_pset(U: Interval | None, V: Interval) -> bool:
    return U is not None and _pset(U, V)


class Hammock(str, Enum):
    HPLUS = "Hplus"
    HMINUS = "Hminus"
    P = "P"
    NONE = "None"


def hammock_memberships(U: Interval, V: Interval) -> tuple[bool, bool, bool]:
    """``(V in H+(U), V in H-(Sigma^-1 U), V in P(U'))`` evaluated separately."""
    d = derived(U)
    return in_hplus(U, V), in_hminus(d.SigmaInvU, V), in_pset(d.Uprime, V)


def hammock_classify(U: Interval, V: Interval) -> Hammock:
    plus, minus, proj = hammock_memberships(U, V)
    if plus + minus + proj > 1:
        raise AssertionError(f"hammocks of {U} overlap at {V}")
    if plus:
        return Hammock.HPLUS
    if minus:
        return Hammock.HMINUS
    if proj:
        return Hammock.P
    return Hammock.NONE


def proj_factor_dim(U: Interval, V: Interval) -> int:
    """Dimension of the morphisms U -> V factoring through a projective."""
    if U == V and U.is_projective():
        return 2
    if hom_dim_rep(U, V) and hammock_classify(U, V) is Hammock.P:
        return 1
    return 0


@dataclass(frozen=True)
class HomReport:
    dim_rep: int
    dim_proj: int
    dim_stable: int
    hammock: str

    def as_dict(self) -> dict:
        return {"dim_rep": self.dim_rep, "dim_proj": self.dim_proj,
                "dim_stable": self.dim_stable, "hammock": self.hammock}


def hom_report(U: Interval, V: Interval) -> HomReport:
    check_interval(U)
    check_interval(V)
    dim = hom_dim_rep(U, V)
    dproj = proj_factor_dim(U, V)
    if dim == 2:
        # the projective endomorphism ring dies in the stable category
        return HomReport(2, 2, 0, "ProjSelf")
    return HomReport(dim, dproj, dim - dproj, hammock_classify(U, V).value)


# -- monomorphisms, epimorphisms, covers ---------------------------------------

def exists_mono(U: Interval, V: Interval) -> bool:
    if U.is_projective():
        raise DomainError("mono criterion needs a non-projective source")
    return any(
        left_intersect_nonempty(V, U, l) and U.end == Lifted(V.h + l, V.u2)
        for l in (0, -1)
    )


def exists_epi(U: Interval, V: Interval) -> bool:
    if V.is_projective():
        raise DomainError("epi criterion needs a non-projective target")
    return left_intersect_nonempty(V, U, 0) and U.u1 == V.u1


def projective_cover(U: Interval) -> Interval:
    check_interval(U)
    return projective(U.u1)


def injective_envelope(U: Interval) -> Interval:
    check_interval(U)
    return projective(U.u2.pred())


# -- exact sequences -------------------------------------------------------------

class MiddleTerms(NamedTuple):
    I: Interval
    J: Interval | None
    l: int


def middle_terms(U: Interval, V: Interval) -> MiddleTerms:
    """Middle terms of the exact sequence ``0 -> U -> I (+) J -> V -> 0``.

    Requires U non-projective, ``Hom(U-, V) = K`` and no projective factoring.
    """
    check_interval(U)
    check_interval(V)
    if U.is_projective():
        raise DomainError(f"{U} is projective")
    Um = derived(U).Uminus
    if hom_dim_rep(Um, V) != 1 or proj_factor_dim(Um, V) != 0:
        raise DomainError(f"Hom({Um}, {V}) is not a line free of projective factorisations")
    (l,) = windings(Um, V)
    I = Interval(V.u1, U.u2, U.h - l)
    jend = Lifted(V.h + l, V.u2)
    J = None if jend == Lifted(0, U.u1) else Interval(U.u1, V.u2, V.h + l)
    for X in (I, J):
        if X is not None and not is_in_I(X):
            raise AssertionError(f"middle term {X} escaped I")
    return MiddleTerms(I, J, l)


# -- composition series -----------------------------------------------------------

class CompositionSeries(NamedTuple):
    factors: list[Interval]
    finite: bool
    total_length: int | None


def composition_factors(U: Interval, k: int) -> CompositionSeries:
    """First ``k`` composition factors, starting from the socle."""
    check_interval(U)
    if k < 1:
        raise ValueError("k must be positive")
    pts = U.points()
    if pts is not None:
        top_down = list(reversed(pts))
        return CompositionSeries([simple(z) for z in top_down[:k]], True, len(pts))
    z = U.u2
    factors = []
    for _ in range(k):
        z = z.pred()
        factors.append(simple(z))
    return CompositionSeries(factors, False, None)


# -- Auslander-Reiten theory ---------------------------------------------------------

class AlmostSplitSequence(NamedTuple):
    left: Interval
    middle: list[Interval]
    right: Interval


def almost_split_sequence(U: Interval) -> AlmostSplitSequence:
    check_interval(U)
    if U.is_projective():
        raise DomainError(f"no almost split sequence starts at the projective {U}")
    d = derived(U)
    middle = [d.U1] if d.U2 is None else [d.U1, d.U2]
    return AlmostSplitSequence(U, middle, d.Uminus)


def tau(U: Interval) -> Interval:
    """AR translate: the left end of the almost split sequence ending at U."""
    check_interval(U)
    T = Interval(U.u1.succ(), U.u2.succ(), U.h)
    if T.is_projective():
        raise DomainError(f"{U} is projective")
    return T


def irreducible_rep(U: Interval, V: Interval) -> bool:
    d = derived(U)
    return V in [X for X in (d.U1, d.U2) if X is not None]


# -- compositions --------------------------------------------------------------------

_NONZERO = {(0, 0, 0), (0, -1, -1), (-1, 0, -1)}
_ZERO = {(-1, -1, 0), (-1, -1, -1), (0, -1, 0), (-1, 0, 0)}


def compose_nonzero(U: Interval, V: Interval, W: Interval) -> bool:
    """Whether ``g f != 0`` for nonzero ``f: U -> V`` and ``g: V -> W``."""
    if len({U, V, W}) < 3:
        raise DomainError("objects must be pairwise non-isomorphic")
    nuv = windings(U, V)
    nvw = windings(V, W)
    if len(nuv) != 1 or len(nvw) != 1:
        raise DomainError("consecutive Hom spaces must be one-dimensional")
    nuw = windings(U, W)
    if not nuw:
        return False
    if len(nuw) > 1:
        raise DomainError("two-dimensional composite Hom space")
    pattern = (nuv[0], nvw[0], nuw[0])
    if pattern in _NONZERO:
        return True
    if pattern in _ZERO:
        return False
    raise DomainError(f"winding pattern {pattern} is not covered")


# -- enumeration ------------------------------------------------------------------------

def intervals(gon: Gon, window: int, *, projective_ok: bool = True) -> list[Interval]:
    """All intervals of I with both endpoints within ``|index| <= window``."""
    pts = gon.points(window)
    out = []
    for u1 in pts:
        for u2 in pts:
            for h in (0, 1):
                U = Interval(u1, u2, h)
                if is_in_I(U) and (projective_ok or not U.is_projective()):
                    out.append(U)
    return out
