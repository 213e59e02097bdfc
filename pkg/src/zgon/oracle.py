"""Brute-force ground truth by exact linear algebra on finite sample chains.

Objects are realized as honest matrix representations: interval modules of
the real line on a lifted chain of sample angles, and strings of the circle on
one turn of that chain. Hom spaces, composites and exactness are then computed
by solving the naturality equations; nothing here consults the closed forms of
:mod:`zgon.rep`.
"""

from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass, field as dc_field
from fractions import Fraction
from functools import lru_cache
from math import floor

import numpy as np

from .core import TURN, DomainError, Embedding, Gon, Point
from .linalg import RATIONAL, Eliminator, Field, matmul, rank, zeros
from .rep import Interval, projective

SCAN = range(-3, 4)


class RangeError(ValueError):
    """An object does not fit inside the sample chain."""


# -- sample chains ---------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class SampleChain:
    """Strictly increasing sample angles over several turns of the circle.

    One turn holds every windowed point of Z_m, a midpoint in every gap and a
    sample in each region next to an accumulation point. Turn ``t`` is that
    list shifted by ``2t`` (units of pi).
    """

    gon: Gon
    window: int
    turns: tuple[int, int]
    circle: tuple[Fraction, ...] = dc_field(repr=False)
    angles: tuple[Fraction, ...] = dc_field(repr=False)
    position: dict = dc_field(repr=False)

    @property
    def embedding(self) -> Embedding:
        return self.gon.embedding

    def __len__(self) -> int:
        return len(self.angles)

    def has_point(self, z: Point) -> bool:
        return 1 <= z.copy <= self.gon.m and abs(z.index) <= self.window

    def lift(self, U: Interval, n: int = 0) -> tuple[Fraction, Fraction]:
        """``U + 2n pi`` as a pair of rational endpoints ``(lo, hi]``."""
        e = self.embedding
        return e(U.u1) + TURN * n, e(U.u2) + TURN * (U.h + n)

    def index(self, angle: Fraction) -> int:
        return self.position[angle]


@lru_cache(maxsize=64)
def sample_chain(gon: Gon, window: int, turns: tuple[int, int] = (-4, 6)) -> SampleChain:
    if window < 1:
        raise ValueError("window must be positive")
    emb = gon.embedding
    circle: list[Fraction] = []
    for p in range(1, gon.m + 1):
        pts = [emb(Point(p, n)) for n in range(-window, window + 1)]
        lo, hi = emb.accumulation(p), emb.accumulation(p + 1)
        circle.append((lo + pts[0]) / 2)
        for a, b in zip(pts, pts[1:]):
            circle.extend((a, (a + b) / 2))
        circle.extend((pts[-1], (pts[-1] + hi) / 2))
    angles = [x + TURN * t for t in range(*turns) for x in circle]
    assert all(a < b for a, b in zip(angles, angles[1:]))
    return SampleChain(
        gon, window, turns, tuple(circle), tuple(angles), {a: i for i, a in enumerate(angles)}
    )


def default_chain(gon: Gon, window: int) -> SampleChain:
    """A chain wide enough for intervals of the given window, with one extra point of margin."""
    return sample_chain(gon, window + 1)


# -- matrix representations ---------------------------------------------------------

@dataclass
class MatrixRep:
    """A representation of the chain: a space per sample, a matrix per step.

    ``maps[i]`` goes from sample ``i`` to sample ``i + 1``. Only the samples in
    ``[lo, hi]`` may carry nonzero spaces.
    """

    chain: SampleChain
    dims: dict[int, int]
    maps: dict[int, np.ndarray]
    lo: int
    hi: int

    def dim(self, i: int) -> int:
        return self.dims.get(i, 0)

    def step(self, i: int) -> np.ndarray:
        if i in self.maps:
            return self.maps[i]
        return zeros(self.dim(i + 1), self.dim(i))


def _check_range(chain: SampleChain, U: Interval, lo: Fraction, hi: Fraction) -> None:
    if not (chain.has_point(U.u1) and chain.has_point(U.u2)):
        raise RangeError(f"endpoints of {U} are outside the chain window {chain.window}")
    if not (chain.angles[0] < lo and hi < chain.angles[-1]):
        raise RangeError(f"lift of {U} leaves the chain")


def realize(U: Interval, shift_n: int, chain: SampleChain) -> MatrixRep:
    """The interval module of ``U + 2 shift_n pi`` on the real line."""
    a, b = chain.lift(U, shift_n)
    _check_range(chain, U, a, b)
    lo = bisect_right(chain.angles, a)
    hi = bisect_right(chain.angles, b) - 1
    one = np.ones((1, 1), dtype=object)
    return MatrixRep(
        chain,
        {i: 1 for i in range(lo, hi + 1)},
        {i: one for i in range(lo, hi)},
        lo,
        hi,
    )


def _hom_system(M: MatrixRep, N: MatrixRep, field: Field):
    if M.chain is not N.chain:
        raise DomainError("representations live on different chains")
    lo, hi = max(M.lo, N.lo), min(M.hi, N.hi)
    variables = [
        (i, r, c) for i in range(lo, hi + 1) for r in range(N.dim(i)) for c in range(M.dim(i))
    ]
    el = Eliminator(field)
    if lo > hi:
        return el, variables
    for i in range(lo - 1, hi + 1):
        A, B = M.step(i), N.step(i)
        # N(step) f(i) - f(i+1) M(step) = 0, entry (r, c)
        for r in range(N.dim(i + 1)):
            for c in range(M.dim(i)):
                row: dict = {}
                if lo <= i <= hi:
                    for k in range(N.dim(i)):
                        if B[r, k]:
                            row[(i, k, c)] = row.get((i, k, c), 0) + B[r, k]
                if lo <= i + 1 <= hi:
                    for k in range(M.dim(i + 1)):
                        if A[k, c]:
                            row[(i + 1, r, k)] = row.get((i + 1, r, k), 0) - A[k, c]
                if row:
                    el.add(row)
    return el, variables


def hom_dim_linear(M: MatrixRep, N: MatrixRep, field: Field = RATIONAL) -> int:
    """Dimension of the space of natural transformations ``M -> N``."""
    el, variables = _hom_system(M, N, field)
    return len(variables) - el.rank


def hom_basis_linear(M: MatrixRep, N: MatrixRep, field: Field = RATIONAL) -> list[dict]:
    el, variables = _hom_system(M, N, field)
    return el.nullspace(variables)


def hom_summands(U: Interval, V: Interval, chain: SampleChain, field: Field = RATIONAL) -> dict[int, int]:
    """``dim Hom_R(M_U, M_{V + 2n pi})`` for every scanned winding ``n``."""
    M = realize(U, 0, chain)
    return {n: hom_dim_linear(M, realize(V, n, chain), field) for n in SCAN}


def hom_dim_circle_oracle(U: Interval, V: Interval, chain: SampleChain,
                          field: Field = RATIONAL) -> int:
    """Circle Hom as the sum of line Homs over the lifts of V."""
    parts = hom_summands(U, V, chain, field)
    stray = {n: d for n, d in parts.items() if d and n not in (0, -1)}
    if stray:
        raise AssertionError(f"Hom({U}, {V}) has summands at windings {sorted(stray)}")
    return sum(parts.values())


# -- left intersections by the raw definition ----------------------------------------

HalfOpen = tuple[Fraction, Fraction]  # (lo, hi], empty when lo >= hi


def _nonempty(x: HalfOpen) -> bool:
    return x[0] < x[1]


def _meet(x: HalfOpen, y: HalfOpen) -> HalfOpen:
    return max(x[0], y[0]), min(x[1], y[1])


def _minus(x: HalfOpen, y: HalfOpen) -> list[HalfOpen]:
    pieces = [(x[0], min(x[1], y[0])), (max(x[0], y[1]), x[1])]
    return [p for p in pieces if _nonempty(p)]


def _precedes(xs: list[HalfOpen], ys: list[HalfOpen]) -> bool:
    """Every element of every piece of ``xs`` is below every element of ``ys``."""
    return all(x[1] <= y[0] for x in xs for y in ys)


def left_intersection(V: HalfOpen, U: HalfOpen) -> HalfOpen | None:
    """``V cap_L U`` for half-open real intervals; None when empty."""
    both = _meet(V, U)
    if not _nonempty(both):
        return None
    ok = _precedes(_minus(V, U), [U]) and _precedes([V], _minus(U, V))
    return both if ok else None


def left_intersect_oracle(V: Interval, U: Interval, n: int, embedding: Embedding) -> bool:
    e = embedding
    Vn = (e(V.u1) + TURN * n, e(V.u2) + TURN * (V.h + n))
    Ur = (e(U.u1), e(U.u2) + TURN * U.h)
    return left_intersection(Vn, Ur) is not None


# -- standard morphisms on the line ----------------------------------------------------

@dataclass
class LineMorphism:
    source: MatrixRep
    target: MatrixRep
    mats: dict[int, np.ndarray]

    def at(self, i: int) -> np.ndarray:
        if i in self.mats:
            return self.mats[i]
        return zeros(self.target.dim(i), self.source.dim(i))

    def is_zero(self) -> bool:
        return not any(np.any(m != 0) for m in self.mats.values())


def is_natural(f: LineMorphism, field: Field = RATIONAL) -> bool:
    M, N = f.source, f.target
    for i in range(min(M.lo, N.lo) - 1, max(M.hi, N.hi) + 1):
        diff = matmul(N.step(i), f.at(i), field) - matmul(f.at(i + 1), M.step(i), field)
        if field.modulus is not None:
            diff = diff % field.modulus
        if np.any(diff != 0):
            return False
    return True


def standard_morphism_matrix(U: Interval, V: Interval, n: int, chain: SampleChain) -> LineMorphism:
    """The 0/1 morphism ``M_U -> M_{V + 2n pi}`` supported on the left intersection."""
    M, N = realize(U, 0, chain), realize(V, n, chain)
    li = left_intersection(chain.lift(V, n), chain.lift(U, 0))
    mats = {}
    if li is not None:
        for i in range(bisect_right(chain.angles, li[0]), bisect_right(chain.angles, li[1])):
            mats[i] = np.ones((1, 1), dtype=object)
    f = LineMorphism(M, N, mats)
    if not is_natural(f):
        raise AssertionError(f"standard morphism {U} -> {V}{n:+d} is not natural")
    return f


def compose_line(g: LineMorphism, f: LineMorphism, field: Field = RATIONAL) -> LineMorphism:
    mats = {i: matmul(g.at(i), f.at(i), field) for i in set(f.mats) & set(g.mats)}
    return LineMorphism(f.source, g.target, mats)


def same_line_morphism(f: LineMorphism, g: LineMorphism) -> bool:
    keys = set(f.mats) | set(g.mats)
    return all(np.array_equal(f.at(i), g.at(i)) for i in keys)


# -- strings on the circle ----------------------------------------------------------------

@dataclass
class StringRep:
    """The string of an interval on one turn of the chain.

    ``basis[x]`` lists the lifts of circle sample ``x`` lying in the interval;
    ``maps[x]`` goes from sample ``x`` to the next one, wrapping after the last.
    """

    chain: SampleChain
    interval: tuple[Fraction, Fraction]
    basis: list[list[Fraction]]
    maps: list[np.ndarray]

    def dim(self, x: int) -> int:
        return len(self.basis[x])


@lru_cache(maxsize=50_000)
def realize_string(U: Interval, chain: SampleChain) -> StringRep:
    lo, hi = chain.lift(U, 0)
    _check_range(chain, U, lo, hi)
    circle = chain.circle
    basis = []
    for x in circle:
        j_lo, j_hi = floor((lo - x) / TURN) + 1, floor((hi - x) / TURN)
        basis.append([x + TURN * j for j in range(j_lo, j_hi + 1)])
    maps = []
    k = len(circle)
    for x in range(k):
        y = (x + 1) % k
        gap = (circle[y] - circle[x]) % TURN
        where = {b: i for i, b in enumerate(basis[y])}
        mat = zeros(len(basis[y]), len(basis[x]))
        for i, b in enumerate(basis[x]):
            if b + gap in where:
                mat[where[b + gap], i] = 1
        maps.append(mat)
    return StringRep(chain, (lo, hi), basis, maps)


@dataclass
class StringMorphism:
    source: StringRep
    target: StringRep
    mats: list[np.ndarray]

    def is_zero(self) -> bool:
        return not any(np.any(m != 0) for m in self.mats)

    def vector(self) -> list:
        return [c for m in self.mats for c in m.flat]

    def scaled(self, s) -> StringMorphism:
        return StringMorphism(self.source, self.target, [m * s for m in self.mats])


def string_is_natural(f: StringMorphism, field: Field = RATIONAL) -> bool:
    M, N = f.source, f.target
    k = len(M.basis)
    for x in range(k):
        y = (x + 1) % k
        lhs = matmul(N.maps[x], f.mats[x], field)
        rhs = matmul(f.mats[y], M.maps[x], field)
        diff = lhs - rhs
        if field.modulus is not None:
            diff = diff % field.modulus
        if np.any(diff != 0):
            return False
    return True


def bar(f: LineMorphism, U: Interval, V: Interval, n: int) -> StringMorphism:
    """Push a line morphism ``M_U -> M_{V + 2n pi}`` down to the strings of U and V."""
    chain = f.source.chain
    S, T = realize_string(U, chain), realize_string(V, chain)
    shift = TURN * n
    mats = []
    for x in range(len(chain.circle)):
        mat = zeros(T.dim(x), S.dim(x))
        for i, b in enumerate(S.basis[x]):
            s = f.at(chain.index(b))
            if s.size and s[0, 0]:
                mat[T.basis[x].index(b - shift), i] = s[0, 0]
        mats.append(mat)
    return StringMorphism(S, T, mats)


def string_standard(U: Interval, V: Interval, n: int, chain: SampleChain) -> StringMorphism:
    return bar(standard_morphism_matrix(U, V, n, chain), U, V, n)


def compose_string(g: StringMorphism, f: StringMorphism, field: Field = RATIONAL) -> StringMorphism:
    return StringMorphism(f.source, g.target,
                          [matmul(b, a, field) for a, b in zip(f.mats, g.mats)])


def hom_dim_circle_direct(U: Interval, V: Interval, chain: SampleChain, field: Field = RATIONAL) -> int:
    """Natural transformations between the strings, solved around the whole circle."""
    M, N = realize_string(U, chain), realize_string(V, chain)
    k = len(chain.circle)
    variables = [(x, r, c) for x in range(k) for r in range(N.dim(x)) for c in range(M.dim(x))]
    el = Eliminator(field)
    for x in range(k):
        y = (x + 1) % k
        A, B = M.maps[x], N.maps[x]
        for r in range(N.dim(y)):
            for c in range(M.dim(x)):
                row: dict = {}
                for j in range(N.dim(x)):
                    if B[r, j]:
                        row[(x, j, c)] = row.get((x, j, c), 0) + B[r, j]
                for j in range(M.dim(y)):
                    if A[j, c]:
                        row[(y, r, j)] = row.get((y, r, j), 0) - A[j, c]
                if row:
                    el.add(row)
    return len(variables) - el.rank


@lru_cache(maxsize=200_000)
def hom_basis_circle(U: Interval, V: Interval, chain: SampleChain,
                     field: Field = RATIONAL) -> tuple[StringMorphism, ...]:
    """A basis of Hom(U, V) from line Homs of all lifts, pushed to the circle.

    Lifts whose lifted support misses U entirely are skipped; they carry no
    natural transformation at all.
    """
    M = realize(U, 0, chain)
    out = []
    lo, hi = chain.lift(U, 0)
    for n in SCAN:
        a, b = chain.lift(V, n)
        if b <= lo or hi <= a:
            continue
        N = realize(V, n, chain)
        for vec in hom_basis_linear(M, N, field):
            mats = {}
            for (i, r, c), val in vec.items():
                mats.setdefault(i, zeros(N.dim(i), M.dim(i)))[r, c] = val
            out.append(bar(LineMorphism(M, N, mats), U, V, n))
    return tuple(out)


# -- projective factoring ---------------------------------------------------------------

def proj_factor_dim_oracle(U: Interval, V: Interval, chain: SampleChain,
                           field: Field = RATIONAL) -> int:
    """Dimension of the span of all composites ``U -> P_z -> V`` over windowed ``z``."""
    need = U.u2.pred()
    if not (chain.has_point(need) and chain.has_point(need.succ())):
        raise RangeError("window too small for the projective witnesses")
    return rank(_proj_vectors(U, V, chain, field), field)


def _proj_vectors(U: Interval, V: Interval, chain: SampleChain, field: Field) -> list:
    vectors = []
    emb = chain.embedding
    for z in chain.gon.points(chain.window - 1):
        P = projective(z)
        # a line Hom is nonzero only on a nonempty left intersection
        if not any(left_intersect_oracle(P, U, n, emb) for n in SCAN):
            continue
        if not any(left_intersect_oracle(V, P, n, emb) for n in SCAN):
            continue
        into = hom_basis_circle(U, P, chain, field)
        if not into:
            continue
        out_of = hom_basis_circle(P, V, chain, field)
        for f in into:
            for g in out_of:
                vectors.append(compose_string(g, f, field).vector())
    return vectors


def factors_through_projective(h: StringMorphism, U: Interval, V: Interval, chain: SampleChain,
                               field: Field = RATIONAL) -> bool:
    """Whether the string morphism ``h: U -> V`` lies in the span of projective composites."""
    vectors = _proj_vectors(U, V, chain, field)
    return rank(vectors + [h.vector()], field) == rank(vectors, field)


def composite(U: Interval, V: Interval, W: Interval, chain: SampleChain,
              field: Field = RATIONAL) -> StringMorphism:
    """Composite of the standard morphisms ``U -> V -> W``."""
    return compose_string(_connecting(V, W, chain), _connecting(U, V, chain), field)


def composite_is_zero(U: Interval, V: Interval, W: Interval, chain: SampleChain,
                      field: Field = RATIONAL) -> bool:
    h = composite(U, V, W, chain, field)
    if field.modulus is not None:
        return all(c % field.modulus == 0 for c in h.vector())
    return h.is_zero()


def stable_composite_is_zero(U: Interval, V: Interval, W: Interval, chain: SampleChain,
                             field: Field = RATIONAL) -> bool:
    """Vanishing in the stable category: zero, or factoring through a projective."""
    h = composite(U, V, W, chain, field)
    return h.is_zero() or factors_through_projective(h, U, W, chain, field)


# -- exactness -------------------------------------------------------------------------------

@lru_cache(maxsize=100_000)
def _connecting(X: Interval, Y: Interval, chain: SampleChain) -> StringMorphism:
    """The standard string morphism ``X -> Y``; zero when no lift left-intersects."""
    hits = [n for n in SCAN if left_intersect_oracle(Y, X, n, chain.embedding)]
    if len(hits) > 1:
        raise DomainError(f"Hom({X}, {Y}) is not a line")
    if not hits:
        S, T = realize_string(X, chain), realize_string(Y, chain)
        return StringMorphism(S, T, [zeros(T.dim(x), S.dim(x)) for x in range(len(chain.circle))])
    f = string_standard(X, Y, hits[0], chain)
    if not string_is_natural(f):
        raise AssertionError(f"standard string morphism {X} -> {Y} is not natural")
    return f


@dataclass
class ExactnessReport:
    exact: bool
    dimension_identity: bool
    failures: list[str]


def exactness_report(U: Interval, middles: list[Interval], V: Interval, chain: SampleChain,
                     field: Field = RATIONAL) -> ExactnessReport:
    """Check ``0 -> U -> (+) middles -> V -> 0`` sample by sample.

    Left map: the standard morphisms into each middle term. Right map: the
    standard morphisms out of them, with the first one negated when there are two.
    """
    left = [_connecting(U, X, chain) for X in middles]
    right = [_connecting(X, V, chain) for X in middles]
    if len(right) == 2:
        right[0] = right[0].scaled(-1)
    failures = []
    SU, SV = realize_string(U, chain), realize_string(V, chain)
    mids = [realize_string(X, chain) for X in middles]
    dim_ok = True
    for x in range(len(chain.circle)):
        du, dv = SU.dim(x), SV.dim(x)
        dm = sum(S.dim(x) for S in mids)
        if du + dv != dm:
            dim_ok = False
            failures.append(f"dimension identity fails at sample {x}: {du} + {dv} != {dm}")
            continue
        if dm == 0:
            continue
        A = np.vstack([f.mats[x] for f in left]) if left else zeros(0, du)
        B = np.hstack([g.mats[x] for g in right]) if right else zeros(dv, 0)
        if field.modulus is not None:
            A, B = A % field.modulus, B % field.modulus
        ra, rb = rank(A, field), rank(B, field)
        if ra != du:
            failures.append(f"left map not injective at sample {x}")
        if rb != dv:
            failures.append(f"right map not surjective at sample {x}")
        if np.any(matmul(B, A, field) != 0):
            failures.append(f"composite not zero at sample {x}")
        if ra + rb != dm:
            failures.append(f"image differs from kernel at sample {x}")
    return ExactnessReport(not failures, dim_ok, failures)


def exactness_check(U: Interval, middles: list[Interval], V: Interval, chain: SampleChain,
                    field: Field = RATIONAL) -> bool:
    return exactness_report(U, middles, V, chain, field).exact
