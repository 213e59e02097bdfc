"""Verification suites: closed forms against each other and against the oracle.

Each suite returns a :class:`SuiteResult` holding the number of checks, every
counterexample verbatim, and a digest of all verdicts in enumeration order.
Two runs that agree check by check produce the same digest, which is how
embedding independence is tested.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass, field as dc_field
from math import comb
from typing import Callable

from . import oracle as orc
from .core import DomainError, Embedding, Gon, Point
from .linalg import RATIONAL, Field
from .rep import (
    Interval,
    almost_split_sequence,
    composition_factors,
    compose_nonzero,
    hammock_memberships,
    hom_dim_rep,
    intervals,
    left_intersect_nonempty,
    middle_terms,
    proj_factor_dim,
    projective,
    simple,
)
from .stable import (
    Arc,
    almost_split_triangle,
    ar_quiver,
    arc,
    arcs,
    component_count,
    compose_nonzero_stable,
    hom_dim,
    hom_dim_closed_form,
    is_admissible,
    is_admissible_closed_form,
    phi,
    phi_inv,
    shift,
    spherical_profile,
    stabilized_sequence,
    tau,
    thick_closure,
)


def _txt(x) -> str:
    """Text form using the objects' own notation (dataclass reprs are slow and noisy)."""
    if isinstance(x, (tuple, list)):
        return "(" + ", ".join(map(_txt, x)) + ")"
    if isinstance(x, (set, frozenset)):
        return "{" + ", ".join(sorted(map(_txt, x))) + "}"
    return str(x)


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[dict] = dc_field(default_factory=list)
    _hash: object = dc_field(default_factory=hashlib.sha256, repr=False)

    @property
    def passed(self) -> bool:
        return not self.failures and self.checked > 0

    @property
    def digest(self) -> str:
        return self._hash.hexdigest()

    def record(self, pair, closed_form, oracle, ok: bool | None = None) -> bool:
        """Log one comparison; ``ok`` defaults to ``closed_form == oracle``."""
        verdict = closed_form == oracle if ok is None else ok
        self.checked += 1
        self._hash.update(f"{_txt(pair)}|{_txt(closed_form)}|{_txt(oracle)}|{verdict}\n".encode())
        if not verdict:
            self.failures.append(
                {"pair": _txt(pair), "closed_form": _txt(closed_form), "oracle": _txt(oracle),
                 "verdict": "fail"}
            )
        return verdict

    def as_dict(self) -> dict:
        return {"suite": self.name, "passed": self.passed, "checked": self.checked,
                "digest": self.digest, "counterexamples": self.failures}


@dataclass(frozen=True)
class VerifyConfig:
    m: int = 1
    window: int = 4
    field: Field = RATIONAL
    seed: int = 0
    samples: int = 2000          # oracle Hom pairs
    pf_samples: int = 1000       # oracle projective-factoring pairs
    seq_samples: int = 300       # middle-term sequences when not exhaustive
    triple_samples: int = 300
    exhaustive_sequences: bool = False
    c: int = 1                   # squashing constant of the embedding

    def __post_init__(self):
        if self.window < 1:
            raise ValueError("window must be at least 1")
        if self.m < 1:
            raise ValueError("m must be at least 1")

    @property
    def gon(self) -> Gon:
        return Gon(self.m, Embedding(self.m, self.c))

    def rng(self, salt: str) -> random.Random:
        return random.Random(f"{self.seed}:{salt}")


def _pairs(rng: random.Random, pool: list, k: int):
    return [(rng.choice(pool), rng.choice(pool)) for _ in range(k)]


# -- interval-level suites ----------------------------------------------------------------

def suite_hom(cfg: VerifyConfig) -> SuiteResult:
    """Closed-form Hom on every pair, then the line-reduction oracle on sampled pairs."""
    res = SuiteResult("hom_agreement")
    gon = cfg.gon
    pool = intervals(gon, cfg.window)
    for U in pool:
        for V in pool:
            d = hom_dim_rep(U, V)
            res.record((U, V), d, d, ok=d in (0, 1) or (d == 2 and U == V and U.is_projective()))
    chain = orc.default_chain(gon, cfg.window)
    for U, V in _pairs(cfg.rng("hom"), pool, cfg.samples):
        res.record((U, V), hom_dim_rep(U, V), orc.hom_dim_circle_oracle(U, V, chain, cfg.field))
    return res


def suite_left_intersection(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("left_intersection")
    gon = cfg.gon
    pool = intervals(gon, cfg.window)
    for U, V in _pairs(cfg.rng("li"), pool, cfg.samples):
        for n in orc.SCAN:
            res.record((V, U, n), left_intersect_nonempty(V, U, n),
                       orc.left_intersect_oracle(V, U, n, gon.embedding))
    return res


def suite_hammocks(cfg: VerifyConfig) -> SuiteResult:
    """Nonzero Homs out of U are exactly the disjoint union of the three hammocks."""
    res = SuiteResult("hammock_partition")
    pool = intervals(cfg.gon, cfg.window)
    for U in pool:
        for V in pool:
            hp, hm, p = hammock_memberships(U, V)
            nonzero = hom_dim_rep(U, V) >= 1
            res.record((U, V), (hp, hm, p), nonzero, ok=(hp + hm + p) == int(nonzero))
    return res


def suite_proj_factor(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("projective_factoring")
    gon = cfg.gon
    chain = orc.default_chain(gon, cfg.window)
    pool = intervals(gon, cfg.window)
    for U, V in _pairs(cfg.rng("pf"), pool, cfg.pf_samples):
        res.record((U, V), proj_factor_dim(U, V), orc.proj_factor_dim_oracle(U, V, chain, cfg.field))
    return res


def suite_exactness(cfg: VerifyConfig) -> SuiteResult:
    """Every almost split sequence, plus middle-term sequences (all, or seeded)."""
    res = SuiteResult("exactness")
    gon = cfg.gon
    chain = orc.default_chain(gon, cfg.window)
    pool = intervals(gon, cfg.window)
    for U in pool:
        if U.is_projective():
            continue
        s = almost_split_sequence(U)
        rep = orc.exactness_report(s.left, s.middle, s.right, chain, cfg.field)
        res.record(("AR", U), True, rep.exact, ok=rep.exact)
    if cfg.exhaustive_sequences:
        candidates = ((U, V) for U in pool if not U.is_projective() for V in pool)
    else:
        rng = cfg.rng("seq")
        candidates = (tuple(rng.choice(pool) for _ in range(2)) for _ in range(400 * cfg.seq_samples))
    found = 0
    for U, V in candidates:
        if not cfg.exhaustive_sequences and found >= cfg.seq_samples:
            break
        if U.is_projective():
            continue
        try:
            mt = middle_terms(U, V)
        except DomainError:
            continue
        found += 1
        mids = [mt.I] + ([mt.J] if mt.J is not None else [])
        rep = orc.exactness_report(U, mids, V, chain, cfg.field)
        res.record(("SES", U, V), True, rep.exact, ok=rep.exact)
    return res


def suite_composition(cfg: VerifyConfig) -> SuiteResult:
    """Composite of standard morphisms vanishes exactly when the winding rule says so."""
    res = SuiteResult("composition")
    gon = cfg.gon
    chain = orc.default_chain(gon, cfg.window)
    pool = intervals(gon, cfg.window)
    rng = cfg.rng("comp")
    attempts = 0
    while res.checked < cfg.triple_samples and attempts < 400 * cfg.triple_samples:
        attempts += 1
        U, V, W = (rng.choice(pool) for _ in range(3))
        try:
            expect = compose_nonzero(U, V, W)
        except DomainError:
            continue
        res.record((U, V, W), expect, not orc.composite_is_zero(U, V, W, chain, cfg.field))
    return res


def suite_uniserial(cfg: VerifyConfig, count: int = 200) -> SuiteResult:
    res = SuiteResult("uniseriality")
    gon = cfg.gon
    rng = cfg.rng("uni")
    for _ in range(count):
        p = rng.randint(1, gon.m)
        a = rng.randint(-cfg.window, cfg.window)
        U = Interval(Point(p, a), Point(p, a + rng.randint(1, 2 * cfg.window + 1)), 0)
        series = composition_factors(U, 10 ** 6)
        length = U.u2.index - U.u1.index
        socle_first = [simple(U.u2.shifted(-1 - i)) for i in range(length)]
        res.record(U, (series.finite, series.total_length, series.factors),
                   (True, length, socle_first))
    for z in gon.points(cfg.window):
        got = composition_factors(projective(z), 10).factors
        res.record(projective(z), got, [simple(z.shifted(-i)) for i in range(10)])
    return res


# -- arc-level suites -----------------------------------------------------------------------

def suite_serre(cfg: VerifyConfig) -> SuiteResult:
    """Hom(a, b) = Hom(b, Sigma^-1 a), and the dual witness composes nonzero."""
    res = SuiteResult("serre_duality")
    pool = arcs(cfg.gon, cfg.window)
    for a in pool:
        sa = shift(a, -1)
        for b in pool:
            d, e = hom_dim(a, b), hom_dim(b, sa)
            ok = d == e and (d == 0 or compose_nonzero_stable(a, b, sa))
            res.record((a, b), d, e, ok=ok)
    return res


def suite_serre_oracle(cfg: VerifyConfig) -> SuiteResult:
    """Seeded check that the dual witness composite survives stabilisation."""
    res = SuiteResult("serre_witness_oracle")
    gon = cfg.gon
    chain = orc.default_chain(gon, cfg.window + 1)
    pool = arcs(gon, cfg.window)
    nonzero = [(a, b) for a in pool for b in pool if hom_dim(a, b)]
    rng = cfg.rng("serre")
    for a, b in (rng.choice(nonzero) for _ in range(min(cfg.triple_samples, len(nonzero)))):
        c = shift(a, -1)
        if a == b or b == c:
            continue
        U, V, W = phi_inv(a), phi_inv(b), phi_inv(c)
        res.record((a, b, c), True, not orc.stable_composite_is_zero(U, V, W, chain, cfg.field))
    return res


def suite_stable_composition(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("stable_composition")
    gon = cfg.gon
    chain = orc.default_chain(gon, cfg.window + 1)
    pool = arcs(gon, cfg.window)
    rng = cfg.rng("scomp")
    out_of = {a: [b for b in pool if hom_dim(a, b) and b != a] for a in pool}
    starts = [a for a in pool if out_of[a]]
    for _ in range(cfg.triple_samples):
        a = rng.choice(starts)
        b = rng.choice(out_of[a])
        cs = [c for c in out_of[b] if c != a]
        if not cs:
            continue
        c = rng.choice(cs)
        U, V, W = phi_inv(a), phi_inv(b), phi_inv(c)
        res.record((a, b, c), compose_nonzero_stable(a, b, c),
                   not orc.stable_composite_is_zero(U, V, W, chain, cfg.field))
    return res


def suite_functors(cfg: VerifyConfig) -> SuiteResult:
    """tau = Sigma^-2, phi round trips, stabilization and AR consistency."""
    res = SuiteResult("functor_identities")
    gon = cfg.gon
    pool = arcs(gon, cfg.window)
    for a in pool:
        res.record(("tau", a), tau(a), shift(a, -2))
        res.record(("phi.phi_inv", a), phi(phi_inv(a)), a)
        res.record(("closed_form", a), is_admissible(a), is_admissible_closed_form(a))
    pts = gon.points(cfg.window)
    for x in pts:
        for y in pts:
            a = Arc(x, y)
            res.record(("admissible", a), is_admissible(a), is_admissible_closed_form(a))
    ivs = intervals(gon, cfg.window, projective_ok=False)
    for U in ivs:
        res.record(("phi_inv.phi", U), phi_inv(phi(U)), U)
        t = almost_split_triangle(phi(Interval(U.u1.pred(), U.u2.pred(), U.h)))
        s = stabilized_sequence(U)
        res.record(("AR", U), (s.left, s.middle, s.right),
                   (t.left, sorted(t.middle), t.right))
    for U in ivs:
        a = phi(U)
        for V in ivs:
            b = phi(V)
            res.record((a, b), hom_dim(a, b), hom_dim_rep(U, V) - proj_factor_dim(U, V))
            res.record(("arc closed form", a, b), hom_dim(a, b), hom_dim_closed_form(a, b))
    return res


def suite_census(cfg: VerifyConfig) -> SuiteResult:
    res = SuiteResult("component_census")
    expected = 2 * cfg.m + 2 * comb(cfg.m, 2)
    res.record(("m", cfg.m, "window", cfg.window), expected, component_count(ar_quiver(cfg.gon, cfg.window)))
    return res


def suite_spherical(cfg: VerifyConfig) -> SuiteResult:
    """Only meaningful for m = 1: the spherical profile and thick generation."""
    res = SuiteResult("spherical_generation")
    a = arc(1, 0)
    res.record(("profile", a), [1 if n in (-1, 0) else 0 for n in range(-6, 7)],
               spherical_profile(a, -6, 6))
    res.record(("thick", a), set(arcs(cfg.gon, cfg.window)), thick_closure(a, cfg.window, cfg.gon))
    return res


SUITES: dict[str, Callable[[VerifyConfig], SuiteResult]] = {
    "hom_agreement": suite_hom,
    "left_intersection": suite_left_intersection,
    "hammock_partition": suite_hammocks,
    "projective_factoring": suite_proj_factor,
    "exactness": suite_exactness,
    "composition": suite_composition,
    "uniseriality": suite_uniserial,
    "serre_duality": suite_serre,
    "serre_witness_oracle": suite_serre_oracle,
    "stable_composition": suite_stable_composition,
    "functor_identities": suite_functors,
    "component_census": suite_census,
    "spherical_generation": suite_spherical,
}


def run(cfg: VerifyConfig, names: list[str] | None = None) -> list[SuiteResult]:
    names = names or [n for n in SUITES if n != "spherical_generation" or cfg.m == 1]
    return [SUITES[n](cfg) for n in names]
