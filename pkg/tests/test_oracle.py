from fractions import Fraction

import pytest

from zgon.core import DomainError, Gon
from zgon.linalg import PRIME, RATIONAL, Eliminator, Field, rank
from zgon.oracle import (
    RangeError,
    compose_line,
    default_chain,
    exactness_check,
    exactness_report,
    hom_basis_linear,
    hom_dim_circle_direct,
    hom_dim_circle_oracle,
    hom_dim_linear,
    hom_summands,
    left_intersect_oracle,
    left_intersection,
    proj_factor_dim_oracle,
    realize,
    realize_string,
    same_line_morphism,
    sample_chain,
    standard_morphism_matrix,
)
from zgon.rep import hom_dim_rep, intervals, left_intersect_nonempty

from conftest import I, P

GF = Field(PRIME)


@pytest.fixture(scope="module")
def chain():
    return default_chain(Gon(1), 4)


def test_chain_invariants(chain):
    a = chain.angles
    assert all(x < y for x, y in zip(a, a[1:]))
    emb = chain.embedding
    for z in Gon(1).points(chain.window):
        assert emb(z) in chain.position
    # no two consecutive samples bracket more than one windowed point;
    # next to an accumulation point infinitely many unwindowed points remain
    pts = sorted(emb(z) + 2 * t for z in Gon(1).points(chain.window) for t in range(*chain.turns))
    for x, y in zip(a, a[1:]):
        assert sum(x < p <= y for p in pts) <= 1


def test_realize_simple(chain):
    M = realize(I(0, 1, 0), 0, chain)
    e = chain.embedding
    inside = [i for i, x in enumerate(chain.angles) if e(P(0)) < x <= e(P(1))]
    assert sorted(M.dims) == inside


def test_realize_projective_spans_a_turn(chain):
    M = realize(I(0, 1, 1), 0, chain)
    assert chain.angles[M.hi] - chain.angles[M.lo] > 2


def test_realize_is_periodic(chain):
    M0, M1 = realize(I(0, 2, 0), 0, chain), realize(I(0, 2, 0), 1, chain)
    k = len(chain.circle)
    assert sorted(i + k for i in M0.dims) == sorted(M1.dims)


def test_realize_out_of_range(chain):
    with pytest.raises(RangeError):
        realize(I(0, 9, 0), 0, chain)


def test_line_homs(chain):
    M = realize(I(0, 2, 0), 0, chain)
    assert hom_dim_linear(M, M) == 1
    assert hom_dim_linear(M, realize(I(-1, 1, 0), 0, chain)) == 1
    assert hom_dim_linear(realize(I(0, 1, 0), 0, chain), realize(I(2, 3, 0), 0, chain)) == 0


def test_chain_mismatch(chain):
    other = default_chain(Gon(2), 4)
    with pytest.raises(DomainError):
        hom_dim_linear(realize(I(0, 1, 0), 0, chain), realize(I(0, 1, 0), 0, other))


def test_circle_homs(chain):
    assert hom_dim_circle_oracle(I(0, 1, 1), I(0, 1, 1), chain) == 2
    assert hom_dim_circle_oracle(I(0, 2, 0), I(-1, 1, 0), chain) == 1
    assert hom_summands(I(0, 3, 0), I(5, 2, 1), sample_chain(Gon(1), 6)) == \
        {-3: 0, -2: 0, -1: 1, 0: 0, 1: 0, 2: 0, 3: 0}


def test_direct_circle_solve_agrees(chain):
    pool = intervals(Gon(1), 2)
    for U in pool:
        for V in pool:
            assert hom_dim_circle_direct(U, V, chain) == hom_dim_rep(U, V)


def test_raw_left_intersection():
    F = Fraction
    assert left_intersection((F(-1), F(1)), (F(0), F(2))) == (0, 1)
    assert left_intersection((F(0), F(3)), (F(1), F(2))) is None
    assert left_intersection((F(0), F(1)), (F(2), F(3))) is None


def test_left_intersection_agrees_m2():
    g = Gon(2)
    pool = intervals(g, 2)
    for U in pool:
        for V in pool:
            for n in range(-3, 4):
                assert left_intersect_oracle(V, U, n, g.embedding) == left_intersect_nonempty(V, U, n)


def test_standard_morphisms(chain):
    zero = standard_morphism_matrix(I(0, 1, 0), I(2, 3, 0), 0, chain)
    assert zero.is_zero()
    ident = standard_morphism_matrix(I(0, 2, 0), I(0, 2, 0), 0, chain)
    M = ident.source
    assert set(ident.mats) == set(M.dims)
    f = standard_morphism_matrix(I(0, 3, 0), I(-1, 2, 0), 0, chain)
    g = standard_morphism_matrix(I(-1, 2, 0), I(-2, 1, 0), 0, chain)
    h = standard_morphism_matrix(I(0, 3, 0), I(-2, 1, 0), 0, chain)
    assert same_line_morphism(compose_line(g, f), h)
    basis = hom_basis_linear(f.source, f.target)
    assert len(basis) == 1 and set(v for v in basis[0].values()) == {1}


def test_projective_factoring_oracle(chain):
    assert proj_factor_dim_oracle(I(0, 3, 0), I(2, 1, 1), chain) == 1
    assert proj_factor_dim_oracle(I(0, 3, 0), I(5, 2, 1), sample_chain(Gon(1), 6)) == 0
    assert proj_factor_dim_oracle(I(0, 1, 1), I(0, 1, 1), chain) == 2
    assert proj_factor_dim_oracle(I(0, 1, 1), I(-1, 1, 0), chain) == hom_dim_rep(I(0, 1, 1), I(-1, 1, 0))


def test_exactness(chain):
    U, V = I(0, 2, 0), I(-1, 1, 0)
    assert exactness_check(U, [I(-1, 2, 0), I(0, 1, 0)], V, chain)
    rep = exactness_report(U, [I(-1, 2, 0)], V, chain)
    assert not rep.exact and not rep.dimension_identity
    assert not exactness_check(U, [U], U, chain)


def test_string_dims_bounded(chain):
    for U in intervals(Gon(1), 3):
        S = realize_string(U, chain)
        assert all(S.dim(x) <= 2 for x in range(len(chain.circle)))


def test_field_independence(chain):
    pool = intervals(Gon(1), 2)
    for U in pool[::3]:
        for V in pool[::2]:
            assert hom_dim_circle_oracle(U, V, chain, GF) == hom_dim_circle_oracle(U, V, chain)
            assert proj_factor_dim_oracle(U, V, chain, GF) == proj_factor_dim_oracle(U, V, chain)


def test_eliminator_nullspace():
    el = Eliminator(RATIONAL)
    el.add({"a": 1, "b": -1})
    el.add({"b": 2, "c": -2})
    assert el.rank == 2
    (vec,) = el.nullspace(["a", "b", "c"])
    assert vec["a"] == vec["b"] == vec["c"] != 0
    assert rank([[2, 4], [1, 2]]) == 1
    assert rank([[1, 1], [1, -1]], Field(2)) == 1
