import pytest

from zgon.core import DomainError, Gon
from zgon.rep import (
    Hammock,
    almost_split_sequence,
    composition_factors,
    compose_nonzero,
    derived,
    exists_epi,
    exists_mono,
    hammock_classify,
    hom_dim_rep,
    hom_report,
    injective_envelope,
    intervals,
    irreducible_rep,
    is_in_I,
    left_intersect_nonempty,
    middle_terms,
    proj_factor_dim,
    projective_cover,
    sigma,
    sigma_inv,
    simple,
    tau,
)

from conftest import I, P


def test_membership():
    assert is_in_I(I(0, 1, 0))
    assert is_in_I(I(0, 1, 1))
    assert not is_in_I(I(0, 2, 1))
    assert not is_in_I(I(0, 0, 0))


def test_derived_general():
    d = derived(I(0, 2, 0))
    assert d.U1 == I(-1, 2, 0)
    assert d.U2 == I(0, 1, 0)
    assert d.Uminus == I(-1, 1, 0)
    assert d.SigmaU == I(1, 0, 1)
    assert d.SigmaInvU == I(2, 1, 1)
    assert d.Uprime == I(1, 1, 1)


def test_derived_projective_and_simple():
    d = derived(I(0, 1, 1))
    assert d.U1 is None and d.SigmaU is None and d.SigmaInvU is None
    assert d.Uprime == I(0, 1, 0)
    assert derived(I(0, 1, 0)).U2 is None


def test_sigma_round_trip():
    for U in intervals(Gon(2), 2, projective_ok=False):
        assert sigma_inv(sigma(U)) == U


def test_left_intersection_cases():
    assert left_intersect_nonempty(I(-1, 1, 0), I(0, 2, 0), 0)
    assert left_intersect_nonempty(I(5, 2, 1), I(0, 3, 0), -1)
    assert not left_intersect_nonempty(I(0, 2, 0), I(0, 2, 0), -7)


def test_hom_dims():
    assert hom_dim_rep(I(0, 1, 1), I(0, 1, 1)) == 2
    assert hom_dim_rep(I(0, 2, 0), I(-1, 1, 0)) == 1
    assert hom_dim_rep(I(0, 1, 0), I(2, 3, 0)) == 0


def test_hammocks():
    assert hammock_classify(I(0, 3, 0), I(5, 2, 1)) is Hammock.HMINUS
    assert hammock_classify(I(0, 3, 0), I(2, 1, 1)) is Hammock.P
    assert hammock_classify(I(0, 2, 0), I(-1, 1, 0)) is Hammock.HPLUS
    assert hammock_classify(I(0, 1, 0), I(2, 3, 0)) is Hammock.NONE


def test_projective_factoring():
    assert proj_factor_dim(I(0, 3, 0), I(2, 1, 1)) == 1
    assert proj_factor_dim(I(0, 3, 0), I(5, 2, 1)) == 0
    assert proj_factor_dim(I(0, 1, 1), I(0, 1, 1)) == 2


def test_factoring_is_everything_at_projectives():
    pool = intervals(Gon(1), 3)
    for U in pool:
        for V in pool:
            if U.is_projective() or V.is_projective():
                assert proj_factor_dim(U, V) == hom_dim_rep(U, V)


def test_hom_report():
    r = hom_report(I(0, 1, 1), I(0, 1, 1))
    assert (r.dim_rep, r.dim_proj, r.dim_stable, r.hammock) == (2, 2, 0, "ProjSelf")
    r = hom_report(I(0, 2, 0), I(-1, 1, 0))
    assert r.as_dict() == {"dim_rep": 1, "dim_proj": 0, "dim_stable": 1, "hammock": "Hplus"}


def test_mono_epi():
    assert exists_mono(I(1, 2, 0), I(0, 2, 0))
    assert exists_epi(I(0, 2, 0), I(0, 1, 0))
    assert not exists_mono(I(0, 1, 0), I(2, 3, 0))
    with pytest.raises(DomainError):
        exists_mono(I(0, 1, 1), I(0, 2, 0))
    with pytest.raises(DomainError):
        exists_epi(I(0, 2, 0), I(0, 1, 1))


def test_irreducible_maps_are_mono_or_epi():
    for U in intervals(Gon(2), 2, projective_ok=False):
        d = derived(U)
        assert exists_mono(U, d.U1)
        if d.U2 is not None and not d.U2.is_projective():
            assert exists_epi(U, d.U2)


def test_covers():
    assert projective_cover(I(0, 3, 0)) == I(0, 1, 1)
    assert injective_envelope(I(0, 3, 0)) == I(2, 3, 1)
    assert projective_cover(I(0, 1, 1)) == I(0, 1, 1)


def test_composition_series():
    cs = composition_factors(I(0, 3, 0), 5)
    assert cs.factors == [simple(P(2)), simple(P(1)), simple(P(0))]
    assert cs.finite and cs.total_length == 3
    cs = composition_factors(I(0, 1, 1), 3)
    assert cs.factors == [simple(P(0)), simple(P(-1)), simple(P(-2))] and not cs.finite
    cs = composition_factors(I(0, 0, 0, p=1, q=2), 2)
    assert cs.factors == [simple(P(-1, 2)), simple(P(-2, 2))] and not cs.finite


def test_almost_split_sequences():
    s = almost_split_sequence(I(0, 2, 0))
    assert s.middle == [I(-1, 2, 0), I(0, 1, 0)] and s.right == I(-1, 1, 0)
    s = almost_split_sequence(I(0, 1, 0))
    assert s.middle == [I(-1, 1, 0)] and s.right == I(-1, 0, 0)
    assert tau(I(-1, 1, 0)) == I(0, 2, 0)
    with pytest.raises(DomainError):
        almost_split_sequence(I(0, 1, 1))


def test_irreducible_rep():
    assert irreducible_rep(I(0, 2, 0), I(0, 1, 0))
    assert not irreducible_rep(I(0, 2, 0), I(-1, 1, 0))
    assert not irreducible_rep(I(0, 1, 0), I(0, 0, 0))


def test_middle_terms():
    mt = middle_terms(I(0, 2, 0), I(-2, 1, 0))
    assert (mt.I, mt.J, mt.l) == (I(-2, 2, 0), I(0, 1, 0), 0)
    V = sigma_inv(derived(I(0, 2, 0)).Uminus)
    mt = middle_terms(I(0, 2, 0), V)
    assert V == I(1, 0, 1)
    assert mt.J is None and mt.I.is_projective() and mt.l == -1
    with pytest.raises(DomainError):
        middle_terms(I(0, 1, 1), I(0, 1, 0))


def test_compose_nonzero():
    assert compose_nonzero(I(0, 3, 0), I(-1, 2, 0), I(-2, 1, 0))
    assert not compose_nonzero(I(0, 3, 0), I(2, 1, 1), I(1, 0, 1))
    assert hom_dim_rep(I(-2, -2, 1), I(-1, -2, 1)) == 0
    assert not compose_nonzero(I(-2, -2, 1), I(-1, -1, 1), I(-1, -2, 1))
    with pytest.raises(DomainError):
        compose_nonzero(I(0, 1, 0), I(0, 1, 0), I(-1, 1, 0))


def test_dimension_bound():
    pool = intervals(Gon(2), 2)
    for U in pool:
        for V in pool:
            d = hom_dim_rep(U, V)
            assert d in (0, 1) or (d == 2 and U == V and U.is_projective())
