from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from zgon.core import TURN, ConfigurationError, Embedding, Gon, Point, compare, pred, succ

from conftest import P

points = st.builds(Point, st.integers(1, 4), st.integers(-50, 50))
angles = st.fractions(min_value=-6, max_value=6, max_denominator=400)


def test_compare_examples(gon2):
    assert compare(P(0), P(0), gon2) == 0
    assert compare(P(5, 1), P(-100, 2), gon2) == -1
    assert compare(P(3, 2), P(4, 2), gon2) == -1


def test_compare_rejects_foreign_points(gon2):
    with pytest.raises(ConfigurationError):
        compare(P(0, 3), P(0), gon2)


def test_succ_pred():
    assert succ(P(0)) == P(1)
    assert pred(P(-7, 3)) == P(-8, 3)
    assert succ(pred(P(0, 2))) == P(0, 2)


def test_embed_values():
    assert Gon(1).embed(P(0)) == 1
    assert Gon(2).embed(P(0)) == Fraction(1, 2)
    assert Gon(1).embed(P(0)) < Gon(1).embed(P(1))


@given(points, points)
def test_embed_is_order_preserving(a, b):
    e = Embedding(4)
    assert (a < b) == (e(a) < e(b))
    p = a.copy
    assert e.accumulation(p) < e(a) < e.accumulation(p + 1)


@given(points)
def test_locate_inverts_embed(z):
    e = Embedding(4, Fraction(3))
    assert e.locate(e(z)) == z
    mid = (e(z) + e(z.succ())) / 2
    assert e.locate(mid) == z


def test_kupisch_examples():
    g2, g1 = Gon(2), Gon(1)
    assert g2.kupisch(Fraction(0)) == TURN
    s = g1.embed(P(0))
    assert g1.kupisch(s) == TURN + g1.embed(P(1)) - s
    t = g1.embed(P(3))
    assert g1.kupisch(t + TURN) == g1.kupisch(t)
    # the second accumulation point of Z_2 sits at pi
    assert g2.kupisch(Fraction(1)) == TURN


@given(angles, angles)
def test_kupisch_axioms(t1, t2):
    g = Gon(3)
    assert g.kupisch(t1 + TURN) == g.kupisch(t1)
    if t1 <= t2:
        assert t1 + g.kupisch(t1) <= t2 + g.kupisch(t2)


def test_points_sorted():
    pts = Gon(2).points(2)
    assert pts == sorted(pts) and len(pts) == 10


def test_bad_configs():
    with pytest.raises(ConfigurationError):
        Gon(0)
    with pytest.raises(ConfigurationError):
        Gon(2, Embedding(3))
    with pytest.raises(ConfigurationError):
        Embedding(1, Fraction(-1))
