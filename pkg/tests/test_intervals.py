"""Canonical interval-set algebra: examples and algebraic laws."""

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from waveset.errors import InputError
from waveset.intervals import EMPTY, Interval, IntervalSet, iset, normalize, rat

F = Fraction

rationals = st.fractions(min_value=-8, max_value=8, max_denominator=64)


@st.composite
def interval_sets(draw, max_parts: int = 6) -> IntervalSet:
    pairs = draw(st.lists(st.tuples(rationals, rationals), max_size=max_parts))
    return normalize((min(a, b), max(a, b)) for a, b in pairs)


def test_normalize_merges_touching():
    assert iset((0, 1), (1, 2)) == iset((0, 2))


def test_normalize_absorbs_subinterval():
    assert iset((0, 3), (1, 2)) == iset((0, 3))


def test_normalize_sorts_and_merges():
    assert iset(("1/3", "1/2"), (0, "1/3")) == iset((0, "1/2"))


def test_normalize_drops_zero_length():
    assert normalize([(1, 1), (2, 3)]) == iset((2, 3))


def test_subtract_shannon_shape():
    assert iset((-1, 1)).subtract(iset(("-1/2", "1/2"))) == iset((-1, "-1/2"), ("1/2", 1))


def test_intersect_disjoint():
    assert iset((0, 1)).intersect(iset((1, 2))) == EMPTY


def test_union_identity():
    s = iset(("-1/3", "2/5"), (1, 2))
    assert EMPTY.union(s) == s


def test_scale_examples():
    assert iset(("-1/2", "1/2")).scale(2) == iset((-1, 1))
    assert iset(("2/7", "1/2")).scale(F(1, 2)) == iset(("1/7", "1/4"))
    assert iset(("1/2", 1)).translate(-1) == iset(("-1/2", 0))


def test_negative_scale_reverses():
    s = iset((1, 2), (3, 4))
    assert s.scale(-1) == iset((-4, -3), (-2, -1))
    assert s.scale(-1).measure() == s.measure()


def test_measure_journe():
    # Four exact lengths: 2/7 + 3/14 + 3/14 + 2/7.
    j = iset(("-16/7", -2), ("-1/2", "-2/7"), ("2/7", "1/2"), (2, "16/7"))
    assert sum(p.length for p in j.parts) == 1
    assert j.measure() == 1


def test_sym_diff_self_is_zero():
    s = iset((0, 1), (2, "5/2"))
    assert s.sym_diff_measure(s) == 0


def test_subset_mod_null():
    assert iset((0, 1)).subset_mod_null(iset((0, 2)))
    assert not iset((0, 2)).subset_mod_null(iset((0, 1)))


def test_contains_point_and_interval():
    s = iset((0, 1), (2, 3))
    assert s.contains_point(F(1, 2))
    assert not s.contains_point(1)
    assert s.contains_interval(Interval(F(2), F(3)))
    assert not s.contains_interval(Interval(F(1, 2), F(5, 2)))


def test_malformed_rational_rejected():
    with pytest.raises(InputError):
        rat("1/0")
    with pytest.raises(InputError):
        rat("abc")
    with pytest.raises(InputError):
        rat(0.5)


def test_scale_by_zero_rejected():
    with pytest.raises(InputError):
        iset((0, 1)).scale(0)


def test_noncanonical_construction_rejected():
    with pytest.raises(InputError):
        IntervalSet((Interval(F(0), F(2)), Interval(F(1), F(3))))


@given(interval_sets())
def test_normalize_idempotent(s):
    assert normalize(s.parts) == s


@given(interval_sets(), interval_sets())
def test_measure_additivity(a, b):
    assert a.union(b).measure() + a.intersect(b).measure() == a.measure() + b.measure()


@given(interval_sets(), interval_sets(), interval_sets())
def test_subtract_union_law(a, b, c):
    assert a.subtract(b.union(c)) == a.subtract(b).subtract(c)


@given(interval_sets(), interval_sets(), interval_sets())
def test_intersection_distributes(a, b, c):
    assert a.intersect(b.union(c)) == a.intersect(b).union(a.intersect(c))


@given(interval_sets(), interval_sets(), st.fractions(min_value=-4, max_value=4, max_denominator=16).filter(lambda s: s != 0))
def test_scale_homomorphism(a, b, s):
    assert a.union(b).scale(s) == a.scale(s).union(b.scale(s))
    assert a.scale(s).measure() == abs(s) * a.measure()


@given(interval_sets(), interval_sets(), rationals)
def test_translate_commutes_with_ops(a, b, t):
    assert a.union(b).translate(t) == a.translate(t).union(b.translate(t))
    assert a.intersect(b).translate(t) == a.translate(t).intersect(b.translate(t))
    assert a.subtract(b).translate(t) == a.translate(t).subtract(b.translate(t))


@given(interval_sets(), interval_sets())
def test_equality_iff_null_difference(a, b):
    assert (a == b) == (a.sym_diff_measure(b) == 0)
