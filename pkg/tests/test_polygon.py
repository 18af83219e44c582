from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from weilgroup.polygon import (
    LatticePolygon,
    PolygonError,
    ValuationProfile,
    hodge_polygon,
    newton_polygon,
    np_dominates_hp,
    transform_one_minus_t,
    valuation,
)


def verts(poly):
    return tuple((x, Fraction(y)) for x, y in poly.vertices)


def test_transform_fixed_point():
    assert transform_one_minus_t([1, -1, 2]) == (1, -1, 2)


def test_transform_square():
    assert transform_one_minus_t([1, 0, 0]) == (1, -2, 1)


@given(st.integers(-9, 9), st.integers(-9, 9))
def test_transform_involution_deg2(b, c):
    coeffs = (1, b, c)
    assert transform_one_minus_t(transform_one_minus_t(coeffs)) == coeffs


@given(st.lists(st.integers(-6, 6), min_size=1, max_size=6))
def test_transform_involution_any_degree(tail):
    coeffs = tuple([1] + tail)
    assert transform_one_minus_t(transform_one_minus_t(coeffs)) == coeffs


def test_transform_rejects_non_monic():
    with pytest.raises(PolygonError):
        transform_one_minus_t([2, 1])


def test_newton_polygon_examples():
    p = newton_polygon([1, 2, 8], 2)
    assert verts(p) == ((0, 0), (1, 1), (2, 3))
    assert p.slopes() == (Fraction(1), Fraction(2))

    assert verts(newton_polygon([1, 0, -1], 2)) == ((0, 0), (2, 0))

    p = newton_polygon([1, -3, 6], 3)
    assert verts(p) == ((0, 0), (2, 1))
    assert p.slopes() == (Fraction(1, 2), Fraction(1, 2))


def test_newton_polygon_rejects_bad_input():
    with pytest.raises(PolygonError):
        newton_polygon([0], 2)
    with pytest.raises(PolygonError):
        newton_polygon([2, 4], 2)
    with pytest.raises(PolygonError):
        newton_polygon([1, 1, 4], 4)
    with pytest.raises(PolygonError):
        newton_polygon([1, 2, 0], 2)


def test_hodge_polygon_examples():
    assert verts(hodge_polygon((2, 1), 2)) == ((0, 0), (1, 1), (2, 3))
    assert verts(hodge_polygon((3, 0), 2)) == ((0, 0), (1, 0), (2, 3))
    assert verts(hodge_polygon((0,) * 6, 6)) == ((0, 0), (6, 0))


def test_hodge_polygon_rejects_overflow():
    with pytest.raises(PolygonError):
        hodge_polygon((1, 1, 1), 2)


def test_dominance_examples():
    np24 = newton_polygon([1, 2, 8], 2)  # slopes 1, 2
    assert np_dominates_hp(np24, hodge_polygon((3, 0), 2))
    assert np_dominates_hp(np24, hodge_polygon((2, 1), 2))
    np03 = newton_polygon([1, 1, 8], 2)  # slopes 0, 3
    assert not np_dominates_hp(np03, hodge_polygon((2, 1), 2))


def test_dominance_rejects_width_mismatch():
    with pytest.raises(PolygonError):
        np_dominates_hp(newton_polygon([1, 1, 2], 2), hodge_polygon((1,), 4))


def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


@given(
    st.lists(st.integers(-5, 5), min_size=1, max_size=3),
    st.lists(st.integers(-5, 5), min_size=1, max_size=3),
    st.sampled_from([2, 3, 5]),
)
def test_slope_multiset_multiplicative(t1, t2, l):
    p = tuple([1] + t1)
    q = tuple([1] + t2)
    prod = poly_mul(p, q)
    if p[-1] == 0 or q[-1] == 0:
        return
    merged = sorted(newton_polygon(p, l).slopes() + newton_polygon(q, l).slopes())
    assert merged == sorted(newton_polygon(prod, l).slopes())


@given(st.lists(st.integers(0, 5), min_size=1, max_size=6))
def test_hodge_slopes_are_sorted_exponents(parts):
    c = tuple(sorted(parts, reverse=True))
    hp = hodge_polygon(c, len(c))
    assert hp.slopes() == tuple(sorted(c))


@given(st.lists(st.integers(-7, 7), min_size=2, max_size=2))
def test_cyclic_group_always_admissible(tail):
    coeffs = tuple([1] + tail)
    if coeffs[-1] == 0:
        return
    npoly = newton_polygon(coeffs, 2)
    total = npoly.total
    if total.denominator != 1:
        return
    cyclic = hodge_polygon((int(total),), npoly.width)
    assert np_dominates_hp(npoly, cyclic)


def test_valuation_profile_from_polygon():
    prof = ValuationProfile.from_polygon(newton_polygon([1, 2, 8], 2))
    assert prof.vals == (Fraction(2), Fraction(1))
    with pytest.raises(ValueError):
        ValuationProfile((Fraction(0), Fraction(1)))


def test_polygon_invariants_enforced():
    with pytest.raises(PolygonError):
        LatticePolygon(((0, Fraction(1)), (1, Fraction(2))))
    with pytest.raises(PolygonError):
        LatticePolygon(((0, Fraction(0)), (1, Fraction(0)), (2, Fraction(0))))


def test_valuation():
    assert valuation(24, 2) == 3
    assert valuation(-9, 3) == 2
    with pytest.raises(ValueError):
        valuation(0, 2)
