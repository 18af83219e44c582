import pytest

from weilgroup.linprog import dot, is_implied, violation_point
from weilgroup.reduce import reduce_system, redundant_members_full


def test_is_implied_basics():
    # x1 >= 0 and x2 >= 0 imply x1 + x2 >= 0
    assert is_implied((1, 1), [(1, 0), (0, 1)])
    # ... but not x1 - x2 >= 0
    assert not is_implied((1, -1), [(1, 0), (0, 1)])


def test_is_implied_needs_combination():
    # x1 >= x2 and x2 >= x3 imply x1 >= x3
    rows = [(1, -1, 0), (0, 1, -1)]
    assert is_implied((1, 0, -1), rows)
    assert not is_implied((0, 0, 1), rows)


def test_violation_point_is_exact():
    point = violation_point((1, -1), [(1, 0), (0, 1)])
    assert point is not None
    assert dot((1, -1), point) < 0
    assert all(dot(r, point) >= 0 for r in [(1, 0), (0, 1)])
    assert violation_point((1, 1), [(1, 0), (0, 1)]) is None


def test_reduce_1_1():
    result = reduce_system(1, 1, "smith")
    assert sorted(iq.pretty() for iq in result.kept) == ["a1 >= c2", "b1 >= c2"]
    removed = {iq.pretty() for iq in result.removed_structural}
    removed |= {iq.pretty() for iq in result.removed_implied}
    assert "a1+b1 >= c1" in removed


def test_structurally_pruned_rows_are_lp_implied():
    # the fast filter only drops rows the LP would drop anyway
    from weilgroup.reduce import _smith_base_rows, _smith_row

    for s, t in ((1, 1), (2, 1), (1, 2)):
        result = reduce_system(s, t, "smith")
        base = _smith_base_rows(s, t)
        kept_rows = [_smith_row(iq, s, t) for iq in result.kept]
        for iq in result.removed_structural:
            assert is_implied(_smith_row(iq, s, t), kept_rows + base)


def test_full_mode_no_redundancy_below_six():
    assert redundant_members_full(3) == ()
    assert redundant_members_full(4) == ()


def test_reduce_guards():
    with pytest.raises(ValueError):
        reduce_system(4, 3)
    with pytest.raises(ValueError):
        reduce_system(2, 2, "bogus")
    with pytest.raises(ValueError):
        reduce_system(2, 2, "full", scalar_b=True)


def test_scalar_b_small():
    result = reduce_system(2, 1, "smith", scalar_b=True)
    assert result.mode == "smith+scalar_b"
    assert all("b2" not in iq.pretty_scalar_b() for iq in result.kept)
