import pytest
from hypothesis import given, strategies as st

from weilgroup.horn import enumerate_T
from weilgroup.oracle import lr_coefficient
from weilgroup.partitions import merge_sorted, partitions_of, partitions_up_to
from weilgroup.smith import enumerate_cokernels, feasible_triple, inequality_system


def test_system_1_1():
    system = inequality_system(1, 1)
    assert sorted(iq.pretty() for iq in system.inequalities) == [
        "a1 >= c2",
        "b1 >= c2",
    ]


def test_system_4_2_contains_published_families():
    pretty = {iq.pretty() for iq in inequality_system(4, 2).inequalities}
    assert "b1 >= c5" in pretty
    assert "b2 >= c6" in pretty
    # complements of these appear as the size-5 rows
    assert "a1+a2+a3+a4+b2 >= c2+c3+c4+c5+c6" in pretty  # b1 <= c1
    assert "a2+a3+a4+b1+b2 >= c2+c3+c4+c5+c6" in pretty  # a1 <= c1


def test_system_guards():
    with pytest.raises(ValueError):
        inequality_system(4, 3)
    with pytest.raises(ValueError):
        inequality_system(0, 1)


def test_feasible_examples():
    assert feasible_triple((1,), (1,), (2, 0))
    assert feasible_triple((1,), (1,), (1, 1))
    assert not feasible_triple((2,), (0,), (1, 1))
    assert not feasible_triple((2, 1), (1,), (4, 0, 0))


def test_feasible_total_mismatch_is_false_not_error():
    assert not feasible_triple((1,), (1,), (3, 0))


def test_feasible_rejects_bad_shapes():
    with pytest.raises(ValueError):
        feasible_triple((1,), (1,), (2,))
    with pytest.raises(ValueError):
        feasible_triple((-1,), (1,), (0, 0))
    with pytest.raises(ValueError):
        feasible_triple((0, 1), (1,), (1, 1, 0))


def test_enumerate_examples():
    assert enumerate_cokernels((1,), (1,)) == ((2, 0), (1, 1))
    assert enumerate_cokernels((0, 0), (0, 0)) == ((0, 0, 0, 0),)
    assert enumerate_cokernels((1, 0), (1, 0)) == ((2, 0, 0, 0), (1, 1, 0, 0))


def test_enumerate_descending_lex_and_pruned():
    out = enumerate_cokernels((2, 1), (1,))
    assert out == tuple(sorted(out, reverse=True))
    assert all(c[0] <= 3 for c in out)
    assert all(sum(c) == 4 for c in out)


small_partitions = st.lists(st.integers(0, 3), min_size=1, max_size=3).map(
    lambda xs: tuple(sorted(xs, reverse=True))
)


@given(small_partitions, small_partitions)
def test_block_transpose_symmetry(a, b):
    for c in partitions_of(sum(a) + sum(b), len(a) + len(b)):
        assert feasible_triple(a, b, c) == feasible_triple(b, a, c)


@given(small_partitions, small_partitions)
def test_direct_sum_always_feasible(a, b):
    assert feasible_triple(a, b, merge_sorted(a, b))


@given(small_partitions, small_partitions)
def test_green_klein_on_random_triples(a, b):
    for c in partitions_of(sum(a) + sum(b), len(a) + len(b)):
        assert feasible_triple(a, b, c) == (lr_coefficient(a, b, c) > 0)


def _feasible_by_full_T(a, b, c):
    """Decision procedure straight from the unrestricted triple sets."""
    s, t = len(a), len(b)
    n = s + t
    if sum(a) + sum(b) != sum(c):
        return False
    for p in range(1, n + 1):
        for I, J, K in enumerate_T(n, p):
            lhs = sum(a[i - 1] for i in I if i <= s)
            lhs += sum(b[j - 1] for j in J if j <= t)
            if lhs < sum(c[k - 1] for k in K):
                return False
    return True


def test_strict_restriction_is_sound_and_complete():
    # strict-mode feasibility equals full-set feasibility, s+t <= 5, parts <= 3
    for s in (1, 2, 3):
        for t in (1, 2):
            if s + t > 5:
                continue
            for a in partitions_up_to(3 * s, s, 3):
                for b in partitions_up_to(3 * t, t, 3):
                    for c in partitions_of(sum(a) + sum(b), s + t):
                        assert feasible_triple(a, b, c) == _feasible_by_full_T(a, b, c)


def _one_box_removals(p):
    out = []
    for i, part in enumerate(p):
        if part == 0:
            continue
        smaller = p[:i] + (part - 1,) + p[i + 1 :]
        if all(x >= y for x, y in zip(smaller, smaller[1:])):
            out.append(smaller)
    return out


def test_box_removal_at_smith_level():
    # removing one box from a keeps some one-box-smaller c feasible
    for a in partitions_up_to(4, 2, 2):
        for b in partitions_up_to(4, 2, 2):
            for c in enumerate_cokernels(a, b):
                for smaller_a in _one_box_removals(a):
                    assert any(
                        lr_coefficient(smaller_a, b, smaller_c) > 0
                        for smaller_c in _one_box_removals(c)
                    ), (a, b, c, smaller_a)
