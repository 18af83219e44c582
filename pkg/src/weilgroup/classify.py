"""Admissible l-primary group types per isogeny class.

The group of rational points is the cokernel of 1 - Frobenius on the Tate
module, so its exponent tuple c (length 2g, descending) must satisfy the
Newton-versus-Hodge dominance for f(1-t) with total v_l(f(1)).  For a
separable class that condition is also sufficient; every non-separable
shape in scope reduces to unions, over witness invariants of a sub- and
quotient module, of the block triangular feasibility decided in
:mod:`weilgroup.smith`.  The inequality systems are never hard-coded: they
are generated from the Horn tables each time.

All case routines come in two layers: a ``*_from_profile`` core taking
exact valuation profiles (handy for grid tests), and a polynomial-facing
wrapper doing the 1 - Frobenius transform and validation.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .polygon import is_prime, transform_one_minus_t, valuation
from .smith import enumerate_cokernels
from .partitions import merge_sorted
from .weil import (
    DispatchPlan,
    FactoredShape,
    UnsupportedShapeError,
    WeilPolynomial,
    _is_squarefree,
    factor_weil,
    group_order,
    poly_eval,
    poly_mul,
    root_valuations,
    shape_of,
)

GroupTuple = tuple[int, ...]
GroupSet = tuple[GroupTuple, ...]


def _sorted_groups(groups: Iterable[GroupTuple]) -> GroupSet:
    return tuple(sorted(set(groups), reverse=True))


def _ceil_fraction(x: Fraction) -> int:
    return -((-x.numerator) // x.denominator)


def admissible_exponents(
    profile: Sequence[Fraction | int], length: int
) -> GroupSet:
    """All integer exponent tuples dominating the valuation profile.

    Dominance: equal totals and every top-k partial sum of the exponents
    at least the top-k partial sum of the (descending) valuations; this is
    the polygon condition in partial-sum form.
    """
    vals = sorted((Fraction(v) for v in profile), reverse=True)
    if len(vals) > length:
        raise ValueError(f"profile longer than ambient length {length}")
    vals += [Fraction(0)] * (length - len(vals))
    total_f = sum(vals, Fraction(0))
    if total_f.denominator != 1:
        raise ValueError(f"profile total {total_f} is not an integer")
    total = int(total_f)
    prefix = []
    acc = Fraction(0)
    for v in vals:
        acc += v
        prefix.append(acc)

    out: list[GroupTuple] = []

    def rec(k: int, remaining: int, bound: int, acc_sum: int, chosen: list[int]):
        if k == length:
            if remaining == 0:
                out.append(tuple(chosen))
            return
        lo = -(-remaining // (length - k))  # ceil to keep room for the rest
        for x in range(min(bound, remaining), lo - 1, -1):
            new_sum = acc_sum + x
            if Fraction(new_sum) < prefix[k]:
                break  # x decreasing: smaller x only gets worse
            chosen.append(x)
            rec(k + 1, remaining - x, x, new_sum, chosen)
            chosen.pop()

    rec(0, total, total, 0, [])
    return _sorted_groups(out)


def quadratic_pairs(profile: Sequence[Fraction | int]) -> GroupSet:
    """Admissible two-generator exponent pairs for a quadratic profile."""
    vals = sorted((Fraction(v) for v in profile), reverse=True)
    if len(vals) != 2:
        raise ValueError("quadratic profile needs exactly two valuations")
    return admissible_exponents(vals, 2)


# ---------------------------------------------------------------------------
# profile-level cores


def separable_groups_from_profile(
    profile: Sequence[Fraction | int], length: int
) -> GroupSet:
    return admissible_exponents(profile, length)


def p_square_groups_from_profile(profile: Sequence[Fraction | int]) -> GroupSet:
    """Direct sums of two admissible pairs for the quadratic profile."""
    pairs = quadratic_pairs(profile)
    return _sorted_groups(
        merge_sorted(p1, p2) for p1 in pairs for p2 in pairs
    )


def cyclic_index_groups_from_profile(
    profile: Sequence[Fraction | int], r: int, v: int, s: int
) -> GroupSet:
    """Direct sums of r admissible pairs plus s copies of exponent v."""
    if r == 0:
        return ((v,) * s,)
    pairs = quadratic_pairs(profile)

    def rec(k: int) -> list[tuple[GroupTuple, ...]]:
        if k == 0:
            return [()]
        return [(p,) + rest for p in pairs for rest in rec(k - 1)]

    return _sorted_groups(
        merge_sorted(*(list(combo) + [(v,) * s])) for combo in rec(r)
    )


def case1_groups_from_profiles(
    m: Sequence[Fraction | int], n: Sequence[Fraction | int]
) -> GroupSet:
    """Square-quadratic times coprime quadratic: union over witnesses.

    Witness a: exponents of the squared part, i.e. any merge of two
    admissible pairs for m.  Witness b: admissible pair for n.  Each
    witness contributes every feasible block extension c.
    """
    a_witnesses = {
        merge_sorted(p1, p2)
        for p1 in quadratic_pairs(m)
        for p2 in quadratic_pairs(m)
    }
    b_witnesses = quadratic_pairs(n)
    out: set[GroupTuple] = set()
    for a in a_witnesses:
        for b in b_witnesses:
            out.update(enumerate_cokernels(a, b))
    return _sorted_groups(out)


def case2_groups_from_profile(
    m: Sequence[Fraction | int], b: int
) -> GroupSet:
    """Separable quartic times a squared real factor acting by valuation b."""
    a_witnesses = admissible_exponents(m, 4)
    out: set[GroupTuple] = set()
    for a in a_witnesses:
        out.update(enumerate_cokernels(a, (b, b)))
    return _sorted_groups(out)


def case3_groups_from_profile(
    m: Sequence[Fraction | int], b: int
) -> GroupSet:
    """Squared quadratic times a squared real factor acting by valuation b."""
    a_witnesses = {
        merge_sorted(p1, p2)
        for p1 in quadratic_pairs(m)
        for p2 in quadratic_pairs(m)
    }
    out: set[GroupTuple] = set()
    for a in a_witnesses:
        out.update(enumerate_cokernels(a, (b, b)))
    return _sorted_groups(out)


# ---------------------------------------------------------------------------
# polynomial-facing operations


def _transformed_profile(coeffs: Sequence[int], l: int):
    return root_valuations(transform_one_minus_t(coeffs), l)


def groups_separable(coeffs: Sequence[int], l: int) -> GroupSet:
    """All admissible exponent tuples for a separable polynomial."""
    coeffs = tuple(int(c) for c in coeffs)
    if not _is_squarefree(coeffs):
        raise ValueError("polynomial is not separable")
    profile = _transformed_profile(coeffs, l)
    return separable_groups_from_profile(tuple(profile), len(coeffs) - 1)


def groups_p_square(P: Sequence[int], l: int) -> GroupSet:
    """Shape P^2 with P a separable quadratic (surface case)."""
    P = tuple(int(c) for c in P)
    if len(P) != 3:
        raise ValueError("P must be quadratic")
    if not _is_squarefree(P):
        raise ValueError("P must be separable")
    return p_square_groups_from_profile(tuple(_transformed_profile(P, l)))


def groups_cyclic_index(
    P: Sequence[int], Q: Sequence[int], r: int, s: int, l: int
) -> GroupSet:
    """Shape P^r Q^s on the 1 - Frobenius side, with Q a linear divisor of P.

    Each of the r two-generator summands dominates the Newton polygon of P
    itself (P is already in operator coordinates); the s remaining summands
    are cyclic of exponent v_l(Q(0)).
    """
    P = tuple(int(c) for c in P)
    Q = tuple(int(c) for c in Q)
    if len(Q) != 2 or Q[0] != 1:
        raise ValueError("Q must be monic linear")
    if len(P) != 3:
        raise ValueError("P must be quadratic")
    rem = poly_eval(P, -Q[1])
    if rem != 0:
        raise ValueError(f"Q does not divide P: P({-Q[1]}) = {rem}")
    if not _is_squarefree(P):
        raise ValueError("P must be separable")
    if Q[1] == 0:
        raise ValueError("Q(0) = 0: degenerate operator")
    v = valuation(Q[1], l)
    profile = tuple(root_valuations(P, l))
    return cyclic_index_groups_from_profile(profile, r, v, s)


def groups_scalar(sign: str, q: int, s: int, l: int) -> GroupTuple:
    """Shape (t +- sqrt(q))^s: the unique group is (Z/l^v)^s, v = v_l(1 +- sqrt q)."""
    sq = math.isqrt(q)
    if sq * sq != q:
        raise ValueError(f"q={q} is not a perfect square")
    if sign not in ("plus", "minus"):
        raise ValueError("sign must be 'plus' or 'minus'")
    base = 1 + sq if sign == "plus" else 1 - sq
    v = valuation(base, l) if base != 0 else None
    if v is None:
        raise ValueError("1 -+ sqrt(q) = 0: degenerate class")
    return (v,) * s


def groups_case1(P: Sequence[int], Q: Sequence[int], l: int) -> GroupSet:
    """Shape P^2 Q, deg P = deg Q = 2, PQ separable."""
    P = tuple(int(c) for c in P)
    Q = tuple(int(c) for c in Q)
    if len(P) != 3 or len(Q) != 3:
        raise ValueError("P and Q must be quadratic")
    if not _is_squarefree(poly_mul(P, Q)):
        raise ValueError("PQ must be separable")
    m = tuple(_transformed_profile(P, l))
    n = tuple(_transformed_profile(Q, l))
    return case1_groups_from_profiles(m, n)


def groups_case2(P: Sequence[int], sign: str, q: int, l: int) -> GroupSet:
    """Shape P (t +- sqrt q)^2 with P a separable quartic, P(-+ sqrt q) != 0."""
    P = tuple(int(c) for c in P)
    if len(P) != 5:
        raise ValueError("P must be quartic")
    if not _is_squarefree(P):
        raise ValueError("P must be separable")
    b = _real_multiplier_valuation(sign, q, l)
    if poly_eval(P, _real_root(sign, q)) == 0:
        raise ValueError("P shares the real root: shape is not P * (t +- sqrt q)^2")
    m = tuple(_transformed_profile(P, l))
    return case2_groups_from_profile(m, b)


def groups_case3(Q: Sequence[int], sign: str, q: int, l: int) -> GroupSet:
    """Shape Q^2 (t +- sqrt q)^2 with Q a separable quadratic, Q(-+ sqrt q) != 0."""
    Q = tuple(int(c) for c in Q)
    if len(Q) != 3:
        raise ValueError("Q must be quadratic")
    if not _is_squarefree(Q):
        raise ValueError("Q must be separable")
    b = _real_multiplier_valuation(sign, q, l)
    if poly_eval(Q, _real_root(sign, q)) == 0:
        raise ValueError("Q shares the real root: shape is not Q^2 (t +- sqrt q)^2")
    m = tuple(_transformed_profile(Q, l))
    return case3_groups_from_profile(m, b)


def _real_root(sign: str, q: int) -> int:
    sq = math.isqrt(q)
    if sq * sq != q:
        raise UnsupportedShapeError(f"q={q} is not a perfect square")
    return -sq if sign == "plus" else sq


def _real_multiplier_valuation(sign: str, q: int, l: int) -> int:
    """v_l(1 +- sqrt q): the action of 1 - Frobenius on the real part."""
    base = 1 - _real_root(sign, q)
    if base == 0:
        raise UnsupportedShapeError("1 -+ sqrt(q) vanishes")
    return valuation(base, l)


# ---------------------------------------------------------------------------
# per-class dispatch


@dataclass(frozen=True)
class Classification:
    """Admissible group types per prime, plus advisory notices."""

    weil: WeilPolynomial
    shape: FactoredShape
    plan: DispatchPlan
    groups: dict[int, GroupSet]
    notices: tuple[str, ...] = ()


def _prime_factors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def classify_all(weil: WeilPolynomial, *, only_l: int | None = None) -> Classification:
    """Admissible group sets for every prime dividing f(1).

    Primes not dividing f(1) contribute only the zero group and are
    omitted.  The residue characteristic p is classified by the same
    combinatorics but flagged with a notice: the Tate module argument
    backing the classification assumes l != p.
    """
    shape = factor_weil(weil)
    plan = shape_of(shape)
    if plan.kind == "unsupported":
        raise UnsupportedShapeError(
            f"factor pattern not in the classified list: "
            f"{[(f, m) for f, m in shape.factors]}"
        )
    order = group_order(weil)
    if only_l is not None:
        if not is_prime(only_l):
            raise ValueError(f"l={only_l} is not prime")
        primes = [only_l]
    else:
        primes = _prime_factors(order)
    notices = []
    if weil.p in primes:
        notices.append(
            f"l = {weil.p} equals the residue characteristic; its entry is "
            "formal (the Tate module has rank 2g only for l != p)"
        )
    groups: dict[int, GroupSet] = {}
    for l in primes:
        groups[l] = _dispatch(plan, weil, l)
    return Classification(
        weil=weil,
        shape=shape,
        plan=plan,
        groups=groups,
        notices=tuple(notices),
    )


def _dispatch(plan: DispatchPlan, weil: WeilPolynomial, l: int) -> GroupSet:
    if plan.kind == "separable":
        return groups_separable(weil.coeffs, l)
    if plan.kind == "p_square":
        return groups_p_square(plan.P, l)
    if plan.kind == "p2q":
        return groups_case1(plan.P, plan.Q, l)
    if plan.kind == "p_realsq":
        return groups_case2(plan.P, plan.sign, weil.q, l)
    if plan.kind == "q2_realsq":
        return groups_case3(plan.Q, plan.sign, weil.q, l)
    if plan.kind == "scalar":
        return (groups_scalar(plan.sign, weil.q, plan.s, l),)
    if plan.kind == "cyclic_index":
        return groups_cyclic_index(plan.P, plan.Q, plan.r, plan.s, l)
    raise UnsupportedShapeError(f"no classifier for plan {plan.kind!r}")
