"""Exact rational implication tests for homogeneous linear inequality systems.

Everything here works over cones {x : G x >= 0} with integer coefficient
rows (any equality is eliminated by substitution before reaching this
module).  The question "is row phi implied by rows G?" is decided exactly:

* a Farkas certificate (phi = sum lambda_i g_i, lambda >= 0, found by a
  phase-1 simplex over Fractions) proves implication;
* a rational point x with G x >= 0 and phi . x < 0 refutes it.

A floating point LP (scipy HiGHS) is used only to propose candidate
refutation points and to route cases; every verdict is backed by one of
the two exact certificates above.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from scipy.optimize import linprog

Row = tuple[int, ...]


def dot(row: Sequence[int], x: Sequence[Fraction]) -> Fraction:
    return sum(Fraction(r) * xi for r, xi in zip(row, x))


def _farkas_implied(phi: Row, rows: list[Row]) -> bool:
    """Exact phase-1 simplex: is phi a nonnegative combination of rows?

    Solves min sum(artificials) s.t. A lam + artificials = phi, lam >= 0
    with Bland's rule; optimum 0 iff the combination exists.
    """
    m = len(phi)
    ncols = len(rows)
    # tableau rows: m equations; columns: ncols generators + m artificials, then rhs
    tab = [[Fraction(0)] * (ncols + m + 1) for _ in range(m)]
    for i in range(m):
        sign = 1 if phi[i] >= 0 else -1
        for j, row in enumerate(rows):
            tab[i][j] = Fraction(sign * row[i])
        tab[i][ncols + i] = Fraction(1)
        tab[i][-1] = Fraction(sign * phi[i])
    basis = [ncols + i for i in range(m)]
    # objective: minimize sum of artificial variables
    cost = [Fraction(0)] * (ncols + m)
    for j in range(ncols, ncols + m):
        cost[j] = Fraction(1)

    def reduced_costs() -> list[Fraction]:
        # z_j - c_j for minimization with current basis (cost of basics is 1 or 0)
        out = []
        for j in range(ncols + m):
            zj = sum(cost[basis[i]] * tab[i][j] for i in range(m))
            out.append(zj - cost[j])
        return out

    while True:
        rc = reduced_costs()
        enter = next((j for j in range(ncols + m) if rc[j] > 0), None)
        if enter is None:
            break
        ratios = [
            (tab[i][-1] / tab[i][enter], basis[i], i)
            for i in range(m)
            if tab[i][enter] > 0
        ]
        if not ratios:
            break  # unbounded cannot happen in phase 1; defensive
        _, _, leave = min(ratios)
        piv = tab[leave][enter]
        tab[leave] = [v / piv for v in tab[leave]]
        for i in range(m):
            if i != leave and tab[i][enter] != 0:
                f = tab[i][enter]
                tab[i] = [v - f * w for v, w in zip(tab[i], tab[leave])]
        basis[leave] = enter
    objective = sum(cost[basis[i]] * tab[i][-1] for i in range(m))
    return objective == 0


def _float_violation_point(phi: Row, rows: list[Row]) -> list[Fraction] | None:
    """Propose x with rows.x >= 0 and phi.x < 0 via HiGHS; not yet verified."""
    m = len(phi)
    a_ub = [[-float(v) for v in row] for row in rows]
    b_ub = [0.0] * len(rows)
    # maximize slack t: rows.x >= t, phi.x <= -1, |x| <= bound
    a_ub2 = [row + [1.0] for row in a_ub]
    a_ub2.append([float(v) for v in phi] + [0.0])
    b_ub2 = b_ub + [-1.0]
    c = [0.0] * m + [-1.0]
    bounds = [(-1e3, 1e3)] * m + [(0.0, 1e3)]
    res = linprog(c, A_ub=a_ub2, b_ub=b_ub2, bounds=bounds, method="highs")
    if not res.success:
        return None
    x = res.x[:m]
    return [Fraction(v).limit_denominator(10**7) for v in x]


def is_implied(phi: Row, rows: Sequence[Row]) -> bool:
    """Exact decision: does {x : rows.x >= 0} satisfy phi.x >= 0?"""
    rows = [tuple(r) for r in rows]
    phi = tuple(phi)
    cand = _float_violation_point(phi, rows)
    if cand is not None:
        if dot(phi, cand) < 0 and all(dot(r, cand) >= 0 for r in rows):
            return False  # exact refutation
    return _farkas_implied(phi, rows)


def violation_point(phi: Row, rows: Sequence[Row]) -> list[Fraction] | None:
    """An exact rational point refuting implication, or None if implied."""
    rows = [tuple(r) for r in rows]
    phi = tuple(phi)
    cand = _float_violation_point(phi, rows)
    if cand is not None and dot(phi, cand) < 0 and all(dot(r, cand) >= 0 for r in rows):
        return cand
    if _farkas_implied(phi, rows):
        return None
    # not implied, but the rationalized float point failed the exact check:
    # retry the rationalization at other denominator scales
    for denom_bound in (10**4, 10**10, 10**13):
        cand = _float_violation_point(phi, rows)
        if cand is None:
            continue
        cand = [c.limit_denominator(denom_bound) for c in cand]
        if dot(phi, cand) < 0 and all(dot(r, cand) >= 0 for r in rows):
            return cand
    raise RuntimeError("implication refuted by Farkas but no rational point found")
