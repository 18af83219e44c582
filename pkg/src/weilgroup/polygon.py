"""Exact Newton and Hodge polygons.

Both polygons are lower convex hulls of plane point sets with integer
x-coordinates and exact rational heights.  Read left to right, the slopes
of the Newton polygon of a monic polynomial are the l-adic valuations of
its roots in increasing order; the Hodge polygon of an exponent tuple
c_1 >= ... >= c_d is built from the partial sums of the smallest exponents.

The dominance test compares the two: a group type is admissible for a
polynomial exactly when the Newton polygon lies on or above the Hodge
polygon with matching endpoints.  Equivalently, with both tuples sorted
descending, every top-k partial sum of the exponents must be at least the
top-k partial sum of the valuations, with equal totals.  (Several published
displays of this chain are transposed; the orientation used here is the one
confirmed by the exhaustive matrix oracle in :mod:`weilgroup.oracle`.)

Heights are :class:`fractions.Fraction` throughout; valuations of roots of
l-irreducible quadratics are genuine half-integers and are never rounded.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Sequence


class PolygonError(ValueError):
    """Invalid polygon construction or incompatible polygon operation."""


def valuation(x: int, l: int) -> int:
    """l-adic valuation of a nonzero integer."""
    if x == 0:
        raise ValueError("valuation of zero is infinite")
    v = 0
    while x % l == 0:
        x //= l
        v += 1
    return v


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


def _lower_hull(points: Sequence[tuple[int, Fraction]]) -> tuple[tuple[int, Fraction], ...]:
    """Lower convex hull of points with strictly increasing x.

    Collinear interior points are dropped, so consecutive hull slopes are
    strictly increasing.
    """
    hull: list[tuple[int, Fraction]] = []
    for p in points:
        while len(hull) >= 2:
            (x1, y1), (x2, y2) = hull[-2], hull[-1]
            # keep hull[-1] only if it lies strictly below segment hull[-2]->p
            if (y2 - y1) * (p[0] - x1) >= (p[1] - y1) * (x2 - x1):
                hull.pop()
            else:
                break
        hull.append(p)
    return tuple(hull)


@dataclass(frozen=True)
class LatticePolygon:
    """Lower-convex piecewise linear function on [0, width].

    ``vertices`` are the corner points only: x strictly increasing starting
    at (0, 0), slopes strictly increasing between consecutive segments.
    """

    vertices: tuple[tuple[int, Fraction], ...]

    def __post_init__(self) -> None:
        vs = self.vertices
        if not vs:
            raise PolygonError("polygon needs at least one vertex")
        if vs[0] != (0, Fraction(0)):
            raise PolygonError(f"polygon must start at (0, 0), got {vs[0]}")
        for (x1, _), (x2, _) in zip(vs, vs[1:]):
            if x2 <= x1:
                raise PolygonError("vertex x-coordinates must strictly increase")
        slopes = [
            Fraction(y2 - y1, x2 - x1) for (x1, y1), (x2, y2) in zip(vs, vs[1:])
        ]
        for s1, s2 in zip(slopes, slopes[1:]):
            if s2 <= s1:
                raise PolygonError("segment slopes must strictly increase")

    @classmethod
    def from_points(cls, points: Sequence[tuple[int, Fraction | int]]) -> "LatticePolygon":
        pts = sorted((int(x), Fraction(y)) for x, y in points)
        xs = [x for x, _ in pts]
        if len(set(xs)) != len(xs):
            raise PolygonError("duplicate x-coordinates")
        return cls(_lower_hull(pts))

    @property
    def width(self) -> int:
        return self.vertices[-1][0]

    @property
    def total(self) -> Fraction:
        return self.vertices[-1][1]

    def value_at(self, x: int | Fraction) -> Fraction:
        x = Fraction(x)
        if not 0 <= x <= self.width:
            raise PolygonError(f"x={x} outside [0, {self.width}]")
        for (x1, y1), (x2, y2) in zip(self.vertices, self.vertices[1:]):
            if x <= x2:
                return y1 + (y2 - y1) * (x - x1) / (x2 - x1)
        return self.vertices[-1][1]

    def slopes(self) -> tuple[Fraction, ...]:
        """One slope per unit of width, weakly increasing."""
        out: list[Fraction] = []
        for (x1, y1), (x2, y2) in zip(self.vertices, self.vertices[1:]):
            out.extend([Fraction(y2 - y1, x2 - x1)] * (x2 - x1))
        return tuple(out)


@dataclass(frozen=True)
class ValuationProfile:
    """Root valuations sorted descending; exact rationals >= 0."""

    vals: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        vs = self.vals
        if any(v < 0 for v in vs):
            raise ValueError("valuations must be nonnegative")
        if any(vs[i] < vs[i + 1] for i in range(len(vs) - 1)):
            raise ValueError("valuations must be weakly decreasing")

    @classmethod
    def from_polygon(cls, polygon: LatticePolygon) -> "ValuationProfile":
        return cls(tuple(reversed(polygon.slopes())))

    @property
    def total(self) -> Fraction:
        return sum(self.vals, Fraction(0))

    def __len__(self) -> int:
        return len(self.vals)

    def __iter__(self):
        return iter(self.vals)


def transform_one_minus_t(coeffs: Sequence[int]) -> tuple[int, ...]:
    """Coefficients of (-1)^d * P(1-t) for monic integer P, highest degree first.

    The sign normalization keeps the result monic; applying the transform
    twice returns the input.
    """
    coeffs = tuple(int(c) for c in coeffs)
    if not coeffs or coeffs[0] != 1:
        raise PolygonError("polynomial must be monic")
    d = len(coeffs) - 1
    out = [0] * (d + 1)
    # P(1-t) = sum_k coeffs[k] * (1-t)^(d-k); coeffs[k] multiplies t^(d-k)
    for k, ck in enumerate(coeffs):
        e = d - k
        for m in range(e + 1):
            out[m] += ck * comb(e, m) * (-1) ** m
    sign = (-1) ** d
    # out[m] is the coefficient of t^m; reverse to highest-first
    return tuple(sign * out[m] for m in range(d, -1, -1))


def newton_polygon(coeffs: Sequence[int], l: int) -> LatticePolygon:
    """Newton polygon of a monic integer polynomial at the prime l.

    Lower hull of the points (i, v_l(f_i)) where f_0 = 1 is the leading
    coefficient.  Zero coefficients contribute no point.  The constant term
    must be nonzero, else the final slope would be infinite.
    """
    coeffs = tuple(int(c) for c in coeffs)
    if not coeffs or all(c == 0 for c in coeffs):
        raise PolygonError("zero polynomial has no Newton polygon")
    if coeffs[0] != 1:
        raise PolygonError("polynomial must be monic")
    if not is_prime(l):
        raise PolygonError(f"l={l} is not prime")
    if coeffs[-1] == 0:
        raise PolygonError("zero constant term: root valuation would be infinite")
    points = [
        (i, Fraction(valuation(c, l)))
        for i, c in enumerate(coeffs)
        if c != 0
    ]
    return LatticePolygon.from_points(points)


def hodge_polygon(c: Sequence[int], d: int) -> LatticePolygon:
    """Hodge polygon of the exponent tuple c padded with zeros to length d.

    Lower hull of (i, sum of the i smallest exponents) for i = 0..d; since
    the exponents are sorted this point set is already convex.
    """
    c = tuple(int(x) for x in c)
    if any(x < 0 for x in c):
        raise PolygonError("exponents must be nonnegative")
    if any(c[i] < c[i + 1] for i in range(len(c) - 1)):
        raise PolygonError("exponents must be weakly decreasing")
    if len(c) > d:
        raise PolygonError(f"{len(c)} exponents exceed width {d}")
    full = list(c) + [0] * (d - len(c))
    increasing = list(reversed(full))
    points = [(0, Fraction(0))]
    s = 0
    for i, e in enumerate(increasing, start=1):
        s += e
        points.append((i, Fraction(s)))
    return LatticePolygon.from_points(points)


def np_dominates_hp(np_poly: LatticePolygon, hp_poly: LatticePolygon) -> bool:
    """True iff np lies on or above hp everywhere with equal endpoints.

    With both polygons built from sums of smallest values this says: for
    every k the sum of the k largest exponents is at least the sum of the
    k largest valuations, and the totals agree.
    """
    if np_poly.width != hp_poly.width:
        raise PolygonError(
            f"width mismatch: {np_poly.width} vs {hp_poly.width}"
        )
    if np_poly.total != hp_poly.total:
        return False
    return all(
        np_poly.value_at(x) >= hp_poly.value_at(x)
        for x in range(np_poly.width + 1)
    )
