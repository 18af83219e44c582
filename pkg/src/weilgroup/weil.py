"""Weil polynomials of degree <= 6: validation, factoring, l-adic data.

A q-Weil polynomial is monic over Z with every complex root of modulus
sqrt(q).  Validation checks the functional symmetry coeff(t^i) =
q^(g-i) * coeff(t^(2g-i)) exactly and the root moduli numerically; the
exact symmetry check is the authoritative gate, the numeric check is a
safety net against symmetric-but-wrong inputs.

Factoring uses a bounded exhaustive search: integer roots can only be
+-sqrt(q), and any irreducible quadratic factor t^2 + u t + v has
|u| <= 2 sqrt(q) and |v| <= q, so trial division over that box is a
complete factorization method at these degrees.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import isqrt
from typing import Sequence

import numpy as np

from .polygon import ValuationProfile, newton_polygon

ROOT_MODULUS_RTOL = 1e-9


class WeilError(ValueError):
    code = "WeilError"


class NotMonicError(WeilError):
    code = "NotMonic"


class BadDegreeError(WeilError):
    code = "BadDegree"


class SymmetryViolatedError(WeilError):
    code = "SymmetryViolated"


class RootModulusError(WeilError):
    code = "RootModulus"


class QNotPrimePowerError(WeilError):
    code = "QNotPrimePower"


class DegenerateClassError(WeilError):
    code = "DegenerateClass"


class UnsupportedShapeError(WeilError):
    code = "UnsupportedShape"


def split_prime_power(q: int) -> tuple[int, int]:
    """q = p^r with p prime, r >= 1."""
    if q < 2:
        raise QNotPrimePowerError(f"q={q} is not a prime power")
    for p in range(2, isqrt(q) + 1):
        if q % p == 0:
            r = 0
            m = q
            while m % p == 0:
                m //= p
                r += 1
            if m != 1:
                raise QNotPrimePowerError(f"q={q} is not a prime power")
            return p, r
    return q, 1


@dataclass(frozen=True)
class WeilPolynomial:
    """Validated Weil polynomial; coefficients highest degree first."""

    coeffs: tuple[int, ...]
    q: int
    p: int
    r: int

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    @property
    def g(self) -> int:
        return self.degree // 2

    def __call__(self, x: int) -> int:
        acc = 0
        for c in self.coeffs:
            acc = acc * x + c
        return acc


def parse_and_validate(coeffs: Sequence[int], q: int) -> WeilPolynomial:
    coeffs = tuple(int(c) for c in coeffs)
    p, r = split_prime_power(q)
    if not coeffs or coeffs[0] != 1:
        raise NotMonicError(f"leading coefficient must be 1, got {coeffs[:1]}")
    degree = len(coeffs) - 1
    if degree < 2 or degree % 2 or degree > 6:
        raise BadDegreeError(f"degree must be 2, 4 or 6, got {degree}")
    g = degree // 2
    # coeffs[j] multiplies t^(degree - j)
    for i in range(g + 1):
        low = coeffs[degree - i]
        high = coeffs[i]
        if low != q ** (g - i) * high:
            raise SymmetryViolatedError(
                f"coeff(t^{i}) = {low} != q^{g - i} * coeff(t^{degree - i}) = "
                f"{q ** (g - i) * high}"
            )
    # repeated roots wreck companion-matrix conditioning, so the numeric
    # safety net runs factor-wise on the squarefree part
    roots = np.roots(np.array(squarefree_part(coeffs), dtype=float))
    target = float(q) ** 0.5
    for root in roots:
        if abs(abs(root) - target) > ROOT_MODULUS_RTOL * target:
            raise RootModulusError(
                f"root near {root:.6g} has modulus {abs(root):.6g}, "
                f"expected sqrt({q}) = {target:.6g}"
            )
    return WeilPolynomial(coeffs=coeffs, q=q, p=p, r=r)


# ---------------------------------------------------------------------------
# integer polynomial arithmetic on highest-first coefficient tuples


def poly_mul(a: Sequence[int], b: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return tuple(out)


def poly_divmod(num: Sequence[int], den: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]] | None:
    """Exact integer division of monic polynomials; None if not exact over Z."""
    num = list(num)
    if den[0] != 1:
        raise ValueError("divisor must be monic")
    dn, dd = len(num) - 1, len(den) - 1
    if dn < dd:
        return None
    quot = [0] * (dn - dd + 1)
    for i in range(dn - dd + 1):
        q = num[i]
        quot[i] = q
        if q:
            for j, d in enumerate(den):
                num[i + j] -= q * d
    rem = num[dn - dd + 1 :]
    return tuple(quot), tuple(rem)


def poly_eval(coeffs: Sequence[int], x: int) -> int:
    acc = 0
    for c in coeffs:
        acc = acc * x + c
    return acc


def _exact_divide(num: Sequence[int], den: Sequence[int]) -> tuple[int, ...] | None:
    res = poly_divmod(num, den)
    if res is None:
        return None
    quot, rem = res
    if any(rem):
        return None
    return quot


def _rational_gcd(f: Sequence[int], g: Sequence[int]) -> list[Fraction]:
    """Monic gcd over Q of two integer polynomials (highest-first)."""

    def rem(a: list[Fraction], b: list[Fraction]) -> list[Fraction]:
        a = a[:]
        while len(a) >= len(b) and any(a):
            if a[0] == 0:
                a.pop(0)
                continue
            factor = a[0] / b[0]
            for j in range(len(b)):
                a[j] -= factor * b[j]
            a.pop(0)
        while a and a[0] == 0:
            a.pop(0)
        return a

    a = [Fraction(c) for c in f]
    b = [Fraction(c) for c in g]
    while b:
        a, b = b, rem(a, b)
    return [c / a[0] for c in a]


def _is_squarefree(coeffs: Sequence[int]) -> bool:
    """gcd(f, f') is constant, computed over Q."""
    d = len(coeffs) - 1
    fp = [(d - i) * coeffs[i] for i in range(d)]
    return len(_rational_gcd(coeffs, fp)) == 1


def squarefree_part(coeffs: Sequence[int]) -> tuple[int, ...]:
    """f / gcd(f, f'): same roots, all simple; integral by Gauss's lemma."""
    d = len(coeffs) - 1
    if d == 0:
        return tuple(coeffs)
    fp = [(d - i) * coeffs[i] for i in range(d)]
    g = _rational_gcd(coeffs, fp)
    num = [Fraction(c) for c in coeffs]
    quot: list[Fraction] = []
    for i in range(len(num) - len(g) + 1):
        q = num[i]
        quot.append(q)
        if q:
            for j, gc in enumerate(g):
                num[i + j] -= q * gc
    out = []
    for q in quot:
        if q.denominator != 1:
            raise ValueError("squarefree part is not integral")
        out.append(int(q))
    return tuple(out)


SHAPE_TAGS = (
    "Separable",
    "PSquare_g2",
    "P2Q",
    "P_RealSq",
    "Q2_RealSq",
    "ScalarPower",
    "CyclicIndexPRQS",
    "Unsupported",
)


@dataclass(frozen=True)
class FactoredShape:
    """Complete factorization into monic integer irreducibles, plus a tag
    naming which classification route applies."""

    weil: WeilPolynomial
    factors: tuple[tuple[tuple[int, ...], int], ...]  # (coeffs, multiplicity)
    tag: str

    def reassembled(self) -> tuple[int, ...]:
        out: tuple[int, ...] = (1,)
        for f, mult in self.factors:
            for _ in range(mult):
                out = poly_mul(out, f)
        return out


def _quadratic_divisors(coeffs: Sequence[int], q: int) -> list[tuple[int, ...]]:
    """All monic quadratic divisors within the Weil coefficient box."""
    found = []
    u_bound = isqrt(4 * q)
    for u in range(-u_bound, u_bound + 1):
        for v in range(-q, q + 1):
            cand = (1, u, v)
            if _exact_divide(coeffs, cand) is not None:
                found.append(cand)
    return found


def factor_weil(weil: WeilPolynomial) -> FactoredShape:
    """Factor into irreducibles and classify the multiplicity pattern.

    Linear factors (t -+ sqrt(q), only when q is a square) are stripped
    first; remaining irreducible factors then have even degree, and every
    quadratic one falls in the searched box, so the leftover after
    quadratic peeling is itself irreducible.
    """
    q = weil.q
    rest: tuple[int, ...] = weil.coeffs
    factors: dict[tuple[int, ...], int] = {}
    sq = isqrt(q)
    if sq * sq == q:
        for root in (sq, -sq):
            lin = (1, -root)
            while len(rest) > 1:
                quot = _exact_divide(rest, lin)
                if quot is None:
                    break
                factors[lin] = factors.get(lin, 0) + 1
                rest = quot
    for quad in _quadratic_divisors(rest, q):
        while True:
            quot = _exact_divide(rest, quad)
            if quot is None:
                break
            factors[quad] = factors.get(quad, 0) + 1
            rest = quot
    if len(rest) > 1:
        factors[rest] = factors.get(rest, 0) + 1
    shape = _classify_shape(weil, factors)
    ordered = tuple(sorted(factors.items(), key=lambda kv: (len(kv[0]), kv[0])))
    return FactoredShape(weil=weil, factors=ordered, tag=shape)


def _classify_shape(weil: WeilPolynomial, factors: dict[tuple[int, ...], int]) -> str:
    q = weil.q
    sq = isqrt(q)
    q_square = sq * sq == q
    linear_plus = (1, sq) if q_square else None  # t + sqrt(q), root -sqrt(q)
    linear_minus = (1, -sq) if q_square else None
    mults = sorted(factors.values(), reverse=True)
    squarefree = all(m == 1 for m in factors.values())

    if q_square and set(factors) <= {linear_plus, linear_minus}:
        u = factors.get(linear_minus, 0)
        w = factors.get(linear_plus, 0)
        if u == 0 or w == 0:
            return "ScalarPower"
        if squarefree:
            return "Separable"
        return "CyclicIndexPRQS"
    if squarefree:
        return "Separable"

    degree = weil.degree
    quads = {f: m for f, m in factors.items() if len(f) == 3}
    linears = {f: m for f, m in factors.items() if len(f) == 2}
    if degree == 4 and len(quads) == 1 and not linears:
        (pf, mult), = quads.items()
        if mult == 2:
            return "PSquare_g2"
    if degree == 6 and not linears and len(quads) == 2:
        m1, m2 = sorted(quads.values())
        if (m1, m2) == (1, 2):
            return "P2Q"
    if degree == 6 and len(linears) == 1:
        # f(0) = q^g > 0 rules out a lone odd-multiplicity real root, so a
        # single linear factor here always carries multiplicity 2
        (lf, lm), = linears.items()
        if lm == 2:
            cofactor = {f: m for f, m in factors.items() if f != lf}
            if all(m == 1 for m in cofactor.values()) and sum(
                (len(f) - 1) * m for f, m in cofactor.items()
            ) == 4:
                return "P_RealSq"
            if len(cofactor) == 1:
                (qf, qm), = cofactor.items()
                if len(qf) == 3 and qm == 2:
                    return "Q2_RealSq"
    return "Unsupported"


def root_valuations(coeffs: Sequence[int], l: int) -> ValuationProfile:
    """Descending l-adic valuations of the roots, from Newton polygon slopes."""
    return ValuationProfile.from_polygon(newton_polygon(coeffs, l))


def group_order(weil: WeilPolynomial) -> int:
    """f(1), the order of the group of rational points in the class."""
    value = weil(1)
    if value == 0:
        raise DegenerateClassError("f(1) = 0: degenerate class")
    return abs(value)


@dataclass(frozen=True)
class DispatchPlan:
    """Which classification routine to run, with its arguments.

    ``kind`` is one of: separable, p_square, p2q, p_realsq, q2_realsq,
    scalar, cyclic_index, unsupported.
    """

    kind: str
    P: tuple[int, ...] | None = None
    Q: tuple[int, ...] | None = None
    sign: str | None = None  # sign in (t +- sqrt q)
    r: int = 0
    s: int = 0


def shape_of(shape: FactoredShape) -> DispatchPlan:
    """Dispatch descriptor for a factored Weil polynomial."""
    weil = shape.weil
    q = weil.q
    sq = isqrt(q)
    factors = dict(shape.factors)
    tag = shape.tag
    if tag == "Separable":
        return DispatchPlan(kind="separable")
    if tag == "PSquare_g2":
        (pf,) = [f for f in factors if len(f) == 3]
        return DispatchPlan(kind="p_square", P=pf, r=2)
    if tag == "P2Q":
        (pf,) = [f for f, m in factors.items() if m == 2]
        (qf,) = [f for f, m in factors.items() if m == 1]
        return DispatchPlan(kind="p2q", P=pf, Q=qf)
    if tag == "P_RealSq":
        (lf,) = [f for f in factors if len(f) == 2]
        cofactor: tuple[int, ...] = (1,)
        for f, m in factors.items():
            if f != lf:
                for _ in range(m):
                    cofactor = poly_mul(cofactor, f)
        sign = "plus" if lf[1] > 0 else "minus"
        return DispatchPlan(kind="p_realsq", P=cofactor, sign=sign, s=2)
    if tag == "Q2_RealSq":
        (lf,) = [f for f in factors if len(f) == 2]
        (qf,) = [f for f in factors if len(f) == 3]
        sign = "plus" if lf[1] > 0 else "minus"
        return DispatchPlan(kind="q2_realsq", Q=qf, sign=sign, r=2, s=2)
    if tag == "ScalarPower":
        (lf, mult), = factors.items()
        sign = "plus" if lf[1] > 0 else "minus"
        return DispatchPlan(kind="scalar", sign=sign, s=mult)
    if tag == "CyclicIndexPRQS":
        u = factors.get((1, -sq), 0)  # multiplicity of (t - sqrt q)
        w = factors.get((1, sq), 0)
        r, s = min(u, w), abs(u - w)
        # operator-side factors of f(1-t): P has roots 1 -+ sqrt(q)
        P = (1, -2, 1 - q)
        if u >= w:
            z = 1 - sq  # more copies of root sqrt(q): Q(t) = t - (1 - sqrt q)
        else:
            z = 1 + sq
        Q = (1, -z)
        return DispatchPlan(kind="cyclic_index", P=P, Q=Q, r=r, s=s)
    return DispatchPlan(kind="unsupported")
