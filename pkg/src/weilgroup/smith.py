"""Feasibility of Smith-invariant triples for block triangular matrices.

Over the local ring Z_l, partitions a (length s), b (length t) and c
(length s+t) are the Smith invariants of some

    C = [[A, X], [0, B]]

with A, B of invariants a, b exactly when the trace equality
sum(a) + sum(b) = sum(c) holds together with the inequalities

    sum_{i in I & M_s} a_i + sum_{j in J & M_t} b_j >= sum_{k in K} c_k

for the block-restricted Horn triples.  The strict restriction T^{s,t}_p
suffices; the tilde restriction is kept around for cross-checks.

Zero parts are meaningful (they fix the ambient sizes), so lengths are
enforced exactly and callers pad explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

from .horn import HornTable, HornTriple, enumerate_T_st
from .partitions import as_partition, partitions_of

DESK_SCALE_TOTAL = 6


@dataclass(frozen=True)
class SmithInequality:
    """One inequality sum_{a_idx} a + sum_{b_idx} b >= sum_{c_idx} c.

    Indices are 1-based; ``a_idx`` lives in M_s, ``b_idx`` in M_t and
    ``c_idx`` in M_{s+t}.  ``triple`` records the originating Horn triple.
    """

    a_idx: tuple[int, ...]
    b_idx: tuple[int, ...]
    c_idx: tuple[int, ...]
    triple: HornTriple | None = None

    def holds(self, a: Sequence[int], b: Sequence[int], c: Sequence[int]) -> bool:
        lhs = sum(a[i - 1] for i in self.a_idx) + sum(b[j - 1] for j in self.b_idx)
        return lhs >= sum(c[k - 1] for k in self.c_idx)

    def key(self) -> tuple:
        return (self.a_idx, self.b_idx, self.c_idx)

    def pretty(self) -> str:
        lhs = [f"a{i}" for i in self.a_idx] + [f"b{j}" for j in self.b_idx]
        rhs = [f"c{k}" for k in self.c_idx]
        return f"{'+'.join(lhs) or '0'} >= {'+'.join(rhs) or '0'}"

    def scalar_b_key(self) -> tuple:
        """Key after identifying b_1 = b_2 = ... = b (scalar b block)."""
        return (self.a_idx, len(self.b_idx), self.c_idx)

    def pretty_scalar_b(self) -> str:
        lhs = [f"a{i}" for i in self.a_idx]
        nb = len(self.b_idx)
        if nb == 1:
            lhs.append("b")
        elif nb > 1:
            lhs.append(f"{nb}b")
        rhs = [f"c{k}" for k in self.c_idx]
        return f"{'+'.join(lhs) or '0'} >= {'+'.join(rhs) or '0'}"


@dataclass(frozen=True)
class SmithSystem:
    s: int
    t: int
    inequalities: tuple[SmithInequality, ...]

    def pretty_lines(self) -> list[str]:
        header = (
            f"a1+..+a{self.s} + b1+..+b{self.t} == c1+..+c{self.s + self.t}"
        )
        return [header] + [iq.pretty() for iq in self.inequalities]


def _restricted(triple: HornTriple, s: int, t: int) -> SmithInequality:
    I, J, K = triple
    return SmithInequality(
        a_idx=tuple(i for i in I if i <= s),
        b_idx=tuple(j for j in J if j <= t),
        c_idx=K,
        triple=triple,
    )


def inequality_system(
    s: int,
    t: int,
    mode: str = "strict",
    *,
    table: HornTable | None = None,
) -> SmithSystem:
    """Essential inequalities between a, b and c at block sizes (s, t).

    One inequality per block-restricted triple with 1 <= p <= s+t-1; the
    p = s+t triple restates the trace equality and is omitted.
    """
    if s < 1 or t < 1:
        raise ValueError("need s, t >= 1")
    if s + t > DESK_SCALE_TOTAL:
        raise ValueError(
            f"s+t={s + t} exceeds desk scale {DESK_SCALE_TOTAL}"
        )
    if table is None:
        return _inequality_system_cached(s, t, mode)
    return _build_system(s, t, mode, table)


@lru_cache(maxsize=None)
def _inequality_system_cached(s: int, t: int, mode: str) -> SmithSystem:
    return _build_system(s, t, mode, None)


def _build_system(s: int, t: int, mode: str, table: HornTable | None) -> SmithSystem:
    n = s + t
    ineqs = []
    for p in range(1, n):
        for tri in enumerate_T_st(s, t, p, mode, table=table):
            ineqs.append(_restricted(tri, s, t))
    return SmithSystem(s=s, t=t, inequalities=tuple(ineqs))


def feasible_triple(
    a: Sequence[int],
    b: Sequence[int],
    c: Sequence[int],
    *,
    table: HornTable | None = None,
) -> bool:
    """True iff (a, b, c) are Smith invariants of some block triangular C.

    Lengths fix the block sizes and must be exact; a total mismatch is an
    infeasible triple, not an error.
    """
    a = as_partition(a)
    b = as_partition(b)
    s, t = len(a), len(b)
    c = as_partition(c, length=s + t)
    if sum(a) + sum(b) != sum(c):
        return False
    system = inequality_system(s, t, "strict", table=table)
    return all(iq.holds(a, b, c) for iq in system.inequalities)


def enumerate_cokernels(
    a: Sequence[int],
    b: Sequence[int],
    *,
    table: HornTable | None = None,
) -> tuple[tuple[int, ...], ...]:
    """All c realizable from (a, b), in descending lexicographic order.

    Search space: partitions of sum(a)+sum(b) into s+t parts, pruned by
    c_1 <= a_1 + b_1 (a valid consequence of the size-one inequalities).
    """
    a = as_partition(a)
    b = as_partition(b)
    s, t = len(a), len(b)
    total = sum(a) + sum(b)
    top = (a[0] if a else 0) + (b[0] if b else 0)
    system = inequality_system(s, t, "strict", table=table)
    out = []
    for c in partitions_of(total, s + t, max_part=min(total, top) if total else 0):
        if all(iq.holds(a, b, c) for iq in system.inequalities):
            out.append(c)
    return tuple(out)
