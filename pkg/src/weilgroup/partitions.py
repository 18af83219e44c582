"""Small helpers for integer partitions used as exponent tuples.

A partition here is a tuple of weakly decreasing nonnegative integers.
Trailing zeros are meaningful: they fix the ambient length (the size of
the matrix or the number of group generators), so callers pad explicitly.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence


def is_partition(parts: Sequence[int]) -> bool:
    return all(isinstance(x, int) and x >= 0 for x in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def as_partition(parts: Iterable[int], length: int | None = None) -> tuple[int, ...]:
    """Validate and freeze a partition, optionally enforcing an exact length."""
    t = tuple(int(x) for x in parts)
    if not is_partition(t):
        raise ValueError(f"not a weakly decreasing nonnegative tuple: {t}")
    if length is not None and len(t) != length:
        raise ValueError(f"expected exactly {length} parts, got {len(t)}: {t}")
    return t


def pad(parts: Sequence[int], length: int) -> tuple[int, ...]:
    if len(parts) > length:
        raise ValueError(f"{parts} has more than {length} parts")
    return tuple(parts) + (0,) * (length - len(parts))


def merge_sorted(*parts: Sequence[int]) -> tuple[int, ...]:
    """Concatenate and resort descending (exponents of a direct sum)."""
    out: list[int] = []
    for p in parts:
        out.extend(p)
    return tuple(sorted(out, reverse=True))


def partitions_of(total: int, max_len: int, max_part: int | None = None) -> Iterator[tuple[int, ...]]:
    """All partitions of ``total`` into at most ``max_len`` parts, padded
    with zeros to exactly ``max_len`` parts, in descending lex order."""
    if max_part is None:
        max_part = total
    def rec(remaining: int, slots: int, bound: int) -> Iterator[tuple[int, ...]]:
        if slots == 0:
            if remaining == 0:
                yield ()
            return
        lo = -(-remaining // slots)  # ceil: keep weakly decreasing feasible
        for first in range(min(bound, remaining), lo - 1, -1):
            if first == 0 and remaining > 0:
                continue
            for rest in rec(remaining - first, slots - 1, first):
                yield (first,) + rest
    yield from rec(total, max_len, max_part)


def partitions_up_to(max_total: int, max_len: int, max_part: int) -> Iterator[tuple[int, ...]]:
    for total in range(max_total + 1):
        yield from partitions_of(total, max_len, max_part)
