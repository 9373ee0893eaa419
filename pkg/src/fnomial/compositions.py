"""Streaming enumeration of integer compositions in lexicographic order."""

from __future__ import annotations

from math import comb
from typing import Iterator, Optional, Tuple

Composition = Tuple[int, ...]


def compositions_of(m: int, s: int) -> Iterator[Composition]:
    """Yield every composition of m into exactly s positive parts.

    Tuples come out in lexicographic order.  Only the current tuple is held
    in memory; each successor is derived from it in place.
    """
    if m < 0 or s < 0:
        raise ValueError(f"need m, s >= 0, got m={m}, s={s}")
    if s == 0:
        if m == 0:
            yield ()
        return
    if s > m:
        return
    parts = [1] * (s - 1) + [m - s + 1]
    while True:
        yield tuple(parts)
        # find the rightmost i whose suffix parts[i+1:] can give up one unit
        i = s - 2
        tail = parts[-1]
        while i >= 0 and tail == s - 1 - i:
            tail += parts[i]
            i -= 1
        if i < 0:
            return
        parts[i] += 1
        for j in range(i + 1, s - 1):
            parts[j] = 1
        parts[-1] = tail - 1 - (s - 2 - i)


def all_compositions(m: int) -> Iterator[Composition]:
    """All 2^(m-1) compositions of m >= 1, grouped by part count s = 1..m."""
    if m < 1:
        raise ValueError(f"need m >= 1, got {m}")
    for s in range(1, m + 1):
        yield from compositions_of(m, s)


def count_compositions(m: int, s: Optional[int] = None) -> int:
    """Closed-form count: C(m-1, s-1) for fixed s, 2^(m-1) over all s."""
    if s is None:
        return 1 << (m - 1) if m >= 1 else 1
    if s == 0:
        return 1 if m == 0 else 0
    return comb(m - 1, s - 1) if m >= 1 else 0
