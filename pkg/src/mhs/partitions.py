"""Integer partition enumeration and multiset arrangement counts."""

from __future__ import annotations

from collections import Counter
from math import factorial

__all__ = ["arrangement_count", "enumerate_partitions", "partitions_of"]


def enumerate_partitions(j: int, r: int) -> list[tuple[int, ...]]:
    """All partitions of j into exactly r parts, non-increasing, largest first."""
    if r < 1 or r > j:
        return []
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], remaining: int, parts_left: int, cap: int):
        if parts_left == 0:
            if remaining == 0:
                out.append(prefix)
            return
        low = -(-remaining // parts_left)  # ceil: keep parts non-increasing
        for part in range(min(cap, remaining - parts_left + 1), low - 1, -1):
            extend(prefix + (part,), remaining - part, parts_left - 1, part)

    extend((), j, r, j)
    return out


def partitions_of(d: int) -> list[tuple[int, ...]]:
    """All partitions of d, grouped by increasing number of parts."""
    return [lam for r in range(1, d + 1) for lam in enumerate_partitions(d, r)]


def arrangement_count(lam: tuple[int, ...]) -> int:
    """Distinct orderings of the multiset lam: r! / prod of multiplicity factorials."""
    count = factorial(len(lam))
    for mult in Counter(lam).values():
        count //= factorial(mult)
    return count
