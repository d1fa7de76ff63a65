"""Integer partitions: generation, conjugation, basic queries.

A partition is a plain tuple of weakly decreasing positive integers; the
empty tuple is the unique partition of 0. No trailing zeros are ever stored,
so tuple equality is partition equality.
"""

from __future__ import annotations

from typing import Iterator

Partition = tuple[int, ...]


def is_partition(parts) -> bool:
    """True if `parts` is a weakly decreasing sequence of positive integers."""
    parts = tuple(parts)
    return all(isinstance(p, int) and p >= 1 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )


def check_partition(parts) -> Partition:
    """Coerce to a tuple and raise ValueError if it is not a valid partition."""
    lam = tuple(parts)
    if not is_partition(lam):
        raise ValueError(f"not a partition: {lam!r}")
    return lam


def weight(lam: Partition) -> int:
    return sum(lam)


def iter_partitions(n: int, max_parts: int) -> Iterator[Partition]:
    """Yield the partitions of n with at most max_parts parts, in
    reverse-lexicographic order (largest first part first)."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if max_parts < 1:
        raise ValueError("max_parts must be positive")

    def rec(remaining: int, cap: int, slots: int, prefix: Partition) -> Iterator[Partition]:
        if remaining == 0:
            yield prefix
            return
        if slots == 0:
            return
        # largest feasible first part first => reverse-lexicographic output
        for k in range(min(remaining, cap), 0, -1):
            if k * slots < remaining:
                break
            yield from rec(remaining - k, k, slots - 1, prefix + (k,))

    yield from rec(n, n, max_parts, ())


def gen_partitions(n: int, max_parts: int) -> list[Partition]:
    """All partitions of n with length <= max_parts, reverse-lexicographic."""
    return list(iter_partitions(n, max_parts))


def conjugate(lam: Partition) -> Partition:
    """Transpose of the Young diagram: part j of the result counts the parts
    of `lam` that are >= j."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p >= j) for j in range(1, lam[0] + 1))
