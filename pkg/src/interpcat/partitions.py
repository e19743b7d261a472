"""Integer partition utilities shared across the library."""

from __future__ import annotations

import math
from functools import lru_cache

Partition = tuple[int, ...]


def check_partition(lam) -> Partition:
    try:
        lam = tuple(int(x) for x in lam)
    except (TypeError, ValueError) as exc:
        raise ValueError(f"{lam!r} is not a partition (expected integers)") from exc
    if any(a <= 0 for a in lam) or any(a < b for a, b in zip(lam, lam[1:])):
        raise ValueError(f"{lam} is not a partition (weakly decreasing, positive)")
    return lam


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for row in lam if row > j) for j in range(lam[0]))


def contains(lam: Partition, mu: Partition) -> bool:
    """mu fits inside lam row by row."""
    if len(mu) > len(lam):
        return False
    return all(m <= l for l, m in zip(lam, mu))


def hook_product(lam: Partition) -> int:
    conj = conjugate(lam)
    out = 1
    for i, row in enumerate(lam):
        for j in range(row):
            out *= row - j + conj[j] - i - 1
    return out


def sn_irrep_dimension(lam: Partition) -> int:
    """Number of standard Young tableaux (hook length formula)."""
    return math.factorial(sum(lam)) // hook_product(lam)


@lru_cache(maxsize=None)
def partitions_of(n: int) -> tuple[Partition, ...]:
    """Partitions of n, largest first part first."""
    if n == 0:
        return ((),)
    out: list[Partition] = []

    def rec(remaining: int, cap: int, prefix: tuple[int, ...]):
        if remaining == 0:
            out.append(prefix)
            return
        for part in range(min(cap, remaining), 0, -1):
            rec(remaining - part, part, prefix + (part,))

    rec(n, n, ())
    return tuple(out)


def sub_partitions(lam: Partition) -> list[Partition]:
    """All partitions contained in lam, any size."""
    out: list[Partition] = []

    def rec(row: int, cap: int, prefix: tuple[int, ...]):
        out.append(prefix)
        if row == len(lam):
            return
        for part in range(min(cap, lam[row]), 0, -1):
            rec(row + 1, part, prefix + (part,))

    rec(0, lam[0] if lam else 0, ())
    return out


def durfee(lam: Partition) -> int:
    """Side of the largest square inside lam."""
    return sum(1 for i, row in enumerate(lam) if row >= i + 1)


def bell_number(n: int) -> int:
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for v in row:
            nxt.append(nxt[-1] + v)
        row = nxt
    return row[0]


def double_factorial_odd(n: int) -> int:
    """(n-1)!! for even n: the number of perfect matchings of n points."""
    if n % 2:
        raise ValueError("no perfect matchings of an odd set")
    out = 1
    for k in range(1, n, 2):
        out *= k
    return out
