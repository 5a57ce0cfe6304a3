"""Integer partitions and the small number-theoretic helpers built on them.

Partitions are plain tuples of positive integers in weakly decreasing
order; ``()`` is the empty partition of 0.
"""
from __future__ import annotations

from collections import Counter
from functools import lru_cache
from math import factorial
from typing import Iterator, Sequence

Partition = tuple[int, ...]


def make_partition(parts: Sequence[int]) -> Partition:
    """Validate and normalise ``parts`` (sorted, descending) into a Partition."""
    out = tuple(sorted((int(p) for p in parts), reverse=True))
    if out and out[-1] <= 0:
        raise ValueError(f"partition parts must be positive, got {list(parts)!r}")
    return out


def is_partition(parts: Sequence[int]) -> bool:
    if any(p <= 0 for p in parts):
        return False
    return all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))


def _partitions(n: int, max_part: int) -> Iterator[Partition]:
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in _partitions(n - first, first):
            yield (first,) + rest


def partitions_of(n: int, max_part: int | None = None) -> list[Partition]:
    """All partitions of ``n`` in descending lexicographic order.

    >>> partitions_of(4)
    [(4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)]
    """
    if n < 0:
        raise ValueError(f"n must be non-negative, got {n}")
    if max_part is None:
        max_part = n
    if max_part < 0:
        raise ValueError(f"max_part must be positive, got {max_part}")
    return list(_partitions(n, max_part))


def multiplicities(lam: Partition) -> dict[int, int]:
    return dict(Counter(lam))


def z_factor(lam: Partition) -> int:
    """Centraliser order ``prod_i i**m_i * m_i!`` of cycle type ``lam``."""
    z = 1
    for part, mult in Counter(lam).items():
        z *= part**mult * factorial(mult)
    return z


def conjugate(lam: Partition) -> Partition:
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def has_even_columns(lam: Partition) -> bool:
    """True when every column of the Young diagram has even length."""
    return all(c % 2 == 0 for c in conjugate(lam))


def even_column_partitions(n: int) -> list[Partition]:
    """Partitions of ``n`` whose conjugate has only even parts."""
    if n % 2:
        return []
    out = [conjugate(tuple(2 * p for p in nu)) for nu in partitions_of(n // 2)]
    return sorted(out, reverse=True)


def canonical_key(lam: Partition) -> tuple[int, tuple[int, ...]]:
    """Sort key: by degree, then descending lexicographic within a degree."""
    return (sum(lam), tuple(-p for p in lam))


@lru_cache(maxsize=None)
def mobius(n: int) -> int:
    if n < 1:
        raise ValueError(f"mobius is defined for n >= 1, got {n}")
    result = 1
    p = 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            result = -result
        p += 1
    if n > 1:
        result = -result
    return result


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]
