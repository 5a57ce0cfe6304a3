"""Symmetric-group characters by the Murnaghan-Nakayama rule.

Rim hooks are removed on the beta-set (abacus) of a shape: moving a bead
from ``b`` to ``b - r`` removes an r-rim hook whose leg length is the
number of beads strictly between the two positions.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

from .partitions import Partition, even_column_partitions, partitions_of
from .symfunc import SymmetricFunction

__all__ = [
    "rim_hooks",
    "character_value",
    "schur_expand",
    "even_column_character_sums",
]


@lru_cache(maxsize=None)
def rim_hooks(shape: Partition, r: int) -> tuple[tuple[Partition, int], ...]:
    """All ``(shape minus an r-rim hook, sign)`` pairs, sign = (-1)**height."""
    ell = len(shape)
    beta = [shape[i] + ell - 1 - i for i in range(ell)]
    occupied = set(beta)
    out = []
    for idx, b in enumerate(beta):
        t = b - r
        if t < 0 or t in occupied:
            continue
        height = sum(1 for c in beta if t < c < b)
        new_beta = sorted(beta[:idx] + [t] + beta[idx + 1:], reverse=True)
        new_shape = tuple(x - (ell - 1 - i) for i, x in enumerate(new_beta))
        new_shape = tuple(x for x in new_shape if x > 0)
        out.append((new_shape, -1 if height % 2 else 1))
    return tuple(out)


@lru_cache(maxsize=None)
def _mn(shape: Partition, cycles: Partition) -> int:
    if not cycles:
        return 1 if not shape else 0
    r, rest = cycles[0], cycles[1:]
    return sum(sign * _mn(sub, rest) for sub, sign in rim_hooks(shape, r))


def character_value(lam: Partition, mu: Partition) -> int:
    """Irreducible character ``chi^lam`` of S_n at cycle type ``mu``."""
    lam, mu = tuple(lam), tuple(mu)
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{lam}| != |{mu}|")
    return _mn(lam, tuple(sorted(mu, reverse=True)))


def schur_expand(f: SymmetricFunction) -> dict[Partition, Fraction]:
    """Schur coefficients ``<f, s_lam>`` for every partition of ``deg f``.

    Zero coefficients are omitted.  Practical up to degree ~16.
    """
    if not f:
        return {}
    if not f.is_homogeneous():
        raise ValueError("schur_expand needs a homogeneous symmetric function")
    n = f.degree()
    out = {}
    for lam in partitions_of(n):
        c = sum((a * _mn(lam, mu) for mu, a in f.items()), Fraction(0))
        if c:
            out[lam] = c
    return out


@lru_cache(maxsize=None)
def even_column_character_sums(n: int) -> dict[Partition, int]:
    """``psi(mu) = sum of chi^lam(mu)`` over shapes lam of n with even columns.

    Computed for every cycle type mu of n by skewing: parts of mu are
    stripped largest first, and the running signed combination of shapes
    is shared along common prefixes.  Zero values are omitted.
    """
    out: dict[Partition, int] = {}
    if n % 2:
        return out
    start = {lam: 1 for lam in even_column_partitions(n)}

    def walk(state: dict[Partition, int], remaining: int, max_part: int, prefix: Partition):
        if remaining == 0:
            v = state.get((), 0)
            if v:
                out[prefix] = v
            return
        for r in range(min(remaining, max_part), 0, -1):
            nxt: dict[Partition, int] = {}
            for shape, c in state.items():
                for sub, sign in rim_hooks(shape, r):
                    v = nxt.get(sub, 0) + sign * c
                    if v:
                        nxt[sub] = v
                    else:
                        nxt.pop(sub, None)
            if nxt:
                walk(nxt, remaining - r, r, prefix + (r,))

    walk(start, n, n, ())
    return out
