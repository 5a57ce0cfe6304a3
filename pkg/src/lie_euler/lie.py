"""Free Lie algebra characters, symplectic derivations and stable Sp-invariants.

The stable dimension of the Sp-invariants of a GL-module with character
``f`` is ``<f, B>`` where ``B = exp(sum_m (p_m^2 - p_{2m}) / 2m)`` is the
Littlewood series (the sum of Schur functions with even column lengths).
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb

from .characters import even_column_character_sums
from .partitions import Partition, divisors, mobius
from .symfunc import SymmetricFunction, hall_inner, p, sf_mul

__all__ = [
    "InvariantDimensionError",
    "LieCharacter",
    "DerivationCharacter",
    "InvariantSeries",
    "lie_character",
    "derivation_character",
    "littlewood_series",
    "invariant_weight",
    "pair_invariants",
    "sp_invariant_dim",
    "sp_invariant_dim_oracle",
]


class InvariantDimensionError(ArithmeticError):
    """An invariant pairing came out non-integral or negative."""


@dataclass(frozen=True)
class LieCharacter:
    k: int
    char: SymmetricFunction


@dataclass(frozen=True)
class DerivationCharacter:
    k: int
    char: SymmetricFunction


@dataclass(frozen=True)
class InvariantSeries:
    max_degree: int
    series: SymmetricFunction

    def part(self, d: int) -> SymmetricFunction:
        return self.series.homogeneous_part(d)


@lru_cache(maxsize=None)
def lie_character(k: int) -> LieCharacter:
    """Witt formula: ``L_k = (1/k) sum_{d | k} mu(d) p_d^{k/d}``."""
    if k < 1:
        raise ValueError(f"Lie degree must be >= 1, got {k}")
    terms = {}
    for d in divisors(k):
        mu = mobius(d)
        if mu:
            terms[(d,) * (k // d)] = Fraction(mu, k)
    return LieCharacter(k, SymmetricFunction(terms))


@lru_cache(maxsize=None)
def derivation_character(k: int) -> DerivationCharacter:
    """Character of the degree-k symplectic derivations, ``H * L_{k+1} - L_{k+2}``.

    The bracket ``H (x) L_{k+1} -> L_{k+2}`` is onto, so the kernel's
    character is the difference.
    """
    if k < 1:
        raise ValueError(f"derivation degree must be >= 1 (degree 0 is sp, excluded), got {k}")
    char = sf_mul(p(1), lie_character(k + 1).char) - lie_character(k + 2).char
    return DerivationCharacter(k, char)


_littlewood_parts: list[SymmetricFunction] = [SymmetricFunction.one()]


def littlewood_series(max_degree: int) -> InvariantSeries:
    """All homogeneous parts of degree <= ``max_degree`` of the Littlewood series.

    Built by the exponential recurrence ``n B_n = sum_m (p_m^2 - p_2m) B_{n-2m}``
    and cached, so later calls only extend it.
    """
    if max_degree < 0:
        raise ValueError(f"max_degree must be non-negative, got {max_degree}")
    parts = _littlewood_parts
    while len(parts) <= max_degree:
        n = len(parts)
        acc = SymmetricFunction.zero()
        for m in range(1, n // 2 + 1):
            acc = acc + sf_mul(p(m, m) - p(2 * m), parts[n - 2 * m])
        parts.append(acc / n)
    series = SymmetricFunction.zero()
    for d in range(max_degree + 1):
        series = series + parts[d]
    return InvariantSeries(max_degree, series)


def _littlewood_part(d: int) -> SymmetricFunction:
    littlewood_series(d)
    return _littlewood_parts[d]


@lru_cache(maxsize=None)
def _moment(j: int, n: int) -> int:
    # n-th moment of a normal variable with variance j and mean -1 (j even) or 0 (j odd)
    if j % 2:
        if n % 2:
            return 0
        dfact = 1
        for t in range(n - 1, 0, -2):
            dfact *= t
        return j ** (n // 2) * dfact
    total = 0
    dfact = 1
    for a in range(n // 2 + 1):
        if a:
            dfact *= 2 * a - 1
        total += comb(n, 2 * a) * (-1) ** (n - 2 * a) * j**a * dfact
    return total


@lru_cache(maxsize=1 << 20)
def invariant_weight(lam: Partition) -> int:
    """``<p_lam, B> = z_lam * [p_lam] B`` in closed form.

    ``B`` factors over part sizes, so this is a product of Gaussian
    moments: ``p_j`` behaves like an independent normal variable of
    variance ``j`` and mean ``-1`` for even ``j``, ``0`` for odd ``j``.
    """
    w = 1
    for j, m in Counter(lam).items():
        w *= _moment(j, m)
        if not w:
            return 0
    return w


def _as_dimension(value: Fraction, what: str) -> int:
    if value.denominator != 1 or value < 0:
        raise InvariantDimensionError(f"{what} is not a non-negative integer: {value}")
    return int(value)


def pair_invariants(f: SymmetricFunction) -> Fraction:
    """``<f, B>`` through :func:`invariant_weight`, without materialising ``B``."""
    return sum((c * invariant_weight(lam) for lam, c in f.items()), Fraction(0))


def sp_invariant_dim(f: SymmetricFunction) -> int:
    """Stable dimension of Sp-invariants of the module with character ``f``."""
    if not f.is_homogeneous():
        raise ValueError("sp_invariant_dim needs a homogeneous character")
    d = f.degree()
    if d % 2:
        return 0
    return _as_dimension(hall_inner(f, _littlewood_part(d)), "Sp-invariant dimension")


def sp_invariant_dim_oracle(f: SymmetricFunction) -> int:
    """Independent route: Murnaghan-Nakayama characters summed over even-column shapes.

    Equals ``sum_{lam with even columns} <f, s_lam>``.
    """
    if not f.is_homogeneous():
        raise ValueError("sp_invariant_dim_oracle needs a homogeneous character")
    psi = even_column_character_sums(f.degree())
    total = Fraction(0)
    for mu, c in f.items():
        v = psi.get(mu)
        if v:
            total += c * v
    return _as_dimension(total, "oracle Sp-invariant dimension")
