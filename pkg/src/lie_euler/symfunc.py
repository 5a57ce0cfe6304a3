"""Sparse symmetric functions over Q in the power-sum basis.

A :class:`SymmetricFunction` maps partitions ``lam`` to the rational
coefficient of ``p_lam = p_{lam_1} p_{lam_2} ...``.  Characters of
polynomial GL-modules live here; tensor products are ``*`` and exterior
powers are computed by :func:`exterior_plethysm`.
"""
from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from numbers import Rational
from types import MappingProxyType
from typing import Iterable, Iterator, Mapping

from .partitions import Partition, canonical_key, is_partition, z_factor

__all__ = [
    "SymmetricFunction",
    "SymFuncFormatError",
    "p",
    "sf_mul",
    "plethysm_power",
    "exterior_plethysm",
    "hall_inner",
    "specialize_dimension",
]


class SymFuncFormatError(ValueError):
    """Raised when a SYMFUNC text payload cannot be parsed."""


def _merge(a: Partition, b: Partition) -> Partition:
    if not a:
        return b
    if not b:
        return a
    return tuple(sorted(a + b, reverse=True))


class SymmetricFunction:
    """Immutable sparse element of the ring of symmetric functions.

    Zero coefficients are never stored.  Coefficients are ``Fraction``.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Mapping[Partition, object] | Iterable[tuple[Partition, object]] = ()):
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Partition, Fraction] = {}
        for lam, c in items:
            lam = tuple(lam)
            if not is_partition(lam):
                raise ValueError(f"not a partition: {lam!r}")
            c = Fraction(c)
            if c:
                clean[lam] = clean.get(lam, Fraction(0)) + c
        self._terms = {k: v for k, v in clean.items() if v}

    @classmethod
    def _trusted(cls, terms: dict[Partition, Fraction]) -> "SymmetricFunction":
        # caller guarantees sorted keys and no zero values
        obj = cls.__new__(cls)
        obj._terms = terms
        return obj

    @classmethod
    def zero(cls) -> "SymmetricFunction":
        return cls._trusted({})

    @classmethod
    def one(cls) -> "SymmetricFunction":
        return cls._trusted({(): Fraction(1)})

    # -- mapping-ish access -------------------------------------------------
    @property
    def terms(self) -> Mapping[Partition, Fraction]:
        return MappingProxyType(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def __iter__(self) -> Iterator[Partition]:
        return iter(self._terms)

    def items(self):
        return self._terms.items()

    def coefficient(self, lam: Partition) -> Fraction:
        return self._terms.get(tuple(lam), Fraction(0))

    def __bool__(self) -> bool:
        return bool(self._terms)

    # -- grading ------------------------------------------------------------
    def degrees(self) -> set[int]:
        return {sum(lam) for lam in self._terms}

    def is_homogeneous(self) -> bool:
        return len(self.degrees()) <= 1

    def degree(self) -> int:
        """Top degree (0 for the zero function)."""
        return max(self.degrees(), default=0)

    def homogeneous_part(self, d: int) -> "SymmetricFunction":
        return SymmetricFunction._trusted({k: v for k, v in self._terms.items() if sum(k) == d})

    # -- arithmetic ---------------------------------------------------------
    def _combine(self, other: "SymmetricFunction", sign: int) -> "SymmetricFunction":
        out = dict(self._terms)
        for lam, c in other._terms.items():
            v = out.get(lam, 0) + sign * c
            if v:
                out[lam] = v
            else:
                out.pop(lam, None)
        return SymmetricFunction._trusted(out)

    def __add__(self, other):
        if isinstance(other, (int, Rational)):
            other = SymmetricFunction.one() * other
        if not isinstance(other, SymmetricFunction):
            return NotImplemented
        return self._combine(other, 1)

    __radd__ = __add__

    def __sub__(self, other):
        if isinstance(other, (int, Rational)):
            other = SymmetricFunction.one() * other
        if not isinstance(other, SymmetricFunction):
            return NotImplemented
        return self._combine(other, -1)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return SymmetricFunction._trusted({k: -v for k, v in self._terms.items()})

    def __mul__(self, other):
        if isinstance(other, SymmetricFunction):
            return sf_mul(self, other)
        if isinstance(other, (int, Rational)):
            c = Fraction(other)
            if not c:
                return SymmetricFunction.zero()
            return SymmetricFunction._trusted({k: v * c for k, v in self._terms.items()})
        return NotImplemented

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Rational)):
            return self * (1 / Fraction(other))
        return NotImplemented

    def __eq__(self, other):
        if isinstance(other, (int, Rational)):
            other = SymmetricFunction.one() * other
        if not isinstance(other, SymmetricFunction):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def __repr__(self):
        if not self._terms:
            return "0"
        parts = []
        for lam in sorted(self._terms, key=canonical_key):
            c = self._terms[lam]
            name = "p[" + ",".join(map(str, lam)) + "]" if lam else "1"
            parts.append(f"({c})*{name}")
        return " + ".join(parts)

    # -- serialization ------------------------------------------------------
    def to_text(self) -> str:
        """Canonical ``SYMFUNC v1`` text form (byte-stable)."""
        keys = sorted(self._terms, key=canonical_key)
        lines = [f"SYMFUNC v1 degree={self.degree()} terms={len(keys)}"]
        for lam in keys:
            c = self._terms[lam]
            label = ",".join(map(str, lam)) if lam else "-"
            lines.append(f"{label}: {c.numerator}/{c.denominator}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "SymmetricFunction":
        lines = text.splitlines()
        if not lines:
            raise SymFuncFormatError("empty payload")
        head = lines[0].split()
        if len(head) != 4 or head[:2] != ["SYMFUNC", "v1"]:
            raise SymFuncFormatError(f"bad header {lines[0]!r}")
        try:
            degree = int(head[2].removeprefix("degree="))
            nterms = int(head[3].removeprefix("terms="))
        except ValueError as exc:
            raise SymFuncFormatError(f"bad header {lines[0]!r}") from exc
        body = lines[1:]
        if len(body) != nterms:
            raise SymFuncFormatError(f"expected {nterms} terms, found {len(body)}")
        terms: dict[Partition, Fraction] = {}
        for line in body:
            label, sep, value = line.partition(": ")
            num, slash, den = value.partition("/")
            if not sep or not slash:
                raise SymFuncFormatError(f"bad term line {line!r}")
            try:
                lam = () if label == "-" else tuple(int(x) for x in label.split(","))
                c = Fraction(int(num), int(den))
            except (ValueError, ZeroDivisionError) as exc:
                raise SymFuncFormatError(f"bad term line {line!r}") from exc
            if not is_partition(lam) or not c or lam in terms:
                raise SymFuncFormatError(f"bad term line {line!r}")
            terms[lam] = c
        f = cls._trusted(terms)
        if f.degree() != degree:
            raise SymFuncFormatError(f"header degree {degree} != {f.degree()}")
        if f.to_text() != text:
            raise SymFuncFormatError("payload is not in canonical form")
        return f


def p(*parts: int) -> SymmetricFunction:
    """The power-sum monomial ``p_parts`` (``p()`` is the unit)."""
    return SymmetricFunction({tuple(sorted(parts, reverse=True)): 1})


def sf_mul(f: SymmetricFunction, g: SymmetricFunction) -> SymmetricFunction:
    if len(f) > len(g):
        f, g = g, f
    acc: dict[Partition, Fraction] = defaultdict(Fraction)
    for lam, a in f._terms.items():
        for mu, b in g._terms.items():
            acc[_merge(lam, mu)] += a * b
    return SymmetricFunction._trusted({k: v for k, v in acc.items() if v})


def plethysm_power(r: int, f: SymmetricFunction) -> SymmetricFunction:
    """``p_r[f]``: scale every part of every key by ``r``."""
    if r < 1:
        raise ValueError(f"r must be >= 1, got {r}")
    if r == 1:
        return f
    return SymmetricFunction._trusted(
        {tuple(r * x for x in lam): c for lam, c in f._terms.items()}
    )


def exterior_plethysm(m: int, f: SymmetricFunction) -> SymmetricFunction:
    """Character ``e_m[f]`` of the m-th exterior power of a module with character ``f``.

    Uses the Newton recurrence ``m e_m[f] = sum_r (-1)^(r-1) p_r[f] e_{m-r}[f]``.
    ``f`` must be homogeneous of positive degree.
    """
    if m < 0:
        raise ValueError(f"m must be non-negative, got {m}")
    degs = f.degrees()
    if len(degs) != 1 or 0 in degs:
        raise ValueError("exterior_plethysm needs a homogeneous f of positive degree")
    powers = [None] + [plethysm_power(r, f) for r in range(1, m + 1)]
    e = [SymmetricFunction.one()]
    for k in range(1, m + 1):
        acc = SymmetricFunction.zero()
        for r in range(1, k + 1):
            term = sf_mul(powers[r], e[k - r])
            acc = acc + term if r % 2 else acc - term
        e.append(acc / k)
    return e[m]


def hall_inner(f: SymmetricFunction, g: SymmetricFunction) -> Fraction:
    """Hall inner product, ``<p_lam, p_mu> = z_lam [lam == mu]``."""
    if len(f) > len(g):
        f, g = g, f
    total = Fraction(0)
    gt = g._terms
    for lam, a in f._terms.items():
        b = gt.get(lam)
        if b is not None:
            total += a * b * z_factor(lam)
    return total


def specialize_dimension(f: SymmetricFunction, n: int) -> Fraction:
    """Evaluate at ``p_i = n`` for all i: the GL_n-dimension of the module."""
    if n < 1:
        raise ValueError(f"N must be >= 1, got {n}")
    return sum((c * Fraction(n) ** len(lam) for lam, c in f._terms.items()), Fraction(0))
