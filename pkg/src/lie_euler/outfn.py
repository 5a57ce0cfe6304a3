"""Integral Euler characteristics of Out(F_n) from the weight Euler characteristics.

The weight generating function factors as

    h(t) = 1 + sum_w chi_w t^w = prod_{n >= 2} (1 - t^(2n-2))^(-e_n)

with ``e_n = e(Out F_n)``.  Peeling the factors off one weight at a time
gives, for each ``w = 2n - 2``, the contribution of products of earlier
generators ("lower terms") and the primitive remainder ``e_n``.
"""
from __future__ import annotations

import csv
import io
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping

__all__ = [
    "ChiTableError",
    "EulerRow",
    "EulerTable",
    "expand_product",
    "extract_out_euler",
    "verify_congruence",
    "read_chi_csv",
    "format_chi_csv",
]


class ChiTableError(ValueError):
    """A chi table is malformed or has gaps."""

    def __init__(self, message: str, missing: tuple[int, ...] = ()):
        super().__init__(message)
        self.missing = missing


@dataclass(frozen=True)
class EulerRow:
    n: int
    chi: int
    lower: int
    e: int

    @property
    def weight(self) -> int:
        return 2 * self.n - 2


@dataclass(frozen=True)
class EulerTable:
    rows: tuple[EulerRow, ...]

    @property
    def e(self) -> dict[int, int]:
        return {r.n: r.e for r in self.rows}

    @property
    def max_weight(self) -> int:
        return max((r.weight for r in self.rows), default=0)

    def __getitem__(self, n: int) -> EulerRow:
        for r in self.rows:
            if r.n == n:
                return r
        raise KeyError(n)


def _binomial_series(e: int, terms: int) -> list[int]:
    # coefficients of (1 - x)^(-e); exact for negative e too
    coeffs = [1]
    for k in range(1, terms):
        coeffs.append(coeffs[-1] * (e + k - 1) // k)
    return coeffs


def expand_product(e: Mapping[int, int], max_degree: int) -> list[int]:
    """Coefficients of ``t^0..t^max_degree`` in ``prod_n (1 - t^(2n-2))^(-e_n)``."""
    if max_degree < 0:
        raise ValueError(f"max_degree must be non-negative, got {max_degree}")
    series = [1] + [0] * max_degree
    for n, exponent in sorted(e.items()):
        if n < 2:
            raise ValueError(f"factors are indexed by n >= 2, got {n}")
        step = 2 * n - 2
        if step > max_degree or exponent == 0:
            continue
        factor = _binomial_series(exponent, max_degree // step + 1)
        out = [0] * (max_degree + 1)
        for a, ca in enumerate(series):
            if not ca:
                continue
            for k, fk in enumerate(factor):
                d = a + k * step
                if d > max_degree:
                    break
                out[d] += ca * fk
        series = out
    return series


def _check_chi(chi: Mapping[int, int]) -> int:
    bad = sorted(w for w in chi if w < 2 or w % 2)
    if bad:
        raise ChiTableError(f"chi weights must be even and >= 2, got {bad}")
    top = max(chi, default=0)
    missing = tuple(w for w in range(2, top + 1, 2) if w not in chi)
    if missing:
        raise ChiTableError(f"chi table is missing weights {list(missing)}", missing)
    return top


def extract_out_euler(chi: Mapping[int, int]) -> EulerTable:
    """Peel ``e(Out F_n)`` off a gap-free table ``{w: chi_w}`` of even weights."""
    top = _check_chi(chi)
    e: dict[int, int] = {}
    rows = []
    for w in range(2, top + 1, 2):
        n = w // 2 + 1
        lower = expand_product(e, w)[w]
        e[n] = chi[w] - lower
        rows.append(EulerRow(n, chi[w], lower, e[n]))
    return EulerTable(tuple(rows))


def verify_congruence(chi: Mapping[int, int], e: EulerTable | Mapping[int, int]) -> tuple[bool, int | None]:
    """Compare ``prod (1 - t^(2n-2))^(-e_n)`` with ``1 + sum chi_w t^w`` modulo ``t^(W+1)``.

    Returns ``(True, None)`` or ``(False, first mismatching degree)``.
    """
    exps = e.e if isinstance(e, EulerTable) else dict(e)
    top = _check_chi(chi)
    expected = [1] + [0] * top
    for w, c in chi.items():
        expected[w] = c
    got = expand_product(exps, top)
    for d, (a, b) in enumerate(zip(got, expected)):
        if a != b:
            return False, d
    return True, None


def read_chi_csv(source: str | Path | io.TextIOBase) -> dict[int, int]:
    """Read a ``w,chi`` CSV (header required) into ``{w: chi}``."""
    if isinstance(source, (str, Path)):
        with open(source, newline="", encoding="utf-8") as fh:
            return read_chi_csv(fh)
    reader = csv.reader(source)
    header = next(reader, None)
    if header is None or [h.strip() for h in header] != ["w", "chi"]:
        raise ChiTableError(f"chi file must start with header 'w,chi', got {header!r}")
    chi: dict[int, int] = {}
    for lineno, row in enumerate(reader, start=2):
        if not row or not "".join(row).strip():
            continue
        if len(row) != 2:
            raise ChiTableError(f"line {lineno}: expected 2 fields, got {row!r}")
        try:
            w, c = int(row[0]), int(row[1])
        except ValueError as exc:
            raise ChiTableError(f"line {lineno}: non-integer field in {row!r}") from exc
        if w in chi:
            raise ChiTableError(f"line {lineno}: duplicate weight {w}")
        chi[w] = c
    _check_chi(chi)
    return chi


def format_chi_csv(chi: Mapping[int, int]) -> str:
    lines = ["w,chi"] + [f"{w},{chi[w]}" for w in sorted(chi)]
    return "\n".join(lines) + "\n"
