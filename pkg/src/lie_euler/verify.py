"""Self-checks run by ``lie-euler verify``.

Each check pits an implementation against an independently computed
value and reports the first counterexample it finds.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Callable

from .chain import PlethysmStore, chain_tables, weight_partitions
from .characters import schur_expand
from .lie import (
    derivation_character,
    invariant_weight,
    lie_character,
    littlewood_series,
    sp_invariant_dim,
    sp_invariant_dim_oracle,
)
from .outfn import expand_product, extract_out_euler
from .partitions import divisors, even_column_partitions, partitions_of, z_factor
from .symfunc import SymmetricFunction, exterior_plethysm, p, plethysm_power, sf_mul, specialize_dimension


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def witt_count(k: int, n: int) -> int:
    """Number of Lyndon words of length k on n letters, from ``n^k = sum_{d|k} d W(d)``."""
    counts: dict[int, int] = {}
    for d in range(1, k + 1):
        if k % d:
            continue
        rest = sum(e * counts[e] for e in divisors(d) if e < d)
        counts[d] = (n**d - rest) // d
    return counts[k]


def check_witt(max_k: int = 12, max_n: int = 6) -> CheckResult:
    for k in range(1, max_k + 1):
        for n in range(1, max_n + 1):
            got = specialize_dimension(lie_character(k).char, n)
            want = witt_count(k, n)
            if got != want:
                return CheckResult("witt", False, f"dim L_{k}(N={n}): character gives {got}, necklace count {want}")
    return CheckResult("witt", True, f"k<={max_k}, N<={max_n}")


def check_derivation_dimensions(max_k: int = 10, max_n: int = 6) -> CheckResult:
    for k in range(1, max_k + 1):
        for n in range(1, max_n + 1):
            got = specialize_dimension(derivation_character(k).char, n)
            want = n * witt_count(k + 1, n) - witt_count(k + 2, n)
            if got != want or want < 0:
                return CheckResult("derivation-dimensions", False, f"h({k}) at N={n}: {got} != {want}")
    return CheckResult("derivation-dimensions", True, f"k<={max_k}, N<={max_n}")


def _schur_positive(f: SymmetricFunction) -> bool:
    return all(c.denominator == 1 and c >= 0 for c in schur_expand(f).values())


def check_derivation_schur(max_degree: int) -> CheckResult:
    first = schur_expand(derivation_character(1).char)
    if first != {(1, 1, 1): 1}:
        return CheckResult("derivation-schur", False, f"h(1) expands to {first}, expected s_(1,1,1)")
    top = min(8, max_degree - 2)
    for k in range(1, top + 1):
        if not _schur_positive(derivation_character(k).char):
            return CheckResult("derivation-schur", False, f"h({k}) is not Schur positive")
    return CheckResult("derivation-schur", True, f"h(1)=Lambda^3 H; h(k) Schur positive for k<={top}")


def check_littlewood(max_degree: int) -> CheckResult:
    top = min(max_degree, 12)
    series = littlewood_series(top)
    for d in range(top + 1):
        part = series.part(d)
        if d % 2:
            if part:
                return CheckResult("littlewood", False, f"odd degree {d} part is nonzero")
            continue
        want = {lam: 1 for lam in even_column_partitions(d)}
        if schur_expand(part) != want and d:
            return CheckResult("littlewood", False, f"degree {d} part is not the sum of even-column Schur functions")
    for d in range(max_degree + 1):
        part = littlewood_series(max_degree).part(d)
        for lam in partitions_of(d):
            if part.coefficient(lam) * z_factor(lam) != invariant_weight(lam):
                return CheckResult("littlewood", False, f"closed form disagrees with the series at {lam}")
    return CheckResult("littlewood", True, f"Schur form to degree {top}, closed form to degree {max_degree}")


def _exp_series(x: list[SymmetricFunction], order: int) -> list[SymmetricFunction]:
    # exp of a t-series with zero constant term, by summing X^n / n!
    result = [SymmetricFunction.one()] + [SymmetricFunction.zero()] * order
    power = [SymmetricFunction.one()] + [SymmetricFunction.zero()] * order
    fact = 1
    for n in range(1, order + 1):
        nxt = [SymmetricFunction.zero()] * (order + 1)
        for a, pa in enumerate(power):
            if not pa:
                continue
            for b in range(1, order + 1 - a):
                if x[b]:
                    nxt[a + b] = nxt[a + b] + sf_mul(pa, x[b])
        power = nxt
        fact *= n
        result = [r + q / fact for r, q in zip(result, power)]
    return result


def check_exterior_identity(max_degree: int) -> CheckResult:
    samples = {
        "p1": p(1),
        "e2": exterior_plethysm(2, p(1)),
        "h(1)": derivation_character(1).char,
        "h(2)": derivation_character(2).char,
    }
    for name, f in samples.items():
        order = max(1, min(6, max_degree // f.degree()))
        x = [SymmetricFunction.zero()] + [
            plethysm_power(r, f) * Fraction((-1) ** (r - 1), r) for r in range(1, order + 1)
        ]
        via_exp = _exp_series(x, order)
        for m in range(order + 1):
            if exterior_plethysm(m, f) != via_exp[m]:
                return CheckResult("exterior-identity", False, f"e_{m}[{name}] disagrees with the exponential")
    return CheckResult("exterior-identity", True, "Newton recurrence = exp series")


def _chain_pieces(max_weight: int, store: PlethysmStore):
    for w in range(1, max_weight + 1):
        for mu in weight_partitions(w):
            yield mu, reduce(sf_mul, (store.get(k, m) for k, m in mu.multiplicities))


def check_schur_positivity(max_degree: int, store: PlethysmStore) -> CheckResult:
    top = min(max_degree, 16)
    count = 0
    for k in range(1, top - 1):
        for m in range(1, top // (k + 2) + 1):
            if not _schur_positive(store.get(k, m)):
                return CheckResult("schur-positivity", False, f"e_{m}[h({k})] is not Schur positive")
            count += 1
    for w in range(1, top + 1):
        for mu in weight_partitions(w):
            if mu.sf_degree > top:
                continue
            f = reduce(sf_mul, (store.get(k, m) for k, m in mu.multiplicities))
            if not _schur_positive(f):
                return CheckResult("schur-positivity", False, f"chain piece {mu} is not Schur positive")
            count += 1
    return CheckResult("schur-positivity", True, f"{count} characters of degree <= {top}")


def check_oracle_equivalence(max_weight: int, store: PlethysmStore) -> CheckResult:
    count = 0
    for mu, f in _chain_pieces(max_weight, store):
        a, b = sp_invariant_dim(f), sp_invariant_dim_oracle(f)
        if a != b:
            return CheckResult("oracle-equivalence", False, f"chain piece {mu} (weight {mu.weight}): Littlewood {a}, oracle {b}")
        count += 1
    return CheckResult("oracle-equivalence", True, f"{count} chain pieces, weights <= {max_weight}")


def check_engines(max_weight: int, threads: int) -> CheckResult:
    series = chain_tables(max_weight, engine="series")
    parts = chain_tables(max_weight, engine="partition", fused="check", threads=threads)
    for w in range(1, max_weight + 1):
        if series[w].dims != parts[w].dims:
            return CheckResult("engine-agreement", False, f"weight {w}: series {dict(series[w].dims)} != partition {dict(parts[w].dims)}")
        single = sp_invariant_dim(derivation_character(w).char)
        if series[w].dims[1] != single:
            return CheckResult("engine-agreement", False, f"weight {w}: dim C_1 {series[w].dims[1]} != dim h({w})^Sp {single}")
    return CheckResult("engine-agreement", True, f"series = partition (fused checked) for weights <= {max_weight}")


def check_odd_vanishing(max_weight: int) -> CheckResult:
    top = max(9, max_weight)
    tables = chain_tables(top)
    for w in range(3, min(top, 9) + 1, 2):
        if any(tables[w].dims.values()):
            return CheckResult("odd-vanishing", False, f"weight {w} has nonzero dims {dict(tables[w].dims)}")
    return CheckResult("odd-vanishing", True, "weights 3, 5, 7, 9 vanish")


def check_roundtrip(trials: int = 50, seed: int = 0) -> CheckResult:
    rng = random.Random(seed)
    for _ in range(trials):
        top = 2 * rng.randint(1, 20)
        chi = {w: rng.randint(-10**6, 10**6) for w in range(2, top + 1, 2)}
        table = extract_out_euler(chi)
        rebuilt = expand_product(table.e, top)
        if any(rebuilt[w] != c for w, c in chi.items()):
            return CheckResult("euler-roundtrip", False, f"round trip failed for {chi}")
    return CheckResult("euler-roundtrip", True, f"{trials} random chi tables")


def run_checks(max_degree: int = 10, threads: int = 1, progress: Callable[[CheckResult], None] | None = None) -> list[CheckResult]:
    """Run every check; ``max_degree`` bounds Schur degrees and chain weights."""
    if max_degree < 2:
        raise ValueError(f"max_degree must be >= 2, got {max_degree}")
    store = PlethysmStore()
    runs: list[Callable[[], CheckResult]] = [
        check_witt,
        check_derivation_dimensions,
        lambda: check_derivation_schur(max_degree),
        lambda: check_littlewood(max_degree),
        lambda: check_exterior_identity(max_degree),
        lambda: check_schur_positivity(max_degree, store),
        lambda: check_oracle_equivalence(max_degree, store),
        lambda: check_engines(max_degree, threads),
        lambda: check_odd_vanishing(max_degree),
        check_roundtrip,
    ]
    results = []
    for run in runs:
        try:
            res = run()
        except ArithmeticError as exc:
            res = CheckResult(getattr(run, "__name__", "check"), False, f"{type(exc).__name__}: {exc}")
        results.append(res)
        if progress is not None:
            progress(res)
    return results
