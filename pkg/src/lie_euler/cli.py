"""Command line interface: ``lie-euler {chi,dims,out-euler,verify}``."""
from __future__ import annotations

import argparse
import json
import logging
import sys
import time
from dataclasses import dataclass
from pathlib import Path

from .cache import DiskCache
from .chain import ENGINES, FUSED_MODES, ChainDimTable, ComputeStats, chain_tables
from .lie import InvariantDimensionError
from .outfn import ChiTableError, EulerTable, extract_out_euler, read_chi_csv, verify_congruence
from .reference import RATIONAL_EULER_OUT_FN

log = logging.getLogger("lie_euler")

EXIT_OK = 0
EXIT_COMPUTE = 1
EXIT_VERIFY = 2
EXIT_INPUT = 3
JSON_VERSION = 1


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class RunConfig:
    max_weight: int
    threads: int = 1
    cache_dir: Path | None = None
    output_format: str = "table"
    engine: str = "series"
    fused: str = "on"

    def __post_init__(self):
        if self.max_weight < 1:
            raise InputError(f"weight must be >= 1, got {self.max_weight}")
        if self.threads < 1:
            raise InputError(f"--threads must be >= 1, got {self.threads}")


def _cache(cfg: RunConfig) -> DiskCache | None:
    return DiskCache(cfg.cache_dir) if cfg.cache_dir is not None else None


def _stats_line(cfg: RunConfig, stats: ComputeStats, cache: DiskCache | None, elapsed: float) -> str:
    parts = [
        f"engine={cfg.engine}",
        f"weights_computed={stats.weights_computed}",
        f"weights_loaded={stats.weights_loaded}",
        f"plethysms_computed={stats.plethysms_computed}",
        f"plethysms_loaded={stats.plethysms_loaded}",
    ]
    if cache is not None:
        s = cache.stats
        parts.append(f"cache_hits={s.hits} cache_misses={s.misses} cache_writes={s.writes} cache_discarded={s.discarded}")
    parts.append(f"elapsed={elapsed:.2f}s")
    slow = ", ".join(f"{name} {dt:.2f}s" for name, dt in stats.slowest())
    if slow:
        parts.append(f"slowest=[{slow}]")
    return "stats: " + " ".join(parts)


def _compute(cfg: RunConfig, weights: list[int]) -> dict[int, ChainDimTable]:
    cache = _cache(cfg)
    stats = ComputeStats()
    t0 = time.perf_counter()
    tables = chain_tables(
        cfg.max_weight,
        engine=cfg.engine,
        threads=cfg.threads,
        fused=cfg.fused,
        cache=cache,
        stats=stats,
        weights=weights,
        progress=lambda w, dt: log.info("weight %d done in %.2fs", w, dt),
    )
    print(_stats_line(cfg, stats, cache, time.perf_counter() - t0), file=sys.stderr)
    return tables


def _grid(rows: list[list[str]]) -> str:
    widths = [max(len(r[c]) for r in rows) for c in range(len(rows[0]))]
    out = []
    for r in rows:
        cells = [r[0].ljust(widths[0])] + [cell.rjust(wd) for cell, wd in zip(r[1:], widths[1:])]
        out.append("  ".join(cells).rstrip())
    return "\n".join(out) + "\n"


def _json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False) + "\n"


# ---------------------------------------------------------------------------
# chi

def format_chi(chi: dict[int, int], fmt: str) -> str:
    ws = sorted(chi)
    if fmt == "csv":
        return "w,chi\n" + "".join(f"{w},{chi[w]}\n" for w in ws)
    if fmt == "json":
        return _json({
            "schema": "lie-euler/chi",
            "version": JSON_VERSION,
            "rows": [{"w": str(w), "chi": str(chi[w])} for w in ws],
        })
    return _grid([["w"] + [str(w) for w in ws], ["chi"] + [str(chi[w]) for w in ws]])


def cmd_chi(cfg: RunConfig) -> str:
    if cfg.max_weight < 2 or cfg.max_weight % 2:
        raise InputError(f"--max-weight must be even and >= 2, got {cfg.max_weight}")
    weights = list(range(2, cfg.max_weight + 1, 2))
    tables = _compute(cfg, weights)
    return format_chi({w: tables[w].euler for w in weights}, cfg.output_format)


# ---------------------------------------------------------------------------
# dims

def format_dims(table: ChainDimTable, fmt: str) -> str:
    rows = [(f"C_{i}", table.dims[i]) for i in sorted(table.dims)]
    rows += [("total", table.total), ("chi", table.euler)]
    if fmt == "csv":
        return "row,dimension\n" + "".join(f"{name},{v}\n" for name, v in rows)
    if fmt == "json":
        return _json({
            "schema": "lie-euler/dims",
            "version": JSON_VERSION,
            "weight": str(table.weight),
            "dims": {str(i): str(table.dims[i]) for i in sorted(table.dims)},
            "total": str(table.total),
            "chi": str(table.euler),
        })
    return f"weight {table.weight}\n" + _grid([["", "dimension"]] + [[name, str(v)] for name, v in rows])


def cmd_dims(cfg: RunConfig) -> str:
    w = cfg.max_weight
    return format_dims(_compute(cfg, [w])[w], cfg.output_format)


# ---------------------------------------------------------------------------
# out-euler

def format_out_euler(table: EulerTable, fmt: str) -> str:
    rows = table.rows
    if fmt == "csv":
        lines = ["w,n,chi,lower,primitive,rational_chi_literature"]
        for r in rows:
            lines.append(f"{r.weight},{r.n},{r.chi},{r.lower},{r.e},{RATIONAL_EULER_OUT_FN.get(r.n, '')}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        return _json({
            "schema": "lie-euler/out-euler",
            "version": JSON_VERSION,
            "rows": [
                {
                    "w": str(r.weight),
                    "n": str(r.n),
                    "chi": str(r.chi),
                    "lower": str(r.lower),
                    "primitive": str(r.e),
                    "rational_chi_literature": RATIONAL_EULER_OUT_FN.get(r.n),
                }
                for r in rows
            ],
        })
    generators = _grid([
        ["w"] + [str(r.weight) for r in rows],
        ["chi"] + [str(r.chi) for r in rows],
        ["chi of lower terms"] + [str(r.lower) for r in rows],
        ["chi of primitive part"] + [str(r.e) for r in rows],
    ])
    compare = _grid([
        ["n"] + [str(r.n) for r in rows],
        ["rational chi (literature)"] + [RATIONAL_EULER_OUT_FN.get(r.n, "?") for r in rows],
        ["e(Out F_n)"] + [str(r.e) for r in rows],
    ])
    return generators + "\n" + compare


def cmd_out_euler(cfg: RunConfig, chi_file: Path | None) -> str:
    top = cfg.max_weight
    if top < 2 or top % 2:
        raise InputError(f"--max-weight must be even and >= 2, got {top}")
    if chi_file is not None:
        chi = read_chi_csv(chi_file)
        missing = [w for w in range(2, top + 1, 2) if w not in chi]
        if missing:
            raise ChiTableError(f"chi file lacks weights {missing}", tuple(missing))
        chi = {w: chi[w] for w in range(2, top + 1, 2)}
    else:
        weights = list(range(2, top + 1, 2))
        tables = _compute(cfg, weights)
        chi = {w: tables[w].euler for w in weights}
    table = extract_out_euler(chi)
    ok, bad = verify_congruence(chi, table)
    if not ok:
        raise InvariantDimensionError(f"rebuilt product disagrees with chi at degree {bad}")
    return format_out_euler(table, cfg.output_format)


# ---------------------------------------------------------------------------
# verify

def cmd_verify(max_degree: int, threads: int) -> tuple[str, bool]:
    from .verify import run_checks

    def show(res):
        log.info("%s %s", "PASS" if res.passed else "FAIL", res.name)

    results = run_checks(max_degree, threads, progress=show)
    lines = [f"{'PASS' if r.passed else 'FAIL'}  {r.name}: {r.detail}" for r in results]
    ok = all(r.passed for r in results)
    lines.append("all checks passed" if ok else f"{sum(not r.passed for r in results)} check(s) failed")
    return "\n".join(lines) + "\n", ok


# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="lie-euler", description=__doc__)
    parser.add_argument("-v", "--verbose", action="store_true", help="progress on stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--threads", type=int, default=1)
        sp.add_argument("--cache-dir", type=Path)
        sp.add_argument("--format", choices=("table", "csv", "json"), default="table")
        sp.add_argument("--engine", choices=ENGINES, default="series")
        sp.add_argument("--fused-pairing", choices=FUSED_MODES, default="on")

    sp = sub.add_parser("chi", help="weight Euler characteristics chi_w")
    sp.add_argument("--max-weight", type=int, required=True)
    common(sp)

    sp = sub.add_parser("dims", help="chain dimensions dim C_i at one weight")
    sp.add_argument("--weight", type=int, required=True)
    common(sp)

    sp = sub.add_parser("out-euler", help="e(Out F_n) with lower-term/primitive split")
    sp.add_argument("--max-weight", type=int, required=True)
    sp.add_argument("--chi-file", type=Path)
    common(sp)

    sp = sub.add_parser("verify", help="run the self-check suite")
    sp.add_argument("--max-degree", type=int, default=10)
    sp.add_argument("--threads", type=int, default=1)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=logging.INFO if args.verbose else logging.WARNING,
        format="%(levelname)s %(name)s: %(message)s",
        stream=sys.stderr,
    )
    try:
        if args.command == "verify":
            if args.max_degree < 2:
                raise InputError(f"--max-degree must be >= 2, got {args.max_degree}")
            text, ok = cmd_verify(args.max_degree, args.threads)
            sys.stdout.write(text)
            return EXIT_OK if ok else EXIT_VERIFY
        weight = args.weight if args.command == "dims" else args.max_weight
        cfg = RunConfig(
            max_weight=weight,
            threads=args.threads,
            cache_dir=args.cache_dir,
            output_format=args.format,
            engine=args.engine,
            fused=args.fused_pairing,
        )
        if args.command == "chi":
            text = cmd_chi(cfg)
        elif args.command == "dims":
            text = cmd_dims(cfg)
        else:
            text = cmd_out_euler(cfg, args.chi_file)
    except (InputError, ChiTableError, OSError) as exc:
        print(f"lie-euler: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantDimensionError as exc:
        print(f"lie-euler: computation error: {exc}", file=sys.stderr)
        return EXIT_COMPUTE
    sys.stdout.write(text)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
