"""On-disk cache of symmetric functions and chain-series checkpoints.

Every record is a single text file: one header line carrying the engine
version, record kind, key and the SHA-256 of the payload, followed by the
payload.  Files are published by write-to-temp plus ``os.replace`` so a
killed run never leaves a truncated record that validates.
"""
from __future__ import annotations

import hashlib
import logging
import os
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from .symfunc import SymFuncFormatError, SymmetricFunction

log = logging.getLogger(__name__)

ENGINE_VERSION = "lie-euler-1"
KINDS = ("lie", "derivation", "extpleth", "littlewood", "chainseries")
_MAGIC = "LIE-EULER-CACHE v1"


def _digest(payload: str) -> str:
    return hashlib.sha256(payload.encode("utf-8")).hexdigest()


@dataclass(frozen=True)
class CacheRecord:
    kind: str
    key: tuple[int, ...]
    payload: str
    engine: str = ENGINE_VERSION

    @property
    def checksum(self) -> str:
        return _digest(self.payload)

    def to_text(self) -> str:
        key = ",".join(map(str, self.key))
        head = f"{_MAGIC} engine={self.engine} kind={self.kind} key={key} sha256={self.checksum}"
        return head + "\n" + self.payload

    @classmethod
    def from_text(cls, text: str) -> "CacheRecord":
        head, sep, payload = text.partition("\n")
        fields = head.split(" ")
        if not sep or " ".join(fields[:2]) != _MAGIC or len(fields) != 6:
            raise ValueError("bad cache header")
        meta = dict(f.split("=", 1) for f in fields[2:])
        rec = cls(
            kind=meta["kind"],
            key=tuple(int(x) for x in meta["key"].split(",") if x),
            payload=payload,
            engine=meta["engine"],
        )
        if rec.checksum != meta["sha256"]:
            raise ValueError("checksum mismatch")
        return rec


@dataclass
class CacheStats:
    hits: int = 0
    misses: int = 0
    writes: int = 0
    discarded: int = 0


@dataclass
class DiskCache:
    """Directory of :class:`CacheRecord` files, safe for many readers."""

    root: Path
    stats: CacheStats = field(default_factory=CacheStats)

    def __post_init__(self):
        self.root = Path(self.root)
        self.root.mkdir(parents=True, exist_ok=True)

    def path(self, kind: str, key: tuple[int, ...]) -> Path:
        if kind not in KINDS:
            raise ValueError(f"unknown cache kind {kind!r}")
        return self.root / f"{kind}-{'-'.join(map(str, key))}.rec"

    def load(self, kind: str, key: tuple[int, ...]) -> CacheRecord | None:
        path = self.path(kind, key)
        try:
            text = path.read_text(encoding="utf-8")
        except FileNotFoundError:
            self.stats.misses += 1
            return None
        try:
            rec = CacheRecord.from_text(text)
            if rec.kind != kind or rec.key != tuple(key):
                raise ValueError("record key does not match file name")
        except (ValueError, KeyError) as exc:
            log.warning("discarding corrupt cache record %s: %s", path, exc)
            self.stats.discarded += 1
            self.stats.misses += 1
            return None
        if rec.engine != ENGINE_VERSION:
            log.info("ignoring stale cache record %s (engine %s)", path, rec.engine)
            self.stats.misses += 1
            return None
        self.stats.hits += 1
        return rec

    def store(self, kind: str, key: tuple[int, ...], payload: str) -> Path:
        rec = CacheRecord(kind, tuple(key), payload)
        path = self.path(kind, key)
        fd, tmp = tempfile.mkstemp(dir=self.root, prefix=path.name, suffix=".tmp")
        try:
            with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
                fh.write(rec.to_text())
            os.replace(tmp, path)
        except BaseException:
            try:
                os.unlink(tmp)
            except FileNotFoundError:
                pass
            raise
        self.stats.writes += 1
        return path

    def get_sf(self, kind: str, key: tuple[int, ...]) -> SymmetricFunction | None:
        rec = self.load(kind, key)
        if rec is None:
            return None
        try:
            return SymmetricFunction.from_text(rec.payload)
        except SymFuncFormatError as exc:
            log.warning("discarding unparsable cache record %s: %s", self.path(kind, key), exc)
            self.stats.hits -= 1
            self.stats.misses += 1
            self.stats.discarded += 1
            return None

    def put_sf(self, kind: str, key: tuple[int, ...], f: SymmetricFunction) -> Path:
        return self.store(kind, key, f.to_text())
