import pytest

from lie_euler.cache import ENGINE_VERSION, CacheRecord, DiskCache
from lie_euler.chain import ComputeStats, PlethysmStore, chain_tables
from lie_euler.lie import derivation_character
from lie_euler.symfunc import exterior_plethysm, p


def test_record_roundtrip():
    rec = CacheRecord("extpleth", (3, 2), "SYMFUNC v1 degree=1 terms=1\n1: 1/1\n")
    back = CacheRecord.from_text(rec.to_text())
    assert back == rec
    assert rec.to_text().splitlines()[0].startswith(f"LIE-EULER-CACHE v1 engine={ENGINE_VERSION} kind=extpleth key=3,2 sha256=")


def test_checksum_mismatch_detected():
    text = CacheRecord("lie", (4,), "payload\n").to_text()
    with pytest.raises(ValueError):
        CacheRecord.from_text(text.replace("payload", "pay1oad"))


def test_store_and_load(tmp_path):
    cache = DiskCache(tmp_path)
    f = exterior_plethysm(3, derivation_character(2).char)
    cache.put_sf("extpleth", (2, 3), f)
    assert cache.get_sf("extpleth", (2, 3)) == f
    assert cache.get_sf("extpleth", (2, 4)) is None
    assert (cache.stats.hits, cache.stats.misses, cache.stats.writes) == (1, 1, 1)
    assert not list(tmp_path.glob("*.tmp"))


def test_corrupt_record_discarded(tmp_path, caplog):
    cache = DiskCache(tmp_path)
    path = cache.put_sf("lie", (5,), p(5))
    path.write_text(path.read_text()[:-3])  # truncated write
    assert cache.get_sf("lie", (5,)) is None
    assert cache.stats.discarded == 1
    assert "discarding corrupt" in caplog.text


def test_stale_engine_ignored(tmp_path):
    cache = DiskCache(tmp_path)
    path = cache.path("lie", (2,))
    path.write_text(CacheRecord("lie", (2,), p(2).to_text(), engine="old-0").to_text())
    assert cache.get_sf("lie", (2,)) is None


def test_unknown_kind_rejected(tmp_path):
    with pytest.raises(ValueError):
        DiskCache(tmp_path).path("bogus", (1,))


def test_plethysm_store_uses_cache(tmp_path):
    cache = DiskCache(tmp_path)
    first = PlethysmStore(cache)
    f = first.get(2, 3)
    assert first.stats.plethysms_computed == 1
    second = PlethysmStore(DiskCache(tmp_path))
    assert second.get(2, 3) == f
    assert second.stats.plethysms_computed == 0 and second.stats.plethysms_loaded == 1


def test_series_resume_after_interruption(tmp_path):
    fresh = chain_tables(12)
    cache = DiskCache(tmp_path)
    chain_tables(12, cache=cache)
    # later records missing, one corrupted: only those four weights are recomputed
    for w in (10, 11, 12):
        cache.path("chainseries", (w,)).unlink()
    victim = cache.path("chainseries", (7,))
    victim.write_text(victim.read_text().replace("1|", "2|", 1))
    stats = ComputeStats()
    resumed = chain_tables(12, cache=DiskCache(tmp_path), stats=stats)
    assert stats.weights_loaded == 8 and stats.weights_computed == 4
    assert {w: dict(t.dims) for w, t in resumed.items()} == {w: dict(t.dims) for w, t in fresh.items()}
    stats = ComputeStats()
    chain_tables(12, cache=DiskCache(tmp_path), stats=stats)
    assert stats.weights_computed == 0 and stats.weights_loaded == 12
