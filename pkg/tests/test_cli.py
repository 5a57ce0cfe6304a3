import json

import pytest

from lie_euler import lie
from lie_euler.cli import EXIT_COMPUTE, EXIT_INPUT, EXIT_OK, EXIT_VERIFY, main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_chi_csv(capsys):
    code, out, err = run(capsys, "chi", "--max-weight", "8", "--format", "csv")
    assert code == EXIT_OK
    assert out == "w,chi\n2,1\n4,2\n6,4\n8,6\n"
    assert err.startswith("stats: engine=series")


def test_chi_table_and_json(capsys):
    code, out, _ = run(capsys, "chi", "--max-weight", "6")
    assert code == EXIT_OK
    assert out.splitlines() == ["w    2  4  6", "chi  1  2  4"]
    code, out, _ = run(capsys, "chi", "--max-weight", "6", "--format", "json")
    doc = json.loads(out)
    assert doc["schema"] == "lie-euler/chi" and doc["version"] == 1
    assert doc["rows"] == [{"w": "2", "chi": "1"}, {"w": "4", "chi": "2"}, {"w": "6", "chi": "4"}]


def test_dims_formats(capsys):
    code, out, _ = run(capsys, "dims", "--weight", "6", "--format", "csv", "--engine", "partition")
    assert code == EXIT_OK
    assert out == "row,dimension\nC_1,5\nC_2,10\nC_3,7\nC_4,16\nC_5,41\nC_6,31\ntotal,110\nchi,4\n"
    code, out, _ = run(capsys, "dims", "--weight", "4", "--format", "json")
    doc = json.loads(out)
    assert doc["dims"] == {"1": "0", "2": "0", "3": "6", "4": "8"}
    assert (doc["total"], doc["chi"], doc["weight"]) == ("14", "2", "4")
    code, out, _ = run(capsys, "dims", "--weight", "2")
    assert out.splitlines()[0] == "weight 2"


def test_dims_odd_weight(capsys):
    code, out, _ = run(capsys, "dims", "--weight", "5", "--format", "csv")
    assert code == EXIT_OK
    assert out.endswith("total,0\nchi,0\n")


def test_out_euler_from_file(capsys, published_chi_csv):
    code, out, _ = run(capsys, "out-euler", "--max-weight", "20", "--chi-file", str(published_chi_csv), "--format", "csv")
    assert code == EXIT_OK
    lines = out.splitlines()
    assert lines[0] == "w,n,chi,lower,primitive,rational_chi_literature"
    assert lines[-1] == "20,11,-1299,-97,-1202,-1690.70"
    code, out, _ = run(capsys, "out-euler", "--max-weight", "20", "--chi-file", str(published_chi_csv))
    assert "chi of primitive part" in out and "e(Out F_n)" in out


def test_out_euler_computed_json(capsys):
    code, out, _ = run(capsys, "out-euler", "--max-weight", "8", "--format", "json")
    rows = json.loads(out)["rows"]
    assert [r["primitive"] for r in rows] == ["1", "1", "2", "1"]
    assert [r["lower"] for r in rows] == ["0", "1", "2", "5"]


def test_out_euler_short_file(capsys, tmp_path):
    f = tmp_path / "chi.csv"
    f.write_text("w,chi\n2,1\n4,2\n")
    code, _, err = run(capsys, "out-euler", "--max-weight", "8", "--chi-file", str(f))
    assert code == EXIT_INPUT and "[6, 8]" in err


def test_out_euler_gap_in_file(capsys, tmp_path):
    f = tmp_path / "chi.csv"
    f.write_text("w,chi\n2,1\n6,4\n")
    code, _, err = run(capsys, "out-euler", "--max-weight", "6", "--chi-file", str(f))
    assert code == EXIT_INPUT and "missing weights [4]" in err


def test_missing_file(capsys, tmp_path):
    code, _, _ = run(capsys, "out-euler", "--max-weight", "4", "--chi-file", str(tmp_path / "none.csv"))
    assert code == EXIT_INPUT


@pytest.mark.parametrize("argv", [
    ["chi", "--max-weight", "7"],
    ["chi", "--max-weight", "0"],
    ["dims", "--weight", "0"],
    ["dims", "--weight", "4", "--threads", "0"],
    ["verify", "--max-degree", "1"],
])
def test_bad_values(capsys, argv):
    assert run(capsys, *argv)[0] == EXIT_INPUT


@pytest.mark.parametrize("argv", [
    [],
    ["chi"],
    ["dims", "--weight", "x"],
    ["dims", "--weight", "4", "--engine", "bogus"],
    ["dims", "--weight", "4", "--format", "xml"],
])
def test_usage_errors(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        main(argv)
    assert exc.value.code == EXIT_INPUT


def test_cache_dir_warm_run_identical(capsys, tmp_path):
    args = ["chi", "--max-weight", "10", "--format", "csv", "--cache-dir", str(tmp_path)]
    _, cold, cold_err = run(capsys, *args)
    _, warm, warm_err = run(capsys, *args)
    assert cold == warm
    assert "weights_computed=10" in cold_err
    assert "weights_computed=0" in warm_err and "weights_loaded=10" in warm_err


def test_verify_passes(capsys):
    code, out, _ = run(capsys, "verify", "--max-degree", "6")
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "all checks passed"
    assert all(line.startswith("PASS") for line in out.splitlines()[:-1])


@pytest.fixture
def broken_mobius(monkeypatch):
    real = lie.mobius
    monkeypatch.setattr(lie, "mobius", lambda d: -real(d) if d == 2 else real(d))
    lie.lie_character.cache_clear()
    lie.derivation_character.cache_clear()
    yield
    monkeypatch.undo()
    lie.lie_character.cache_clear()
    lie.derivation_character.cache_clear()


def test_verify_catches_mobius_fault(capsys, broken_mobius):
    code, out, _ = run(capsys, "verify", "--max-degree", "4")
    assert code == EXIT_VERIFY
    witt = next(line for line in out.splitlines() if "witt" in line)
    assert witt.startswith("FAIL") and "dim L_2(N=1)" in witt


def test_compute_error_exit_code(capsys, monkeypatch, published_chi_csv):
    import lie_euler.cli as cli
    monkeypatch.setattr(cli, "verify_congruence", lambda chi, e: (False, 12))
    code, _, err = run(capsys, "out-euler", "--max-weight", "20", "--chi-file", str(published_chi_csv))
    assert code == EXIT_COMPUTE and "degree 12" in err
