import json
import subprocess
import sys

import pytest
from hypothesis import given, strategies as st

from pfhilbert import __version__
from pfhilbert.checks import CHECKS, REQUIRED_OPS, VerifyConfig, run_verification
from pfhilbert.cli import main
from pfhilbert.exact_arith import ParameterError
from pfhilbert.records import (
    CACHE_ENV,
    ResultCache,
    ResultRecord,
    compute_record,
    default_cache_path,
    parse_sweep_spec,
)


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_series_json(capsys):
    code, out, _ = run(capsys, "series", "--n", "4", "--r", "1", "--format", "json")
    assert code == 0
    obj = json.loads(out)
    assert obj["numerator"] == ["1", "1"] and obj["denom_exponent"] == 5
    assert out.startswith('{"numerator":["1","1"],"denom_exponent":5,')


def test_series_boundary_and_degenerate(capsys):
    _, out, _ = run(capsys, "series", "--n", "5", "--r", "2", "--format", "json")
    assert json.loads(out)["numerator"] == ["1"] and json.loads(out)["denom_exponent"] == 10
    _, out, _ = run(capsys, "series", "--n", "3", "--r", "2", "--format", "json")
    obj = json.loads(out)
    assert (obj["numerator"], obj["denom_exponent"], obj["class"]) == (["1"], 3, "full-polynomial-ring")


def test_text_outputs(capsys):
    code, out, _ = run(capsys, "hvector", "--n", "7", "--r", "2")
    assert code == 0 and "h-vector: 1 3 6 3 1" in out and "multiplicity: 14" in out
    code, out, _ = run(capsys, "hfunction", "--n", "6", "--r", "2", "--ell", "2")
    assert out.strip() == "dim R_2 = 120"
    code, out, _ = run(capsys, "multiplicity", "--n", "6", "--r", "2", "--format", "json")
    obj = json.loads(out)
    assert obj["multiplicity"] == "3" and set(obj["methods"].values()) == {"3"}


@pytest.mark.parametrize("argv", [
    ["series", "--n", "4"],
    ["series", "--n", "0", "--r", "1"],
    ["series", "--n", "4", "--r", "-1"],
    ["hfunction", "--n", "4", "--r", "1", "--ell", "-2"],
    ["hfunction", "--n", "6", "--r", "2", "--ell", "1", "--method", "hodge1"],
    ["verify", "--max-n", "50"],
    ["sweep", "/nonexistent/spec.txt"],
    ["bogus"],
])
def test_usage_errors_exit_1(capsys, argv):
    with pytest.raises(SystemExit) as exc:
        sys.exit(main(argv))
    assert exc.value.code == 1
    assert capsys.readouterr().err


def test_verify_small_grid(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "3")
    assert code == 0 and out.strip().endswith("OK")


def test_verify_injected_fault(capsys):
    code, _, err = run(capsys, "verify", "--max-n", "6", "--mult-max-n", "8", "--inject-fault", "herzog-verbatim")
    assert code == 2
    assert "n=4 r=1 method=herzog_trung" in err


def test_verify_console_script():
    proc = subprocess.run([sys.executable, "-m", "pfhilbert.cli", "verify", "--max-n", "4", "--format", "json"],
                          capture_output=True, text=True)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["ok"] is True


def test_coverage_registry_is_complete():
    covered = set().union(*(covers for _, covers, _ in CHECKS))
    assert covered == REQUIRED_OPS
    report = run_verification(VerifyConfig(max_n=4, oracle_max_n=4, faces_max_n=4, fiber_max_n=4, mult_max_n=6,
                                           pfaffian_samples=20))
    assert report.ok and not report.missing_ops


def test_verify_config_caps():
    with pytest.raises(ValueError):
        VerifyConfig(max_n=21).validate()
    with pytest.raises(ValueError):
        VerifyConfig(faces_max_n=9).validate()


# --- sweep and records ---------------------------------------------------------


SPEC = """\
# small grid
n = 4..8
r = 1..2
methods = product45, det46, series
"""


def test_sweep_and_cache(tmp_path, capsys):
    spec = tmp_path / "grid.txt"
    spec.write_text(SPEC)
    cache = tmp_path / "cache.jsonl"
    code, out, err = run(capsys, "sweep", str(spec), "--cache", str(cache))
    assert code == 0
    lines = out.strip().splitlines()
    assert len(lines) == 10
    assert "10 records, 0 from cache, 10 computed" in err
    recs = [ResultRecord.from_json(line) for line in lines]
    assert {(r.n, r.r): r.multiplicity for r in recs}[(8, 2)] == 84
    assert all(r.methods["det46"] == r.multiplicity for r in recs)

    code, out2, err = run(capsys, "sweep", str(spec), "--cache", str(cache))
    assert "10 from cache, 0 computed" in err
    assert out2 == out
    assert len(cache.read_text().splitlines()) == 10


def test_sweep_flags_full_polynomial(tmp_path, capsys):
    spec = tmp_path / "grid.txt"
    spec.write_text("n = 3\nr = 2\n")
    code, out, _ = run(capsys, "sweep", str(spec), "--no-cache")
    rec = ResultRecord.from_json(out.strip())
    assert rec.kind == "full-polynomial-ring" and rec.dimension == 3
    assert set(rec.methods.values()) == {None}


def test_sweep_csv(tmp_path, capsys):
    spec = tmp_path / "grid.txt"
    spec.write_text(SPEC + "format = csv\n")
    code, out, _ = run(capsys, "sweep", str(spec), "--no-cache")
    rows = out.strip().splitlines()
    assert rows[0] == "n,r,class,dimension,multiplicity,h_vector,product45,det46,series"
    assert rows[1] == "4,1,formula-valid,5,2,1 1,2,2,2"


def test_cache_env_var(tmp_path, monkeypatch):
    monkeypatch.setenv(CACHE_ENV, str(tmp_path))
    assert default_cache_path() == tmp_path / "results.jsonl"


def test_cache_ignores_partial_tail(tmp_path):
    cache = ResultCache(tmp_path / "c.jsonl")
    rec = compute_record(5, 1)
    cache.append([rec])
    with cache.path.open("a") as fh:
        fh.write(rec.to_json()[:20])
    assert list(cache.load()) == [(5, 1, __version__)]


def test_parse_spec_errors():
    with pytest.raises(ParameterError):
        parse_sweep_spec("n = 4..8\n")
    with pytest.raises(ParameterError):
        parse_sweep_spec("n = 8..4\nr = 1\n")
    with pytest.raises(ParameterError):
        parse_sweep_spec("n = 4\nr = 1\nmethods = magic\n")
    with pytest.raises(ParameterError):
        parse_sweep_spec("n = 4\nr = 1\ncolour = red\n")


@given(st.integers(1, 10), st.integers(0, 6))
def test_record_json_round_trip(n, r):
    rec = compute_record(n, r)
    line = rec.to_json()
    again = ResultRecord.from_json(line)
    assert again == rec
    assert again.to_json() == line
    assert list(json.loads(line)) == ["n", "r", "class", "dimension", "h_vector", "multiplicity", "methods",
                                      "version", "timestamp"]
