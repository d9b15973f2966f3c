import io
import json
import subprocess
import sys

import pytest

from siegelcong.cli import EXIT_FAIL, EXIT_OK, EXIT_USAGE, run
from siegelcong.store import HEADER
from siegelcong.synthetic import FreeCounts, synth_dims


@pytest.fixture(autouse=True)
def isolated_env(tmp_path, monkeypatch):
    monkeypatch.setenv("SIEGELCONG_STORE", str(tmp_path / "store.csv"))
    monkeypatch.delenv("SIEGELCONG_SEED", raising=False)


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def jsonl(*argv):
    code, text = call(*argv, "--format", "jsonl")
    return code, [json.loads(line) for line in text.splitlines()]


def test_c4_table():
    code, text = call("c4", "--max", "5")
    assert code == EXIT_OK and text.split() == ["1", "1", "2", "3", "1", "3"]
    code, recs = jsonl("c4", "--max", "3", "--t", "2")
    assert code == EXIT_OK and recs[0]["coefficients"] == [1, 1, 0, 1]


def test_classnum_and_hurwitz():
    code, recs = jsonl("classnum", "-D", "-20")
    assert code == EXIT_OK and recs[0]["h"] == 2
    code, text = call("hurwitz", "-D", "-12")
    assert code == EXIT_OK and "4/3" in text
    code, _ = call("classnum", "-D", "5")
    assert code == EXIT_USAGE


def test_dims_and_types():
    code, recs = jsonl("dims", "--k", "2", "--p", "11")
    assert code == EXIT_OK
    rec = recs[0]
    # X_0(11) has genus 1 and its single newform lands in the plus part
    assert (rec["dim_total"], rec["dim_new"], rec["dim_plus"], rec["dim_minus"]) == (1, 1, 1, 0)
    code, recs = jsonl("types", "--k", "4", "--p", "5")
    assert code == EXIT_OK
    assert (recs[0]["s_Vb"], recs[0]["s_P_VIb"], recs[0]["s_Y_VIb"]) == (0, 1, 0)


def test_verify_computed_families():
    assert call("verify", "--theorem", "C42", "--k", "1", "--n", "1")[0] == EXIT_OK
    code, recs = jsonl("verify", "--theorem", "T33", "--k", "3", "--p", "11")
    assert code == EXIT_OK
    assert recs[0]["record"] == "config" and recs[1]["verdict"] == "pass"
    assert recs[1]["provenance"] == "computed"


def test_verify_synthetic_and_missing_dims():
    code, recs = jsonl("verify", "--theorem", "T31", "--k", "4", "--p", "13", "--synthetic", "--seed", "7")
    assert code == EXIT_OK and recs[0]["seed"] == 7 and recs[1]["seed"] == 7
    code, _ = call("verify", "--theorem", "T31", "--k", "4", "--p", "13")
    assert code == EXIT_USAGE


def test_verify_failure_exit_code(tmp_path):
    good = synth_dims(4, 13, FreeCounts(1, 1, 1, 1, 1))
    f = tmp_path / "bad.csv"
    f.write_text(
        ",".join(HEADER) + "\n"
        f"paramodular_K,13,4,{good.dim_K + 1},tampered\n"
        f"siegel_Gamma0,13,4,{good.dim_Gamma0},tampered\n"
    )
    code, text = call("verify", "--theorem", "T31", "--k", "4", "--p", "13", "--dims-file", str(f))
    assert code == EXIT_FAIL and "FAIL" in text


@pytest.mark.parametrize(
    "argv",
    [
        ("verify", "--theorem", "X99", "--k", "3", "--p", "5"),
        ("verify", "--theorem", "T31ii", "--k", "3", "--p", "13", "--synthetic"),
        ("verify", "--theorem", "C42", "--k", "1", "--n", "2"),
        ("verify", "--theorem", "C41", "--k", "3", "--n", "1", "--synthetic"),
        ("scan", "--theorem", "T33", "--k-range", "5..3", "--p-max", "50"),
        ("scan", "--theorem", "T33", "--k-range", "3..5"),
        ("verify", "--theorem", "T33", "--k", "3", "--p", "5", "--seed", "-1"),
        ("nosuchcommand",),
    ],
)
def test_usage_errors(argv):
    assert call(*argv)[0] == EXIT_USAGE


def test_scan_table_and_jsonl_agree():
    argv = ("scan", "--theorem", "T31", "--k-range", "3..6", "--p-max", "30", "--synthetic",
            "--draws", "5", "--seed", "2")  # fmt: skip
    code_t, text = call(*argv)
    code_j, recs = jsonl(*argv)
    assert code_t == code_j == EXIT_OK
    reports = [r for r in recs if r["record"] == "report"]
    table = [line for line in text.splitlines() if line.startswith(("PASS", "FAIL"))]
    assert len(reports) == len(table)
    for rec, line in zip(reports, table):
        assert line.split()[0] == rec["verdict"].upper() and line.split()[1] == rec["theorem_id"]
    assert recs[-1]["record"] == "summary" and recs[-1]["failed"] == 0


def test_scan_only_skips_is_ok():
    code, recs = jsonl("scan", "--theorem", "T32", "--k-range", "3..4", "--p-max", "11")
    assert code == EXIT_OK
    assert {r["record"] for r in recs} == {"config", "skip", "summary"}
    assert recs[-1]["checked"] == 0 and "no applicable instance" in recs[-1]["note"]


def test_scan_c42_skips_composite():
    code, recs = jsonl("scan", "--theorem", "C42", "--k-range", "1..2", "--n-max", "3")
    assert code == EXIT_OK
    skips = [r for r in recs if r["record"] == "skip"]
    assert {s["n"] for s in skips} == {2}  # 21 is composite


def test_ingest_then_verify(tmp_path):
    dims = synth_dims(5, 13, FreeCounts(0, 1, 0, 2, 1))
    f = tmp_path / "in.csv"
    f.write_text(
        ",".join(HEADER) + "\n"
        f"paramodular_K,13,5,{dims.dim_K},fixture\n"
        f"siegel_Gamma0,13,5,{dims.dim_Gamma0},fixture\n"
    )
    code, recs = jsonl("ingest", str(f))
    assert code == EXIT_OK and recs[0]["added"] == 2
    code, recs = jsonl("verify", "--theorem", "C41", "--k", "5", "--n", "1")
    assert code == EXIT_OK and [r["verdict"] for r in recs[1:]] == ["pass", "pass"]
    assert all(r["provenance"] == "ingested" for r in recs[1:])


def test_ingest_rejects_exit_2(tmp_path):
    f = tmp_path / "in.csv"
    f.write_text(",".join(HEADER) + "\nparamodular_K,13,5,-1,x\n")
    code, text = call("ingest", str(f))
    assert code == EXIT_USAGE and "line 2" in text
    f.write_text("garbage\n")
    assert call("ingest", str(f))[0] == EXIT_USAGE


def test_synth_deterministic_and_env_seed(monkeypatch):
    a = call("synth", "--k", "6", "--p", "17", "--seed", "9", "--format", "jsonl")
    b = call("synth", "--k", "6", "--p", "17", "--seed", "9", "--format", "jsonl")
    assert a == b
    monkeypatch.setenv("SIEGELCONG_SEED", "9")
    assert call("synth", "--k", "6", "--p", "17", "--format", "jsonl") == a
    monkeypatch.setenv("SIEGELCONG_SEED", "10")
    assert call("synth", "--k", "6", "--p", "17", "--format", "jsonl") != a
    monkeypatch.setenv("SIEGELCONG_SEED", "abc")
    assert call("synth", "--k", "6", "--p", "17")[0] == EXIT_USAGE


def test_scan_byte_identical_across_processes(tmp_path):
    argv = [sys.executable, "-m", "siegelcong", "scan", "--theorem", "C41", "--k-range", "5..7",
            "--n-max", "6", "--synthetic", "--draws", "10", "--seed", "3", "--format", "jsonl"]  # fmt: skip
    env = {"SIEGELCONG_STORE": str(tmp_path / "s.csv"), "PATH": ""}
    runs = [subprocess.run(argv, capture_output=True, env=env, check=True).stdout for _ in range(2)]
    assert runs[0] == runs[1] and runs[0]
