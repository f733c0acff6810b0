"""Command-line interface contract: exit codes, CSV and JSON shapes,
determinism, and config-file handling.  Everything runs through a real
subprocess so argument parsing and stream behavior are exercised as a
user would hit them.
"""

from __future__ import annotations

import json
import math
import os
import subprocess
import sys
from pathlib import Path

import pytest

jsonschema = pytest.importorskip("jsonschema")

import steklov_ball

SCHEMAS = json.loads(
    (Path(steklov_ball.__file__).parent / "schemas" / "output_schemas.json").read_text()
)


def run_cli(*args, env_extra=None):
    env = dict(os.environ)
    if env_extra:
        env.update(env_extra)
    return subprocess.run(
        [sys.executable, "-m", "steklov_ball.cli", *args],
        capture_output=True,
        text=True,
        env=env,
    )


def validate(payload: dict, name: str) -> None:
    schema = dict(SCHEMAS["definitions"][name])
    schema["definitions"] = SCHEMAS["definitions"]
    jsonschema.validate(payload, schema)


def test_eigs_csv_values():
    r = run_cli("eigs", "--family", "2", "--l-max", "3", "--k2", "1")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "family,l,theta,k2,lambda,status"
    assert len(lines) == 4
    first = lines[1].split(",")
    assert first[0] == "2" and first[1] == "1" and first[5] == "OK"
    assert float(first[4]) == pytest.approx(steklov_ball.lambda2(1, 1.0), rel=1e-15)


def test_eigs_json_schema():
    r = run_cli("eigs", "--family", "1", "--l-max", "4", "--k2", "-7.5",
                "--theta", "0.5", "--format", "json")
    assert r.returncode == 0
    payload = json.loads(r.stdout)
    validate(payload, "table")
    assert len(payload["rows"]) == 4
    for row in payload["rows"]:
        assert row["lambda"] == pytest.approx(
            steklov_ball.lambda1(row["l"], -7.5, 0.5), rel=1e-15
        )


def test_eigs_zero_k2_exits_3():
    r = run_cli("eigs", "--family", "1", "--l-max", "2", "--k2", "0")
    assert r.returncode == 3
    assert "k2 = 0" in r.stderr


def test_eigs_resonant_row_is_res():
    z = steklov_ball.bessel_zeros(1, 1).roots[0]
    r = run_cli("eigs", "--family", "2", "--l-max", "2", "--k2", repr(z * z))
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    row1 = lines[1].split(",")
    assert row1[5] == "RES" and row1[4] == ""
    assert lines[2].split(",")[5] == "OK"


def test_invalid_flags_exit_2():
    for args in (
        ["eigs", "--family", "3", "--l-max", "2", "--k2", "1"],
        ["eigs", "--l-max", "2"],  # --k2 required
        ["eigs", "--family", "1", "--l-max", "0", "--k2", "1"],
        ["zeros", "--kind", "unknown", "--l", "1"],
        ["verify", "--suite", "not-a-suite"],
    ):
        r = run_cli(*args)
        assert r.returncode == 2, args
        assert r.stderr.strip() != ""


def test_negative_values_accepted_after_flag():
    # "--k2 -5" and "--k2 -100:100" must parse even though the token
    # starts with a dash
    r = run_cli("eigs", "--family", "1", "--l-max", "1", "--k2", "-5")
    assert r.returncode == 0
    r = run_cli("sweep", "--family", "1", "--l", "1:2", "--k2", "-10:10",
                "--samples", "5")
    assert r.returncode == 0
    ks = [line.split(",")[3] for line in r.stdout.strip().splitlines()[1:]]
    assert ks[:5] == ["-10", "-5", "0", "5", "10"]


def test_sweep_single_sample_matches_eigs():
    r1 = run_cli("sweep", "--family", "1", "--l", "2:2", "--k2", "3.5:3.5",
                 "--samples", "1", "--theta", "2")
    r2 = run_cli("eigs", "--family", "1", "--l-max", "2", "--k2", "3.5",
                 "--theta", "2")
    row_sweep = r1.stdout.strip().splitlines()[1]
    row_eigs = r2.stdout.strip().splitlines()[2]  # l = 2 row
    assert row_sweep == row_eigs


def test_sweep_thread_count_invariance():
    args = ["sweep", "--family", "2", "--l", "1:4", "--k2", "-30:30", "--samples", "101"]
    outs = []
    for threads in ("1", "3", "8"):
        r = run_cli(*args, "--threads", threads)
        assert r.returncode == 0
        outs.append(r.stdout)
    assert outs[0] == outs[1] == outs[2]


def test_sweep_env_thread_default():
    args = ["sweep", "--family", "1", "--l", "1:2", "--k2", "0:4", "--samples", "5"]
    a = run_cli(*args, env_extra={"STEKLOV_BALL_THREADS": "2"})
    b = run_cli(*args, "--threads", "7")
    assert a.returncode == b.returncode == 0
    assert a.stdout == b.stdout


def test_sweep_interior_zero_is_res_but_all_zero_range_fails():
    r = run_cli("sweep", "--family", "1", "--l", "1:1", "--k2", "-1:1",
                "--samples", "3")
    assert r.returncode == 0
    rows = [line.split(",") for line in r.stdout.strip().splitlines()[1:]]
    assert rows[1][3] == "0" and rows[1][5] == "RES"
    r = run_cli("sweep", "--family", "1", "--l", "1:1", "--k2", "0:0",
                "--samples", "1")
    assert r.returncode == 3


def test_sweep_json_has_no_nan(tmp_path):
    # spanning several poles: every lambda is finite or the row is RES
    r = run_cli("sweep", "--family", "1", "--l", "1:3", "--k2", "-50:50",
                "--samples", "201", "--format", "json")
    assert r.returncode == 0
    payload = json.loads(r.stdout)  # json.loads rejects bare NaN/Infinity
    validate(payload, "table")
    for row in payload["rows"]:
        if row["status"] == "OK":
            assert math.isfinite(row["lambda"])
        else:
            assert row["lambda"] is None


def test_zeros_csv_and_json():
    r = run_cli("zeros", "--kind", "bessel", "--l", "0", "--count", "2")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "kind,l,theta,index,root,residual"
    roots = [float(line.split(",")[4]) for line in lines[1:]]
    assert roots[0] == pytest.approx(math.pi, rel=1e-14)
    assert roots[1] == pytest.approx(2 * math.pi, rel=1e-14)

    r = run_cli("zeros", "--kind", "family1", "--l", "2", "--count", "3",
                "--theta", "0.5", "--format", "json")
    payload = json.loads(r.stdout)
    validate(payload, "zeros")
    assert payload["kind"] == "family1" and payload["theta"] == 0.5
    got = payload["roots"]
    want = steklov_ball.family1_resonances(2, 0.5, 3).roots
    for a, b in zip(got, want):
        assert a == pytest.approx(b, rel=1e-15)


def test_classical_output():
    r = run_cli("classical", "--dim", "3", "--count", "9")
    lines = r.stdout.strip().splitlines()
    assert lines[0] == "dim,radius,rank,degree,eigenvalue,multiplicity"
    eigs = [float(line.split(",")[4]) for line in lines[1:]]
    assert eigs == [0.0, 1.0, 1.0, 1.0, 2.0, 2.0, 2.0, 2.0, 2.0]

    r = run_cli("classical", "--dim", "4", "--radius", "2", "--count", "6",
                "--format", "json")
    payload = json.loads(r.stdout)
    validate(payload, "classical")
    assert payload["rows"][1]["eigenvalue"] == pytest.approx(0.5)
    assert payload["rows"][0]["rank"] == 1


def test_verify_default_passes_and_validates():
    r = run_cli("verify", "--l-max", "4")
    assert r.returncode == 0, r.stdout + r.stderr
    payload = json.loads(r.stdout)
    validate(payload, "verify")
    assert payload["passed"] is True
    assert payload["counts"]["failed"] == 0


def test_verify_single_suite_csv():
    r = run_cli("verify", "--suite", "spot-values", "--format", "csv")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert lines[0].startswith("suite,")


def test_verify_perturbation_hook_fails():
    r = run_cli("verify", "--suite", "eigen-residuals", "--perturb-lambda", "1e-3")
    assert r.returncode == 1
    payload = json.loads(r.stdout)
    assert payload["passed"] is False


def test_out_flag_writes_file(tmp_path):
    out = tmp_path / "table.csv"
    r = run_cli("eigs", "--family", "2", "--l-max", "2", "--k2", "4",
                "--out", str(out))
    assert r.returncode == 0
    assert r.stdout == ""
    text = out.read_text()
    assert text.startswith("family,l,theta,k2,lambda,status")


def test_config_file_merge(tmp_path):
    cfg = tmp_path / "run.cfg"
    cfg.write_text("# defaults\nfamily=2\nl-max=2\nk2=1\n")
    r = run_cli("eigs", "--config", str(cfg), "--l-max", "3")
    assert r.returncode == 0
    lines = r.stdout.strip().splitlines()
    assert len(lines) == 4  # flag --l-max 3 beat the config's 2
    assert lines[1].split(",")[0] == "2"  # family came from the config

    # config alone can satisfy a required flag; a bad key cannot
    r = run_cli("eigs", "--config", str(cfg))
    assert r.returncode == 0
    bad = tmp_path / "bad.cfg"
    bad.write_text("no-such-key=1\n")
    r = run_cli("eigs", "--config", str(bad), "--family", "1", "--l-max", "1",
                "--k2", "1")
    assert r.returncode == 2
