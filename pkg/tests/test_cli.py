import json
import os
import subprocess
import sys
from fractions import Fraction

import pytest

from spinfn.cli import main, parse_scalar


def run(*args, env=None):
    full = dict(os.environ)
    full.update(env or {})
    return subprocess.run([sys.executable, "-m", "spinfn", *args], capture_output=True,
                          text=True, env=full)


def test_compute_qw_example():
    out = run("compute", "qw", "--lambda", "1", "--mu", "", "--q", "1/2", "--s", "1/3", "--x", "1/5")
    assert out.returncode == 0
    doc = json.loads(out.stdout)
    assert doc["value"] == "3/5" and doc["agreement"]
    assert doc["routes"] == {"branching": "3/5", "lattice": "3/5"}


def test_compute_empty_partition_needs_no_parameters(capsys):
    assert main(["compute", "qw", "--lambda", ""]) == 0
    assert json.loads(capsys.readouterr().out)["value"] == "1"


def test_compute_hl_f_closed_form(capsys):
    assert main(["compute", "hl-f", "--lambda", "0,0", "--q", "1/2", "--s", "1/3",
                 "--u", "1/4,1/5"]) == 0
    q, s, u1, u2 = Fraction(1, 2), Fraction(1, 3), Fraction(1, 4), Fraction(1, 5)
    expected = (1 - q) * (1 - q * q) / ((1 - s * u1) * (1 - s * u2))
    assert json.loads(capsys.readouterr().out)["value"] == str(expected)


def test_compute_integral_numeric(capsys):
    assert main(["compute", "qw-integral", "--lambda", "2,1", "--q", "0.3", "--s", "0.2",
                 "--x", "0.1,0.15", "--nodes", "32"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["mode"] == "numeric" and doc["inputs"]["nodes"] == 32


def test_parse_scalar_kinds():
    assert parse_scalar("3/5") == (Fraction(3, 5), "rational")
    assert parse_scalar("4")[1] == "integer"
    assert parse_scalar("0.25")[1] == "decimal"


def test_mixing_rationals_and_decimals_is_usage_error(capsys):
    assert main(["compute", "qw", "--lambda", "1", "--q", "1/2", "--s", "0.3", "--x", "1/5"]) == 2
    assert "mixing" in capsys.readouterr().err


def test_unknown_check_is_usage_error():
    assert main(["verify", "bogus"]) == 2


def test_precondition_exit_code(capsys):
    assert main(["verify", "q-gauss", "--q", "0.3", "--s", "0.2", "--x", "1.5", "--y", "0.1"]) == 3
    err = json.loads(capsys.readouterr().err)
    assert err["error"] == "precondition"


def test_failed_check_exit_code(capsys):
    # a cutoff of 2 cannot reach 1e-10 at x = y = 0.9
    rc = main(["verify", "qw-cauchy", "--q", "0.3", "--s", "0.2", "--x", "0.9", "--y", "0.9",
               "--cutoff", "2", "--trials", "1"])
    assert rc == 1
    assert json.loads(capsys.readouterr().out)["pass"] is False


def test_verify_is_reproducible_and_parallel_safe():
    args = ("verify", "dual-cauchy", "--m", "2", "--n", "2", "--trials", "3", "--seed", "7")
    a = run(*args)
    b = run(*args)
    c = run(*args, "--jobs", "2")
    assert a.returncode == 0
    assert a.stdout == b.stdout == c.stdout
    docs = [json.loads(line) for line in a.stdout.splitlines()]
    # each trial reports the standard and the alternative variant
    assert [d["trial"] for d in docs] == [0, 0, 1, 1, 2, 2]
    assert all(d["pass"] and d["abs_dev"] == "0" for d in docs)


def test_seed_from_environment():
    a = run("verify", "ybe", "--trials", "2", env={"SPINFN_SEED": "11"})
    b = run("verify", "ybe", "--trials", "2", "--seed", "11")
    c = run("verify", "ybe", "--trials", "2", "--seed", "12")
    assert a.stdout == b.stdout != c.stdout


def test_out_file(tmp_path, capsys):
    target = tmp_path / "report.jsonl"
    assert main(["verify", "gauge", "--trials", "2", "--out", str(target)]) == 0
    assert capsys.readouterr().out == ""
    lines = target.read_text().splitlines()
    assert len(lines) == 2 and all(json.loads(x)["pass"] for x in lines)


def test_list_identities(capsys):
    assert main(["list-identities"]) == 0
    docs = [json.loads(x) for x in capsys.readouterr().out.splitlines()]
    names = {d["name"] for d in docs}
    assert {"qw-cauchy", "dual-cauchy", "ybe", "qw-integral"} <= names
    assert {d["mode"] for d in docs} == {"exact", "numeric"}


@pytest.mark.parametrize("name", ["fused-ybe", "pieri-vertical", "stable-routes", "hl-cauchy"])
def test_verify_individual_checks(name, capsys):
    assert main(["verify", name, "--trials", "1", "--seed", "3"]) == 0


def test_selftest():
    out = run("selftest")
    assert out.returncode == 0, out.stderr
    assert all(json.loads(x)["pass"] for x in out.stdout.splitlines())
