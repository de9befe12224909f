from __future__ import annotations

import json
import subprocess
import sys

import pytest

from fenceq.cli import main
from fenceq.fixtures import CPOLY_FIXTURES, NONAGON, NONAGON_ARC, NONAGON_LAM, cpoly_input

from oracles import brute_notched


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    lines = [json.loads(line) for line in out.splitlines() if line.strip()] if "--pretty" not in argv else out
    return code, lines, err


def test_rank_circular(capsys):
    code, lines, _ = run(capsys, "rank", "--alpha", "1,2,1,2", "--variant", "circular")
    assert code == 0
    assert lines[0]["poly"] == [1, 2, 3, 2, 3, 2, 1]
    assert lines[0]["report"]["unimodal"] is False


def test_rank_plain_and_fast(capsys):
    _, lines, _ = run(capsys, "rank", "--alpha", "1,1")
    assert lines[0]["poly"] == [1, 2, 1, 1]
    _, lines, _ = run(capsys, "rank", "--alpha", "[1,1]", "--fast")
    assert lines[0]["poly"] == [1, 2, 1, 1]


def test_rank_notched_matches_oracle(capsys):
    _, lines, _ = run(capsys, "rank", "--alpha", "2,2,2,2", "--variant", "notched-last")
    assert lines[0]["poly"] == brute_notched((2, 2, 2, 2), "last")


def test_rank_ij(capsys):
    _, lines, _ = run(capsys, "rank", "--alpha", "1,1", "--variant", "ij", "--i", "3", "--j", "1")
    assert lines[0]["poly"] == [1, 1, 1, 1]
    code, _, err = run(capsys, "rank", "--alpha", "1,1", "--variant", "ij")
    assert code == 2 and "--i" in err


@pytest.mark.parametrize(
    "argv, code",
    [
        (["rank", "--alpha", "1,-1"], 2),
        (["rank", "--alpha", "x"], 2),
        (["rank", "--alpha", "1", "--variant", "notched-last"], 3),
        (["rank", "--alpha", "1,2,1", "--variant", "circular"], 2),
        (["rank", "--alpha", "2", "--variant", "ij", "--i", "3", "--j", "1"], 3),
    ],
)
def test_rank_errors(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_cpoly_fixture_and_json(capsys):
    code, lines, _ = run(capsys, "cpoly", "--fixture", "nonagon_counterexample")
    assert code == 0
    assert lines[0]["c_poly"] == [7, 6, 1]
    assert lines[0]["report"]["ineq_a"] is False
    text = json.dumps(cpoly_input(NONAGON, NONAGON_LAM, NONAGON_ARC))
    _, lines, _ = run(capsys, "cpoly", "--json", text)
    assert lines[0]["c_poly"] == [7, 6, 1]


def test_cpoly_file_and_stdin(capsys, tmp_path, monkeypatch):
    data = CPOLY_FIXTURES["table_left_repeated_curve"].input
    path = tmp_path / "in.json"
    path.write_text(json.dumps(data))
    _, lines, _ = run(capsys, "cpoly", "--input", str(path))
    assert lines[0]["c_poly"] == [2, 2, 6, 6, 12, 9, 8, 4, 6, 4, 2]
    import io

    monkeypatch.setattr(sys, "stdin", io.StringIO(json.dumps(data)))
    _, lines, _ = run(capsys, "cpoly", "--input", "-")
    assert lines[0]["c_poly"] == [2, 2, 6, 6, 12, 9, 8, 4, 6, 4, 2]


def test_cpoly_trivial(capsys):
    text = json.dumps({"triangulation": {"n": 5, "diagonals": [[1, 3], [1, 4]]}, "laminations": [], "arc": [1, 3]})
    assert run(capsys, "cpoly", "--json", text)[1][0]["c_poly"] == [1]


@pytest.mark.parametrize(
    "payload",
    [
        "{not json",
        json.dumps({"arc": [1, 3]}),
        json.dumps({"triangulation": {"n": 5, "diagonals": [[1, 3], [2, 4]]}, "arc": [2, 5]}),
        json.dumps({"triangulation": {"n": 5, "diagonals": [[1, 3], [1, 4]]}, "arc": [1, 2]}),
        json.dumps({"triangulation": {"n": 5, "diagonals": [[1, 3], [1, 4]]}, "arc": [2, 5],
                    "laminations": [[{"from": {"edge": 1}, "to": {"edge": 2}}]]}),
    ],
)
def test_cpoly_input_errors(capsys, payload):
    assert run(capsys, "cpoly", "--json", payload)[0] == 2


def test_cpoly_needs_a_source(capsys):
    assert run(capsys, "cpoly")[0] == 2
    assert run(capsys, "cpoly", "--fixture", "nope")[0] == 2
    assert run(capsys, "cpoly", "--input", "/nonexistent/file.json")[0] == 2


def test_fpoly_and_arc_poset(capsys):
    text = json.dumps({"triangulation": {"n": 5, "diagonals": [[1, 3], [1, 4]]}, "arc": [2, 5]})
    _, lines, _ = run(capsys, "fpoly", "--json", text)
    assert lines[0]["f_poly"] == [1, 1, 1]
    _, lines, _ = run(capsys, "arc-poset", "--json", text)
    assert lines[0]["rank"] == [1, 1, 1]
    assert lines[0]["matches_f_poly"] is True
    assert lines[0]["poset"]["covers"]


def test_arc_poset_without_crossings(capsys):
    text = json.dumps({"triangulation": {"n": 5, "diagonals": [[1, 3], [1, 4]]}, "arc": [1, 3]})
    assert run(capsys, "arc-poset", "--json", text)[0] == 2


def test_verify_identities(capsys):
    code, lines, _ = run(capsys, "verify-identities", "--alpha", "2,2,2,2")
    assert code == 0 and lines[0]["checks"]["eq1"] and lines[0]["checks"]["eq2"]
    code, lines, _ = run(capsys, "verify-identities", "--n", "1..6")
    assert code == 0
    assert lines[-1]["in_domain_failures"] == 0
    assert lines[-1]["degenerate"] > 0


def test_scan_command(capsys):
    code, lines, err = run(capsys, "scan", "--mode", "circular", "--n", "4..8")
    assert code == 0
    assert lines[-1]["violation_count"] == 0
    assert [x["size"]["n"] for x in lines[:-1]] == [4, 5, 6, 7, 8]
    assert "elapsed" in err


def test_scan_theorem_violation_exits_one(capsys):
    code, lines, _ = run(capsys, "scan", "--mode", "notched", "--n", "3")
    assert code == 1
    assert lines[-1]["violation_count"] > 0
    assert all("poly" in v for v in lines[-1]["violations"])


def test_scan_conjecture_and_bad_config(capsys, monkeypatch):
    code, lines, _ = run(capsys, "scan", "--mode", "log_concavity", "--n", "10", "--sample-limit", "20", "--timing")
    assert code == 0 and lines[-1]["kind"] == "conjecture" and "elapsed" in lines[-1]
    assert run(capsys, "scan", "--mode", "single_lam", "--n", "3..5")[0] == 2
    assert run(capsys, "scan", "--mode", "plain", "--n", "a..b")[0] == 2
    monkeypatch.setenv("FENCEQ_WORKERS", "zero")
    assert run(capsys, "scan", "--mode", "plain", "--n", "3")[0] == 2


def test_reproduce_paper(capsys):
    code, lines, _ = run(capsys, "reproduce-paper")
    assert code == 0
    status = {x["fixture"]: x["status"] for x in lines[:-1]}
    assert status.pop("single_lam_figure") == "erratum"
    assert set(status.values()) == {"pass"}
    assert all(x["citation"] for x in lines[:-1])
    code, _, _ = run(capsys, "reproduce-paper", "--strict")
    assert code == 1


def test_reproduce_paper_catches_sign_flip(capsys, monkeypatch):
    import fenceq.surface as sf

    real = sf.shear

    def flipped(t, curve, d):
        return -real(t, curve, d)

    monkeypatch.setattr(sf, "shear", flipped)
    code, lines, _ = run(capsys, "reproduce-paper")
    status = {x["fixture"]: x["status"] for x in lines[:-1]}
    assert code == 1
    assert status["octagon_lamination_row"] == "fail"


def test_pretty(capsys):
    code, out, _ = run(capsys, "--pretty", "rank", "--alpha", "1,1")
    assert code == 0
    assert "unimodal" in out and "{" not in out


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "fenceq", "rank", "--alpha", "1,1"],
                          capture_output=True, text=True, check=True)
    assert json.loads(proc.stdout)["poly"] == [1, 2, 1, 1]
