"""End-to-end checks of the szx command line (path via SZX_CLI)."""

import csv
import io
import json
import os
import subprocess

import pytest

CLI = os.environ.get("SZX_CLI", "szx")


def run(*args, stdin=None):
    return subprocess.run(
        [CLI, *args], input=stdin, capture_output=True, text=True
    )


def test_construct_bn_compute_table():
    built = run("construct", "bn", "6")
    assert built.returncode == 0
    g6 = built.stdout.strip()
    assert g6

    computed = run("compute", "-", stdin=built.stdout)
    assert computed.returncode == 0
    assert "61.5" in computed.stdout
    assert "theta" in computed.stdout


def test_compute_csv_columns():
    theta = run("construct", "theta", "1", "2", "4")
    assert theta.returncode == 0
    out = run("compute", "-", "--format", "csv", stdin=theta.stdout)
    assert out.returncode == 0
    rows = list(csv.DictReader(io.StringIO(out.stdout)))
    assert len(rows) == 1
    row = rows[0]
    assert row["n"] == "6"
    assert row["m"] == "7"
    assert row["revised_szeged_q4"] == "240"
    assert row["class"] == "theta"
    assert list(row.keys()) == [
        "graph6", "n", "m", "wiener", "szeged",
        "revised_szeged_q4", "deviation_sum", "class",
    ]


def test_compute_json_matches_csv():
    stream = run("construct", "dumbbell", "3", "3", "0").stdout
    as_json = json.loads(run("compute", "-", "--format", "json", stdin=stream).stdout)
    as_csv = list(csv.DictReader(io.StringIO(
        run("compute", "-", "--format", "csv", stdin=stream).stdout)))
    assert len(as_json) == len(as_csv) == 1
    for key, value in as_csv[0].items():
        assert str(as_json[0][key]) == value
    assert as_json[0]["class"] == "cut-vertex"
    assert as_json[0]["n"] == 5


def test_compute_reports_bad_lines_with_numbers():
    out = run("compute", "-", stdin="C~\nnot-a-graph\n")
    assert out.returncode == 2
    assert "line 2" in out.stderr
    assert "C~" in out.stdout  # good lines still reported


def test_compute_rejects_disconnected():
    # Two isolated vertices.
    out = run("compute", "-", stdin="A?\n")
    assert out.returncode == 2
    assert "line 1" in out.stderr


def test_construct_usage_errors():
    assert run("construct", "theta", "1", "1", "2").returncode == 2
    assert run("construct", "theta", "1", "2").returncode == 2
    assert run("construct", "frobnicate", "3").returncode == 2
    hint = run("construct", "dumbbell", "1")
    assert hint.returncode == 2
    assert "usage" in hint.stderr.lower()


def test_enumerate_census_and_determinism():
    out = run("enumerate", "5")
    assert out.returncode == 0
    lines = out.stdout.splitlines()
    assert len(lines) == 5
    assert lines == sorted(lines)

    structural = run("enumerate", "5", "--method", "structural")
    assert structural.stdout == out.stdout

    jobs2 = run("enumerate", "5", "--jobs", "2")
    assert jobs2.stdout == out.stdout


def test_enumerate_budget_exit_code():
    assert run("enumerate", "10").returncode == 3
    assert run("enumerate", "13", "--method", "structural").returncode == 3


def test_verify_conjecture_table_and_csv():
    out = run("verify", "conjecture", "6", "7")
    assert out.returncode == 0
    assert out.stdout.count("PASS") == 2

    as_csv = run("verify", "conjecture", "6", "--format", "csv")
    rows = list(csv.DictReader(io.StringIO(as_csv.stdout)))
    assert rows[0]["n"] == "6"
    assert rows[0]["max_q4"] == "246"
    assert rows[0]["pass"] == "1"

    as_json = json.loads(run("verify", "conjecture", "6", "--format", "json").stdout)
    assert as_json[0]["pass"] is True
    assert as_json[0]["classes"] == 19


def test_verify_usage_and_budget():
    assert run("verify", "conjecture", "5").returncode == 2
    assert run("verify", "conjecture", "10").returncode == 3
    assert run("verify", "nonsense", "6").returncode == 2


def test_verify_conjecture_reports_failed_second_place_at_8():
    # The n=8 run refutes the second-place claim: theta(2,3,4) outscores
    # theta(1,2,6). The exit code flags the failed assertion while the
    # report spells out what happened.
    out = run("verify", "conjecture", "8", "--method", "structural")
    assert out.returncode == 1
    assert "FAIL n=8" in out.stdout
    assert "second_q4=556" in out.stdout

    doc = json.loads(
        run("verify", "conjecture", "8", "--method", "structural",
            "--format", "json").stdout)
    assert doc[0]["maximizer_is_bn"] is True
    assert doc[0]["max_q4"] == 568
    assert doc[0]["second_is_theta_1_2_n2"] is False
    assert doc[0]["pass"] is False


def test_verify_lemma3_lists_zero_deviation_edges():
    out = run("verify", "lemma3", "3", "3", "3")
    assert out.returncode == 0
    assert out.stdout.count("[middle of odd path]") == 3
    assert "zero_deviation_edges=3" in out.stdout


def test_verify_inequalities():
    out = run("verify", "inequalities", "6")
    assert out.returncode == 0
    assert "PASS n=6" in out.stdout


def test_output_and_plot_files(tmp_path):
    target = tmp_path / "report.csv"
    plot = tmp_path / "plot.csv"
    out = run("verify", "conjecture", "6", "--format", "csv",
              "--output", str(target), "--plot", str(plot))
    assert out.returncode == 0
    assert target.read_text().startswith("n,method,classes")
    assert plot.read_text() == "n,max_q4,second_q4\n6,246,240\n"


def test_stdin_dash_default():
    out = run("compute", stdin="A_\n")
    assert out.returncode == 0
    assert "1" in out.stdout


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
