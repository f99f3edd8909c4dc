from __future__ import annotations

import csv
import io
import json
import subprocess
import sys

import pytest

from geodex.cli import run
from geodex.digraph6 import parse_digraph6


def cli(*argv, stdin=""):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdin=io.StringIO(stdin), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def payload(text):
    env = json.loads(text)
    assert env["tool"] == "geodex" and env["backend"] in ("python", "compiled")
    return env["payload"]


def test_construct_check_pipeline():
    code, line, _ = cli("construct", "G", "--n", "33", "--k", "6")
    assert code == 0
    g = parse_digraph6(line)
    assert (g.n, g.m) == (33, 51)
    code, out, _ = cli("check", "--k", "6", stdin=line)
    assert code == 0 and payload(out)[0]["is_k_geodetic"] is True
    code, out, _ = cli("check", "--k", "7", stdin=line)
    rep = payload(out)[0]
    assert rep["is_k_geodetic"] is False and len(rep["witness"]) == 2


def test_construct_json_and_labels(tmp_path):
    labels = tmp_path / "labels.json"
    code, out, _ = cli("construct", "permutation", "--d", "2", "--k", "2", "--format", "json",
                       "--labels", str(labels))
    assert code == 0
    body = payload(out)
    assert (body["n"], body["m"]) == (12, 24)
    assert json.loads(labels.read_text()) == body["labels"]


def test_construct_warning_and_errors():
    code, _, err = cli("construct", "A", "--r", "3")
    assert code == 0 and "warning" in err
    assert cli("construct", "A")[0] == 2
    assert cli("construct", "G", "--n", "11", "--k", "4")[0] == 2
    assert cli("construct", "nope")[0] == 2


def test_girth_and_count():
    code, c3, _ = cli("construct", "fixture", "--name", "C3")
    lines = c3 + "&BP?\n"
    code, out, _ = cli("girth", stdin=lines)
    assert code == 0
    assert [r["geodetic_girth"] for r in payload(out)] == [2, "infinite"]
    code, p22, _ = cli("construct", "permutation", "--d", "2", "--k", "2")
    code, out, _ = cli("count", "--cycles", "3", stdin=p22)
    rep = payload(out)[0]
    assert rep["count"] == 8 and rep["bounds"]["within_triangle_bound"] is True
    code, out, _ = cli("count", "--paths", "1", stdin=p22)
    assert payload(out)[0]["count"] == 24
    assert cli("count", "--cycles", "1", stdin=p22)[0] == 2


def test_invalid_input_exit_code():
    code, _, err = cli("check", "--k", "2", stdin="&DI? O?\n")
    assert code == 2 and "byte offset 4" in err and "line 1" in err
    assert cli("check", "--k", "2", stdin="")[0] == 2
    assert cli("check", "--k", "2", "--input", "/nonexistent/file")[0] == 2
    assert cli("search", "--n", "5", "--k", "1")[0] == 2
    assert cli("bogus")[0] == 2


def test_search_json_and_determinism():
    args = ("search", "--n", "7", "--k", "2", "--strong", "--deterministic")
    a, b = cli(*args), cli(*args)
    assert a == b and a[0] == 0
    env = json.loads(a[1])
    assert env["timing"] is None and "wall_time" not in env["payload"]
    assert env["payload"]["max_size"] == 11 and env["payload"]["class_count"] == 29
    # the flag is accepted before the subcommand as well
    assert cli("--deterministic", "search", "--n", "7", "--k", "2", "--strong")[1] == a[1]


def test_search_digraph6_output_and_verify():
    code, out, _ = cli("search", "--n", "8", "--k", "2", "--format", "digraph6")
    lines = out.split()
    assert code == 0 and len(lines) == 5
    code, out, _ = cli("verify", "--n", "8", "--k", "2", "--size", "16", stdin=out)
    assert all(r["verified"] for r in payload(out))


def test_search_budget_exit_code():
    code, out, err = cli("search", "--n", "12", "--k", "2", "--max-nodes", "10")
    assert code == 3 and "incomplete" in err
    assert payload(out)["status"] == "node budget exceeded"


def test_table_csv():
    code, out, _ = cli("table", "--k", "3", "--n-from", "7", "--n-to", "10")
    assert code == 0
    rows = list(csv.reader(io.StringIO(out)))
    assert rows == [["n", "3"], ["7", "8"], ["8", "10"], ["9", "12"], ["10", "14"]]
    code, out, _ = cli("table", "--k", "2", "3", "--n-from", "3", "--n-to", "5", "--long")
    rows = list(csv.DictReader(io.StringIO(out)))
    assert {(r["n"], r["k"], r["value"]) for r in rows} >= {("5", "3", "5"), ("3", "2", "3")}
    assert all(r["status"] == "complete" for r in rows)


def test_table_partial_cells_are_blank():
    code, out, err = cli("table", "--k", "2", "--n-from", "9", "--n-to", "10", "--max-nodes", "5")
    assert code == 3 and "n=9 k=2" in err
    assert list(csv.reader(io.StringIO(out)))[1:] == [["9", ""], ["10", ""]]
    assert cli("table", "--k", "2", "--n-from", "5", "--n-to", "4")[0] == 2


@pytest.mark.parametrize("argv", [["--version"], ["check", "--help"]])
def test_help_and_version(argv):
    assert cli(*argv)[0] == 0


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "geodex", "construct", "fixture", "--name", "C3"],
                         capture_output=True, text=True)
    assert out.returncode == 0 and parse_digraph6(out.stdout).m == 3
