import io
import json
import subprocess
import sys

import pytest

from bicyclic.cli import BUDGET, OK, REFUTED, USAGE, run
from bicyclic.figures import FIGURES


def call(*argv):
    out = io.StringIO()
    code = run(list(argv), out)
    return code, out.getvalue()


def test_mul_star_word():
    assert call("mul", "(2,1)", "(1,1)") == (OK, "(1,2)\n")
    assert call("star", "(3,-1)") == (OK, "(2,1)\n")
    assert call("word", "GG*G") == (OK, "(0,1)\n")


def test_grid_matches_figure():
    code, text = call("grid", "--rule", "D:a=8,c=3", "--rows", "0..10", "--cols", "-9..5")
    assert code == OK
    assert text == FIGURES["D:a=8,c=3"]["grid"] + "\n"
    code, text = call("grid", "--rule", "Z:d=5", "--rows", "0..7", "--cols", "-7..13")
    assert text == FIGURES["Z:d=5"]["grid"] + "\n"


def test_classify_unavoidable():
    code, text = call("classify", "--set", "(1,2)")
    assert code == REFUTED
    assert text.startswith("UNAVOIDABLE")
    assert "evenprop" in text


def test_classify_avoidable_json_and_text_agree():
    code, text = call("classify", "--set", "(8,-8);(3,-3)")
    assert code == OK
    code, js = call("classify", "--set", "(8,-8);(3,-3)", "--json")
    d = json.loads(js)
    assert d["verdict"] == "avoidable"
    assert d["families"] == ["d:a=8,c=3"]
    assert d["certificate"]["rule"] == "D:a=8,c=3"
    assert "d:a=8,c=3" in text and "D:a=8,c=3" in text


def test_classify_strict_gap_is_budget_failure():
    code, _ = call("classify", "--set", "(0,0);(4,-4)", "--strict", "--search-cap", "16")
    assert code == BUDGET
    assert call("classify", "--set", "(0,0);(4,-4)")[0] == OK


def test_partition_command():
    code, text = call("partition", "--rule", "D:a=8,c=3", "--set", "(8,-8);(3,-3)", "--window", "20")
    assert code == OK and "avoids" in text
    code, text = call("partition", "--rule", "parity", "--set", "(1,2)", "--window", "3")
    assert code == REFUTED and "violated" in text
    code, _ = call("partition", "--rule", "Z:d=-3", "--family", "b:d=-3", "--window", "15")
    assert code == OK


def test_graph_dot_and_certificate_roundtrip(tmp_path):
    dot = tmp_path / "g.dot"
    cert = tmp_path / "c.json"
    code, text = call("graph", "--set", "(8,-8);(3,-3)", "--window", "6", "--dot", str(dot), "--color",
                      "--certificate", str(cert))
    assert code == OK and "bipartite" in text
    assert dot.read_text().startswith("graph G {")
    assert "fillcolor" in dot.read_text()
    assert json.loads(cert.read_text())["kind"] == "two-coloring"
    code, text = call("check", "--certificate", str(cert), "--set", "(8,-8);(3,-3)", "--window", "6")
    assert (code, text) == (OK, "two-coloring valid\n")
    # the same colouring is not a certificate for a different target
    code, text = call("check", "--certificate", str(cert), "--set", "(1,2)", "--window", "6")
    assert code == REFUTED and "INVALID" in text


def test_graph_odd_cycle(tmp_path):
    cert = tmp_path / "c.json"
    code, text = call("graph", "--set", "(1,2)", "--window", "3", "--certificate", str(cert))
    assert code == OK and text.splitlines()[1].startswith("odd cycle")
    assert call("check", "--certificate", str(cert), "--set", "(1,2)", "--window", "3")[0] == OK


def test_verify_small_suites():
    code, text = call("verify", "--suite", "figures")
    assert code == OK and text.startswith("PASS figures")
    code, text = call("verify", "--suite", "theorem", "--max", "3")
    assert code == OK and text.startswith("PASS theorem")


def test_ncolor():
    code, text = call("ncolor", "--set", "(2,-2);(4,-4)", "--window", "6", "--k", "2")
    assert code == REFUTED
    code, text = call("ncolor", "--set", "(2,-2);(4,-4)", "--window", "6", "--k", "3")
    assert code == OK and "found" in text
    code, text = call("ncolor", "--set", "(1,2)", "--window", "8", "--k", "3", "--budget", "5")
    assert code == BUDGET


def test_probe():
    code, text = call("probe", "--family", "d:a=8,c=3", "--window", "8")
    assert code == OK
    assert "all obstructed" in text.splitlines()[0]


@pytest.mark.parametrize(
    "argv",
    [
        ["mul", "(1,-2)", "(0,0)"],
        ["mul", "(1,2"],
        ["word", "GX"],
        ["grid", "--rule", "D:a=7,c=3", "--rows", "0..2", "--cols", "0..2"],
        ["grid", "--rule", "parity", "--rows", "0-2", "--cols", "0..2"],
        ["partition", "--rule", "parity", "--window", "3"],
        ["probe", "--family", "q", "--window", "3"],
        ["classify"],
        ["frobnicate"],
        ["mul", "(1,1)", "(1,1)", "--bogus"],
    ],
)
def test_usage_errors(argv, capsys):
    assert call(*argv)[0] == USAGE


def test_deterministic_output():
    argv = ["classify", "--set", "(0,0);(1,1);(2,3)", "--json"]
    assert call(*argv) == call(*argv)


def test_console_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bicyclic", "mul", "(2,1)", "(1,1)"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "(1,2)\n"
    proc = subprocess.run([sys.executable, "-m", "bicyclic", "classify", "--set", "(1,2)"], capture_output=True, text=True)
    assert proc.returncode == 1
