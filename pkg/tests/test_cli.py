from __future__ import annotations

import io
import json
import subprocess
import sys

import pytest

from basesize.cli import RunConfig, main
from basesize.graphs import cycle, disjoint_union, format_graph_text, path
from basesize.groups import dpq_representation
from basesize.perm import format_perm_text


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out=out, err=err)
    return code, out.getvalue(), err.getvalue()


@pytest.fixture
def files(tmp_path):
    d = {
        "dpq": format_perm_text(dpq_representation(3, 5)),
        "swap": "degree 2\n(0 1)\n",
        "bad": "degree 3\n0 1\n",
        "c7": format_graph_text(cycle(7)),
        "p2c9": format_graph_text(disjoint_union(path(2), cycle(9))),
        "k1": "1 0\n",
        "badgraph": "3 1\n2 1\n",
    }
    out = {}
    for k, text in d.items():
        p = tmp_path / f"{k}.txt"
        p.write_text(text)
        out[k] = str(p)
    return out


def test_run_config_validation():
    assert RunConfig().max_points == 40
    assert RunConfig().element_budget == 1_000_000
    assert RunConfig().graph_vertex_budget == 64
    with pytest.raises(ValueError):
        RunConfig(element_budget=0)


def test_base_size(files):
    code, out, _ = run("base-size", files["dpq"])
    lines = out.splitlines()
    assert code == 0 and lines[0] == "3"
    assert lines[1].startswith("base: ") and len(lines[1].split()) == 4
    code, out, _ = run("base-size", files["swap"])
    assert code == 0 and out.splitlines()[0] == "1"


def test_base_size_errors(files, tmp_path):
    code, _, err = run("base-size", files["bad"])
    assert code == 2 and "line 2" in err
    code, _, err = run("base-size", str(tmp_path / "missing.txt"))
    assert code == 2
    code, _, err = run("base-size", files["dpq"], "--element-budget", "5")
    assert code == 3 and "budget" in err


def test_determining_number(files):
    code, out, _ = run("determining-number", files["c7"])
    lines = out.splitlines()
    assert code == 0 and lines[0] == "2" and lines[1] == "|Aut|: 14"
    assert lines[2] == "orbit sizes: 7"
    code, out, _ = run("determining-number", files["p2c9"])
    assert out.splitlines()[0] == "3" and "orbit sizes: 2 9" in out
    code, out, _ = run("determining-number", files["k1"])
    assert code == 0 and out.splitlines()[0] == "0"


def test_determining_number_errors(files):
    assert run("determining-number", files["badgraph"])[0] == 2
    assert run("determining-number", files["c7"], "--vertex-budget", "5")[0] == 3


@pytest.mark.parametrize("group,n,expected", [("D:15", "40", "{1,2,3}"), ("Z:4", "8", "{1}"),
                                              ("Z:2,2", "4", "{1,2}")])
def test_bss(group, n, expected):
    code, out, _ = run("bss", group, "--max-points", n)
    lines = out.splitlines()
    assert code == 0 and lines[0] == expected
    assert any(line.startswith("upper bound: ") for line in lines)
    assert "certified complete: yes" in lines
    assert sum(line.startswith("witness b=") for line in lines) == len(expected.split(","))


def test_bss_flag_before_subcommand():
    assert run("--max-points", "4", "bss", "Z:2,2")[1].splitlines()[0] == "{1,2}"


def test_bss_errors():
    assert run("bss", "X:3")[0] == 2
    assert run("bss", "D:15", "--max-points", "0")[0] == 2
    assert run("bss", "D:15", "--element-budget", "10")[0] == 3


@pytest.mark.parametrize("group,expected", [("D:15", "{1,2}"), ("D:6", "{1,2,3}"), ("D:9", "{1,2}")])
def test_dss_evidence(group, expected):
    code, out, _ = run("dss-evidence", group)
    lines = out.splitlines()
    assert code == 0 and lines[0] == expected
    assert any(line.startswith("graph d=") for line in lines)


def test_dss_evidence_empty_corpus():
    code, _, err = run("dss-evidence", "D:15", "--vertex-budget", "10")
    assert code == 2 and "empty corpus" in err


def test_quiet_and_out(tmp_path):
    target = tmp_path / "o.txt"
    code, out, _ = run("bss", "Z:2,2", "--max-points", "4", "--quiet", "--out", str(target))
    assert out == "{1,2}\n"
    assert target.read_text().splitlines()[0] == "{1,2}"
    assert "upper bound: 2" in target.read_text()


def test_output_is_deterministic():
    assert run("bss", "D:10", "--max-points", "20") == run("bss", "D:10", "--max-points", "20")
    assert run("dss-evidence", "D:6") == run("dss-evidence", "D:6")


def test_verify_quick(tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = run("verify", "quick", "--out", str(target))
    assert code == 0
    assert "CLAIM THM-3-NOT-IN-D EVIDENCE" in out
    data = json.loads(target.read_text())
    assert len(data) == 14


def test_verify_bogus():
    code, _, err = run("verify", "bogus")
    assert code == 2 and "usage" in err


def test_usage_error_exit_code():
    with pytest.raises(SystemExit) as exc:
        main([])
    assert exc.value.code == 2


def test_module_entry_point(files):
    proc = subprocess.run([sys.executable, "-m", "basesize", "base-size", files["dpq"]],
                          capture_output=True, text=True, check=False)
    assert proc.returncode == 0 and proc.stdout.splitlines()[0] == "3"
