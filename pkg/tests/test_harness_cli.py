import subprocess
import sys

import pytest

from tutte_activities import graph as gr
from tutte_activities.harness import (canonical_form, connected_multigraphs,
                                      crosscheck, desk_corpus)
from conftest import FIXTURES, fixture_map, graph_path, map_path

TREE_FILE = FIXTURES / "trees" / "parallel_triangle.tree"


def run_cli(*args):
    return subprocess.run(
        [sys.executable, "-m", "tutte_activities.cli", *args],
        capture_output=True, text=True)


def test_crosscheck_passes_on_fixture(g4):
    report = crosscheck(g4, seeds=range(2))
    assert report.ok, report.text()
    assert "checks passed" in report.text()


def test_crosscheck_with_map():
    m = fixture_map("pruning_planar")
    report = crosscheck(m.underlying_graph(), comb_map=m, seeds=range(1))
    assert report.ok, report.text()


def test_connected_multigraph_enumeration():
    graphs = connected_multigraphs(2)
    # one edge; one loop; two loops; loop plus edge; parallel pair; path:
    # exactly the six iso classes with at most two edges
    assert len(graphs) == 6
    keys = {canonical_form(g) for g in graphs}
    assert len(keys) == 6
    assert all(gr.is_connected(g) for g in graphs)


def test_crosscheck_over_all_small_multigraphs():
    for g in connected_multigraphs(4):
        report = crosscheck(g, seeds=range(1))
        assert report.ok, (g, report.text())


def test_desk_corpus_properties():
    corpus = desk_corpus()
    assert len(corpus) >= 200
    assert all(g.vertex_count <= 6 and g.edge_count() <= 8 for g in corpus)
    assert all(gr.is_connected(g) for g in corpus)
    keys = {canonical_form(g) for g in corpus}
    assert len(keys) == len(corpus)


# -- CLI ----------------------------------------------------------------------

G4 = str(graph_path("parallel_triangle"))
MAP = str(map_path("parallel_triangle"))
GOLDEN = "x^2 + x*y + x + y^2 + y"


@pytest.mark.parametrize("method,extra", [
    ("definitional", []),
    ("delcon", []),
    ("activity", ["--oracle", f"file:{TREE_FILE}"]),
    ("activity", ["--oracle", "random:7"]),
    ("forest", ["--oracle", "linear"]),
    ("connected", ["--oracle", "linear"]),
    ("half", ["--oracle", "random:3"]),
    ("forest-activity", ["--oracle", "linear"]),
])
def test_cli_tutte_methods(method, extra):
    out = run_cli("tutte", "--graph", G4, "--method", method, *extra)
    assert out.returncode == 0, out.stderr
    assert out.stdout.strip() == GOLDEN


def test_cli_tutte_embedding_oracle():
    out = run_cli("tutte", "--map", MAP, "--method", "activity",
                  "--oracle", "embedding")
    assert out.returncode == 0, out.stderr
    assert out.stdout.strip() == GOLDEN


def test_cli_tutte_dfs():
    out = run_cli("tutte", "--graph", str(graph_path("dfs_five")),
                  "--method", "dfs")
    assert out.returncode == 0, out.stderr
    assert out.stdout.strip() == "x^3 + 2*x^2 + 2*x*y + x + y^2 + y"


def test_cli_activity(g4):
    out = run_cli("activity", "--graph", G4, "--tree", "1,3",
                  "--oracle", f"file:{TREE_FILE}")
    assert out.returncode == 0, out.stderr
    assert out.stdout == "internal: {1,3}\nexternal: {}\n"


def test_cli_ordering():
    out = run_cli("ordering", "--graph", G4, "--order", "0,1,2,3",
                  "--tree", "0,2")
    assert out.returncode == 0, out.stderr
    assert out.stdout == "internal: {0}\nexternal: {}\n"


def test_cli_history():
    out = run_cli("history", "--graph", G4, "--tree", "0,3",
                  "--oracle", f"file:{TREE_FILE}")
    assert out.returncode == 0, out.stderr
    assert out.stdout == "2 Se\n1 I\n0 Si\n3 L\n"


def test_cli_history_names_from_map():
    out = run_cli("history", "--map", MAP, "--tree", "1,2",
                  "--oracle", "embedding")
    assert out.returncode == 0, out.stderr
    lines = out.stdout.strip().splitlines()
    assert len(lines) == 4
    assert {line.split()[0] for line in lines} == {"a", "b", "c", "d"}


def test_cli_partition():
    out = run_cli("partition", "--graph", G4, "--oracle", f"file:{TREE_FILE}")
    assert out.returncode == 0, out.stderr
    assert out.stdout.splitlines() == [
        "tree={0,1} lower={0} upper={0,1,3} size=4 monomial=x^1*y^1",
        "tree={0,2} lower={2} upper={0,2} size=2 monomial=x^1*y^0",
        "tree={1,2} lower={1,2} upper={0,1,2} size=2 monomial=x^0*y^1",
        "tree={1,3} lower={} upper={1,3} size=4 monomial=x^2*y^0",
        "tree={2,3} lower={2,3} upper={0,1,2,3} size=4 monomial=x^0*y^2",
    ]


def test_cli_partition_dot():
    out = run_cli("partition", "--graph", G4, "--oracle", "linear", "--dot")
    assert out.returncode == 0, out.stderr
    assert out.stdout.startswith("graph subgraph_lattice {")
    assert '"{0,1,2,3}"' in out.stdout
    assert out.stdout.count("--") == 32  # 4 * 2^3 cover relations


def test_cli_crosscheck_ok():
    out = run_cli("crosscheck", "--graph", G4, "--seeds", "2")
    assert out.returncode == 0, out.stderr
    assert "FAIL" not in out.stdout


def test_cli_crosscheck_with_file_oracle():
    out = run_cli("crosscheck", "--graph", G4, "--seeds", "1",
                  "--oracle", f"file:{TREE_FILE}")
    assert out.returncode == 0, out.stderr
    assert f"tree-activity-sum[file:{TREE_FILE}]" in out.stdout


def test_cli_crosscheck_with_map():
    out = run_cli("crosscheck", "--map", MAP, "--seeds", "1")
    assert out.returncode == 0, out.stderr
    assert "embedding-as-decision-oracle" in out.stdout


def test_cli_conjecture_scan_clean_graph():
    out = run_cli("conjecture-scan", "--graph",
                  str(graph_path("two_parallel")))
    assert out.returncode == 0, out.stderr
    assert "strongly descriptive: 2" in out.stdout
    assert "every survivor leaves some edge never active" in out.stdout


def test_cli_conjecture_scan_reports_findings():
    out = run_cli("conjecture-scan", "--graph", G4)
    assert out.returncode == 1  # counterexamples found and reported
    assert "counterexample" in out.stdout


def test_cli_rejects_corrupt_decision_tree(tmp_path):
    bad = tmp_path / "bad.tree"
    bad.write_text("(0 (0 (1) (1)) (1 (0) (0)))\n")  # duplicate on a path
    out = run_cli("history", "--graph", str(graph_path("two_parallel")),
                  "--tree", "-", "--oracle", f"file:{bad}")
    assert out.returncode != 0
    assert "repeated" in out.stderr


def test_cli_parse_error_has_line_number(tmp_path):
    bad = tmp_path / "bad.graph"
    bad.write_text("vertices 2\nedge 0 0\n")
    out = run_cli("tutte", "--graph", str(bad))
    assert out.returncode != 0
    assert "line 2" in out.stderr
