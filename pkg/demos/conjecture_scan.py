"""Exhaustively scan small graphs for lattice-tiling activities.

An activity assigns each spanning tree a set of edges; it is strongly
descriptive when the tree-indexed intervals tile the whole subgraph lattice.
Every decision-oracle activity tiles.  The scan asks the converse questions:
is every tiling induced by some decision tree, and does every tiling leave
some edge inactive everywhere?

On graphs with up to three edges the answer to both is yes.  The doubled
triangle already refutes both: 48 activities tile its lattice, only 40 come
from decision trees, and the other 8 activate every edge somewhere.
"""

from pathlib import Path

from tutte_activities import conjecture_scan, load_graph
from tutte_activities.harness import connected_multigraphs

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

for name in ("single_isthmus", "two_parallel", "triangle"):
    g = load_graph(FIXTURES / "graphs" / f"{name}.graph")
    print(f"== {name} ==")
    print(conjecture_scan(g).text())
    print()

print("== doubled triangle ==")
g4 = load_graph(FIXTURES / "graphs" / "parallel_triangle.graph")
print(conjecture_scan(g4).text())

print("\n== every connected graph with at most 4 edges ==")
bad = 0
for g in connected_multigraphs(4):
    rep = conjecture_scan(g)
    bad += len(rep.conjecture2_counterexamples)
print(f"total lattice tilings without a never-active edge: {bad}")
print("(all of them live on the doubled triangle)")
