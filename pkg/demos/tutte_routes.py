"""Compute one Tutte polynomial many independent ways.

The doubled-edge triangle has Tutte polynomial x^2 + x*y + x + y^2 + y.
Every route below reproduces it exactly: the subgraph-sum definition, the
deletion/contraction recursion, the spanning-tree activity sum for several
decision oracles, and the three subgraph expansions driven by edge typing.
"""

from pathlib import Path

from tutte_activities import (load_decision_tree, load_graph, random_oracle,
                              tutte_connected, tutte_definitional,
                              tutte_delcon, tutte_delta, tutte_dfs,
                              tutte_forest, tutte_forest_activity, tutte_half)

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

g = load_graph(FIXTURES / "graphs" / "parallel_triangle.graph")
oracle = load_decision_tree(FIXTURES / "trees" / "parallel_triangle.tree",
                            g.edge_ids)

print("subgraph-sum definition :", tutte_definitional(g))
print("deletion/contraction    :", tutte_delcon(g))
print("activity, fixture tree  :", tutte_delta(g, oracle))
for seed in (0, 1, 2):
    print(f"activity, random seed {seed} :", tutte_delta(g, random_oracle(g, seed)))
print("forest expansion        :", tutte_forest(g, oracle))
print("connected expansion     :", tutte_connected(g, oracle))
print("half-weight expansion   :", tutte_half(g, oracle))
print("forest-activity sum     :", tutte_forest_activity(g, oracle))

# The DFS route needs a graph without parallel edges.
simple = load_graph(FIXTURES / "graphs" / "dfs_five.graph")
print("\nDFS route on a simple graph:", tutte_dfs(simple))
print("   matches the definition  :", tutte_dfs(simple) == tutte_definitional(simple))
