"""Combinatorial maps: tours, mirrors, genus, and map minors.

A map is a rotation system: half-edges, a rotation permutation, and the
pairing involution.  Walking around a spanning tree visits every half-edge
once; the visit order drives the embedding activity.  The mirror map
(inverted rotation) swaps the minimal-edge rule for the maximal-edge rule.
"""

from pathlib import Path

from tutte_activities import (embedding_active, genus, load_map, map_contract,
                              map_delete, mirror, tour_order)
from tutte_activities import graph as gr
from tutte_activities.comb_map import format_map

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

m = load_map(FIXTURES / "maps" / "parallel_triangle.map")
print("map:", format_map(m).strip().replace("\n", "  "))
print("genus:", genus(m))

tree = gr.edge_set([m.edge_id_by_name("b"), m.edge_id_by_name("d")])
halfedges, edge_order = tour_order(m, tree)
print("\ntour of the tree {b,d}:", " ".join(m.name_of(h) for h in halfedges))
print("edge first-visit order :", " < ".join(m.edge_name(e) for e in edge_order))

internal, external = embedding_active(m, tree)
print("embedding-active edges : internal",
      [m.edge_name(e) for e in gr.edge_ids(internal)],
      "external", [m.edge_name(e) for e in gr.edge_ids(external)])

mm = mirror(m)
_, mirror_order = tour_order(mm, tree)
print("mirror-map edge order  :",
      " < ".join(mm.edge_name(e) for e in mirror_order))

print("\ndeleting edge c:")
print(format_map(map_delete(m, m.edge_id_by_name("c"))))
print("contracting edge b:")
print(format_map(map_contract(m, m.edge_id_by_name("b"))))

nonplanar = load_map(FIXTURES / "maps" / "two_crossing_loops.map")
print("two interleaved loops have genus", genus(nonplanar))
