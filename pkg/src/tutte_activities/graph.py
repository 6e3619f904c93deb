"""Multigraphs with loops and parallel edges, and spanning-subgraph counting.

Vertices are 0..n-1.  Every edge carries a stable integer id; minors produced
by `delete` and `contract` keep the surviving ids unchanged, so edge subsets
(bitmasks over ids) stay meaningful across minor operations.  Spanning
subgraphs are identified with their edge sets, represented as plain int
bitmasks (bit i set = edge i present).
"""

from __future__ import annotations

from itertools import combinations

LOOP = "Loop"
ISTHMUS = "Isthmus"
STANDARD = "Standard"


class Graph:
    """Undirected multigraph; immutable after construction.

    edges is a tuple of (edge_id, u, v) sorted by edge_id;  u == v encodes a
    loop.  Freshly built graphs use ids 0..m-1; minors keep original ids.
    """

    __slots__ = ("vertex_count", "edges", "_by_id")

    def __init__(self, vertex_count, edges):
        if vertex_count <= 0:
            raise ValueError("vertex_count must be positive")
        norm = []
        for eid, u, v in edges:
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge {eid} endpoint out of range")
            if eid < 0:
                raise ValueError("edge ids must be non-negative")
            norm.append((int(eid), int(u), int(v)))
        norm.sort()
        ids = [e[0] for e in norm]
        if len(set(ids)) != len(ids):
            raise ValueError("duplicate edge ids")
        object.__setattr__(self, "vertex_count", int(vertex_count))
        object.__setattr__(self, "edges", tuple(norm))
        object.__setattr__(self, "_by_id", {e[0]: (e[1], e[2]) for e in norm})

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @property
    def edge_ids(self):
        return tuple(e[0] for e in self.edges)

    def edge_count(self):
        return len(self.edges)

    def endpoints(self, eid):
        try:
            return self._by_id[eid]
        except KeyError:
            raise ValueError(f"unknown edge id {eid}") from None

    def has_edge(self, eid):
        return eid in self._by_id

    def full_edge_set(self):
        mask = 0
        for eid in self._by_id:
            mask |= 1 << eid
        return mask

    def is_loop(self, eid):
        u, v = self.endpoints(eid)
        return u == v

    def __eq__(self, other):
        return (isinstance(other, Graph)
                and self.vertex_count == other.vertex_count
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.vertex_count, self.edges))

    def __repr__(self):
        return f"Graph({self.vertex_count}, {list(self.edges)!r})"

    def is_simple(self):
        """No parallel edges; loops are allowed."""
        seen = set()
        for _, u, v in self.edges:
            if u != v:
                key = (min(u, v), max(u, v))
                if key in seen:
                    return False
                seen.add(key)
        return True

    def neighbors(self, v):
        """Adjacent vertices of v (via non-loop edges), with edge ids."""
        out = []
        for eid, a, b in self.edges:
            if a == v and b != v:
                out.append((b, eid))
            elif b == v and a != v:
                out.append((a, eid))
        return out


# -- edge-set helpers ------------------------------------------------------


def edge_set(ids):
    mask = 0
    for i in ids:
        mask |= 1 << i
    return mask


def edge_ids(mask):
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def popcount(mask):
    return bin(mask).count("1")


# -- component counting ----------------------------------------------------


class _DSU:
    __slots__ = ("parent",)

    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        p = self.parent
        while p[x] != x:
            p[x] = p[p[x]]
            x = p[x]
        return x

    def union(self, a, b):
        ra, rb = self.find(a), self.find(b)
        if ra != rb:
            self.parent[rb] = ra
            return True
        return False


def cc(g: Graph, mask: int) -> int:
    """Number of connected components of the spanning subgraph `mask`.

    Isolated vertices count, so cc of the edgeless subgraph is |V|.
    """
    dsu = _DSU(g.vertex_count)
    comps = g.vertex_count
    for eid, u, v in g.edges:
        if (mask >> eid) & 1 and u != v and dsu.union(u, v):
            comps -= 1
    return comps


def cycl(g: Graph, mask: int) -> int:
    """Cyclomatic number: cc(S) + |S| - |V|.  Zero exactly on forests."""
    return cc(g, mask) + popcount(mask & g.full_edge_set()) - g.vertex_count


def is_connected(g: Graph) -> bool:
    return cc(g, g.full_edge_set()) == 1


def is_forest(g: Graph, mask: int) -> bool:
    return cycl(g, mask) == 0


def is_spanning_tree(g: Graph, mask: int) -> bool:
    return (popcount(mask) == g.vertex_count - 1
            and cc(g, mask) == 1)


# -- classification and minors ---------------------------------------------


def classify_edge(g: Graph, eid: int) -> str:
    """Classify an edge of g as Loop, Isthmus or Standard."""
    u, v = g.endpoints(eid)
    if u == v:
        return LOOP
    full = g.full_edge_set()
    if cc(g, full & ~(1 << eid)) > cc(g, full):
        return ISTHMUS
    return STANDARD


def delete(g: Graph, eid: int) -> Graph:
    """Remove the edge, keeping both endpoints (possibly now isolated)."""
    g.endpoints(eid)
    return Graph(g.vertex_count, [e for e in g.edges if e[0] != eid])


def contract(g: Graph, eid: int) -> Graph:
    """Merge the endpoints of a non-loop edge into the smaller vertex id.

    Vertices above the removed endpoint shift down by one so vertex ids stay
    contiguous; edge ids are untouched.
    """
    u, v = g.endpoints(eid)
    if u == v:
        raise ValueError(f"cannot contract loop {eid}")
    keep, gone = min(u, v), max(u, v)

    def relabel(w):
        if w == gone:
            return keep
        return w - 1 if w > gone else w

    edges = [(i, relabel(a), relabel(b))
             for i, a, b in g.edges if i != eid]
    return Graph(g.vertex_count - 1, edges)


# -- spanning trees and fundamental sets ------------------------------------


def spanning_trees(g: Graph):
    """All spanning-tree edge sets, sorted by bitmask value."""
    if not is_connected(g):
        raise ValueError("graph is not connected")
    n = g.vertex_count
    ids = [e[0] for e in g.edges if e[1] != e[2]]
    trees = []
    for combo in combinations(ids, n - 1):
        mask = edge_set(combo)
        if cc(g, mask) == 1:
            trees.append(mask)
    trees.sort()
    return trees


def spanning_forests(g: Graph):
    """All spanning-forest edge sets (cyclomatic number zero), ascending."""
    m = g.edge_count()
    return [mask for mask in range(1 << m) if cycl(g, mask) == 0]


def tree_path(g: Graph, tree_mask: int, a: int, b: int):
    """Edge ids on the unique path from a to b inside the tree."""
    if a == b:
        return []
    adj = {}
    for eid, u, v in g.edges:
        if (tree_mask >> eid) & 1 and u != v:
            adj.setdefault(u, []).append((v, eid))
            adj.setdefault(v, []).append((u, eid))
    prev = {a: (None, None)}
    stack = [a]
    while stack:
        w = stack.pop()
        if w == b:
            break
        for nxt, eid in adj.get(w, ()):
            if nxt not in prev:
                prev[nxt] = (w, eid)
                stack.append(nxt)
    if b not in prev:
        raise ValueError("endpoints not connected in the given tree")
    path = []
    w = b
    while prev[w][0] is not None:
        w, eid = prev[w]
        path.append(eid)
    path.reverse()
    return path


def fundamental_cycle(g: Graph, tree_mask: int, eid: int) -> int:
    """Unique cycle in tree + e, for an external edge e (a loop yields {e})."""
    if (tree_mask >> eid) & 1:
        raise ValueError(f"edge {eid} is internal; it has no fundamental cycle")
    u, v = g.endpoints(eid)
    if u == v:
        return 1 << eid
    mask = 1 << eid
    for pid in tree_path(g, tree_mask, u, v):
        mask |= 1 << pid
    return mask


def fundamental_cocycle(g: Graph, tree_mask: int, eid: int) -> int:
    """Edges crossing the split of the tree at internal edge e (contains e)."""
    if not ((tree_mask >> eid) & 1):
        raise ValueError(f"edge {eid} is external; it has no fundamental cocycle")
    u, v = g.endpoints(eid)
    if u == v:
        raise ValueError("a loop cannot belong to a spanning tree")
    # vertices on u's side of tree - e
    dsu = _DSU(g.vertex_count)
    for fid, a, b in g.edges:
        if fid != eid and (tree_mask >> fid) & 1 and a != b:
            dsu.union(a, b)
    side = dsu.find(u)
    mask = 0
    for fid, a, b in g.edges:
        if a != b and (dsu.find(a) == side) != (dsu.find(b) == side):
            mask |= 1 << fid
    return mask


# -- text format -------------------------------------------------------------
#
# One graph per file:
#   vertices N
#   edge <id> <u> <v>
# Whitespace-separated; `#` starts a comment.


def parse_graph(text: str) -> Graph:
    vertex_count = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if tokens[0] == "vertices":
            if len(tokens) != 2:
                raise ValueError(f"line {lineno}: expected 'vertices N'")
            vertex_count = int(tokens[1])
        elif tokens[0] == "edge":
            if len(tokens) != 4:
                raise ValueError(f"line {lineno}: expected 'edge <id> <u> <v>'")
            edges.append((int(tokens[1]), int(tokens[2]), int(tokens[3])))
        else:
            raise ValueError(f"line {lineno}: unknown directive {tokens[0]!r}")
    if vertex_count is None:
        raise ValueError("missing 'vertices' line")
    return Graph(vertex_count, edges)


def format_graph(g: Graph) -> str:
    lines = [f"vertices {g.vertex_count}"]
    for eid, u, v in g.edges:
        lines.append(f"edge {eid} {u} {v}")
    return "\n".join(lines) + "\n"


def load_graph(path) -> Graph:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_graph(fh.read())


def save_graph(g: Graph, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_graph(g))
