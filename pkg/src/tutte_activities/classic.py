"""The four classical activity families on graphs and maps.

Ordering activity: minimal in the fundamental cycle/cocycle for a fixed
linear edge order.  Embedding activity: minimal for the tour order of the
spanning tree.  Blossoming activity: defined through a pruning walk that
turns the map into a tree.  DFS activity: greatest-neighbor depth-first
search on simple graphs.  Each family is also realizable through a decision
oracle; the reductions live in the callers/tests, the native definitions
live here.
"""

from __future__ import annotations

from . import graph as gr
from .comb_map import CombMap, tour_order


# -- generic min/max rule ----------------------------------------------------


def _extreme_rule(g, rank, tree_mask, pick):
    """Active = edges extreme (by `rank`) in their fundamental cycle/cocycle."""
    internal = 0
    external = 0
    for eid, _, _ in g.edges:
        if (tree_mask >> eid) & 1:
            cut = gr.fundamental_cocycle(g, tree_mask, eid)
            if eid == pick(gr.edge_ids(cut), key=rank.__getitem__):
                internal |= 1 << eid
        else:
            cyc = gr.fundamental_cycle(g, tree_mask, eid)
            if eid == pick(gr.edge_ids(cyc), key=rank.__getitem__):
                external |= 1 << eid
    return internal, external


def _rank_of(order):
    return {eid: i for i, eid in enumerate(order)}


def ordering_active(g, order, tree_mask):
    """Tutte's rule: minimal in the fundamental set for the linear order."""
    if sorted(order) != sorted(g.edge_ids):
        raise ValueError("order must be a permutation of the edges")
    if not gr.is_spanning_tree(g, tree_mask):
        raise ValueError("edge set is not a spanning tree")
    return _extreme_rule(g, _rank_of(order), tree_mask, min)


def maximal_active(g, order, tree_mask):
    """Dual rule: maximal in the fundamental set for the given order."""
    if not gr.is_spanning_tree(g, tree_mask):
        raise ValueError("edge set is not a spanning tree")
    return _extreme_rule(g, _rank_of(order), tree_mask, max)


def embedding_active(m: CombMap, tree_mask):
    """Minimal for the tour order of the tree in the fundamental set."""
    g = m.underlying_graph()
    _, edge_order = tour_order(m, tree_mask)
    return _extreme_rule(g, _rank_of(edge_order), tree_mask, min)


# -- blossoming: the pruning walk ---------------------------------------------


class PruneRun:
    """Transcript of one pruning walk.

    tree_mask: surviving edges (a spanning tree for forest input).
    first_visit: edge ids in first-visit order.
    isthmus_at_first_visit: edges that were isthmuses when first reached.
    charges: vertex -> net charge; each deletion puts -1 on the departure
    vertex of the crossing and +1 on the arrival vertex.
    """

    def __init__(self, tree_mask, first_visit, isthmus_at_first_visit, charges):
        self.tree_mask = tree_mask
        self.first_visit = first_visit
        self.isthmus_at_first_visit = isthmus_at_first_visit
        self.charges = charges


def prune_run(m: CombMap, forest_mask) -> PruneRun:
    """Walk around the map from the root, deleting external non-isthmuses.

    The walk follows sigma-alpha motion in the shrinking map: take the edge
    of the current half-edge, step to the half-edge that immediately follows
    it, then delete the walked edge whenever it is external and currently
    not an isthmus.  Stops once every edge has been visited.
    """
    g0 = m.underlying_graph()
    if not gr.is_forest(g0, forest_mask):
        raise ValueError("input edge set contains a cycle")
    n_half = len(m.sigma)
    sigma = list(m.sigma)
    alpha = m.alpha
    edge_of = m.edge_of()
    vertex_of = m.vertex_of()
    pairs = m.edge_pairs()
    n_vertices = len(m.vertex_cycles())
    m_edges = m.edge_count()

    alive = set(range(m_edges))
    visited = set()
    first_visit = []
    isthmus_first = 0
    charges = {v: 0 for v in range(n_vertices)}

    def current_graph():
        return gr.Graph(n_vertices,
                        [(eid, vertex_of[pairs[eid][0]], vertex_of[pairs[eid][1]])
                         for eid in alive])

    def delete_in_place(eid):
        h1, h2 = pairs[eid]
        updates = {}
        for h in range(n_half):
            if h in (h1, h2) or edge_of[h] not in alive:
                continue
            s = sigma[h]
            if s == h1:
                if sigma[h1] == h2:
                    updates[h] = sigma[sigma[sigma[h]]]
                else:
                    updates[h] = sigma[sigma[h]]
            elif s == h2:
                if sigma[h2] == h1:
                    updates[h] = sigma[sigma[sigma[h]]]
                else:
                    updates[h] = sigma[sigma[h]]
        for h, s in updates.items():
            sigma[h] = s
        alive.discard(eid)

    h = m.root
    guard = 0
    limit = 4 * n_half * n_half + 16
    while len(visited) < m_edges:
        guard += 1
        if guard > limit:
            raise RuntimeError("pruning walk failed to terminate")
        eid = edge_of[h]
        first = eid not in visited
        if first:
            visited.add(eid)
            first_visit.append(eid)
        departure = vertex_of[h]
        arrival = vertex_of[alpha[h]]
        h_next = sigma[alpha[h]]
        is_isthmus = gr.classify_edge(current_graph(), eid) == gr.ISTHMUS
        if first and is_isthmus:
            isthmus_first |= 1 << eid
        if not is_isthmus and not ((forest_mask >> eid) & 1):
            delete_in_place(eid)
            charges[departure] -= 1
            charges[arrival] += 1
        # The successor may have died with the deleted edge (halves of a
        # loop adjacent in the rotation); slide along the stale rotation
        # entries until an alive half-edge shows up.
        hops = 0
        while alive and edge_of[h_next] not in alive:
            h_next = sigma[h_next]
            hops += 1
            if hops > n_half:
                raise RuntimeError("pruning walk lost its position")
        h = h_next

    tree_mask = 0
    for eid in alive:
        tree_mask |= 1 << eid
    return PruneRun(tree_mask, first_visit, isthmus_first, charges)


def tau(m: CombMap, forest_mask) -> int:
    """The spanning tree the pruning walk leaves from a spanning forest."""
    return prune_run(m, forest_mask).tree_mask


def blossoming_internal_active(m: CombMap, tree_mask) -> int:
    """Internal edges whose removal is undone by the pruning walk."""
    g = m.underlying_graph()
    if not gr.is_spanning_tree(g, tree_mask):
        raise ValueError("edge set is not a spanning tree")
    result = 0
    for eid in gr.edge_ids(tree_mask):
        if tau(m, tree_mask & ~(1 << eid)) == tree_mask:
            result |= 1 << eid
    return result


def blossoming_first_visit_order(m: CombMap, tree_mask):
    """Edge order of first visits in the pruning walk of the tree."""
    g = m.underlying_graph()
    if not gr.is_spanning_tree(g, tree_mask):
        raise ValueError("edge set is not a spanning tree")
    return prune_run(m, tree_mask).first_visit


def blossoming_active(m: CombMap, tree_mask):
    """Full blossoming activity: last visited in the fundamental set.

    Equivalently the activity of any decision oracle realizing the
    first-visit order map; the active sets do not depend on that choice.
    """
    g = m.underlying_graph()
    order = blossoming_first_visit_order(m, tree_mask)
    return _extreme_rule(g, _rank_of(order), tree_mask, max)


def blossoming_subtree_charge(m: CombMap, tree_mask, eid) -> int:
    """Net charge of the subtree hanging below an internal edge.

    Charges are laid down by the pruning walk of the tree; the subtree is
    the component of tree - e not containing the root vertex.
    """
    g = m.underlying_graph()
    if not gr.is_spanning_tree(g, tree_mask):
        raise ValueError("edge set is not a spanning tree")
    if not ((tree_mask >> eid) & 1):
        raise ValueError("edge is not internal")
    run = prune_run(m, tree_mask)
    root_vertex = m.vertex_of()[m.root]
    dsu = gr._DSU(g.vertex_count)
    for fid, a, b in g.edges:
        if fid != eid and (tree_mask >> fid) & 1:
            dsu.union(a, b)
    root_side = dsu.find(root_vertex)
    return sum(c for v, c in run.charges.items() if dsu.find(v) != root_side)


def blossoming_charge_check(m: CombMap, tree_mask, eid) -> bool:
    """Whether the subtree below the internal edge has charge 0 or 1.

    Implied by blossoming activity on any map; equivalent to it only on
    planar maps.
    """
    return blossoming_subtree_charge(m, tree_mask, eid) in (0, 1)


# -- DFS activity ---------------------------------------------------------------


def _require_dfs_graph(g):
    seen = set()
    for _, u, v in g.edges:
        key = (min(u, v), max(u, v))
        if key in seen:
            raise ValueError("DFS activity needs a graph without multiple edges")
        seen.add(key)


class DfsRun:
    """DFS transcript: forest mask, vertex visit order, parent links."""

    def __init__(self, forest_mask, vertex_order, parent):
        self.forest_mask = forest_mask
        self.vertex_order = vertex_order
        self.parent = parent  # vertex -> (parent vertex, edge id) or None


def dfs_run(g, subgraph_mask) -> DfsRun:
    """Greatest-neighbor DFS of the subgraph, restarting at least vertices."""
    _require_dfs_graph(g)
    n = g.vertex_count
    adj = {v: [] for v in range(n)}
    for eid, u, v in g.edges:
        if (subgraph_mask >> eid) & 1 and u != v:
            adj[u].append((v, eid))
            adj[v].append((u, eid))
    visited = [False] * n
    order = []
    parent = {}
    forest = 0
    while not all(visited):
        v0 = visited.index(False)
        visited[v0] = True
        order.append(v0)
        parent[v0] = None
        while True:
            v = None
            for w in reversed(order):
                if any(not visited[u] for u, _ in adj[w]):
                    v = w
                    break
            if v is None:
                break
            while True:
                cands = [(u, eid) for u, eid in adj[v] if not visited[u]]
                if not cands:
                    break
                u, eid = max(cands)
                visited[u] = True
                order.append(u)
                parent[u] = (v, eid)
                forest |= 1 << eid
                v = u
    return DfsRun(forest, order, parent)


def dfs_forest(g, subgraph_mask) -> int:
    """The greatest-neighbor DFS forest of a subgraph, as an edge mask."""
    return dfs_run(g, subgraph_mask).forest_mask


def dfs_active(g, forest_mask) -> int:
    """External edges whose addition leaves the DFS forest unchanged."""
    if dfs_forest(g, forest_mask) != forest_mask:
        raise ValueError("edge set is not its own DFS forest")
    result = 0
    for eid, _, _ in g.edges:
        if not ((forest_mask >> eid) & 1):
            if dfs_forest(g, forest_mask | (1 << eid)) == forest_mask:
                result |= 1 << eid
    return result


def dfs_active_by_inversion(g, forest_mask) -> int:
    """Loop-or-inversion characterization of the DFS-active edges.

    A non-loop external {u, v} is active when one endpoint descends from the
    other in the DFS forest and the child of the ancestor on the connecting
    path is larger than the descendant endpoint.
    """
    if dfs_forest(g, forest_mask) != forest_mask:
        raise ValueError("edge set is not its own DFS forest")
    run = dfs_run(g, forest_mask)

    def chain(v):
        path = [v]
        while run.parent[path[-1]] is not None:
            path.append(run.parent[path[-1]][0])
        return path  # v up to its root

    result = 0
    for eid, u, v in g.edges:
        if (forest_mask >> eid) & 1:
            continue
        if u == v:
            result |= 1 << eid
            continue
        for anc, desc in ((u, v), (v, u)):
            up = chain(desc)
            if anc in up:
                w = up[up.index(anc) - 1]  # child of anc towards desc
                if w > desc:
                    result |= 1 << eid
                break
    return result


def dfs_order_map(g, subgraph_mask):
    """First-visit order of all edges under the marking DFS.

    Runs the greatest-neighbor DFS of the whole graph but traverses only
    internal edges; external edges are marked in passing.  The result is a
    permutation of the edge ids.
    """
    _require_dfs_graph(g)
    n = g.vertex_count
    incident = {v: [] for v in range(n)}
    for eid, u, v in g.edges:
        incident[u].append((v, eid))
        if u != v:
            incident[v].append((u, eid))
    visited_v = [False] * n
    visited_e = set()
    vorder = []
    out = []
    while not all(visited_v):
        v0 = visited_v.index(False)
        visited_v[v0] = True
        vorder.append(v0)
        while True:
            v = None
            for w in reversed(vorder):
                if any(eid not in visited_e for _, eid in incident[w]):
                    v = w
                    break
            if v is None:
                break
            while True:
                cands = [(u, eid) for u, eid in incident[v]
                         if eid not in visited_e]
                if not cands:
                    break
                u, eid = max(cands)
                visited_e.add(eid)
                out.append(eid)
                if (subgraph_mask >> eid) & 1 and not visited_v[u]:
                    visited_v[u] = True
                    vorder.append(u)
                    v = u
    return out
