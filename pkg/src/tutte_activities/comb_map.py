"""Rooted combinatorial maps: half-edge set with rotation and pairing.

A map is (H, sigma, alpha) with sigma a permutation of the half-edges
(counterclockwise rotation around each vertex), alpha a fixed-point-free
involution pairing the two half-edges of each edge, plus a distinguished
root half-edge.  The group generated by sigma and alpha must act
transitively, so the underlying graph is connected.

Vertices of the underlying graph are the cycles of sigma, edges the orbits
of alpha.  Deletion and contraction act on sigma through an exact case
split; deleting an isthmus or contracting a loop is rejected since either
could disconnect the map.
"""

from __future__ import annotations

from .graph import Graph, is_spanning_tree


def _cycles_of(perm):
    """Cycles of a permutation given as a list, ordered by smallest element."""
    n = len(perm)
    seen = [False] * n
    cycles = []
    for start in range(n):
        if seen[start]:
            continue
        cyc = []
        h = start
        while not seen[h]:
            seen[h] = True
            cyc.append(h)
            h = perm[h]
        cycles.append(tuple(cyc))
    return cycles


def _invert(perm):
    inv = [0] * len(perm)
    for i, p in enumerate(perm):
        inv[p] = i
    return inv


class CombMap:
    """Immutable rooted combinatorial map."""

    __slots__ = ("sigma", "alpha", "root", "names")

    def __init__(self, sigma, alpha, root, names=None):
        sigma = tuple(sigma)
        alpha = tuple(alpha)
        n = len(sigma)
        if n == 0 or n % 2 != 0:
            raise ValueError("need an even, positive number of half-edges")
        if sorted(sigma) != list(range(n)) or sorted(alpha) != list(range(n)):
            raise ValueError("sigma and alpha must be permutations of 0..2m-1")

        for h in range(n):
            if alpha[h] == h:
                raise ValueError(f"alpha fixes half-edge {h}")
            if alpha[alpha[h]] != h:
                raise ValueError("alpha is not an involution")
        if not (0 <= root < n):
            raise ValueError("root out of range")
        if names is not None:
            names = tuple(names)
            if len(names) != n or len(set(names)) != n:
                raise ValueError("names must be distinct, one per half-edge")
        # transitivity of <sigma, alpha>
        seen = {0}
        stack = [0]
        while stack:
            h = stack.pop()
            for nxt in (sigma[h], alpha[h]):
                if nxt not in seen:
                    seen.add(nxt)
                    stack.append(nxt)
        if len(seen) != n:
            raise ValueError("map is not connected")
        object.__setattr__(self, "sigma", sigma)
        object.__setattr__(self, "alpha", alpha)
        object.__setattr__(self, "root", root)
        object.__setattr__(self, "names", names)

    def __setattr__(self, name, value):
        raise AttributeError("CombMap is immutable")

    def half_edge_count(self):
        return len(self.sigma)

    def edge_count(self):
        return len(self.sigma) // 2

    def name_of(self, h):
        return self.names[h] if self.names else str(h)

    def __eq__(self, other):
        return (isinstance(other, CombMap) and self.sigma == other.sigma
                and self.alpha == other.alpha and self.root == other.root)

    def __hash__(self):
        return hash((self.sigma, self.alpha, self.root))

    def __repr__(self):
        sig = "".join("(" + " ".join(self.name_of(h) for h in c) + ")"
                      for c in _cycles_of(list(self.sigma)))
        return f"CombMap(sigma={sig}, root={self.name_of(self.root)})"

    # -- derived structure ------------------------------------------------

    def vertex_cycles(self):
        """Cycles of sigma, ordered by smallest half-edge id."""
        return _cycles_of(list(self.sigma))

    def vertex_of(self):
        """Array: half-edge id -> vertex id (rank of its sigma-cycle)."""
        out = [0] * len(self.sigma)
        for vid, cyc in enumerate(self.vertex_cycles()):
            for h in cyc:
                out[h] = vid
        return out

    def edge_pairs(self):
        """Alpha-orbits as (h, alpha(h)) with h < alpha(h), ordered by h."""
        pairs = []
        for h in range(len(self.sigma)):
            if h < self.alpha[h]:
                pairs.append((h, self.alpha[h]))
        return pairs

    def edge_of(self):
        """Array: half-edge id -> edge id (rank of its alpha-orbit)."""
        out = [0] * len(self.sigma)
        for eid, (h1, h2) in enumerate(self.edge_pairs()):
            out[h1] = eid
            out[h2] = eid
        return out

    def edge_name(self, eid):
        h1, h2 = self.edge_pairs()[eid]
        return min(self.name_of(h1), self.name_of(h2))

    def edge_id_by_name(self, name):
        for eid, (h1, h2) in enumerate(self.edge_pairs()):
            if self.name_of(h1) == name or self.name_of(h2) == name:
                return eid
        raise ValueError(f"no edge named {name!r}")

    def underlying_graph(self) -> Graph:
        vertex = self.vertex_of()
        edges = [(eid, vertex[h1], vertex[h2])
                 for eid, (h1, h2) in enumerate(self.edge_pairs())]
        return Graph(len(self.vertex_cycles()), edges)

    def faces(self):
        """Cycles of sigma composed with alpha."""
        perm = [self.sigma[self.alpha[h]] for h in range(len(self.sigma))]
        return _cycles_of(perm)


def genus(m: CombMap) -> int:
    """Euler genus from |V| - |E| + |F| = 2 - 2g."""
    v = len(m.vertex_cycles())
    e = m.edge_count()
    f = len(m.faces())
    euler = v - e + f
    if (2 - euler) % 2 != 0:
        raise ValueError("inconsistent Euler characteristic")
    return (2 - euler) // 2


# -- motion function and tours -----------------------------------------------


def motion_function(m: CombMap, tree_mask: int):
    """Permutation walking the tour of a spanning tree.

    Sends h to sigma(h) when h's edge is external, to sigma(alpha(h)) when
    internal.  For a spanning tree this is a single cycle on all half-edges.
    """
    g = m.underlying_graph()
    if not is_spanning_tree(g, tree_mask):
        raise ValueError("edge set is not a spanning tree of the map")
    edge = m.edge_of()
    out = []
    for h in range(len(m.sigma)):
        if (tree_mask >> edge[h]) & 1:
            out.append(m.sigma[m.alpha[h]])
        else:
            out.append(m.sigma[h])
    return tuple(out)


def tour_order(m: CombMap, tree_mask: int):
    """Half-edge visit order of the tour, and the induced edge order.

    Half-edges are listed root, t(root), t^2(root), ...; an edge precedes
    another when its first-visited half-edge comes first.
    """
    t = motion_function(m, tree_mask)
    n = len(m.sigma)
    seq = []
    h = m.root
    for _ in range(n):
        seq.append(h)
        h = t[h]
    if h != m.root or len(set(seq)) != n:
        raise ValueError("motion function is not a single cycle")
    position = {h: i for i, h in enumerate(seq)}
    edge = m.edge_of()
    first_pos = {}
    for h in seq:
        eid = edge[h]
        if eid not in first_pos:
            first_pos[eid] = position[h]
    edge_order = sorted(first_pos, key=first_pos.get)
    return seq, edge_order


# -- deletion, contraction, mirror -------------------------------------------


def _restrict(m: CombMap, new_sigma, removed):
    """Rebuild a CombMap after dropping two half-edges, compacting ids."""
    n = len(m.sigma)
    keep = [h for h in range(n) if h not in removed]
    if not keep:
        raise ValueError("operation would leave an empty map")
    new_id = {h: i for i, h in enumerate(keep)}
    sigma = [new_id[new_sigma[h]] for h in keep]
    alpha = [new_id[m.alpha[h]] for h in keep]
    names = tuple(m.names[h] for h in keep) if m.names else None
    if m.root in removed:
        root = new_id[new_sigma[m.root]]
    else:
        root = new_id[m.root]
    return CombMap(sigma, alpha, root, names)


def map_delete(m: CombMap, eid: int) -> CombMap:
    """Delete a non-isthmus edge, stitching the rotation around each end."""
    from .graph import classify_edge, ISTHMUS
    g = m.underlying_graph()
    if classify_edge(g, eid) == ISTHMUS:
        raise ValueError("deleting an isthmus would disconnect the map")
    h1, h2 = m.edge_pairs()[eid]
    sig = m.sigma

    def sigma_d(h):
        if (sig[h] == h1 and sig[h1] == h2) or (sig[h] == h2 and sig[h2] == h1):
            return sig[sig[sig[h]]]
        if (sig[h] == h1 and sig[h1] != h2) or (sig[h] == h2 and sig[h2] != h1):
            return sig[sig[h]]
        return sig[h]

    new_sigma = {h: sigma_d(h) for h in range(len(sig))}
    return _restrict(m, new_sigma, {h1, h2})


def map_contract(m: CombMap, eid: int) -> CombMap:
    """Contract a non-loop edge, merging the rotations of its endpoints."""
    h1, h2 = m.edge_pairs()[eid]
    vertex = m.vertex_of()
    if vertex[h1] == vertex[h2]:
        raise ValueError("contracting a loop would disconnect the map")
    sig = m.sigma
    alp = m.alpha

    def sigma_c(h):
        if (sig[h] == h1 and sig[h2] == h2) or (sig[h] == h2 and sig[h1] == h1):
            return sig[sig[h]]
        if (sig[h] == h1 and sig[h2] != h2) or (sig[h] == h2 and sig[h1] != h1):
            return sig[alp[sig[h]]]
        return sig[h]

    new_sigma = {h: sigma_c(h) for h in range(len(sig))}
    return _restrict(m, new_sigma, {h1, h2})


def mirror(m: CombMap) -> CombMap:
    """The map with inverted rotation, rooted on sigma^-1 of the old root."""
    inv = _invert(list(m.sigma))
    return CombMap(inv, m.alpha, inv[m.root], m.names)


# -- text format ---------------------------------------------------------------
#
#   halfedges 2m
#   sigma (a b d)(a' d' c')(b' c)
#   alpha (a a')(b b')(c c')(d d')
#   root a
#
# Half-edge names get ids in order of first appearance in the sigma line;
# singleton cycles must be written explicitly.


def _parse_cycles(body):
    cycles = []
    depth = 0
    current = []
    token = ""
    for ch in body:
        if ch == "(":
            if depth:
                raise ValueError("nested parenthesis in cycle notation")
            depth = 1
            current = []
            token = ""
        elif ch == ")":
            if token:
                current.append(token)
                token = ""
            cycles.append(current)
            depth = 0
        elif ch.isspace():
            if token:
                current.append(token)
                token = ""
        else:
            if not depth:
                raise ValueError("token outside cycle parentheses")
            token += ch
    if depth:
        raise ValueError("unbalanced parenthesis in cycle notation")
    return cycles


def parse_map(text: str) -> CombMap:
    halfedges = None
    sigma_cycles = None
    alpha_cycles = None
    root_name = None
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, _, body = line.partition(" ")
        if key == "halfedges":
            halfedges = int(body)
        elif key == "sigma":
            sigma_cycles = _parse_cycles(body)
        elif key == "alpha":
            alpha_cycles = _parse_cycles(body)
        elif key == "root":
            root_name = body.strip()
        else:
            raise ValueError(f"line {lineno}: unknown directive {key!r}")
    if None in (halfedges, sigma_cycles, alpha_cycles, root_name):
        raise ValueError("map file needs halfedges, sigma, alpha and root lines")

    ids = {}
    for cyc in sigma_cycles + alpha_cycles:
        for name in cyc:
            if name not in ids:
                ids[name] = len(ids)
    if len(ids) != halfedges:
        raise ValueError(f"declared {halfedges} half-edges, found {len(ids)}")

    def perm_from(cycles):
        perm = list(range(halfedges))
        placed = set()
        for cyc in cycles:
            for name, nxt in zip(cyc, cyc[1:] + cyc[:1]):
                if name in placed:
                    raise ValueError(f"half-edge {name} appears twice")
                placed.add(name)
                perm[ids[name]] = ids[nxt]
        if len(placed) != halfedges:
            raise ValueError("cycle notation must cover every half-edge")
        return perm

    sigma = perm_from(sigma_cycles)
    alpha = perm_from(alpha_cycles)
    if root_name not in ids:
        raise ValueError(f"unknown root half-edge {root_name!r}")
    names = [None] * halfedges
    for name, i in ids.items():
        names[i] = name
    return CombMap(sigma, alpha, ids[root_name], names)


def format_map(m: CombMap) -> str:
    def cycles_str(perm):
        return "".join("(" + " ".join(m.name_of(h) for h in cyc) + ")"
                       for cyc in _cycles_of(list(perm)))

    lines = [
        f"halfedges {len(m.sigma)}",
        f"sigma {cycles_str(m.sigma)}",
        f"alpha {cycles_str(m.alpha)}",
        f"root {m.name_of(m.root)}",
    ]
    return "\n".join(lines) + "\n"


def load_map(path) -> CombMap:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_map(fh.read())


def save_map(m: CombMap, path):
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(format_map(m))
