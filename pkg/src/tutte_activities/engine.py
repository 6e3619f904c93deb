"""Edge typing driven by a decision oracle: histories, orderings, activities.

The typing pass visits the edges in the order dictated by the oracle.  The
visited edge is classified in the current minor H: a standard external edge
is deleted (go left), a standard internal edge is contracted (go right), a
loop gets type L (left) and an isthmus type I (right).  Removing typed-L
edges and contracting typed-I ones are optional variants; all four flag
settings produce the same types.

Types use the four tags Se (standard external), L (loop at visit), Si
(standard internal), I (isthmus at visit).  An edge typed L or I is active;
for spanning trees the type-I edges are exactly the internal active edges
and the type-L edges the external active ones.
"""

from __future__ import annotations

from . import graph as gr
from .decision import LEFT, RIGHT

TYPE_SE = "Se"
TYPE_L = "L"
TYPE_SI = "Si"
TYPE_I = "I"

DIRECTION_OF_TYPE = {TYPE_SE: LEFT, TYPE_L: LEFT, TYPE_SI: RIGHT, TYPE_I: RIGHT}


def run_history(g, oracle, subgraph_mask, *, delete_loops=False,
                contract_isthmuses=False):
    """Visit every edge once and return [(edge_id, type), ...] in visit order.

    Accepts any spanning subgraph, not only trees.  The two keyword flags
    toggle the optional removal of L-typed and I-typed edges from the minor;
    they never change the output, only the amount of graph surgery.
    """
    if not gr.is_connected(g):
        raise ValueError("graph must be connected")
    m = g.edge_count()
    h = g
    prefix = []
    history = []
    typed = set()
    for _ in range(m):
        eid = oracle.next_edge(tuple(prefix))
        if eid in typed or not g.has_edge(eid):
            raise ValueError(f"oracle returned unusable edge {eid}")
        typed.add(eid)
        kind = gr.classify_edge(h, eid)
        if kind == gr.STANDARD:
            if (subgraph_mask >> eid) & 1:
                h = gr.contract(h, eid)
                etype = TYPE_SI
            else:
                h = gr.delete(h, eid)
                etype = TYPE_SE
        elif kind == gr.LOOP:
            if delete_loops:
                h = gr.delete(h, eid)
            etype = TYPE_L
        else:  # isthmus
            if contract_isthmuses:
                h = gr.contract(h, eid)
            etype = TYPE_I
        history.append((eid, etype))
        prefix.append(DIRECTION_OF_TYPE[etype])
    return history


def types_by_edge(history):
    """Dict edge_id -> type from a history."""
    return dict(history)


def type_masks(history):
    """Bitmasks of the four type classes, as a dict keyed by type tag."""
    masks = {TYPE_SE: 0, TYPE_L: 0, TYPE_SI: 0, TYPE_I: 0}
    for eid, etype in history:
        masks[etype] |= 1 << eid
    return masks


def active_mask(history):
    """Edges with type L or I."""
    masks = type_masks(history)
    return masks[TYPE_L] | masks[TYPE_I]


def delta_ordering(g, oracle, subgraph_mask):
    """The visit order of the edges for the given subgraph."""
    return [eid for eid, _ in run_history(g, oracle, subgraph_mask)]


def delta_activity(g, oracle, tree_mask):
    """(internal_active, external_active) masks of a spanning tree.

    Internal actives are the type-I edges, external actives the type-L ones.
    """
    if not gr.is_spanning_tree(g, tree_mask):
        raise ValueError("edge set is not a spanning tree")
    masks = type_masks(run_history(g, oracle, tree_mask))
    return masks[TYPE_I], masks[TYPE_L]


def internal_active_no_contract(g, oracle, tree_mask):
    """Internal active edges computed without ever contracting an edge.

    Walks the oracle like the typing pass but only deletes external
    non-isthmus edges; an edge joins the output when it is an isthmus of the
    current minor right after its step.
    """
    if not gr.is_spanning_tree(g, tree_mask):
        raise ValueError("edge set is not a spanning tree")
    m = g.edge_count()
    h = g
    prefix = []
    result = 0
    for _ in range(m):
        eid = oracle.next_edge(tuple(prefix))
        external = not ((tree_mask >> eid) & 1)
        if external and gr.classify_edge(h, eid) != gr.ISTHMUS:
            h = gr.delete(h, eid)
            prefix.append(LEFT)
        else:
            prefix.append(RIGHT)
        if h.has_edge(eid) and gr.classify_edge(h, eid) == gr.ISTHMUS:
            result |= 1 << eid
    return result


def forest_active(g, oracle, subgraph_mask):
    """Edges that are loops at their visit, with internal non-loops contracted.

    Nothing is ever deleted.  External edges and loops steer left, internal
    non-loops are contracted and steer right.  For a spanning forest the
    output is its set of cycle-closing active external edges.
    """
    if not gr.is_connected(g):
        raise ValueError("graph must be connected")
    m = g.edge_count()
    h = g
    prefix = []
    result = 0
    for _ in range(m):
        eid = oracle.next_edge(tuple(prefix))
        loop = gr.classify_edge(h, eid) == gr.LOOP
        if not loop and not ((subgraph_mask >> eid) & 1):
            prefix.append(LEFT)
        elif not loop:
            h = gr.contract(h, eid)
            prefix.append(RIGHT)
        else:
            result |= 1 << eid
            prefix.append(LEFT)
    return result


def format_history(history, edge_name=str):
    """CLI dump: one `<edge_name> <type>` line per visit."""
    return "\n".join(f"{edge_name(eid)} {etype}" for eid, etype in history)
