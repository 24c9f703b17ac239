"""Connectivity augmentation: virtual forests and disjoint path bundles.

Step one of the endgame: find an inclusion-minimal set of virtual edges on
the attachment nodes whose addition makes a graph k-connected (a forest,
by minimality). Step two: realize each virtual edge as k internally
disjoint paths bought at minimum node weight.
"""

from __future__ import annotations

from itertools import combinations
from typing import Iterable

from .errors import InfeasibleError, InvariantViolationError
from .flow import SplitFlowNetwork, node_cost_map
from .graph import Graph
from .connectivity import is_k_connected, local_connectivity


def _is_forest(nodes: Iterable[int], edges: Iterable[tuple[int, int]]) -> bool:
    parent = {v: v for v in nodes}

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru == rv:
            return False
        parent[ru] = rv
    return True


def minimal_augmenting_forest(
    h: Graph, attachment: Iterable[int], k: int
) -> tuple[tuple[int, int], ...]:
    """Inclusion-minimal virtual edges on ``attachment`` making h k-connected.

    Starts from the clique on the attachment (edges already in h are
    discarded up front) and peels edges in lexicographic order whenever the
    rest still suffices. Raises when even the clique cannot reach
    k-connectivity: callers guarantee it can, so that is an upstream bug.
    """
    att = sorted(set(attachment))
    for v in att:
        if not h.has_node(v):
            raise ValueError(f"attachment node {v} not in graph")
    clique = [e for e in combinations(att, 2) if not h.has_edge(*e)]
    if not is_k_connected(h.union_edges(clique), k):
        raise InvariantViolationError(
            "attachment clique cannot make the graph k-connected"
        )
    kept = list(clique)
    for e in clique:
        rest = [f for f in kept if f != e]
        # a k-connected graph stays k-connected after deleting edge uv iff
        # u and v keep k disjoint paths: any new small cut must split them
        candidate = h.union_edges(rest)
        if local_connectivity(candidate, e[0], e[1], k) >= k:
            kept = rest
    if not _is_forest(att, kept):
        raise InvariantViolationError("peeled augmentation is not a forest")
    if len(kept) > max(len(att) - 1, 0):
        raise InvariantViolationError("augmentation exceeds |attachment| - 1 edges")
    return tuple(kept)


def min_weight_k_paths(
    g: Graph, free: Iterable[int], u: int, v: int, k: int
) -> frozenset[int]:
    """Cheapest node set outside ``free`` buying k disjoint u-v paths.

    Nodes in ``free`` (which must include u and v) cost nothing; the
    returned set contains exactly the priced nodes the flow traverses and
    its weight never exceeds twice the cheapest feasible purchase.
    """
    free_set = frozenset(free)
    if u not in free_set or v not in free_set:
        raise ValueError("both endpoints must be free")
    net = SplitFlowNetwork(g, node_cost=node_cost_map(g, free_set))
    units, _cost = net.min_cost_flow(u, v, k)
    if units < k:
        raise InfeasibleError(
            f"only {units} of {k} disjoint paths exist between {u} and {v}"
        )
    return frozenset(net.nodes_carrying_flow()) - free_set
