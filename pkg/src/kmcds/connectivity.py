"""Connectivity and domination verifiers plus brute-force characterizations.

The flow-based tests here are the package's ground truth for Menger-style
connectivity questions. The subset-enumeration characterizations
(:func:`check_cut_characterization`, :func:`check_subpartition_characterization`)
are independent second routes used to cross-check the flow answers; they
stay deliberately literal.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping, NamedTuple

from .errors import InfeasibleError
from .flow import SplitFlowNetwork
from .graph import Graph


def local_connectivity(g: Graph, u: int, v: int, cap: int) -> int:
    """Number of internally disjoint u-v paths, capped at ``cap``.

    Adjacent pairs count the direct edge as one path.
    """
    if u == v:
        raise ValueError("local connectivity needs two distinct nodes")
    if not (g.has_node(u) and g.has_node(v)):
        raise ValueError("both endpoints must be in the graph")
    if cap < 0:
        raise ValueError("cap must be nonnegative")
    if cap == 0:
        return 0
    return SplitFlowNetwork(g).max_flow(u, v, cap)


def _pair_order(g: Graph) -> list[tuple[int, int]]:
    pairs = []
    nodes = g.nodes
    for i, u in enumerate(nodes):
        for v in nodes[i + 1:]:
            pairs.append((g.degree(u) + g.degree(v), u, v))
    pairs.sort()
    return [(u, v) for _, u, v in pairs]


def _connected(g: Graph) -> bool:
    if not g.nodes:
        return False
    seen = {g.nodes[0]}
    stack = [g.nodes[0]]
    while stack:
        for w in g.adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


def is_k_connected(g: Graph, k: int) -> bool:
    """True iff g has more than k nodes and no pair falls below k paths.

    Tests every unordered pair (sorted by degree sum, so likely failures
    exit early) rather than a sparser certificate scheme: the graphs here
    are small and clarity wins. k=1 collapses to plain connectivity and
    min-degree < k can never pass, so both short-circuit.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n <= k:
        return False
    if min(g.degree(v) for v in g.nodes) < k:
        return False
    if k == 1:
        return _connected(g)
    net = SplitFlowNetwork(g)
    for u, v in _pair_order(g):
        net.reset()
        if net.max_flow(u, v, k) < k:
            return False
    return True


@dataclass(frozen=True, slots=True)
class ConnectivityViolation:
    """Witness that a graph is not k-connected.

    ``separator`` disconnects ``pair`` once removed; when ``direct_edge``
    is set the pair is adjacent and the edge must be dropped as well (the
    witness then certifies local connectivity below k, Menger-style).
    ``too_small`` marks graphs with at most k nodes, where no separator
    is needed.
    """

    pair: tuple[int, int] | None
    separator: tuple[int, ...]
    direct_edge: bool
    value: int
    too_small: bool = False


def find_k_connectivity_violation(g: Graph, k: int) -> ConnectivityViolation | None:
    """None when g is k-connected, else a checkable witness."""
    if k < 1:
        raise ValueError("k must be at least 1")
    if g.n <= k:
        return ConnectivityViolation(None, (), False, 0, too_small=True)
    net = SplitFlowNetwork(g)
    for u, v in _pair_order(g):
        net.reset()
        f = net.max_flow(u, v, k)
        if f < k:
            cut, direct = net.min_cut_separator(u, v)
            return ConnectivityViolation((u, v), tuple(cut), direct, f)
    return None


def is_k_T_connected(g: Graph, terminals: Iterable[int], k: int) -> bool:
    """True iff every pair of terminals keeps k internally disjoint paths."""
    ts = sorted(set(terminals))
    if not ts:
        raise ValueError("need at least one terminal")
    for t in ts:
        if not g.has_node(t):
            raise ValueError(f"terminal {t} not in graph")
    if k < 1:
        raise ValueError("k must be at least 1")
    net = SplitFlowNetwork(g)
    for i, u in enumerate(ts):
        for v in ts[i + 1:]:
            net.reset()
            if net.max_flow(u, v, k) < k:
                return False
    return True


def is_k_in_connected_to_root(g_r: Graph, root: int, k: int) -> bool:
    """True iff every non-root node keeps k disjoint paths to ``root``."""
    return find_root_connectivity_violation(g_r, root, k) is None


def find_root_connectivity_violation(
    g_r: Graph, root: int, k: int, terminals: Iterable[int] | None = None
) -> int | None:
    """First node (ascending id) lacking k disjoint paths to the root."""
    if not g_r.has_node(root):
        raise ValueError(f"root {root} not in graph")
    nodes = sorted(set(terminals)) if terminals is not None else \
        [v for v in g_r.nodes if v != root]
    net = SplitFlowNetwork(g_r)
    for v in nodes:
        if v == root:
            continue
        net.reset()
        if net.max_flow(v, root, k) < k:
            return v
    return None


def domination_counts(g: Graph, members: Iterable[int]) -> dict[int, int]:
    """For each node outside ``members``: its neighbor count inside."""
    inside = frozenset(members)
    return {
        v: sum(1 for w in g.adj[v] if w in inside)
        for v in g.nodes
        if v not in inside
    }


class DominationCheck(NamedTuple):
    ok: bool
    counts: dict[int, int]


def is_m_dominating(g: Graph, members: Iterable[int], m: int) -> DominationCheck:
    """(verdict, per-node counts) for m-domination of nodes outside ``members``.

    Vacuously ok when ``members`` covers the whole graph.
    """
    if m < 0:
        raise ValueError("m must be nonnegative")
    counts = domination_counts(g, members)
    return DominationCheck(all(c >= m for c in counts.values()), counts)


_CUT_CONDITION_CAP = 20


def check_cut_characterization(
    g_r: Graph,
    terminals: Iterable[int],
    selected: Iterable[int],
    attachment: Iterable[int],
    k: int,
) -> bool:
    """Brute-force cut characterization of k-in-connectivity to the root.

    The root is the one node of ``g_r`` outside terminals∪selected. For
    every nonempty A within terminals∪selected, counts A's neighbors in
    the graph without the root plus A's overlap with the attachment; all
    sums must reach k. Agrees with the flow test by Menger's theorem.
    """
    ts = frozenset(terminals)
    ss = frozenset(selected)
    base = sorted(ts | ss)
    extra = set(g_r.nodes) - set(base)
    if len(extra) != 1:
        raise ValueError("graph must contain exactly terminals, selected and one root")
    (root,) = extra
    if len(base) > _CUT_CONDITION_CAP:
        raise ValueError(f"subset enumeration capped at {_CUT_CONDITION_CAP} nodes")
    pos = {v: i for i, v in enumerate(base)}
    nbr = [0] * len(base)
    for v in base:
        mask = 0
        for w in g_r.adj[v]:
            if w != root:
                mask |= 1 << pos[w]
        nbr[pos[v]] = mask
    att_mask = 0
    for v in attachment:
        if v not in pos:
            raise ValueError(f"attachment node {v} outside terminals and selected")
        att_mask |= 1 << pos[v]
    b = len(base)
    for a_mask in range(1, 1 << b):
        gamma = 0
        rest = a_mask
        while rest:
            low = rest & -rest
            gamma |= nbr[low.bit_length() - 1]
            rest ^= low
        gamma &= ~a_mask
        if gamma.bit_count() + (a_mask & att_mask).bit_count() < k:
            return False
    return True


_SUBPARTITION_CAP = 12


def check_subpartition_characterization(g: Graph, k: int) -> bool:
    """Brute-force check: no two nonadjacent node sets leave < k outside.

    Enumerates every disjoint nonempty pair (A, B) with no crossing edge
    and demands at least k nodes outside A∪B. Equivalent to k-connectivity
    for graphs with more than k nodes.
    """
    if g.n > _SUBPARTITION_CAP:
        raise ValueError(f"subset enumeration capped at {_SUBPARTITION_CAP} nodes")
    n = g.n
    base = list(g.nodes)
    pos = {v: i for i, v in enumerate(base)}
    nbr = [0] * n
    for v in base:
        for w in g.adj[v]:
            nbr[pos[v]] |= 1 << pos[w]
    full = (1 << n) - 1
    for a_mask in range(1, full + 1):
        closure = a_mask
        rest = a_mask
        while rest:
            low = rest & -rest
            closure |= nbr[low.bit_length() - 1]
            rest ^= low
        allowed = full & ~closure
        b_mask = allowed
        while b_mask:
            if n - a_mask.bit_count() - b_mask.bit_count() < k:
                return False
            b_mask = (b_mask - 1) & allowed
    return True


@dataclass(frozen=True, slots=True)
class Certificate:
    """Verifiable evidence that a node set is a (k, m)-cds.

    ``domination_counts`` lists, for every node outside the set, how many
    of its neighbors are members (each must reach m). ``witnesses`` maps
    each checked member pair to k internally disjoint paths, given as node
    sequences living inside the induced subgraph.
    """

    k: int
    m: int
    members: tuple[int, ...]
    domination_counts: Mapping[int, int]
    witnesses: Mapping[tuple[int, int], tuple[tuple[int, ...], ...]]


def build_certificate(
    g: Graph, members: Iterable[int], k: int, m: int, with_witnesses: bool = True
) -> Certificate:
    """Certificate for a feasible set; raises if the set is not one."""
    inside = sorted(set(members))
    counts = domination_counts(g, inside)
    bad = [v for v, c in counts.items() if c < m]
    if bad:
        raise InfeasibleError(f"node {bad[0]} has only {counts[bad[0]]} member neighbors")
    sub = g.induced(inside)
    if len(inside) <= k:
        raise InfeasibleError("a k-connected set needs more than k nodes")
    witnesses: dict[tuple[int, int], tuple[tuple[int, ...], ...]] = {}
    net = SplitFlowNetwork(sub)
    for i, u in enumerate(inside):
        for v in inside[i + 1:]:
            net.reset()
            f = net.max_flow(u, v, k)
            if f < k:
                raise InfeasibleError(f"members {u} and {v} have only {f} disjoint paths")
            if with_witnesses:
                witnesses[(u, v)] = tuple(net.extract_paths(u, v))
    return Certificate(k, m, tuple(inside), counts, witnesses)


def certificate_is_sound(cert: Certificate, g: Graph) -> bool:
    """Re-validate a certificate from scratch against the graph."""
    inside = frozenset(cert.members)
    if domination_counts(g, inside) != dict(cert.domination_counts):
        return False
    if any(c < cert.m for c in cert.domination_counts.values()):
        return False
    sub = g.induced(inside)
    for (u, v), paths in cert.witnesses.items():
        if len(paths) != cert.k or len(set(paths)) != len(paths):
            return False
        interior_seen: set[int] = set()
        for path in paths:
            if path[0] != u or path[-1] != v:
                return False
            for a, b in zip(path, path[1:]):
                if not sub.has_edge(a, b):
                    return False
            interior = set(path[1:-1])
            # a simple path: no repeats, and endpoints only at the ends
            if len(interior) != len(path) - 2 or interior & {u, v}:
                return False
            if interior & interior_seen or not interior <= inside:
                return False
            interior_seen |= interior
    return True
