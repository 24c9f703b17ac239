"""Immutable node-weighted undirected graphs and problem instances.

Node identities are nonnegative integers and survive induced-subgraph
extraction: node 7 of a subgraph is node 7 of the parent. Weights are
nonnegative integers throughout; fractional user input is scaled to
integers at parse time (see :mod:`kmcds.serialize`) so that all weight
comparisons stay exact. Geometric instances carry exact rational
coordinates and derive their edge set from the disk rule
``dist(u, v)^2 <= radius^2`` with :class:`fractions.Fraction` arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping


class Graph:
    """Simple undirected graph over integer node ids, immutable after build.

    Args:
        nodes: iterable of distinct nonnegative node ids.
        edges: iterable of 2-tuples; loops and duplicates are rejected.
        weights: mapping id -> nonnegative int weight; missing ids get 0.
    """

    __slots__ = ("nodes", "edges", "weights", "adj", "_node_set")

    def __init__(
        self,
        nodes: Iterable[int],
        edges: Iterable[tuple[int, int]],
        weights: Mapping[int, int] | None = None,
    ) -> None:
        node_tuple = tuple(sorted(nodes))
        node_set = frozenset(node_tuple)
        if len(node_tuple) != len(node_set):
            raise ValueError("duplicate node ids")
        if node_tuple and node_tuple[0] < 0:
            raise ValueError("node ids must be nonnegative")

        adj: dict[int, set[int]] = {v: set() for v in node_tuple}
        canon: set[tuple[int, int]] = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if u not in node_set or v not in node_set:
                raise ValueError(f"edge ({u}, {v}) leaves the node set")
            e = (u, v) if u < v else (v, u)
            if e in canon:
                raise ValueError(f"duplicate edge {e}")
            canon.add(e)
            adj[u].add(v)
            adj[v].add(u)

        w: dict[int, int] = {}
        weights = weights or {}
        for v in node_tuple:
            wv = weights.get(v, 0)
            if not isinstance(wv, int) or isinstance(wv, bool):
                raise ValueError(f"weight of node {v} must be an integer")
            if wv < 0:
                raise ValueError(f"weight of node {v} is negative")
            w[v] = wv

        object.__setattr__(self, "nodes", node_tuple)
        object.__setattr__(self, "edges", tuple(sorted(canon)))
        object.__setattr__(self, "weights", w)
        object.__setattr__(self, "adj", {v: tuple(sorted(s)) for v, s in adj.items()})
        object.__setattr__(self, "_node_set", node_set)

    def __setattr__(self, name: str, value: object) -> None:
        raise AttributeError("Graph is immutable")

    @property
    def n(self) -> int:
        return len(self.nodes)

    def has_node(self, v: int) -> bool:
        return v in self._node_set

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj.get(u, ())

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def neighbor_set(self, v: int) -> frozenset[int]:
        return frozenset(self.adj[v])

    def weight(self, v: int) -> int:
        return self.weights[v]

    def total_weight(self, members: Iterable[int] | None = None) -> int:
        if members is None:
            return sum(self.weights.values())
        return sum(self.weights[v] for v in members)

    def induced(self, members: Iterable[int]) -> "Graph":
        keep = frozenset(members)
        stray = keep - self._node_set
        if stray:
            raise ValueError(f"nodes {sorted(stray)} not in graph")
        kept_edges = [(u, v) for u, v in self.edges if u in keep and v in keep]
        return Graph(keep, kept_edges, {v: self.weights[v] for v in keep})

    def union_edges(self, extra: Iterable[tuple[int, int]]) -> "Graph":
        """Graph with additional edges; already-present edges are ignored."""
        new = list(self.edges)
        present = set(self.edges)
        for u, v in extra:
            e = (u, v) if u < v else (v, u)
            if e not in present:
                present.add(e)
                new.append(e)
        return Graph(self.nodes, new, self.weights)

    def without_edges(self, drop: Iterable[tuple[int, int]]) -> "Graph":
        gone = {(u, v) if u < v else (v, u) for u, v in drop}
        return Graph(self.nodes, [e for e in self.edges if e not in gone], self.weights)


def neighbors(g: Graph, members: Iterable[int]) -> frozenset[int]:
    """Nodes outside ``members`` adjacent to at least one member."""
    inside = frozenset(members)
    out: set[int] = set()
    for v in inside:
        out.update(g.adj[v])
    return frozenset(out - inside)


def induced_subgraph(g: Graph, members: Iterable[int]) -> Graph:
    """Subgraph on ``members`` with exactly the edges joining two members."""
    return g.induced(members)


def attach_root(g: Graph, attachment: Iterable[int], k: int) -> tuple[Graph, int]:
    """Add a zero-weight virtual root adjacent to exactly ``attachment``.

    The root takes id one past the largest existing id. ``attachment``
    must contain exactly ``k`` distinct existing nodes.
    """
    att = sorted(set(attachment))
    if len(att) != k:
        raise ValueError(f"attachment must have exactly {k} nodes, got {len(att)}")
    for v in att:
        if not g.has_node(v):
            raise ValueError(f"attachment node {v} not in graph")
    root = (max(g.nodes) + 1) if g.nodes else 0
    weights = dict(g.weights)
    weights[root] = 0
    edges = list(g.edges) + [(v, root) for v in att]
    return Graph(list(g.nodes) + [root], edges, weights), root


def degree_stats(g: Graph) -> tuple[int, int]:
    """(min degree, max degree); (0, 0) for an empty graph."""
    if not g.nodes:
        return (0, 0)
    degs = [len(g.adj[v]) for v in g.nodes]
    return (min(degs), max(degs))


def _disk_edges(
    coords: Mapping[int, tuple[Fraction, Fraction]], radius: Fraction
) -> list[tuple[int, int]]:
    rr = radius * radius
    out = []
    for u, v in combinations(sorted(coords), 2):
        dx = coords[u][0] - coords[v][0]
        dy = coords[u][1] - coords[v][1]
        if dx * dx + dy * dy <= rr:
            out.append((u, v))
    return out


@dataclass(frozen=True, slots=True)
class Instance:
    """A solver input: weighted graph plus connectivity/domination targets.

    ``coords`` and ``radius`` are both present for unit-disk instances and
    both absent otherwise. Node ids are dense ``0..n-1``. ``m >= k >= 1``
    always holds. ``weight_denominator`` records the scale applied to
    fractional input weights (internal weights are the scaled integers).
    """

    graph: Graph
    k: int
    m: int
    coords: tuple[tuple[Fraction, Fraction], ...] | None = None
    radius: Fraction | None = None
    weight_denominator: int = 1

    def __post_init__(self) -> None:
        g = self.graph
        if g.nodes != tuple(range(g.n)):
            raise ValueError("instance node ids must be dense 0..n-1")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        if self.m < self.k:
            raise ValueError("m must be at least k")
        if self.weight_denominator < 1:
            raise ValueError("weight denominator must be positive")
        if (self.coords is None) != (self.radius is None):
            raise ValueError("coords and radius must be given together")
        if self.coords is not None:
            if len(self.coords) != g.n:
                raise ValueError("one coordinate pair per node required")
            if self.radius < 0:
                raise ValueError("radius must be nonnegative")
            want = _disk_edges(dict(enumerate(self.coords)), self.radius)
            if tuple(want) != g.edges:
                raise ValueError("edge set disagrees with the disk rule")

    @property
    def n(self) -> int:
        return self.graph.n

    @property
    def is_geometric(self) -> bool:
        return self.coords is not None

    @staticmethod
    def general(
        n: int,
        edges: Iterable[tuple[int, int]],
        weights: Iterable[int],
        k: int,
        m: int,
        denominator: int = 1,
    ) -> "Instance":
        w = list(weights)
        if len(w) != n:
            raise ValueError("one weight per node required")
        g = Graph(range(n), edges, dict(enumerate(w)))
        return Instance(graph=g, k=k, m=m, weight_denominator=denominator)

    @staticmethod
    def unit_disk(
        coords: Iterable[tuple[Fraction, Fraction]],
        radius: Fraction,
        weights: Iterable[int],
        k: int,
        m: int,
        denominator: int = 1,
    ) -> "Instance":
        pts = tuple((Fraction(x), Fraction(y)) for x, y in coords)
        w = list(weights)
        if len(w) != len(pts):
            raise ValueError("one weight per node required")
        edges = _disk_edges(dict(enumerate(pts)), Fraction(radius))
        g = Graph(range(len(pts)), edges, dict(enumerate(w)))
        return Instance(
            graph=g,
            k=k,
            m=m,
            coords=pts,
            radius=Fraction(radius),
            weight_denominator=denominator,
        )
