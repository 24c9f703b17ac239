"""Node-split flow network for internally disjoint path computations.

Every graph node v becomes an arc v_in -> v_out of capacity one, every
undirected edge uv becomes the two arcs u_out -> v_in and v_out -> u_in of
capacity one, so an integral s-t flow of value f decomposes into f paths of
the underlying graph that share no interior node. Costs sit either on the
node arcs (node-weighted mode) or on the edge arcs (edge-cost mode).

Queries run from s_out to t_in. Augmenting paths are simple, so they never
traverse the internal arc of s or t; the endpoints are effectively
uncapacitated without special casing. Flow values never exceed the small
connectivity targets used in this package, which keeps plain augmenting
search exact and fast. All tie-breaking is fixed by arc construction order
(nodes ascending, then edges in sorted order), making results deterministic.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Mapping

from .graph import Graph

_INF = 1 << 60


class SplitFlowNetwork:
    __slots__ = (
        "graph", "slot", "ids", "size",
        "_to", "_from", "_cost", "_cap0", "_res",
        "_out", "_internal_arc", "_edge_arcs",
        "_seen", "_token", "_parent",
    )

    def __init__(
        self,
        graph: Graph,
        node_cost: Mapping[int, int] | None = None,
        edge_cost: Mapping[tuple[int, int], int] | None = None,
    ) -> None:
        self.graph = graph
        self.ids = graph.nodes
        self.slot = {v: i for i, v in enumerate(self.ids)}
        self.size = 2 * len(self.ids)

        to: list[int] = []
        frm: list[int] = []
        cost: list[int] = []
        cap: list[int] = []
        out: list[list[int]] = [[] for _ in range(self.size)]

        def add_arc(a: int, b: int, c: int, cp: int) -> int:
            idx = len(to)
            to.append(b), frm.append(a), cost.append(c), cap.append(cp)
            to.append(a), frm.append(b), cost.append(-c), cap.append(0)
            out[a].append(idx)
            out[b].append(idx + 1)
            return idx

        node_cost = node_cost or {}
        self._internal_arc = {}
        for v in self.ids:
            s = self.slot[v]
            self._internal_arc[v] = add_arc(2 * s, 2 * s + 1, node_cost.get(v, 0), 1)

        edge_cost = edge_cost or {}
        self._edge_arcs = {}
        for u, v in graph.edges:
            c = edge_cost.get((u, v), 0)
            su, sv = self.slot[u], self.slot[v]
            a1 = add_arc(2 * su + 1, 2 * sv, c, 1)
            a2 = add_arc(2 * sv + 1, 2 * su, c, 1)
            self._edge_arcs[(u, v)] = (a1, a2)

        self._to = to
        self._from = frm
        self._cost = cost
        self._cap0 = cap
        self._res = list(cap)
        self._out = out
        self._seen = [0] * self.size
        self._token = 0
        self._parent = [0] * self.size

    def reset(self) -> None:
        self._res = list(self._cap0)

    def set_node_cost(self, v: int, c: int) -> None:
        a = self._internal_arc[v]
        self._cost[a] = c
        self._cost[a + 1] = -c

    def set_edge_cost(self, u: int, v: int, c: int) -> None:
        e = (u, v) if u < v else (v, u)
        for a in self._edge_arcs[e]:
            self._cost[a] = c
            self._cost[a + 1] = -c

    def _apply_path(self, t_in: int, s_out: int) -> None:
        res = self._res
        x = t_in
        while x != s_out:
            a = self._parent[x]
            res[a] -= 1
            res[a ^ 1] += 1
            x = self._from[a]

    def _augment_bfs(self, s_out: int, t_in: int) -> bool:
        self._token += 1
        token = self._token
        seen, parent, res, to = self._seen, self._parent, self._res, self._to
        seen[s_out] = token
        q = deque([s_out])
        while q:
            x = q.popleft()
            for a in self._out[x]:
                if res[a] > 0:
                    y = to[a]
                    if seen[y] != token:
                        seen[y] = token
                        parent[y] = a
                        if y == t_in:
                            self._apply_path(t_in, s_out)
                            return True
                        q.append(y)
        return False

    def _augment_cheapest(self, s_out: int, t_in: int) -> int | None:
        # Bellman-Ford over residual arcs; residual costs may be negative but
        # no negative cycle exists while the flow stays cost-minimal.
        dist = [_INF] * self.size
        dist[s_out] = 0
        parent, res, to, cost = self._parent, self._res, self._to, self._cost
        inq = bytearray(self.size)
        inq[s_out] = 1
        q = deque([s_out])
        while q:
            x = q.popleft()
            inq[x] = 0
            dx = dist[x]
            for a in self._out[x]:
                if res[a] > 0:
                    y = to[a]
                    nd = dx + cost[a]
                    if nd < dist[y]:
                        dist[y] = nd
                        parent[y] = a
                        if not inq[y]:
                            inq[y] = 1
                            q.append(y)
        if dist[t_in] >= _INF:
            return None
        self._apply_path(t_in, s_out)
        return dist[t_in]

    def max_flow(self, s: int, t: int, cap: int) -> int:
        """Units of s-t flow pushed, stopping early at ``cap``."""
        if s == t:
            raise ValueError("source equals sink")
        s_out = 2 * self.slot[s] + 1
        t_in = 2 * self.slot[t]
        value = 0
        while value < cap and self._augment_bfs(s_out, t_in):
            value += 1
        return value

    def min_cost_flow(self, s: int, t: int, units: int) -> tuple[int, int]:
        """(units pushed, total cost) for a cheapest flow of ``units``."""
        if s == t:
            raise ValueError("source equals sink")
        s_out = 2 * self.slot[s] + 1
        t_in = 2 * self.slot[t]
        value = 0
        total = 0
        while value < units:
            got = self._augment_cheapest(s_out, t_in)
            if got is None:
                break
            total += got
            value += 1
        return value, total

    def nodes_carrying_flow(self) -> list[int]:
        """Node ids whose internal arc is used by the current flow."""
        res = self._res
        return [v for v, a in self._internal_arc.items() if res[a] == 0]

    def edges_carrying_flow(self) -> list[tuple[int, int]]:
        res = self._res
        out = []
        for e, (a1, a2) in self._edge_arcs.items():
            if res[a1] == 0 or res[a2] == 0:
                out.append(e)
        return out

    def extract_paths(self, s: int, t: int) -> list[tuple[int, ...]]:
        """Decompose the current flow into s-t node paths (consumes it)."""
        res, to, frm = self._res, self._to, self._from
        s_out = 2 * self.slot[s] + 1
        t_in = 2 * self.slot[t]
        paths = []
        while True:
            arc = None
            for a in self._out[s_out]:
                if a % 2 == 0 and self._cap0[a] > 0 and res[a] < self._cap0[a]:
                    arc = a
                    break
            if arc is None:
                break
            nodes = [s]
            x = s_out
            while x != t_in:
                step = None
                for a in self._out[x]:
                    if a % 2 == 0 and self._cap0[a] > 0 and res[a] < self._cap0[a]:
                        step = a
                        break
                if step is None:
                    raise RuntimeError("flow decomposition lost conservation")
                res[step] += 1
                res[step ^ 1] -= 1
                x = to[step]
                if x % 2 == 0 and x != t_in:
                    nodes.append(self.ids[x // 2])
                    # traverse the internal arc immediately
                    ia = self._internal_arc[self.ids[x // 2]]
                    res[ia] += 1
                    res[ia ^ 1] -= 1
                    x = to[ia]
            nodes.append(t)
            paths.append(tuple(nodes))
        return paths

    def residual_reachable(self, s: int) -> set[int]:
        s_out = 2 * self.slot[s] + 1
        seen = {s_out}
        q = deque([s_out])
        res, to = self._res, self._to
        while q:
            x = q.popleft()
            for a in self._out[x]:
                if res[a] > 0 and to[a] not in seen:
                    seen.add(to[a])
                    q.append(to[a])
        return seen

    def min_cut_separator(self, s: int, t: int) -> tuple[list[int], bool]:
        """Menger witness after a saturating max-flow run.

        Returns (interior nodes to delete, whether the direct s-t edge is
        part of the cut). Deleting the nodes, plus the edge when flagged,
        destroys every s-t path.
        """
        reach = self.residual_reachable(s)
        nodes: set[int] = set()
        direct = False
        res = self._res
        for e, (a1, a2) in self._edge_arcs.items():
            for a in (a1, a2):
                if res[a] == 0 and self._from[a] in reach and self._to[a] not in reach:
                    u = self.ids[self._from[a] // 2]
                    v = self.ids[self._to[a] // 2]
                    if v not in (s, t):
                        nodes.add(v)
                    elif u not in (s, t):
                        nodes.add(u)
                    else:
                        direct = True
        for v, a in self._internal_arc.items():
            if res[a] == 0 and 2 * self.slot[v] in reach and 2 * self.slot[v] + 1 not in reach:
                if v not in (s, t):
                    nodes.add(v)
        return sorted(nodes), direct


def node_cost_map(g: Graph, free: Iterable[int]) -> dict[int, int]:
    """Internal-arc costs: node weight for priced nodes, 0 inside ``free``."""
    free_set = frozenset(free)
    return {v: (0 if v in free_set else g.weights[v]) for v in g.nodes}


def edge_cost_map(g: Graph, priced: Iterable[int]) -> dict[tuple[int, int], int]:
    """Edge costs w_u + w_v counting only endpoints in ``priced``."""
    p = frozenset(priced)
    return {
        (u, v): (g.weights[u] if u in p else 0) + (g.weights[v] if v in p else 0)
        for u, v in g.edges
    }
