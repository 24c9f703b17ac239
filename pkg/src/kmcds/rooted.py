"""Minimum-weight augmentation toward root connectivity.

Given a graph with a designated root, a terminal set that must keep k
internally disjoint paths to the root, and a priced pool of optional
nodes, the solvers here pick a pool subset S so that the graph induced by
everything outside the pool plus S satisfies the terminal requirement.

Two backends: ``flow-union`` runs one min-cost flow per terminal (pool
nodes priced at their weight, already-selected or free nodes at zero) and
unions the nodes the flows traverse; ``exact`` enumerates pool subsets in
nondecreasing weight order. Both finish with an inclusion pruning pass.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping

from ._enum import iter_subsets_by_weight
from .errors import InfeasibleError
from .flow import SplitFlowNetwork, edge_cost_map, node_cost_map
from .graph import Graph

_EXACT_POOL_CAP = 20

BACKENDS = ("flow-union", "exact")


@dataclass(frozen=True, slots=True)
class RootedProblem:
    """Rooted augmentation input.

    ``graph_r`` already contains the root. ``pool`` nodes are optional and
    priced; every other node is free and fixed. ``terminals`` is the set
    whose root connectivity must reach ``k`` (a subset of the free nodes).
    """

    graph_r: Graph
    root: int
    terminals: tuple[int, ...]
    pool: tuple[int, ...]
    k: int

    def __post_init__(self) -> None:
        g = self.graph_r
        if not g.has_node(self.root):
            raise ValueError("root must be in the graph")
        ts = set(self.terminals)
        ps = set(self.pool)
        if self.root in ts or self.root in ps:
            raise ValueError("root can be neither terminal nor pool")
        if ts & ps:
            raise ValueError("terminals cannot be pool nodes")
        for v in ts | ps:
            if not g.has_node(v):
                raise ValueError(f"node {v} not in graph")
        if self.k < 1:
            raise ValueError("k must be at least 1")
        object.__setattr__(self, "terminals", tuple(sorted(ts)))
        object.__setattr__(self, "pool", tuple(sorted(ps)))

    @property
    def free(self) -> frozenset[int]:
        return frozenset(self.graph_r.nodes) - frozenset(self.pool)


@dataclass(frozen=True, slots=True)
class GuaranteeInfo:
    """Proven multiplicative bound of the backend used for one run."""

    backend: str
    factor_expr: str
    factor_value: int


def find_infeasible_terminal(problem: RootedProblem, selected: Iterable[int]) -> int | None:
    """First terminal lacking k disjoint root paths in free∪selected."""
    keep = problem.free | frozenset(selected)
    sub = problem.graph_r.induced(keep)
    net = SplitFlowNetwork(sub)
    for t in problem.terminals:
        net.reset()
        if net.max_flow(t, problem.root, problem.k) < problem.k:
            return t
    return None


def selection_is_feasible(problem: RootedProblem, selected: Iterable[int]) -> bool:
    return find_infeasible_terminal(problem, selected) is None


def _terminal_order(problem: RootedProblem) -> list[int]:
    g = problem.graph_r
    return sorted(
        problem.terminals,
        key=lambda t: (-sum(g.weights[u] for u in g.adj[t]), t),
    )


def flow_union_backend(problem: RootedProblem) -> frozenset[int]:
    """Union of one min-cost path bundle per terminal.

    Each flow is exact for its own terminal, so the union costs at most
    |terminals| times the optimum; the reported guarantee stays at the
    conservative 2|terminals|.
    """
    g = problem.graph_r
    pool = frozenset(problem.pool)
    net = SplitFlowNetwork(g, node_cost=node_cost_map(g, frozenset(g.nodes) - pool))
    selected: set[int] = set()
    for t in _terminal_order(problem):
        net.reset()
        units, _cost = net.min_cost_flow(t, problem.root, problem.k)
        if units < problem.k:
            raise InfeasibleError(
                f"terminal {t}: only {units} of {problem.k} disjoint paths to the root"
            )
        for v in net.nodes_carrying_flow():
            if v in pool and v not in selected:
                selected.add(v)
                net.set_node_cost(v, 0)
    return frozenset(selected)


def exact_backend(problem: RootedProblem) -> frozenset[int]:
    """Cheapest feasible pool subset, by weight-ordered enumeration."""
    if len(problem.pool) > _EXACT_POOL_CAP:
        raise ValueError(f"exact backend capped at {_EXACT_POOL_CAP} pool nodes")
    weights = problem.graph_r.weights
    for _, subset in iter_subsets_by_weight(problem.pool, weights):
        if selection_is_feasible(problem, subset):
            return frozenset(subset)
    bad = find_infeasible_terminal(problem, problem.pool)
    raise InfeasibleError(
        f"terminal {bad}: no pool subset yields {problem.k} disjoint root paths"
    )


def prune_selection(problem: RootedProblem, selected: frozenset[int]) -> frozenset[int]:
    """Drop nodes whose removal keeps feasibility, heaviest first.

    A single pass suffices for inclusion minimality: feasibility is
    monotone, so a node kept against a larger set stays unremovable.
    """
    weights = problem.graph_r.weights
    current = set(selected)
    for v in sorted(selected, key=lambda v: (-weights[v], v)):
        current.discard(v)
        if not selection_is_feasible(problem, current):
            current.add(v)
    return frozenset(current)


def solve_rooted_nodeweight(
    problem: RootedProblem, backend: str = "flow-union"
) -> tuple[frozenset[int], GuaranteeInfo]:
    """Dispatch to a backend, then prune. Node weights price the pool."""
    if backend == "flow-union":
        selected = flow_union_backend(problem)
        info = GuaranteeInfo("flow-union", "2|T|", 2 * len(problem.terminals))
    elif backend == "exact":
        selected = exact_backend(problem)
        info = GuaranteeInfo("exact", "1", 1)
    else:
        raise ValueError(f"unknown backend {backend!r}")
    return prune_selection(problem, selected), info


def solve_rooted_edgecost(
    problem: RootedProblem,
    edge_costs: Mapping[tuple[int, int], int] | None = None,
) -> tuple[frozenset[int], GuaranteeInfo]:
    """Flow-union variant pricing edges at the weight of priced endpoints.

    Default costs are w_u + w_v restricted to pool endpoints; nodes joining
    the selection stop contributing to the edges around them.
    """
    g = problem.graph_r
    pool = frozenset(problem.pool)
    if edge_costs is None:
        edge_costs = edge_cost_map(g, pool)
    net = SplitFlowNetwork(g, edge_cost=dict(edge_costs))
    selected: set[int] = set()

    def _refresh_costs_around(v: int) -> None:
        priced = pool - selected
        for w in g.adj[v]:
            e = (v, w) if v < w else (w, v)
            c = (g.weights[e[0]] if e[0] in priced else 0) + (
                g.weights[e[1]] if e[1] in priced else 0
            )
            net.set_edge_cost(*e, c)

    for t in _terminal_order(problem):
        net.reset()
        units, _cost = net.min_cost_flow(t, problem.root, problem.k)
        if units < problem.k:
            raise InfeasibleError(
                f"terminal {t}: only {units} of {problem.k} disjoint paths to the root"
            )
        touched: set[int] = set()
        for u, v in net.edges_carrying_flow():
            touched.update((u, v))
        for v in sorted(touched):
            if v in pool and v not in selected:
                selected.add(v)
                _refresh_costs_around(v)
    info = GuaranteeInfo("flow-union-edgecost", "2|T|", 2 * len(problem.terminals))
    return prune_selection(problem, frozenset(selected)), info
