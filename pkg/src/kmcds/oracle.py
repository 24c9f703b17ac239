"""Exponential-time exact solver used as ground truth in tests and bench."""

from __future__ import annotations

import time
from dataclasses import dataclass

from ._enum import iter_subsets_by_weight
from .connectivity import is_k_connected, is_m_dominating
from .graph import Instance

_ORACLE_NODE_CAP = 16


@dataclass(frozen=True, slots=True)
class OracleResult:
    """Optimum (k, m)-cds, or an absent result for infeasible instances."""

    members: frozenset[int] | None
    weight: int | None
    examined: int
    elapsed_s: float

    @property
    def feasible(self) -> bool:
        return self.members is not None


def opt_kmcds(instance: Instance, prefilter: bool = True) -> OracleResult:
    """Minimum-weight (k, m)-cds by weight-ordered subset enumeration.

    Ties resolve to the lexicographically first subset. ``prefilter``
    skips subsets too small to be k-connected before running the full
    verifiers; the skip is exact, so both settings agree (tests compare
    them on tiny instances). Capped at 16 nodes.
    """
    g = instance.graph
    if g.n > _ORACLE_NODE_CAP:
        raise ValueError(f"oracle capped at {_ORACLE_NODE_CAP} nodes")
    k, m = instance.k, instance.m
    start = time.perf_counter()
    examined = 0
    for w, subset in iter_subsets_by_weight(g.nodes, g.weights):
        examined += 1
        if prefilter and len(subset) <= k:
            continue
        if not is_m_dominating(g, subset, m).ok:
            continue
        if not is_k_connected(g.induced(subset), k):
            continue
        return OracleResult(frozenset(subset), w, examined, time.perf_counter() - start)
    return OracleResult(None, None, examined, time.perf_counter() - start)
