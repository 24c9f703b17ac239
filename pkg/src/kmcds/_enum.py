"""Shared subset enumeration in nondecreasing weight order."""

from __future__ import annotations

import heapq
from typing import Iterator, Mapping, Sequence


def iter_subsets_by_weight(
    items: Sequence[int], weights: Mapping[int, int]
) -> Iterator[tuple[int, tuple[int, ...]]]:
    """Yield (weight, subset) over all subsets of ``items``.

    Order is nondecreasing total weight, ties broken by lexicographic
    subset order over the given item sequence. Weights must be
    nonnegative so that extending a subset never decreases its weight.
    """
    base = tuple(items)
    for it in base:
        if weights[it] < 0:
            raise ValueError("weights must be nonnegative")
    # heap entries: (weight, subset, index of last item used)
    heap: list[tuple[int, tuple[int, ...], int]] = [(0, (), -1)]
    while heap:
        w, subset, last = heapq.heappop(heap)
        yield w, subset
        for i in range(last + 1, len(base)):
            it = base[i]
            heapq.heappush(heap, (w + weights[it], subset + (it,), i))
