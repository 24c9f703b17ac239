"""Benchmark sweeps over generated instance grids.

A sweep enumerates (kind, n, k, m, variant) cells, generates a fixed
number of seeded instances per cell, solves each, optionally runs the
exact oracle on small instances, and emits one row per solve. Rows are
sorted by instance id before emission so concurrent execution cannot
reorder output.
"""

from __future__ import annotations

import csv
import io
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction

from .errors import InfeasibleError
from .generators import gen_gnp, gen_unit_disk
from .graph import Instance
from .oracle import opt_kmcds
from .solver import SolverConfig, solve_general, solve_guess_root, solve_unit_disk

CSV_COLUMNS = (
    "instance_id",
    "n",
    "edges",
    "k",
    "m",
    "variant",
    "alg_weight",
    "oracle_weight",
    "ratio",
    "weight_dominating",
    "weight_connectors",
    "weight_pair_connectors",
    "elapsed_ms",
)


@dataclass(frozen=True, slots=True)
class BenchRow:
    instance_id: str
    n: int
    edges: int
    k: int
    m: int
    variant: str
    alg_weight: int
    oracle_weight: int | None
    ratio: str | None
    weight_dominating: int
    weight_connectors: int
    weight_pair_connectors: int
    elapsed_ms: float

    def to_dict(self) -> dict:
        return {
            "instance_id": self.instance_id,
            "n": self.n,
            "edges": self.edges,
            "k": self.k,
            "m": self.m,
            "variant": self.variant,
            "alg_weight": self.alg_weight,
            "oracle_weight": self.oracle_weight,
            "ratio": self.ratio,
            "weight_dominating": self.weight_dominating,
            "weight_connectors": self.weight_connectors,
            "weight_pair_connectors": self.weight_pair_connectors,
            "elapsed_ms": self.elapsed_ms,
        }


@dataclass(frozen=True, slots=True)
class BenchTask:
    """One pending solve, picklable so sweeps can fan out to processes."""

    instance_id: str
    kind: str
    n: int
    p: float
    radius: str
    weight_lo: int
    weight_hi: int
    seed: int
    k: int
    m: int
    variant: str
    backend: str
    attachment_rule: str
    final_prune: bool
    oracle_cap: int


def _build_instance(task: BenchTask) -> Instance:
    if task.kind == "gnp":
        return gen_gnp(
            task.n, task.p, (task.weight_lo, task.weight_hi), task.seed, task.k, task.m
        )
    return gen_unit_disk(
        task.n,
        Fraction(task.radius),
        (task.weight_lo, task.weight_hi),
        task.seed,
        task.k,
        task.m,
    )


def _ratio_str(alg: int, opt: int) -> str:
    if opt == 0:
        return "1.000000" if alg == 0 else "inf"
    return f"{alg / opt:.6f}"


def run_task(task: BenchTask) -> BenchRow | None:
    """Solve one task; None when the generated instance is infeasible."""
    instance = _build_instance(task)
    config = SolverConfig(
        backend=task.backend,
        attachment_rule=task.attachment_rule,
        final_prune=task.final_prune,
        collect_witnesses=False,
    )
    solver = {
        "general": solve_general,
        "unit-disk": solve_unit_disk,
        "guess-root": solve_guess_root,
    }[task.variant]
    start = time.perf_counter()
    try:
        report = solver(instance, config)
    except InfeasibleError:
        return None
    elapsed_ms = (time.perf_counter() - start) * 1000.0
    oracle_weight = None
    ratio = None
    if 0 < task.oracle_cap >= instance.n and instance.n <= 16:
        result = opt_kmcds(instance)
        if result.feasible:
            oracle_weight = result.weight
            ratio = _ratio_str(report.weights["total"], result.weight)
    return BenchRow(
        instance_id=task.instance_id,
        n=instance.n,
        edges=len(instance.graph.edges),
        k=task.k,
        m=task.m,
        variant=task.variant,
        alg_weight=report.weights["total"],
        oracle_weight=oracle_weight,
        ratio=ratio,
        weight_dominating=report.weights["dominating"],
        weight_connectors=report.weights["connectors"],
        weight_pair_connectors=report.weights["pair_connectors"],
        elapsed_ms=elapsed_ms,
    )


def build_tasks(
    kinds: list[str],
    sizes: list[int],
    k_values: list[int],
    m_offsets: list[int],
    variants: list[str],
    per_cell: int,
    seed: int,
    p: float,
    radius: str,
    weight_range: tuple[int, int],
    config: SolverConfig,
    oracle_cap: int,
) -> list[BenchTask]:
    """Deterministic task grid; ids encode every generation parameter.

    guess-root applies to k in {2, 3} only, so other k values skip that
    variant rather than failing the sweep.
    """
    tasks = []
    counter = 0
    for kind in kinds:
        for n in sizes:
            for k in k_values:
                for off in m_offsets:
                    m = k + off
                    for i in range(per_cell):
                        inst_seed = seed + counter
                        counter += 1
                        for variant in variants:
                            if variant == "guess-root" and k not in (2, 3):
                                continue
                            if variant == "unit-disk" and kind != "unit-disk":
                                continue
                            tasks.append(
                                BenchTask(
                                    instance_id=(
                                        f"{kind}-n{n:03d}-k{k}-m{m}-s{inst_seed}"
                                        f"-{variant}"
                                    ),
                                    kind=kind,
                                    n=n,
                                    p=p,
                                    radius=radius,
                                    weight_lo=weight_range[0],
                                    weight_hi=weight_range[1],
                                    seed=inst_seed,
                                    k=k,
                                    m=m,
                                    variant=variant,
                                    backend=config.backend,
                                    attachment_rule=config.attachment_rule,
                                    final_prune=config.final_prune,
                                    oracle_cap=oracle_cap,
                                )
                            )
    return tasks


def run_bench(tasks: list[BenchTask], jobs: int = 1) -> tuple[list[BenchRow], int]:
    """Run all tasks, return (rows sorted by instance id, skipped count)."""
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(run_task, tasks))
    else:
        results = [run_task(t) for t in tasks]
    rows = [r for r in results if r is not None]
    rows.sort(key=lambda r: r.instance_id)
    return rows, len(results) - len(rows)


def rows_to_csv(rows: list[BenchRow]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        d = row.to_dict()
        writer.writerow(["" if d[c] is None else d[c] for c in CSV_COLUMNS])
    return buf.getvalue()
