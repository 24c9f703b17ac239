"""Benchmark grid construction and the worker pool."""

from kmcds import SolverConfig
from kmcds.bench import BenchTask, build_tasks, rows_to_csv, run_bench


def _tasks():
    return build_tasks(
        kinds=["gnp"],
        sizes=[8, 10],
        k_values=[1, 2],
        m_offsets=[0],
        variants=["general"],
        per_cell=2,
        seed=0,
        p=0.7,
        radius="1/2",
        weight_range=(1, 20),
        config=SolverConfig(collect_witnesses=False),
        oracle_cap=10,
    )


def test_grid_is_deterministic():
    a, b = _tasks(), _tasks()
    assert a == b
    assert len(a) == 8  # 2 sizes x 2 k x 2 per cell
    assert all(isinstance(t, BenchTask) for t in a)
    assert len({t.instance_id for t in a}) == len(a)


def _stable(row):
    d = row.to_dict()
    d.pop("elapsed_ms")
    return d


def test_parallel_rows_match_serial():
    tasks = _tasks()
    serial, skipped_s = run_bench(tasks, jobs=1)
    parallel, skipped_p = run_bench(tasks, jobs=2)
    assert [_stable(r) for r in serial] == [_stable(r) for r in parallel]
    assert skipped_s == skipped_p


def test_csv_shape():
    rows, _ = run_bench(_tasks(), jobs=1)
    text = rows_to_csv(rows)
    lines = text.strip().split("\n")
    assert lines[0].startswith("instance_id,n,edges,k,m,variant,alg_weight")
    assert len(lines) == len(rows) + 1
