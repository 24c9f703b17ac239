"""Instance and report serialization.

Everything is plain JSON with sorted keys and a trailing newline, so
fixtures diff cleanly and identical inputs serialize byte-identically.
Weights are stored as scaled nonnegative integers next to a single
``weight_denominator``; coordinates and the disk radius are stored as
exact fraction strings ("3/10"), never floats.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any, Iterable, TYPE_CHECKING

from .errors import ParseError
from .graph import Instance

if TYPE_CHECKING:  # pragma: no cover
    from .connectivity import Certificate
    from .solver import SolutionReport, VerifyResult

SCHEMA_VERSION = 1
INSTANCE_KIND = "kmcds-instance"
REPORT_KIND = "kmcds-report"


def dumps_canonical(obj: Any) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def parse_fraction(text: str | int) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError, TypeError) as exc:
        raise ParseError(f"bad fraction {text!r}: {exc}") from None


def instance_to_dict(instance: Instance) -> dict:
    g = instance.graph
    nodes = []
    for v in g.nodes:
        entry: dict[str, Any] = {"id": v, "weight": g.weights[v]}
        if instance.coords is not None:
            x, y = instance.coords[v]
            entry["x"] = str(x)
            entry["y"] = str(y)
        nodes.append(entry)
    doc: dict[str, Any] = {
        "kind": INSTANCE_KIND,
        "schema_version": SCHEMA_VERSION,
        "k": instance.k,
        "m": instance.m,
        "weight_denominator": instance.weight_denominator,
        "nodes": nodes,
        "edges": [[u, v] for u, v in g.edges],
    }
    if instance.radius is not None:
        doc["radius"] = str(instance.radius)
    return doc


def dump_instance(instance: Instance) -> str:
    return dumps_canonical(instance_to_dict(instance))


def _require(doc: dict, key: str, kinds: tuple[type, ...]) -> Any:
    if key not in doc:
        raise ParseError(f"missing field {key!r}")
    value = doc[key]
    if not isinstance(value, kinds) or isinstance(value, bool):
        raise ParseError(f"field {key!r} has the wrong type")
    return value


def instance_from_dict(doc: Any) -> Instance:
    if not isinstance(doc, dict):
        raise ParseError("top-level value must be an object")
    if doc.get("kind") != INSTANCE_KIND:
        raise ParseError(f"kind must be {INSTANCE_KIND!r}")
    if doc.get("schema_version") != SCHEMA_VERSION:
        raise ParseError(f"unsupported schema_version {doc.get('schema_version')!r}")
    k = _require(doc, "k", (int,))
    m = _require(doc, "m", (int,))
    denom = doc.get("weight_denominator", 1)
    if not isinstance(denom, int) or isinstance(denom, bool) or denom < 1:
        raise ParseError("weight_denominator must be a positive integer")
    raw_nodes = _require(doc, "nodes", (list,))
    raw_edges = _require(doc, "edges", (list,))

    seen_ids = set()
    weights_by_id: dict[int, int] = {}
    coords_by_id: dict[int, tuple[Fraction, Fraction]] = {}
    for entry in raw_nodes:
        if not isinstance(entry, dict):
            raise ParseError("each node must be an object")
        v = _require(entry, "id", (int,))
        w = _require(entry, "weight", (int,))
        if v in seen_ids:
            raise ParseError(f"duplicate node id {v}")
        seen_ids.add(v)
        weights_by_id[v] = w
        has_x, has_y = "x" in entry, "y" in entry
        if has_x != has_y:
            raise ParseError(f"node {v} has only one coordinate")
        if has_x:
            coords_by_id[v] = (
                parse_fraction(entry["x"]),
                parse_fraction(entry["y"]),
            )
    n = len(raw_nodes)
    if seen_ids != set(range(n)):
        raise ParseError("node ids must be dense 0..n-1")

    edges = []
    for pair in raw_edges:
        if (
            not isinstance(pair, list)
            or len(pair) != 2
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in pair)
        ):
            raise ParseError(f"bad edge entry {pair!r}")
        edges.append((pair[0], pair[1]))

    geometric = "radius" in doc
    if coords_by_id and len(coords_by_id) != n:
        raise ParseError("either every node has coordinates or none do")
    if geometric != bool(coords_by_id) and n > 0:
        raise ParseError("radius and coordinates must appear together")

    try:
        if geometric:
            radius = parse_fraction(doc["radius"])
            coords = [coords_by_id[v] for v in range(n)]
            weights = [weights_by_id[v] for v in range(n)]
            inst = Instance.unit_disk(coords, radius, weights, k, m, denominator=denom)
        else:
            weights = [weights_by_id[v] for v in range(n)]
            inst = Instance.general(n, edges, weights, k, m, denominator=denom)
    except ValueError as exc:
        raise ParseError(str(exc)) from None
    if geometric and set(inst.graph.edges) != {(min(u, v), max(u, v)) for u, v in edges}:
        raise ParseError("edge list disagrees with the coordinate/radius rule")
    return inst


def load_instance(text: str) -> Instance:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(
            f"line {exc.lineno}, column {exc.colno}: {exc.msg}"
        ) from None
    return instance_from_dict(doc)


def read_instance(path: str) -> Instance:
    with open(path, "r", encoding="utf-8") as fh:
        return load_instance(fh.read())


def write_instance(path: str, instance: Instance) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(dump_instance(instance))


def certificate_to_dict(cert: "Certificate") -> dict:
    return {
        "k": cert.k,
        "m": cert.m,
        "members": list(cert.members),
        "domination": [[v, c] for v, c in sorted(cert.domination_counts.items())],
        "witnesses": [
            {"pair": [u, v], "paths": [list(p) for p in paths]}
            for (u, v), paths in sorted(cert.witnesses.items())
        ],
    }


def report_to_dict(report: "SolutionReport", include_timings: bool = False) -> dict:
    doc: dict[str, Any] = {
        "kind": REPORT_KIND,
        "schema_version": SCHEMA_VERSION,
        "variant": report.variant,
        "config": report.config.to_dict(),
        "instance": {
            "n": report.n,
            "edges": report.edge_count,
            "k": report.k,
            "m": report.m,
            "weight_denominator": report.weight_denominator,
        },
        "sets": {
            "dominating": list(report.dominating),
            "connectors": list(report.connectors),
            "pair_connectors": list(report.pair_connectors),
            "attachment": list(report.attachment),
            "forest": [[u, v] for u, v in report.forest],
            "guess_root": report.guess_root,
            "pruned": list(report.pruned),
            "solution": list(report.solution),
        },
        "weights": dict(report.weights),
        "guarantee": report.guarantee,
        "flags": report.flags,
        "certificate": (
            certificate_to_dict(report.certificate)
            if report.certificate is not None
            else None
        ),
    }
    if include_timings:
        doc["timings_s"] = dict(report.stage_seconds)
    return doc


def dump_report(report: "SolutionReport", include_timings: bool = False) -> str:
    return dumps_canonical(report_to_dict(report, include_timings))


def verify_result_to_dict(result: "VerifyResult", members: Iterable[int]) -> dict:
    violation = None
    if result.connectivity_violation is not None:
        v = result.connectivity_violation
        violation = {
            "pair": list(v.pair) if v.pair is not None else None,
            "separator": list(v.separator),
            "direct_edge": v.direct_edge,
            "paths_found": v.value,
            "too_small": v.too_small,
        }
    return {
        "kind": "kmcds-verify",
        "schema_version": SCHEMA_VERSION,
        "members": sorted(members),
        "feasible": result.feasible,
        "domination_ok": result.domination_ok,
        "domination_violations": [
            [v, c] for v, c in sorted(result.domination_violations.items())
        ],
        "connectivity_ok": result.connectivity_ok,
        "connectivity_violation": violation,
        "certificate": (
            certificate_to_dict(result.certificate)
            if result.certificate is not None
            else None
        ),
    }
