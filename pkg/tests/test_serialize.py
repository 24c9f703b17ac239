"""JSON round-trips and rejection of malformed documents."""

import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kmcds import (
    Instance,
    dump_instance,
    dump_report,
    gen_gnp,
    gen_unit_disk,
    load_instance,
    solve_general,
    verify_solution,
)
from kmcds.errors import ParseError
from kmcds.serialize import verify_result_to_dict

from toolbox import cycle_graph, inst


def _doc(**overrides):
    base = {
        "kind": "kmcds-instance",
        "schema_version": 1,
        "k": 1,
        "m": 1,
        "weight_denominator": 1,
        "nodes": [{"id": 0, "weight": 2}, {"id": 1, "weight": 3}],
        "edges": [[0, 1]],
    }
    base.update(overrides)
    return base


def test_general_round_trip_is_byte_exact():
    instance = gen_gnp(9, 0.4, (0, 12), seed=4, k=2, m=2)
    text = dump_instance(instance)
    again = load_instance(text)
    assert dump_instance(again) == text
    assert again.graph.edges == instance.graph.edges
    assert again.graph.weights == instance.graph.weights


def test_disk_round_trip_keeps_exact_geometry():
    instance = gen_unit_disk(8, Fraction(2, 5), (1, 9), seed=9, k=1, m=1)
    again = load_instance(dump_instance(instance))
    assert again.coords == instance.coords
    assert again.radius == instance.radius
    assert again.graph.edges == instance.graph.edges


@given(st.integers(0, 2**32 - 1))
def test_round_trip_property(seed):
    instance = gen_gnp(seed % 10 + 1, 0.5, (0, 20), seed=seed)
    text = dump_instance(instance)
    assert dump_instance(load_instance(text)) == text


def test_denominator_survives():
    instance = Instance.general(2, [(0, 1)], [5, 7], 1, 1, denominator=10)
    again = load_instance(dump_instance(instance))
    assert again.weight_denominator == 10
    assert again.graph.weights == {0: 5, 1: 7}  # stored scaled, never divided


def test_json_errors_carry_position():
    with pytest.raises(ParseError, match=r"line 2, column"):
        load_instance('{\n  "kind": }')


def test_malformed_documents_are_rejected():
    cases = [
        ("[1, 2]", "object"),
        (_doc(kind="other"), "kind"),
        (_doc(schema_version=2), "schema_version"),
        (_doc(k="1"), "wrong type"),
        (_doc(m=True), "wrong type"),
        (_doc(weight_denominator=0), "positive"),
        (_doc(nodes=[{"id": 0, "weight": 1}, {"id": 0, "weight": 1}]), "duplicate"),
        (_doc(nodes=[{"id": 0, "weight": 1}, {"id": 5, "weight": 1}]), "dense"),
        (_doc(nodes=[{"id": 0, "weight": 1, "x": "1/2"}, {"id": 1, "weight": 1}]), "one coordinate"),
        (_doc(edges=[[0]]), "bad edge"),
        (_doc(edges=[[0, "1"]]), "bad edge"),
        (_doc(edges=[[0, 1], [0, 1]]), "duplicate"),
        (_doc(edges=[[0, 0]]), "loop"),
        (_doc(edges=[[0, 7]]), None),
        (_doc(radius="1/2"), "together"),
        (_doc(nodes=[{"id": 0, "weight": -1}, {"id": 1, "weight": 1}]), None),
        (_doc(k=0), None),
        (_doc(m=0), None),
    ]
    for doc, fragment in cases:
        text = doc if isinstance(doc, str) else json.dumps(doc)
        with pytest.raises(ParseError, match=fragment):
            load_instance(text)


def test_bad_fraction_is_a_parse_error():
    doc = _doc(
        radius="1/0",
        nodes=[
            {"id": 0, "weight": 1, "x": "0", "y": "0"},
            {"id": 1, "weight": 1, "x": "1/2", "y": "0"},
        ],
    )
    with pytest.raises(ParseError, match="bad fraction"):
        load_instance(json.dumps(doc))


def test_geometric_edges_must_match_the_radius():
    doc = _doc(
        radius="1/4",
        nodes=[
            {"id": 0, "weight": 1, "x": "0", "y": "0"},
            {"id": 1, "weight": 1, "x": "1/2", "y": "0"},
        ],
        edges=[[0, 1]],  # too far apart for radius 1/4
    )
    with pytest.raises(ParseError, match="disagrees"):
        load_instance(json.dumps(doc))


def test_report_document_shape():
    instance = inst(cycle_graph(5), 2, 2)
    report = solve_general(instance)
    doc = json.loads(dump_report(report))
    assert doc["kind"] == "kmcds-report"
    assert doc["schema_version"] == 1
    assert doc["sets"]["solution"] == [0, 1, 2, 3, 4]
    assert doc["weights"]["total"] == 5
    assert doc["instance"] == {
        "n": 5,
        "edges": 5,
        "k": 2,
        "m": 2,
        "weight_denominator": 1,
    }
    assert doc["certificate"]["members"] == [0, 1, 2, 3, 4]
    assert all(count >= 2 for _, count in doc["certificate"]["domination"])
    assert "timings_s" not in doc


def test_verify_document_shape():
    instance = inst(cycle_graph(5), 1, 1)
    good = verify_result_to_dict(verify_solution(instance, [0, 1, 2]), [0, 1, 2])
    assert good["feasible"] is True
    assert good["domination_violations"] == []
    assert good["certificate"]["members"] == [0, 1, 2]

    bad = verify_result_to_dict(verify_solution(instance, [0, 2]), [0, 2])
    assert bad["feasible"] is False
    assert bad["connectivity_violation"]["separator"] == []
    assert bad["certificate"] is None
