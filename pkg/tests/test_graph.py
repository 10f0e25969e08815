import json
import math

import networkx as nx
import numpy as np
from pytest import mark
from pytest import raises
from hypothesis import given
from hypothesis import settings
from hypothesis import strategies as st

from graphent.graph import TWO_PI
from graphent.graph import SpecError
from graphent.graph import WeightedGraph
from graphent.graph import QubitInit
from graphent.graph import GraphStateSpec
from graphent.graph import wrap_angle
from graphent.graph import neighborhood
from graphent.graph import weighted_degree
from graphent.graph import parse_spec
from graphent.graph import dump_spec
from graphent.graph import load_spec
from graphent.graph import preset
from graphent.graph import random_spec


MAX_DOC = ('{"n":2,"qubits":[{"alpha":0,"theta":1.5707963},{"alpha":0,"theta":1.5707963}],'
           '"edges":[{"i":0,"j":1,"phi":3.1415927}]}')


def document(n=2, qubits=None, edges=None, **extra):
    if qubits is None:
        qubits = [{"alpha": 0, "theta": 0}] * n
    doc = {"n": n, "qubits": qubits, "edges": edges or []}
    doc.update(extra)
    return json.dumps(doc)


@mark.parametrize("value expected".split(),
                  ((0.0, 0.0),
                   (TWO_PI, 0.0),
                   (-1e-300, 0.0),
                   (7.0, 7.0 - TWO_PI),
                   (-math.pi / 2, 1.5 * math.pi)))
def test_wrap_angle(value, expected):
    wrapped = wrap_angle(value)
    assert 0.0 <= wrapped < TWO_PI
    assert math.isclose(wrapped, expected, abs_tol=1e-15)


@mark.parametrize("value", (math.inf, -math.inf, math.nan))
def test_wrap_angle_rejects_non_finite(value):
    with raises(SpecError):
        wrap_angle(value)


def test_edges_are_canonicalized():
    graph = WeightedGraph(4, ((3, 1, 1.0), (1, 0, -math.pi), (0, 2, 9.0)))

    assert [(e.i, e.j) for e in graph.edges] == [(0, 1), (0, 2), (1, 3)]
    assert graph.edges[0].phi == math.pi
    assert math.isclose(graph.edges[1].phi, 9.0 - TWO_PI)


@mark.parametrize("edges", (((0, 0, 1.0),),
                            ((0, 1, 1.0), (1, 0, 2.0)),
                            ((0, 3, 1.0),),
                            ((-1, 1, 1.0),),
                            ((True, 1, 1.0),),
                            ((0, 1, "pi"),),
                            ((0, 1, math.nan),),
                            ((0, 1),)))
def test_invalid_edges(edges):
    with raises(SpecError):
        WeightedGraph(3, edges)


@mark.parametrize("n", (0, -2, 1.0, True))
def test_invalid_vertex_count(n):
    with raises(SpecError):
        WeightedGraph(n)


def test_star_neighborhood():
    graph = WeightedGraph(4, ((0, 1, 1.0), (0, 2, 1.0), (0, 3, 1.0)))

    assert neighborhood(graph, 0) == {1, 2, 3}
    assert neighborhood(graph, 2) == {0}
    assert graph.degree(0) == 3


def test_isolated_vertex():
    graph = WeightedGraph(3)

    assert neighborhood(graph, 0) == frozenset()
    assert weighted_degree(graph, 0) == 0.0


def test_weighted_degree():
    graph = WeightedGraph(3, ((0, 1, math.pi), (0, 2, math.pi / 2)))

    assert weighted_degree(graph, 0) == 1.5 * math.pi
    assert weighted_degree(graph, 1) == math.pi


@mark.parametrize("vertex", (-1, 3, 1.0, None))
def test_vertex_out_of_range(vertex):
    graph = WeightedGraph(3)
    with raises(ValueError):
        neighborhood(graph, vertex)
    with raises(ValueError):
        weighted_degree(graph, vertex)


@settings(max_examples=50, deadline=None)
@given(st.integers(min_value=1, max_value=9), st.integers(min_value=0, max_value=2 ** 32))
def test_neighborhoods_are_symmetric_and_sum_weights(n, seed):
    graph = random_spec(n, seed=seed).graph

    for i in range(n):
        weights = graph.incident_weights(i)
        assert set(weights) == neighborhood(graph, i)
        assert math.isclose(weighted_degree(graph, i), math.fsum(weights.values()))
        for j in neighborhood(graph, i):
            assert i in neighborhood(graph, j)


def test_qubit_init_wraps_alpha():
    init = QubitInit(alpha=-math.pi / 2, theta=math.pi)
    assert init.alpha == 1.5 * math.pi
    assert init.theta == math.pi


@mark.parametrize("theta", (-1e-9, math.pi + 1e-9, 4.0, math.inf))
def test_qubit_init_rejects_theta(theta):
    with raises(SpecError):
        QubitInit(alpha=0.0, theta=theta)


def test_spec_needs_one_init_per_vertex():
    with raises(SpecError):
        GraphStateSpec(WeightedGraph(3), (QubitInit(),) * 2)


def test_parse_max_document():
    spec = parse_spec(MAX_DOC)

    assert spec.n_qubits == 2
    assert spec.thetas == (1.5707963, 1.5707963)
    assert spec.alphas == (0.0, 0.0)
    assert spec.graph.edges == ((0, 1, 3.1415927),)


def test_parse_single_qubit():
    spec = parse_spec('{"n":1,"qubits":[{"alpha":0,"theta":0}],"edges":[]}')

    assert spec.n_qubits == 1
    assert spec.graph.edges == ()


def test_parse_scientific_notation():
    spec = parse_spec(document(edges=[{"i": 1, "j": 0, "phi": 3.14e0}]))
    assert spec.graph.edges[0].phi == 3.14


@mark.parametrize("text", (
    document(edges=[{"i": 0, "j": 0, "phi": 1.0}]),
    document(edges=[{"i": 0, "j": 1, "phi": 1.0}, {"i": 1, "j": 0, "phi": 1.0}]),
    document(edges=[{"i": 0, "j": 2, "phi": 1.0}]),
    document(edges=[{"i": 0, "j": 1}]),
    document(edges=[{"i": 0, "j": 1, "phi": 1.0, "weight": 2}]),
    document(qubits=[{"alpha": 0, "theta": 4.0}, {"alpha": 0, "theta": 0}]),
    document(qubits=[{"alpha": 0}, {"alpha": 0, "theta": 0}]),
    document(qubits=[{"alpha": 0, "theta": 0}]),
    document(qubits=[{"alpha": 0, "theta": "0"}, {"alpha": 0, "theta": 0}]),
    document(comment="unknown"),
    document(n=True, qubits=[{"alpha": 0, "theta": 0}]),
    '{"n":1,"qubits":[{"alpha":NaN,"theta":0}],"edges":[]}',
    '{"n":1,"qubits":[{"alpha":0,"theta":0}],"edges":[]',
    '[1, 2]',
    '{"n":1,"qubits":[{"alpha":0,"theta":0}]}',
))
def test_parse_rejects(text):
    with raises(SpecError):
        parse_spec(text)


def test_spec_error_is_value_error():
    assert issubclass(SpecError, ValueError)


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=1, max_value=8), st.integers(min_value=0, max_value=2 ** 32))
def test_reserialized_spec_parses_identically(n, seed):
    spec = random_spec(n, seed=seed)

    once = parse_spec(dump_spec(spec))
    twice = parse_spec(dump_spec(once))

    assert once == spec
    assert twice == once


def test_load_spec(tmp_path):
    path = tmp_path / "max.json"
    path.write_text(MAX_DOC, encoding="utf-8")

    assert load_spec(str(path)) == parse_spec(MAX_DOC)


def test_load_missing_spec(tmp_path):
    with raises(OSError):
        load_spec(str(tmp_path / "missing.json"))


@mark.parametrize("name n edges".split(),
                  (("edgeless", 3, 0),
                   ("path", 4, 3),
                   ("cycle", 4, 4),
                   ("star", 5, 4),
                   ("complete", 4, 6),
                   ("two-qubit", 2, 1)))
def test_presets(name, n, edges):
    spec = preset(name, n, theta=math.pi / 3, phi=math.pi / 2, alpha=1.0)

    assert spec.n_qubits == n
    assert len(spec.graph.edges) == edges
    assert all(e.phi == math.pi / 2 for e in spec.graph.edges)
    assert spec.thetas == (math.pi / 3,) * n
    assert spec.alphas == (1.0,) * n


def test_star_centre_is_vertex_zero():
    spec = preset("star", 5)
    assert neighborhood(spec.graph, 0) == {1, 2, 3, 4}


@mark.parametrize("name n".split(), (("cycle", 2), ("two-qubit", 3), ("star", 1),
                                     ("wheel", 4), ("path", 0)))
def test_invalid_presets(name, n):
    with raises(SpecError):
        preset(name, n)


def test_random_spec_is_seeded():
    first = random_spec(6, seed=11)

    assert random_spec(6, seed=11) == first
    assert random_spec(6, seed=12) != first
    assert all(0.0 <= theta <= math.pi for theta in first.thetas)
    assert all(0.0 <= alpha < TWO_PI for alpha in first.alphas)


def test_networkx_export():
    graph = WeightedGraph(3, ((0, 1, 0.5), (1, 2, 1.5)))
    exported = graph.to_networkx()

    assert sorted(exported.nodes) == [0, 1, 2]
    assert exported.edges[0, 1]["phi"] == 0.5
    assert WeightedGraph.from_networkx(exported) == graph


def test_networkx_import_with_uniform_weight():
    graph = WeightedGraph.from_networkx(nx.complete_graph(4), phi=np.pi)

    assert len(graph.edges) == 6
    assert {e.phi for e in graph.edges} == {math.pi}
