import json
import math
from dataclasses import dataclass, field
from typing import FrozenSet, NamedTuple, Tuple

import networkx as nx
import numpy as np


TWO_PI = 2 * math.pi

SPEC_KEYS = frozenset(("n", "qubits", "edges"))
QUBIT_KEYS = frozenset(("alpha", "theta"))
EDGE_KEYS = frozenset(("i", "j", "phi"))


class SpecError(ValueError):
    """Raised on any invalid graph-state specification."""


def wrap_angle(value):
    """Wraps an angle into [0, 2π).

    :param value: An angle in radians
    :type value: float
    :raises SpecError: If the value is not a finite number
    :return: The equivalent angle in [0, 2π)
    :rtype: float
    """

    value = float(value)
    if not math.isfinite(value):
        raise SpecError(f"Angle must be finite, got {value}")
    wrapped = value % TWO_PI
    # Tiny negative inputs round up to exactly 2π
    if wrapped >= TWO_PI:
        wrapped = 0.0
    return wrapped


def _is_number(value):
    return isinstance(value, (int, float)) and not isinstance(value, bool)


def _is_index(value):
    return isinstance(value, int) and not isinstance(value, bool)


class Edge(NamedTuple):

    i: int
    j: int
    phi: float


@dataclass(frozen=True)
class WeightedGraph():
    """An undirected graph whose edge weights are controlled-phase angles.

    Vertices are the integers 0 .. n_vertices - 1 and stand for qubits.
    Edges are canonicalized on construction: ``i < j``, weights wrapped
    into [0, 2π), sorted ascending by ``(i, j)``.
    """

    n_vertices: int
    edges: Tuple[Edge, ...] = ()
    _adjacency: dict = field(default=None, init=False, repr=False, compare=False)

    def __post_init__(self):

        if not _is_index(self.n_vertices) or self.n_vertices < 1:
            raise SpecError(
                f"Vertex count must be a positive integer, got {self.n_vertices!r}")

        canonical = {}
        for edge in self.edges:
            try:
                i, j, phi = edge
            except (TypeError, ValueError):
                raise SpecError(f"Edge must be an (i, j, phi) triple, got {edge!r}")
            for index in (i, j):
                if not _is_index(index):
                    raise SpecError(f"Vertex index must be an integer, got {index!r}")
                if not 0 <= index < self.n_vertices:
                    raise SpecError(
                        f"Vertex index {index} out of range for {self.n_vertices} vertices")
            if i == j:
                raise SpecError(f"Self-loop on vertex {i}")
            if not _is_number(phi):
                raise SpecError(f"Edge weight must be a number, got {phi!r}")
            key = (min(i, j), max(i, j))
            if key in canonical:
                raise SpecError(f"Duplicate edge {key}")
            canonical[key] = Edge(key[0], key[1], wrap_angle(phi))

        object.__setattr__(self, "edges", tuple(canonical[key] for key in sorted(canonical)))

        adjacency = {vertex: {} for vertex in range(self.n_vertices)}
        for i, j, phi in self.edges:
            adjacency[i][j] = phi
            adjacency[j][i] = phi
        object.__setattr__(self, "_adjacency", adjacency)

    def check_vertex(self, vertex):
        """Validates a vertex index.

        :param vertex: A vertex index
        :type vertex: int
        :raises ValueError: If the index is not a vertex of this graph
        """

        if not _is_index(vertex) or not 0 <= vertex < self.n_vertices:
            raise ValueError(
                f"Vertex index {vertex!r} out of range for {self.n_vertices} vertices")

    def neighborhood(self, vertex) -> FrozenSet[int]:
        self.check_vertex(vertex)
        return frozenset(self._adjacency[vertex])

    def incident_weights(self, vertex):
        """Maps every neighbour of ``vertex`` to the weight of the joining edge."""

        self.check_vertex(vertex)
        return dict(self._adjacency[vertex])

    def degree(self, vertex):
        self.check_vertex(vertex)
        return len(self._adjacency[vertex])

    def weighted_degree(self, vertex):
        self.check_vertex(vertex)
        return math.fsum(self._adjacency[vertex].values())

    def to_networkx(self):
        """Exports the graph with the edge weights stored under ``phi``.

        :rtype: networkx.Graph
        """

        graph = nx.Graph()
        graph.add_nodes_from(range(self.n_vertices))
        graph.add_weighted_edges_from(self.edges, weight="phi")
        return graph

    @classmethod
    def from_networkx(cls, graph, phi=None, weight="phi"):
        """Builds a weighted graph from a networkx graph.

        Nodes must be labelled 0 .. N - 1.

        :param graph: The source graph
        :type graph: networkx.Graph
        :param phi: A uniform weight applied to every edge; when None the
        ``weight`` edge attribute is used
        :type phi: float, optional
        :param weight: The edge attribute holding the weight, defaults to "phi"
        :type weight: str, optional
        :rtype: WeightedGraph
        """

        edges = []
        for i, j, data in graph.edges(data=True):
            edges.append((i, j, phi if phi is not None else data[weight]))
        return cls(graph.number_of_nodes(), tuple(edges))


@dataclass(frozen=True)
class QubitInit():
    """Initial one-qubit state cos(θ/2)|0⟩ + e^{iα} sin(θ/2)|1⟩."""

    alpha: float = 0.0
    theta: float = 0.0

    def __post_init__(self):

        if not _is_number(self.alpha) or not _is_number(self.theta):
            raise SpecError(
                f"alpha and theta must be numbers, got {self.alpha!r}, {self.theta!r}")
        object.__setattr__(self, "alpha", wrap_angle(self.alpha))
        theta = float(self.theta)
        if not math.isfinite(theta) or not 0.0 <= theta <= math.pi:
            raise SpecError(f"theta must lie in [0, π], got {theta}")
        object.__setattr__(self, "theta", theta)


@dataclass(frozen=True)
class GraphStateSpec():
    """A weighted graph together with the initial state of every qubit."""

    graph: WeightedGraph
    inits: Tuple[QubitInit, ...]

    def __post_init__(self):

        if not isinstance(self.graph, WeightedGraph):
            raise SpecError("graph must be a WeightedGraph")
        inits = tuple(self.inits)
        if len(inits) != self.graph.n_vertices:
            raise SpecError(
                f"Expected {self.graph.n_vertices} qubit entries, got {len(inits)}")
        for init in inits:
            if not isinstance(init, QubitInit):
                raise SpecError(f"Expected QubitInit, got {init!r}")
        object.__setattr__(self, "inits", inits)

    @property
    def n_qubits(self):
        return self.graph.n_vertices

    @property
    def thetas(self):
        return tuple(init.theta for init in self.inits)

    @property
    def alphas(self):
        return tuple(init.alpha for init in self.inits)

    @classmethod
    def uniform(cls, graph, theta, alpha=0.0):
        """Prepares every qubit of ``graph`` in the same initial state."""

        init = QubitInit(alpha=alpha, theta=theta)
        return cls(graph, (init,) * graph.n_vertices)

    def replace_inits(self, inits):
        return GraphStateSpec(self.graph, tuple(inits))

    def replace_graph(self, graph):
        return GraphStateSpec(graph, self.inits)


def neighborhood(graph, l):
    """The set of vertices adjacent to ``l``."""

    return graph.neighborhood(l)


def weighted_degree(graph, l):
    """The sum of the weights of all edges incident to ``l``."""

    return graph.weighted_degree(l)


def _reject_constant(name):
    raise SpecError(f"Non-finite number {name} is not allowed")


def _check_keys(obj, expected, what):

    if not isinstance(obj, dict):
        raise SpecError(f"{what} must be a JSON object")
    missing = expected - obj.keys()
    if missing:
        raise SpecError(f"{what} is missing field(s): {', '.join(sorted(missing))}")
    unknown = obj.keys() - expected
    if unknown:
        raise SpecError(f"{what} has unknown field(s): {', '.join(sorted(unknown))}")


def parse_spec(text):
    """Parses a graph-state specification document.

    The document format is::

        {"n": 2,
         "qubits": [{"alpha": 0, "theta": 1.5707963}, ...],
         "edges": [{"i": 0, "j": 1, "phi": 3.1415927}, ...]}

    :param text: The JSON document
    :type text: str
    :raises SpecError: On malformed documents and invariant violations
    :return: The validated specification
    :rtype: GraphStateSpec
    """

    try:
        document = json.loads(text, parse_constant=_reject_constant)
    except json.JSONDecodeError as e:
        raise SpecError(f"Malformed spec document: {e}") from e

    _check_keys(document, SPEC_KEYS, "spec")

    n = document["n"]
    if not _is_index(n) or n < 1:
        raise SpecError(f"'n' must be a positive integer, got {n!r}")

    qubits = document["qubits"]
    if not isinstance(qubits, list):
        raise SpecError("'qubits' must be a list")
    if len(qubits) != n:
        raise SpecError(f"'qubits' has {len(qubits)} entries, expected {n}")
    inits = []
    for position, qubit in enumerate(qubits):
        _check_keys(qubit, QUBIT_KEYS, f"qubit {position}")
        inits.append(QubitInit(alpha=qubit["alpha"], theta=qubit["theta"]))

    edges = document["edges"]
    if not isinstance(edges, list):
        raise SpecError("'edges' must be a list")
    triples = []
    for position, edge in enumerate(edges):
        _check_keys(edge, EDGE_KEYS, f"edge {position}")
        triples.append((edge["i"], edge["j"], edge["phi"]))

    return GraphStateSpec(WeightedGraph(n, tuple(triples)), tuple(inits))


def spec_to_dict(spec):

    return {
        "n": spec.n_qubits,
        "qubits": [{"alpha": init.alpha, "theta": init.theta} for init in spec.inits],
        "edges": [{"i": e.i, "j": e.j, "phi": e.phi} for e in spec.graph.edges],
    }


def dump_spec(spec, indent=None):
    """Serializes a specification to the document format read by parse_spec.

    Floats are written with full ``repr`` precision so the document parses
    back to an identical specification.
    """

    return json.dumps(spec_to_dict(spec), indent=indent)


def load_spec(path):
    """Reads and parses a UTF-8 specification file.

    :raises OSError: If the file cannot be read
    :raises SpecError: If the document is invalid
    """

    with open(path, "r", encoding="utf-8") as f:
        return parse_spec(f.read())


def _two_qubit_graph(n):
    if n != 2:
        raise SpecError("The two-qubit preset has exactly 2 qubits")
    return nx.path_graph(2)


def _cycle_graph(n):
    if n < 3:
        raise SpecError("A cycle needs at least 3 vertices")
    return nx.cycle_graph(n)


def _star_graph(n):
    if n < 2:
        raise SpecError("A star needs at least 2 vertices")
    # Centre is vertex 0
    return nx.star_graph(n - 1)


PRESETS = {
    "edgeless": nx.empty_graph,
    "path": nx.path_graph,
    "cycle": _cycle_graph,
    "star": _star_graph,
    "complete": nx.complete_graph,
    "two-qubit": _two_qubit_graph,
}


def preset(name, n=2, theta=math.pi / 2, phi=math.pi, alpha=0.0):
    """Builds a uniform specification on a named graph family.

    Every qubit starts in the same state (theta, alpha) and every edge
    carries the same weight phi. ``preset("two-qubit")`` is the maximally
    entangled state CZ H H |00⟩.

    :param name: One of the keys of PRESETS
    :type name: str
    :param n: The number of vertices, defaults to 2
    :type n: int, optional
    :raises SpecError: On unknown names or unsupported sizes
    :rtype: GraphStateSpec
    """

    if name not in PRESETS:
        raise SpecError(
            f"Unknown preset {name!r}, expected one of: {', '.join(sorted(PRESETS))}")
    if not _is_index(n) or n < 1:
        raise SpecError(f"Vertex count must be a positive integer, got {n!r}")
    graph = WeightedGraph.from_networkx(PRESETS[name](n), phi=phi)
    return GraphStateSpec.uniform(graph, theta, alpha=alpha)


def random_spec(n, edge_probability=0.5, seed=None):
    """Draws a random specification.

    Edges follow an Erdős–Rényi model; α and φ are uniform on [0, 2π),
    θ is uniform on [0, π]. Deterministic for a given seed.

    :param n: The number of qubits
    :type n: int
    :param edge_probability: Probability of each edge, defaults to 0.5
    :type edge_probability: float, optional
    :param seed: Seed for numpy.random.default_rng, defaults to None
    :type seed: int, optional
    :rtype: GraphStateSpec
    """

    rng = np.random.default_rng(seed)
    topology = nx.gnp_random_graph(
        n, edge_probability, seed=int(rng.integers(2 ** 31)))
    pairs = sorted(tuple(sorted(edge)) for edge in topology.edges())
    phis = rng.uniform(0.0, TWO_PI, size=len(pairs))
    alphas = rng.uniform(0.0, TWO_PI, size=n)
    thetas = rng.uniform(0.0, math.pi, size=n)

    graph = WeightedGraph(
        n, tuple((i, j, float(phi)) for (i, j), phi in zip(pairs, phis)))
    inits = tuple(
        QubitInit(alpha=float(a), theta=float(t)) for a, t in zip(alphas, thetas))
    return GraphStateSpec(graph, inits)
