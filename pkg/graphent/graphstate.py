import json
import logging
import math
from dataclasses import dataclass
from typing import Tuple

from .simulator import GateKind
from .simulator import init_zero, apply_ry, apply_rz, apply_cp, apply_gate
from .simulator.utils import format_amplitudes


logger = logging.getLogger('graphent')


@dataclass(frozen=True)
class GateRecord():
    """One gate of a circuit description."""

    kind: GateKind
    qubits: Tuple[int, ...]
    angle: float = 0.0

    def __post_init__(self):

        kind = GateKind(self.kind)
        object.__setattr__(self, "kind", kind)
        qubits = tuple(int(q) for q in self.qubits)
        object.__setattr__(self, "qubits", qubits)
        object.__setattr__(self, "angle", float(self.angle))

        if len(qubits) != kind.n_qubits:
            raise ValueError(
                f"{kind.value} records take {kind.n_qubits} qubit(s), got {list(qubits)}")
        if kind is GateKind.CP and qubits[0] == qubits[1]:
            raise ValueError(f"CP record needs two distinct qubits, got {list(qubits)}")

    def to_dict(self):
        return {"kind": self.kind.value, "q": list(self.qubits), "angle": self.angle}


@dataclass(frozen=True)
class CircuitDescription():
    """The ordered gate list preparing a graph state from |0…0⟩."""

    n_qubits: int
    gates: Tuple[GateRecord, ...] = ()

    def __post_init__(self):

        object.__setattr__(self, "gates", tuple(self.gates))
        for gate in self.gates:
            for q in gate.qubits:
                if not 0 <= q < self.n_qubits:
                    raise ValueError(
                        f"Gate {gate.kind.value} on qubit {q} outside {self.n_qubits} qubits")

    def count(self, kind):
        return sum(1 for gate in self.gates if gate.kind is GateKind(kind))


def prepare_initial(spec):
    """Prepares the separable state ⊗ₖ RZ(αₖ) RY(θₖ) |0⟩.

    The global phase e^{-iα/2} relating RZ RY |0⟩ to
    cos(θ/2)|0⟩ + e^{iα} sin(θ/2)|1⟩ is not tracked.

    :param spec: The graph-state specification
    :type spec: GraphStateSpec
    :rtype: StateVector
    """

    state = init_zero(spec.n_qubits)
    for k, init in enumerate(spec.inits):
        apply_ry(state, k, init.theta)
        apply_rz(state, k, init.alpha)
    return state


def build_graph_state(spec):
    """Builds |ψ_G⟩: the initial product state followed by one CP per edge.

    :param spec: The graph-state specification
    :type spec: GraphStateSpec
    :rtype: StateVector
    """

    state = prepare_initial(spec)
    for i, j, phi in spec.graph.edges:
        apply_cp(state, i, j, phi)

    if logger.isEnabledFor(logging.DEBUG):
        logger.debug(
            f"Built graph state with {len(spec.graph.edges)} CP gate(s)\n"
            + format_amplitudes(state.amplitudes, state.n_qubits))
    return state


def circuit_description(spec, use_hadamard=False):
    """Lists the gates that prepare the graph state of ``spec``.

    Each qubit gets RY(θ) then RZ(α); gates with a zero angle are left out.
    One CP follows for every edge with a non-zero weight, in ascending
    (i, j) order.

    :param spec: The graph-state specification
    :type spec: GraphStateSpec
    :param use_hadamard: Emit H instead of RY(π/2) for qubits with θ = π/2
    and α = 0, defaults to False
    :type use_hadamard: bool, optional
    :rtype: CircuitDescription
    """

    gates = []
    for k, init in enumerate(spec.inits):
        if use_hadamard and init.theta == math.pi / 2 and init.alpha == 0.0:
            gates.append(GateRecord(GateKind.H, (k,)))
            continue
        if init.theta != 0.0:
            gates.append(GateRecord(GateKind.RY, (k,), init.theta))
        if init.alpha != 0.0:
            gates.append(GateRecord(GateKind.RZ, (k,), init.alpha))

    for i, j, phi in spec.graph.edges:
        if phi != 0.0:
            gates.append(GateRecord(GateKind.CP, (i, j), phi))

    return CircuitDescription(spec.n_qubits, tuple(gates))


def replay_circuit(circuit):
    """Executes a circuit description on |0…0⟩."""

    state = init_zero(circuit.n_qubits)
    for gate in circuit.gates:
        apply_gate(state, gate.kind, gate.qubits, gate.angle)
    return state


def circuit_to_dict(circuit):
    return {"n": circuit.n_qubits, "gates": [gate.to_dict() for gate in circuit.gates]}


def circuit_to_json(circuit, indent=None):
    return json.dumps(circuit_to_dict(circuit), indent=indent)


def circuit_from_json(text):
    """Reads a circuit description written by circuit_to_json.

    :raises ValueError: On malformed documents
    :rtype: CircuitDescription
    """

    try:
        document = json.loads(text)
        gates = tuple(
            GateRecord(entry["kind"], tuple(entry["q"]), entry.get("angle", 0.0))
            for entry in document["gates"])
        return CircuitDescription(int(document["n"]), gates)
    except (KeyError, TypeError, json.JSONDecodeError) as e:
        raise ValueError(f"Malformed circuit description: {e}") from e
