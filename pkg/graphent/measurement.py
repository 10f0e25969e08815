import logging
import math
from dataclasses import dataclass, field
from typing import Dict, Tuple

from .entanglement import entanglement_from_bloch
from .graphstate import build_graph_state
from .simulator import Axis, BlochVector, ShotCounts
from .simulator import apply_rx, apply_ry, sample_qubit
from .simulator.statevector import SEED_MASK


DEFAULT_SHOTS = 8192

# Each basis draws from its own stream: seed XOR a fixed constant.
SUBSEED_CONSTANTS = {
    Axis.X: 0x0,
    Axis.Y: 0x9E3779B97F4A7C15,
    Axis.Z: 0xD1B54A32D192ED03,
}

logger = logging.getLogger('graphent')


@dataclass(frozen=True)
class MeasurementEstimate():
    """Mean spin and entanglement estimated from simulated shots."""

    qubit: int
    bloch_estimate: BlochVector
    e_estimate: float
    stderr_e: float
    shots_per_basis: int
    seed: int
    readout_flip: float
    component_stderr: Tuple[float, float, float] = (0.0, 0.0, 0.0)
    counts: Dict[Axis, ShotCounts] = field(default_factory=dict, compare=False)

    def csv_fields(self):
        return [self.e_estimate, self.stderr_e, self.shots_per_basis,
                self.seed, self.readout_flip]

    def to_dict(self):
        return {
            "e_shots": self.e_estimate,
            "stderr": self.stderr_e,
            "bloch": list(self.bloch_estimate.as_tuple()),
            "shots": self.shots_per_basis,
            "seed": self.seed,
            "flip": self.readout_flip,
        }


def subseed(seed, axis):
    return (int(seed) & SEED_MASK) ^ SUBSEED_CONSTANTS[Axis(axis)]


def rotate_into_basis(state, l, axis):
    """Rotates qubit ``l`` so that a Z measurement reads out ``axis``.

    ⟨σˣ⟩ is read after RY(−π/2), ⟨σʸ⟩ after RX(π/2); Z needs nothing.
    """

    axis = Axis(axis)
    if axis is Axis.X:
        apply_ry(state, l, -math.pi / 2)
    elif axis is Axis.Y:
        apply_rx(state, l, math.pi / 2)
    return state


def propagate_stderr(components, shots):
    """Standard errors of the components and of E = ½(1 − ‖b‖).

    A ±1-valued component with mean m has variance (1 − m²)/shots. The
    error of E follows from the delta method on the Euclidean norm; at
    ‖b‖ = 0, where the derivative is undefined, ½·√(Σ var) is returned.

    :param components: The estimated Bloch components
    :type components: tuple of float
    :param shots: Shots per component
    :type shots: int
    :return: Per-component standard errors and the error of E
    :rtype: tuple
    """

    variances = [max(0.0, 1.0 - m * m) / shots for m in components]
    norm = math.sqrt(sum(m * m for m in components))
    if norm == 0.0:
        stderr_e = 0.5 * math.sqrt(sum(variances))
    else:
        stderr_e = 0.5 * math.sqrt(
            sum(m * m * v for m, v in zip(components, variances))) / norm
    return tuple(math.sqrt(v) for v in variances), stderr_e


def estimate_bloch(spec, l, shots, seed, readout_flip=0.0, prepared=None):
    """Estimates the mean spin of qubit ``l`` from computational-basis shots.

    Every basis measures its own copy of the graph state with its own
    ``shots`` shots and sub-seed; the component estimate is
    (n₀ − n₁)/shots.

    :param spec: The graph-state specification
    :type spec: GraphStateSpec
    :param l: The measured qubit
    :type l: int
    :param shots: Shots per basis
    :type shots: int
    :param seed: The base seed
    :type seed: int
    :param readout_flip: Readout flip probability in [0, 0.5], defaults to 0.0
    :type readout_flip: float, optional
    :param prepared: The graph state of ``spec`` if already built; left untouched
    :type prepared: StateVector, optional
    :raises ValueError: On invalid qubit, shots or probability, or a prepared
    state of the wrong size
    :rtype: MeasurementEstimate
    """

    spec.graph.check_vertex(l)
    if prepared is None:
        prepared = build_graph_state(spec)
    elif prepared.n_qubits != spec.n_qubits:
        raise ValueError(
            f"Prepared state has {prepared.n_qubits} qubit(s), spec has {spec.n_qubits}")

    counts = {}
    for axis in (Axis.X, Axis.Y, Axis.Z):
        state = rotate_into_basis(prepared.copy(), l, axis)
        counts[axis] = sample_qubit(state, l, shots, subseed(seed, axis), readout_flip)
        logger.debug(f"Qubit {l}, basis {axis.value}: {counts[axis].outcome_counts}")

    components = tuple(counts[axis].mean for axis in (Axis.X, Axis.Y, Axis.Z))
    bloch = BlochVector(*components)
    component_stderr, stderr_e = propagate_stderr(components, shots)

    return MeasurementEstimate(
        qubit=l,
        bloch_estimate=bloch,
        e_estimate=entanglement_from_bloch(bloch),
        stderr_e=stderr_e,
        shots_per_basis=shots,
        seed=int(seed),
        readout_flip=float(readout_flip),
        component_stderr=component_stderr,
        counts=counts)


def estimate_entanglement(spec, l, shots=DEFAULT_SHOTS, seed=0, readout_flip=0.0,
                          prepared=None):
    """Estimates E_l = ½(1 − min(1, ‖b‖)) through the mean-spin protocol.

    Costs 3 × ``shots`` simulated executions. Readout noise shrinks the
    measured Bloch vector, so the estimate is biased upwards when
    ``readout_flip`` > 0; no correction is applied.

    :rtype: MeasurementEstimate
    """

    estimate = estimate_bloch(spec, l, shots, seed, readout_flip, prepared)
    logger.debug(
        f"Qubit {l}: E = {estimate.e_estimate:.6f} ± {estimate.stderr_e:.6f} "
        f"({shots} shots per basis, flip {readout_flip})")
    return estimate
