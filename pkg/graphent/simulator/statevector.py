import cmath
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict

import numpy as np

from .utils import qubit_view, pair_view


SEED_MASK = (1 << 64) - 1
NORM_TOLERANCE = 1e-12

_INV_SQRT2 = 1 / math.sqrt(2)
HADAMARD = np.array([[_INV_SQRT2, _INV_SQRT2], [_INV_SQRT2, -_INV_SQRT2]], dtype=complex)

logger = logging.getLogger('graphent')


class Axis(Enum):
    """Pauli measurement axes."""

    X = 'x'
    Y = 'y'
    Z = 'z'


class GateKind(Enum):
    """Gate kinds understood by apply_gate and circuit descriptions."""

    RY = 'RY'
    RZ = 'RZ'
    RX = 'RX'
    H = 'H'
    CP = 'CP'

    @property
    def n_qubits(self):
        return 2 if self is GateKind.CP else 1


class StateVector():
    """A dense pure state of N qubits.

    Amplitudes are double-precision complex numbers; qubit q is bit q of
    the amplitude index. A StateVector is mutated in place by the gate
    kernels and must not be shared between writers.
    """

    MAX_QUBITS = 24

    def __init__(self, n_qubits, amplitudes):

        self.n_qubits = n_qubits
        self.amplitudes = amplitudes

    @classmethod
    def zero(cls, n_qubits):

        if (not isinstance(n_qubits, int) or isinstance(n_qubits, bool)
                or not 1 <= n_qubits <= cls.MAX_QUBITS):
            raise ValueError(
                f"Qubit count must be in [1, {cls.MAX_QUBITS}], got {n_qubits!r}")
        amplitudes = np.zeros(1 << n_qubits, dtype=np.complex128)
        amplitudes[0] = 1.0
        logger.debug(f"Allocated {n_qubits}-qubit state ({amplitudes.nbytes} bytes)")
        return cls(n_qubits, amplitudes)

    @classmethod
    def from_amplitudes(cls, amplitudes):
        """Wraps a copy of an existing amplitude array.

        :param amplitudes: 2^N amplitudes of unit norm
        :type amplitudes: array_like
        :raises ValueError: If the length is not a power of two or the
        norm differs from 1
        :rtype: StateVector
        """

        amplitudes = np.array(amplitudes, dtype=np.complex128).ravel()
        size = amplitudes.size
        n_qubits = size.bit_length() - 1
        if size < 2 or size != 1 << n_qubits or n_qubits > cls.MAX_QUBITS:
            raise ValueError(f"Amplitude count {size} is not 2^N for 1 <= N <= 24")
        state = cls(n_qubits, amplitudes)
        if abs(state.norm() - 1.0) > 1e-10:
            raise ValueError(f"Amplitudes are not normalized (norm {state.norm()})")
        return state

    def copy(self):
        return StateVector(self.n_qubits, self.amplitudes.copy())

    def norm(self):
        return float(np.linalg.norm(self.amplitudes))

    def probabilities(self):
        return np.abs(self.amplitudes) ** 2

    def check_qubit(self, qubit):

        if (not isinstance(qubit, (int, np.integer)) or isinstance(qubit, bool)
                or not 0 <= qubit < self.n_qubits):
            raise ValueError(
                f"Qubit index {qubit!r} out of range for {self.n_qubits} qubits")

    def __repr__(self):
        return f"StateVector(n_qubits={self.n_qubits})"


@dataclass(frozen=True)
class BlochVector():
    """Mean spin (⟨σˣ⟩, ⟨σʸ⟩, ⟨σᶻ⟩) of one qubit."""

    x: float
    y: float
    z: float

    def __post_init__(self):

        for name in ("x", "y", "z"):
            value = getattr(self, name)
            if not -1.0 - NORM_TOLERANCE <= value <= 1.0 + NORM_TOLERANCE:
                raise ValueError(f"Bloch component {name}={value} outside [-1, 1]")

    @property
    def magnitude(self):
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def as_tuple(self):
        return (self.x, self.y, self.z)


@dataclass(frozen=True)
class ShotCounts():
    """Computational-basis outcome counts of one qubit."""

    outcome_counts: Dict[int, int]
    shots: int
    seed: int
    readout_flip: float = 0.0

    @property
    def mean(self):
        """The ±1 eigenvalue average (n0 - n1) / shots."""

        return (self.outcome_counts[0] - self.outcome_counts[1]) / self.shots


def _apply_single(state, qubit, matrix):

    state.check_qubit(qubit)
    view = qubit_view(state.amplitudes, state.n_qubits, qubit)
    low = view[:, 0, :].copy()
    high = view[:, 1, :]
    new_low = matrix[0][0] * low + matrix[0][1] * high
    view[:, 1, :] = matrix[1][0] * low + matrix[1][1] * high
    view[:, 0, :] = new_low
    return state


def _apply_diagonal(state, qubit, d0, d1):

    state.check_qubit(qubit)
    view = qubit_view(state.amplitudes, state.n_qubits, qubit)
    view[:, 0, :] *= d0
    view[:, 1, :] *= d1
    return state


def init_zero(n):
    """The state |0…0⟩ of ``n`` qubits."""

    return StateVector.zero(n)


def apply_ry(state, q, theta):
    c, s = math.cos(theta / 2), math.sin(theta / 2)
    return _apply_single(state, q, ((c, -s), (s, c)))


def apply_rz(state, q, alpha):
    return _apply_diagonal(state, q, cmath.exp(-0.5j * alpha), cmath.exp(0.5j * alpha))


def apply_rx(state, q, beta):
    c, s = math.cos(beta / 2), math.sin(beta / 2)
    return _apply_single(state, q, ((c, -1j * s), (-1j * s, c)))


def apply_h(state, q):
    return _apply_single(state, q, HADAMARD)


def apply_cp(state, i, j, phi):
    """Applies the controlled phase shift CP(φ) to qubits i and j.

    Every amplitude whose index has both bit i and bit j set is multiplied
    by e^{iφ}. The gate is diagonal, hence symmetric in i and j.

    :param state: The state, modified in place
    :type state: StateVector
    :param i: The control qubit
    :type i: int
    :param j: The target qubit
    :type j: int
    :param phi: The phase in radians
    :type phi: float
    :raises ValueError: On out-of-range or equal qubit indices
    :return: The same state
    :rtype: StateVector
    """

    state.check_qubit(i)
    state.check_qubit(j)
    if i == j:
        raise ValueError(f"CP needs two distinct qubits, got {i} twice")
    view = pair_view(state.amplitudes, state.n_qubits, i, j)
    view[:, 1, :, 1, :] *= cmath.exp(1j * phi)
    return state


def apply_gate(state, kind, qubits, angle=0.0):
    """Dispatches one gate record onto the matching kernel.

    :param kind: The gate kind
    :type kind: GateKind
    :param qubits: One qubit index, or two for CP
    :type qubits: sequence of int
    :param angle: The rotation or phase angle, ignored for H
    :type angle: float, optional
    """

    kind = GateKind(kind)
    if len(qubits) != kind.n_qubits:
        raise ValueError(f"{kind.value} acts on {kind.n_qubits} qubit(s), got {list(qubits)}")

    if kind is GateKind.RY:
        return apply_ry(state, qubits[0], angle)
    elif kind is GateKind.RZ:
        return apply_rz(state, qubits[0], angle)
    elif kind is GateKind.RX:
        return apply_rx(state, qubits[0], angle)
    elif kind is GateKind.H:
        return apply_h(state, qubits[0])
    return apply_cp(state, qubits[0], qubits[1], angle)


def reduced_density(state, q):
    """The 2×2 reduced density matrix of qubit ``q``.

    :return: Hermitian matrix with unit trace
    :rtype: numpy.ndarray
    """

    state.check_qubit(q)
    view = qubit_view(state.amplitudes, state.n_qubits, q)
    low = view[:, 0, :]
    high = view[:, 1, :]
    p0 = np.vdot(low, low).real
    p1 = np.vdot(high, high).real
    coherence = np.vdot(high, low)
    return np.array([[p0, coherence], [np.conj(coherence), p1]], dtype=np.complex128)


def expectation_pauli(state, q, axis):
    """⟨ψ|σ^axis_q|ψ⟩ for one qubit.

    :param axis: Axis.X, Axis.Y, Axis.Z or their string values
    :type axis: Axis or str
    :rtype: float
    """

    axis = Axis(axis)
    rho = reduced_density(state, q)
    if axis is Axis.X:
        value = 2.0 * rho[0, 1].real
    elif axis is Axis.Y:
        value = -2.0 * rho[0, 1].imag
    else:
        value = rho[0, 0].real - rho[1, 1].real
    return float(min(1.0, max(-1.0, value)))


def bloch_vector(state, q):

    rho = reduced_density(state, q)
    components = (
        2.0 * rho[0, 1].real,
        -2.0 * rho[0, 1].imag,
        rho[0, 0].real - rho[1, 1].real,
    )
    return BlochVector(*(float(min(1.0, max(-1.0, c))) for c in components))


def largest_eigenvalue(rho):
    """λ_max of a 2×2 Hermitian matrix from its trace and determinant."""

    trace = rho[0, 0].real + rho[1, 1].real
    spread = (rho[0, 0].real - rho[1, 1].real) ** 2 + 4.0 * abs(rho[0, 1]) ** 2
    return float(0.5 * (trace + math.sqrt(spread)))


def sample_qubit(state, q, shots, seed, readout_flip=0.0):
    """Simulates computational-basis measurements of one qubit.

    The number of 1 outcomes among ``shots`` independent draws is binomial
    in the marginal p(1); readout noise then flips each recorded outcome
    independently with probability ``readout_flip``.

    :param state: The state to sample (left untouched)
    :type state: StateVector
    :param q: The measured qubit
    :type q: int
    :param shots: The number of shots, at least 1
    :type shots: int
    :param seed: Seed of the numpy PCG64 generator, reduced to 64 bits
    :type seed: int
    :param readout_flip: Symmetric flip probability in [0, 0.5]
    :type readout_flip: float
    :raises ValueError: On invalid shots, probability or qubit
    :rtype: ShotCounts
    """

    if not isinstance(shots, (int, np.integer)) or isinstance(shots, bool) or shots < 1:
        raise ValueError(f"shots must be a positive integer, got {shots!r}")
    if not 0.0 <= readout_flip <= 0.5:
        raise ValueError(f"readout_flip must lie in [0, 0.5], got {readout_flip}")
    state.check_qubit(q)

    view = qubit_view(state.amplitudes, state.n_qubits, q)
    high = view[:, 1, :]
    p1 = min(1.0, max(0.0, float(np.vdot(high, high).real)))

    seed = int(seed) & SEED_MASK
    rng = np.random.default_rng(seed)
    ones = int(rng.binomial(shots, p1))
    lost = int(rng.binomial(ones, readout_flip))
    gained = int(rng.binomial(shots - ones, readout_flip))
    ones = ones - lost + gained

    return ShotCounts({0: shots - ones, 1: ones}, shots, seed, readout_flip)
