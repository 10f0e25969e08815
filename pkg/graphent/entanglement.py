import cmath
import json
import logging
import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np

from .formats import write_csv
from .graph import wrap_angle
from .graphstate import build_graph_state
from .simulator import BlochVector, bloch_vector, reduced_density, largest_eigenvalue
from .simulator.utils import qubit_view


EXACT_TOLERANCE = 1e-8
MODULUS_TOLERANCE = 1e-12

REPORT_COLUMNS = ["qubit", "e_closed", "e_exact", "e_oracle", "bx", "by", "bz"]
SHOT_COLUMNS = ["e_shots", "stderr", "shots", "seed", "flip"]

logger = logging.getLogger('graphent')


class CrossRouteError(ArithmeticError):
    """Raised when independent entanglement routes disagree."""


@dataclass(frozen=True)
class ZFactor():

    value: complex

    def __post_init__(self):
        if abs(self.value) > 1.0 + MODULUS_TOLERANCE:
            raise ValueError(f"|z| = {abs(self.value)} exceeds 1")


# Squared half-angle and full-angle trigonometry through cos of the doubled
# angle; exact at the multiples of π/2 that the two-qubit experiments use.

def _cos2_half(angle):
    return 0.5 * (1.0 + math.cos(angle))


def _sin2_half(angle):
    return 0.5 * (1.0 - math.cos(angle))


def _cos2(angle):
    return 0.5 * (1.0 + math.cos(2.0 * angle))


def _sin2(angle):
    return 0.5 * (1.0 - math.cos(2.0 * angle))


def _from_bracket(bracket):
    """½(1 − √bracket) with the bracket clamped into [0, 1]."""

    return 0.5 * (1.0 - math.sqrt(min(1.0, max(0.0, bracket))))


def _check_theta(theta, name="theta"):
    if not math.isfinite(theta) or not 0.0 <= theta <= math.pi:
        raise ValueError(f"{name} must lie in [0, π], got {theta}")


def z_factor(spec, l):
    """The complex factor z whose real and imaginary parts give ⟨σˣ⟩, ⟨σʸ⟩.

    z = e^{-i(α_l + ½ Σ φ_jl)} · Π_{k∈N(l)} (cos(φ_kl/2) + i sin(φ_kl/2) cos θ_k)

    :param spec: The graph-state specification
    :type spec: GraphStateSpec
    :param l: The qubit
    :type l: int
    :rtype: ZFactor
    """

    graph = spec.graph
    weights = graph.incident_weights(l)
    z = cmath.exp(-1j * (spec.inits[l].alpha + 0.5 * graph.weighted_degree(l)))
    for k in sorted(weights):
        half = 0.5 * weights[k]
        z *= complex(math.cos(half), math.sin(half) * math.cos(spec.inits[k].theta))
    return ZFactor(z)


def mean_sigma_x(spec, l):
    spec.graph.check_vertex(l)
    return math.sin(spec.inits[l].theta) * z_factor(spec, l).value.real


def mean_sigma_y(spec, l):
    spec.graph.check_vertex(l)
    return -math.sin(spec.inits[l].theta) * z_factor(spec, l).value.imag


def mean_sigma_z(spec, l):
    spec.graph.check_vertex(l)
    return math.cos(spec.inits[l].theta)


def mean_spin(spec, l):
    """The analytic Bloch vector of qubit ``l``."""

    spec.graph.check_vertex(l)
    z = z_factor(spec, l).value
    theta = spec.inits[l].theta
    sin_theta = math.sin(theta)
    return BlochVector(sin_theta * z.real, -sin_theta * z.imag, math.cos(theta))


def entanglement_closed_form(spec, l):
    """Geometric measure of entanglement of qubit ``l`` with the rest.

    E_l = ½(1 − [sin²θ_l Π_{k∈N(l)} (cos²(φ_kl/2) + sin²(φ_kl/2) cos²θ_k) + cos²θ_l]^½)

    Only θ on the closed neighbourhood of ``l`` and the weights of edges
    incident to ``l`` enter; no α does.

    :param spec: The graph-state specification
    :type spec: GraphStateSpec
    :param l: The qubit
    :type l: int
    :return: A value in [0, ½]
    :rtype: float
    """

    weights = spec.graph.incident_weights(l)
    theta_l = spec.inits[l].theta

    product = 1.0
    for k in sorted(weights):
        phi = weights[k]
        product *= _cos2_half(phi) + _sin2_half(phi) * _cos2(spec.inits[k].theta)

    return _from_bracket(1.0 - _sin2(theta_l) * (1.0 - product))


def entanglement_uniform(theta, phi, degree):
    """Closed form for uniform θ and φ around a vertex of the given degree."""

    if isinstance(degree, bool) or not isinstance(degree, (int, np.integer)) or degree < 0:
        raise ValueError(f"degree must be a non-negative integer, got {degree!r}")
    _check_theta(theta)
    if not math.isfinite(phi):
        raise ValueError(f"phi must be finite, got {phi}")

    base = _cos2_half(phi) + _sin2_half(phi) * _cos2(theta)
    return _from_bracket(1.0 - _sin2(theta) * (1.0 - base ** int(degree)))


def two_qubit_e_phi(phi01):
    """E = ½(1 − |cos(φ₀₁/2)|) for CP(φ₀₁) H H |00⟩.

    :raises SpecError: If the angle is not finite
    """

    return _from_bracket(_cos2_half(wrap_angle(phi01)))


def two_qubit_e_theta(theta0, theta1):
    """E for CZ RY(θ₁) RY(θ₀) |00⟩."""

    _check_theta(theta0, "theta0")
    _check_theta(theta1, "theta1")
    # cos²θ₀ + cos²θ₁ − cos²θ₀ cos²θ₁ = 1 − sin²θ₀ sin²θ₁
    return _from_bracket(1.0 - _sin2(theta0) * _sin2(theta1))


def entanglement_from_bloch(b):
    """½(1 − |b|), the magnitude clamped to 1."""

    return 0.5 * (1.0 - min(1.0, b.magnitude))


def entanglement_oracle_schmidt(state, l):
    """1 − λ_max of the reduced density matrix of qubit ``l``.

    For a pure state the largest squared overlap with a product state
    equals the largest Schmidt coefficient of the qubit/rest cut.
    """

    value = 1.0 - largest_eigenvalue(reduced_density(state, l))
    return min(0.5, max(0.0, value))


def entanglement_direct_minimization(state, l, resolution=math.pi / 200):
    """Minimizes 1 − |⟨ψ|a⟩|b⟩|² by brute force over the qubit's Bloch sphere.

    For each local state |a⟩ on a (θ, φ) grid the best environment state
    is ⟨a|ψ⟩ normalized, so the optimal overlap is ‖⟨a|ψ⟩‖².

    :param state: The state
    :type state: StateVector
    :param l: The qubit
    :type l: int
    :param resolution: Grid step in radians, defaults to π/200
    :type resolution: float, optional
    :rtype: float
    """

    state.check_qubit(l)
    view = qubit_view(state.amplitudes, state.n_qubits, l)
    halves = np.stack([view[:, 0, :].ravel(), view[:, 1, :].ravel()])

    thetas = np.linspace(0.0, math.pi, int(round(math.pi / resolution)) + 1)
    phases = np.arange(0.0, 2 * math.pi, resolution)

    best = 0.0
    for theta in thetas:
        bras = np.stack([
            np.full(phases.shape, math.cos(theta / 2), dtype=np.complex128),
            math.sin(theta / 2) * np.exp(-1j * phases),
        ], axis=1)
        overlaps = bras @ halves
        best = max(best, float(np.max(np.sum(np.abs(overlaps) ** 2, axis=1))))

    return max(0.0, 1.0 - best)


@dataclass(frozen=True)
class QubitRecord():

    qubit: int
    e_closed_form: float
    e_exact_meanspin: float
    e_oracle_schmidt: float
    bloch: BlochVector
    estimate: Optional[object] = None

    @property
    def disagreement(self):
        return max(abs(self.e_closed_form - self.e_exact_meanspin),
                   abs(self.e_closed_form - self.e_oracle_schmidt))


@dataclass(frozen=True)
class EntanglementReport():
    """Per-qubit entanglement from every route."""

    records: Tuple[QubitRecord, ...]

    @property
    def has_shots(self):
        return any(record.estimate is not None for record in self.records)

    @property
    def max_disagreement(self):
        return max(record.disagreement for record in self.records)


def entanglement_report(spec, shots=None, seed=0, readout_flip=0.0):
    """Computes every route for every qubit of ``spec``.

    The state is built once. With ``shots`` the simulated measurement
    protocol runs as well, qubit l drawing from seed ``seed + l``.

    :param spec: The graph-state specification
    :type spec: GraphStateSpec
    :param shots: Shots per measurement basis, defaults to None (no shots)
    :type shots: int, optional
    :param seed: Base seed of the shot route, defaults to 0
    :type seed: int, optional
    :param readout_flip: Readout flip probability, defaults to 0.0
    :type readout_flip: float, optional
    :rtype: EntanglementReport
    """

    from .measurement import estimate_entanglement

    state = build_graph_state(spec)
    records = []
    for l in range(spec.n_qubits):
        bloch = bloch_vector(state, l)
        estimate = None
        if shots is not None:
            estimate = estimate_entanglement(
                spec, l, shots, seed + l, readout_flip, prepared=state)
        records.append(QubitRecord(
            qubit=l,
            e_closed_form=entanglement_closed_form(spec, l),
            e_exact_meanspin=entanglement_from_bloch(bloch),
            e_oracle_schmidt=entanglement_oracle_schmidt(state, l),
            bloch=bloch,
            estimate=estimate))

    report = EntanglementReport(tuple(records))
    logger.debug(f"Report over {spec.n_qubits} qubit(s), "
                 f"max route disagreement {report.max_disagreement:.3e}")
    return report


def check_report(report, tolerance=EXACT_TOLERANCE):
    """Asserts that the closed form matches the simulated routes.

    :raises CrossRouteError: If any qubit disagrees beyond ``tolerance``
    """

    for record in report.records:
        if record.disagreement > tolerance:
            raise CrossRouteError(
                f"Qubit {record.qubit}: closed form {record.e_closed_form!r}, "
                f"mean spin {record.e_exact_meanspin!r}, "
                f"Schmidt {record.e_oracle_schmidt!r} (tolerance {tolerance})")


def report_columns(report):
    return REPORT_COLUMNS + (SHOT_COLUMNS if report.has_shots else [])


def report_rows(report):

    rows = []
    for record in report.records:
        row = [record.qubit, record.e_closed_form, record.e_exact_meanspin,
               record.e_oracle_schmidt, *record.bloch.as_tuple()]
        if report.has_shots:
            row.extend(record.estimate.csv_fields())
        rows.append(row)
    return rows


def report_to_csv(report, handle):
    write_csv(handle, report_columns(report), report_rows(report))


def report_to_dict(report):

    qubits = []
    for record in report.records:
        entry = {
            "qubit": record.qubit,
            "e_closed": record.e_closed_form,
            "e_exact": record.e_exact_meanspin,
            "e_oracle": record.e_oracle_schmidt,
            "bloch": list(record.bloch.as_tuple()),
        }
        if record.estimate is not None:
            entry["shots"] = record.estimate.to_dict()
        qubits.append(entry)
    return {"qubits": qubits}


def report_to_json(report, indent=2):
    # repr floats carry the full 17 significant digits
    return json.dumps(report_to_dict(report), indent=indent)
