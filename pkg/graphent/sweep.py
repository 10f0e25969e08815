import logging
import math
import multiprocessing
from dataclasses import dataclass
from enum import Enum
from typing import Optional

import numpy as np
import psutil

from .entanglement import EXACT_TOLERANCE, CrossRouteError
from .entanglement import entanglement_closed_form, entanglement_from_bloch
from .formats import write_csv
from .graph import QubitInit, preset
from .graphstate import build_graph_state
from .measurement import estimate_entanglement
from .simulator import bloch_vector


DEFAULT_PHI_POINTS = 21
DEFAULT_THETA_POINTS = 11

SHOT_COLUMNS = ["e_shots", "stderr", "shots", "seed", "flip"]

logger = logging.getLogger('graphent')


class SweepKind(Enum):
    """The two-qubit experiment families.

    PHI_LINE varies φ₀₁ over [0, 2π] with θ₀ = θ₁ = π/2 (CP(φ) H H |00⟩);
    THETA_GRID varies (θ₀, θ₁) over [0, π]² with φ₀₁ = π (CZ RY RY |00⟩).
    """

    PHI_LINE = 'phi_line'
    THETA_GRID = 'theta_grid'


@dataclass(frozen=True)
class SweepSpec():

    kind: SweepKind
    points: int
    shots: Optional[int] = None
    seed: int = 0
    readout_flip: float = 0.0

    def __post_init__(self):

        object.__setattr__(self, "kind", SweepKind(self.kind))
        if isinstance(self.points, bool) or not isinstance(self.points, int) or self.points < 2:
            raise ValueError(f"A sweep needs at least 2 points per axis, got {self.points!r}")
        if self.shots is not None and (
                isinstance(self.shots, bool) or not isinstance(self.shots, int)
                or self.shots < 1):
            raise ValueError(f"shots must be a positive integer, got {self.shots!r}")
        if not 0.0 <= self.readout_flip <= 0.5:
            raise ValueError(f"readout_flip must lie in [0, 0.5], got {self.readout_flip}")

    @property
    def header(self):

        if self.kind is SweepKind.PHI_LINE:
            columns = ["phi", "e_closed", "e_exact"]
        else:
            columns = ["theta0", "theta1", "e_closed", "e_exact"]
        if self.shots is not None:
            columns += SHOT_COLUMNS
        return columns

    def grid(self):
        """The parameter tuples of every grid point, in output order."""

        if self.kind is SweepKind.PHI_LINE:
            return [(float(phi),) for phi in np.linspace(0.0, 2 * math.pi, self.points)]
        thetas = [float(theta) for theta in np.linspace(0.0, math.pi, self.points)]
        return [(theta0, theta1) for theta0 in thetas for theta1 in thetas]


def default_workers():
    """Physical core count, falling back to logical cores, then 1."""

    return psutil.cpu_count(logical=False) or psutil.cpu_count() or 1


def point_spec(kind, params):

    if SweepKind(kind) is SweepKind.PHI_LINE:
        return preset("two-qubit", 2, theta=math.pi / 2, phi=params[0])
    spec = preset("two-qubit", 2, phi=math.pi)
    return spec.replace_inits(QubitInit(alpha=0.0, theta=theta) for theta in params)


def evaluate_point(task):
    """Computes one sweep row; runs inside pool workers.

    :param task: (kind value, params, shots, seed, flip)
    :type task: tuple
    :raises CrossRouteError: If closed form and statevector disagree
    :return: The CSV row
    :rtype: list
    """

    kind, params, shots, seed, flip = task
    spec = point_spec(kind, params)

    e_closed = entanglement_closed_form(spec, 0)
    e_exact = entanglement_from_bloch(bloch_vector(build_graph_state(spec), 0))
    if abs(e_closed - e_exact) > EXACT_TOLERANCE:
        raise CrossRouteError(
            f"Sweep point {params}: closed form {e_closed!r}, statevector {e_exact!r}")

    row = list(params) + [e_closed, e_exact]
    if shots is not None:
        row += estimate_entanglement(spec, 0, shots, seed, flip).csv_fields()
    return row


def run_sweep(sweep, workers=None):
    """Evaluates every grid point of ``sweep``.

    Points are spread over a bounded pool of worker processes; rows come
    back in grid order whatever the completion order. Grid point k of a
    shot sweep uses seed ``sweep.seed + k``.

    :param sweep: The sweep definition
    :type sweep: SweepSpec
    :param workers: Pool size, defaults to the number of physical cores;
    1 evaluates in the calling process
    :type workers: int, optional
    :return: The rows, each a list matching ``sweep.header``
    :rtype: list
    """

    if workers is None:
        workers = default_workers()
    if workers < 1:
        raise ValueError(f"workers must be at least 1, got {workers}")

    tasks = [
        (sweep.kind.value, params, sweep.shots, sweep.seed + index, sweep.readout_flip)
        for index, params in enumerate(sweep.grid())
    ]
    workers = min(workers, len(tasks))
    logger.debug(f"Sweep {sweep.kind.value}: {len(tasks)} point(s) on {workers} worker(s)")

    if workers == 1:
        return [evaluate_point(task) for task in tasks]

    context = multiprocessing.get_context("spawn")
    chunksize = max(1, len(tasks) // (4 * workers))
    with context.Pool(processes=workers) as pool:
        return pool.map(evaluate_point, tasks, chunksize=chunksize)


def sweep_to_csv(sweep, rows, handle):
    write_csv(handle, sweep.header, rows)
