from .graph import WeightedGraph
from .graph import QubitInit
from .graph import GraphStateSpec
from .graph import SpecError
from .graph import parse_spec
from .graph import dump_spec
from .graph import load_spec
from .graph import preset
from .graph import random_spec
from .graph import neighborhood
from .graph import weighted_degree
from .simulator import StateVector
from .simulator import BlochVector
from .simulator import ShotCounts
from .simulator import Axis
from .graphstate import prepare_initial
from .graphstate import build_graph_state
from .graphstate import circuit_description
from .graphstate import replay_circuit
from .entanglement import EntanglementReport
from .entanglement import CrossRouteError
from .entanglement import entanglement_closed_form
from .entanglement import entanglement_report
from .measurement import MeasurementEstimate
from .measurement import estimate_bloch
from .measurement import estimate_entanglement
from .sweep import SweepKind
from .sweep import SweepSpec
from .sweep import run_sweep
