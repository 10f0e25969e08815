from .statevector import StateVector
from .statevector import BlochVector
from .statevector import ShotCounts
from .statevector import Axis
from .statevector import GateKind
from .statevector import init_zero
from .statevector import apply_ry
from .statevector import apply_rz
from .statevector import apply_rx
from .statevector import apply_h
from .statevector import apply_cp
from .statevector import apply_gate
from .statevector import expectation_pauli
from .statevector import bloch_vector
from .statevector import reduced_density
from .statevector import largest_eigenvalue
from .statevector import sample_qubit
