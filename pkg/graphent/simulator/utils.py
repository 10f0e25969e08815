import numpy as np


def qubit_view(amplitudes, n_qubits, qubit):
    """Reshapes a flat amplitude array so that one qubit gets its own axis.

    Qubit q is bit q of the amplitude index (qubit 0 is the least
    significant bit), so the returned view has shape
    (2^(N-q-1), 2, 2^q) and ``view[:, b, :]`` holds every amplitude whose
    bit q equals b. The view shares memory with ``amplitudes``.

    :param amplitudes: A C-contiguous array of 2^N amplitudes
    :type amplitudes: numpy.ndarray
    :param n_qubits: The number of qubits N
    :type n_qubits: int
    :param qubit: The qubit index
    :type qubit: int
    :return: A writable three-axis view
    :rtype: numpy.ndarray
    """

    return amplitudes.reshape(1 << (n_qubits - qubit - 1), 2, 1 << qubit)


def pair_view(amplitudes, n_qubits, qubit_a, qubit_b):
    """Like qubit_view, for two distinct qubits.

    The returned view has five axes; axes 1 and 3 belong to the higher
    and the lower of the two qubits respectively.
    """

    low, high = sorted((qubit_a, qubit_b))
    return amplitudes.reshape(
        1 << (n_qubits - high - 1), 2, 1 << (high - low - 1), 2, 1 << low)


def align_global_phase(reference, other):
    """Rotates ``other`` by the global phase that best matches ``reference``.

    :param reference: Amplitudes to align to
    :type reference: numpy.ndarray
    :param other: Amplitudes to rotate
    :type other: numpy.ndarray
    :return: A phase-rotated copy of ``other``
    :rtype: numpy.ndarray
    """

    overlap = np.vdot(other, reference)
    if abs(overlap) == 0.0:
        return other.copy()
    return other * (overlap / abs(overlap))


def max_difference_up_to_phase(reference, other):
    """The largest per-amplitude deviation after global phase alignment."""

    aligned = align_global_phase(reference, other)
    return float(np.max(np.abs(reference - aligned)))


def format_basis_label(index, n_qubits):
    """Renders a basis index as a ket label, qubit N-1 leftmost."""

    return "|" + format(index, f"0{n_qubits}b") + ">"


def format_amplitudes(amplitudes, n_qubits, limit=8, cutoff=1e-12):
    """Formats the largest amplitudes of a state for debug logging.

    :param amplitudes: The amplitude array
    :type amplitudes: numpy.ndarray
    :param n_qubits: The number of qubits
    :type n_qubits: int
    :param limit: The maximum number of amplitudes listed, defaults to 8
    :type limit: int, optional
    :param cutoff: Amplitudes below this magnitude are skipped
    :type cutoff: float, optional
    :return: The formatted listing
    :rtype: str
    """

    magnitudes = np.abs(amplitudes)
    order = np.argsort(-magnitudes, kind="stable")[:limit]

    lines = [f"--- State ({n_qubits} qubits) ---"]
    for index in order:
        if magnitudes[index] < cutoff:
            break
        amplitude = amplitudes[index]
        lines.append(
            f"{format_basis_label(int(index), n_qubits)}: "
            f"{amplitude.real:+.6f}{amplitude.imag:+.6f}j")
    return "\n".join(lines)
