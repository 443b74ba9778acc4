"""Bell states, double-Bell states and the change of pairing for four qubits.

Four-qubit amplitudes in a double-Bell basis are 4-vectors ordered
``(v, z, x, y)``: the coefficients of Phi+Phi+, Phi-Phi-, Psi+Psi+ and
Psi-Psi- respectively. Within a pair the qubit with the earlier label comes
first, e.g. ``Partition.AD_BC`` is the pair (a, d) followed by (b, c).
"""

from __future__ import annotations

import enum

import numpy as np

from .linalg import permute_qubits

_S = 1 / np.sqrt(2)


class BellKind(enum.IntEnum):
    PHI_PLUS = 0
    PHI_MINUS = 1
    PSI_PLUS = 2
    PSI_MINUS = 3


class Partition(enum.Enum):
    """Ways of splitting qubits (a, b, c, d) = (0, 1, 2, 3) into two pairs."""

    AB_CD = ((0, 1), (2, 3))
    AC_BD = ((0, 2), (1, 3))
    AD_BC = ((0, 3), (1, 2))

    @property
    def pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return self.value


_BELL_VECTORS = {
    BellKind.PHI_PLUS: np.array([_S, 0, 0, _S], dtype=complex),
    BellKind.PHI_MINUS: np.array([_S, 0, 0, -_S], dtype=complex),
    BellKind.PSI_PLUS: np.array([0, _S, _S, 0], dtype=complex),
    BellKind.PSI_MINUS: np.array([0, _S, -_S, 0], dtype=complex),
}

# Rows give the target-partition amplitudes as combinations of the
# AB_CD amplitudes (v, z, x, y). Both matrices are orthogonal.
_FROM_AB_CD = {
    Partition.AB_CD: np.eye(4),
    Partition.AC_BD: 0.5
    * np.array(
        [
            [1, 1, 1, 1],
            [1, 1, -1, -1],
            [1, -1, 1, -1],
            [1, -1, -1, 1],
        ],
        dtype=float,
    ),
    Partition.AD_BC: 0.5
    * np.array(
        [
            [1, 1, 1, -1],
            [1, 1, -1, 1],
            [1, -1, 1, 1],
            [1, -1, -1, -1],
        ],
        dtype=float,
    ),
}


def bell_state(kind: BellKind) -> np.ndarray:
    return _BELL_VECTORS[BellKind(kind)].copy()


def bell_basis() -> np.ndarray:
    """Rows are the four Bell vectors in ``BellKind`` order."""
    return np.array([_BELL_VECTORS[k] for k in BellKind])


def double_bell_state(k1: BellKind, k2: BellKind, partition: Partition) -> np.ndarray:
    """First pair of ``partition`` in Bell state ``k1``, second pair in ``k2``.

    The returned 16-vector is in the global (a, b, c, d) qubit order.
    """
    (i, j), (k, l) = Partition(partition).pairs
    product = np.kron(_BELL_VECTORS[BellKind(k1)], _BELL_VECTORS[BellKind(k2)])
    # product has qubit order (i, j, k, l); global qubit q is at position order[q]
    order = [0] * 4
    for pos, q in enumerate((i, j, k, l)):
        order[q] = pos
    return permute_qubits(product, order)


def double_bell_coefficients(psi, partition: Partition) -> np.ndarray:
    """All 16 double-Bell coefficients of a 4-qubit state.

    Entry ``[k1, k2]`` is ``<k1 k2|psi>`` in the given pairing. This projects
    the explicit 16-dimensional vector and is independent of ``repartition``.
    """
    psi = np.asarray(psi, dtype=complex)
    if psi.shape != (16,):
        raise ValueError("expected a 4-qubit state vector")
    out = np.empty((4, 4), dtype=complex)
    for k1 in BellKind:
        for k2 in BellKind:
            out[k1, k2] = np.vdot(double_bell_state(k1, k2, partition), psi)
    return out


def double_bell_superposition(amps, partition: Partition = Partition.AB_CD) -> np.ndarray:
    """Sum of matched double-Bell states weighted by ``amps = (v, z, x, y)``."""
    amps = np.asarray(amps, dtype=complex)
    if amps.shape != (4,):
        raise ValueError("amplitudes must be a 4-vector (v, z, x, y)")
    return sum(a * double_bell_state(k, k, partition) for k, a in zip(BellKind, amps))


def repartition_matrix(source: Partition, target: Partition) -> np.ndarray:
    """Real orthogonal 4x4 map taking ``source`` amplitudes to ``target`` ones."""
    # Route through AB_CD; the primitive matrices are orthogonal so the
    # inverse is the transpose.
    return _FROM_AB_CD[Partition(target)] @ _FROM_AB_CD[Partition(source)].T


def repartition(amps, source: Partition, target: Partition) -> np.ndarray:
    """Matched double-Bell amplitudes of the same state in another pairing.

    ``amps`` may carry leading batch dimensions; the last axis holds
    ``(v, z, x, y)``. Only matched terms appear because a superposition of
    matched double-Bell states stays one under any change of pairing.

    >>> repartition([1, 0, 0, 0], Partition.AB_CD, Partition.AC_BD).real
    array([0.5, 0.5, 0.5, 0.5])
    """
    amps = np.asarray(amps)
    if amps.shape[-1] != 4:
        raise ValueError("last axis must hold the four amplitudes (v, z, x, y)")
    return amps @ repartition_matrix(source, target).T
