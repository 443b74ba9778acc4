"""Dense state-vector and density-matrix helpers for up to four qubits.

States are plain numpy arrays. Qubit 0 is the leftmost label of a ket and the
most significant bit of the basis index, so ``|q0 q1 q2 q3>`` sits at index
``8*q0 + 4*q1 + 2*q2 + q3``. For cloner states the labels (a, b, c, d) map to
qubits (0, 1, 2, 3).
"""

from __future__ import annotations

from typing import Sequence

import numpy as np

MAX_QUBITS = 4

# equality slack for unit-norm, Hermiticity and unit-trace checks
ATOL = 1e-12
# slack on the smallest eigenvalue for positivity checks
PSD_ATOL = 1e-10

IDENTITY = np.eye(2, dtype=complex)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=complex)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=complex)
PAULIS = (PAULI_X, PAULI_Y, PAULI_Z)

KET_0 = np.array([1, 0], dtype=complex)
KET_1 = np.array([0, 1], dtype=complex)


def num_qubits(dim: int) -> int:
    n = int(dim).bit_length() - 1
    if dim < 2 or 2**n != dim:
        raise ValueError(f"dimension {dim} is not a power of two")
    return n


def as_state(amplitudes, normalize: bool = False) -> np.ndarray:
    """Validate amplitudes as a pure state of 1 to 4 qubits.

    Parameters
    ----------
    amplitudes : array_like
        Complex amplitudes, length ``2**n``.
    normalize : bool
        Rescale to unit norm instead of rejecting unnormalized input.

    Returns
    -------
    numpy.ndarray
        Complex vector of unit norm.
    """
    psi = np.asarray(amplitudes, dtype=complex)
    if psi.ndim != 1:
        raise ValueError(f"state must be a vector, got shape {psi.shape}")
    n = num_qubits(psi.shape[0])
    if n > MAX_QUBITS:
        raise ValueError(f"at most {MAX_QUBITS} qubits supported, got {n}")
    if not np.all(np.isfinite(psi)):
        raise ValueError("state has non-finite amplitudes")
    norm = np.linalg.norm(psi)
    if normalize:
        if norm == 0:
            raise ValueError("cannot normalize the zero vector")
        return psi / norm
    if abs(norm**2 - 1) > ATOL:
        raise ValueError(f"state is not normalized (squared norm {norm**2!r})")
    return psi


def is_density_matrix(rho, atol: float = ATOL, psd_atol: float = PSD_ATOL) -> bool:
    rho = np.asarray(rho)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        return False
    if np.max(np.abs(rho - rho.conj().T)) > atol:
        return False
    if abs(np.trace(rho) - 1) > atol:
        return False
    return bool(np.linalg.eigvalsh((rho + rho.conj().T) / 2)[0] >= -psd_atol)


def check_density_matrix(rho, max_qubits: int = 2) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.ndim != 2 or rho.shape[0] != rho.shape[1]:
        raise ValueError(f"density matrix must be square, got shape {rho.shape}")
    if num_qubits(rho.shape[0]) > max_qubits:
        raise ValueError(f"density matrix exceeds {max_qubits} qubits")
    if not is_density_matrix(rho):
        raise ValueError("matrix is not Hermitian, unit-trace and positive semidefinite")
    return rho


def tensor(a, b) -> np.ndarray:
    """Kronecker product of two states; ``a``'s qubits come first."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    if num_qubits(a.shape[0]) + num_qubits(b.shape[0]) > MAX_QUBITS:
        raise ValueError(f"tensor product exceeds {MAX_QUBITS} qubits")
    return np.kron(a, b)


def outer_product(psi) -> np.ndarray:
    psi = np.asarray(psi, dtype=complex)
    return np.outer(psi, psi.conj())


def permute_qubits(psi, order: Sequence[int]) -> np.ndarray:
    """Reorder the qubits of a state vector.

    Qubit ``k`` of the result is qubit ``order[k]`` of ``psi``.
    """
    psi = np.asarray(psi, dtype=complex)
    n = num_qubits(psi.shape[0])
    if sorted(order) != list(range(n)):
        raise ValueError(f"{order!r} is not a permutation of {n} qubits")
    return psi.reshape((2,) * n).transpose(order).reshape(-1)


def partial_trace(rho, keep: Sequence[int]) -> np.ndarray:
    """Reduce ``rho`` to the qubits in ``keep``.

    The result is expressed in the order given by ``keep``, so
    ``partial_trace(rho, [2, 0])`` puts original qubit 2 first.
    """
    rho = np.asarray(rho, dtype=complex)
    n = num_qubits(rho.shape[0])
    keep = [int(q) for q in keep]
    if not keep:
        raise ValueError("keep must name at least one qubit")
    if len(set(keep)) != len(keep) or any(q < 0 or q >= n for q in keep):
        raise ValueError(f"invalid qubit subset {keep!r} for {n} qubits")
    traced = [q for q in range(n) if q not in keep]
    dk, dt = 2 ** len(keep), 2 ** len(traced)
    order = keep + traced
    t = rho.reshape((2,) * (2 * n)).transpose(order + [n + q for q in order])
    return np.einsum("ijkj->ik", t.reshape(dk, dt, dk, dt))


def reduced_density_matrix(psi, keep: Sequence[int]) -> np.ndarray:
    """Reduced state of a pure state, without forming the full projector."""
    psi = np.asarray(psi, dtype=complex)
    n = num_qubits(psi.shape[0])
    keep = [int(q) for q in keep]
    if not keep or len(set(keep)) != len(keep) or any(q < 0 or q >= n for q in keep):
        raise ValueError(f"invalid qubit subset {keep!r} for {n} qubits")
    traced = [q for q in range(n) if q not in keep]
    m = psi.reshape((2,) * n).transpose(keep + traced).reshape(2 ** len(keep), -1)
    return m @ m.conj().T


def fidelity_pure(psi, rho) -> float:
    """Overlap <psi|rho|psi> of a pure state with a density matrix."""
    psi = np.asarray(psi, dtype=complex)
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (psi.shape[0], psi.shape[0]):
        raise ValueError(f"dimension mismatch: state {psi.shape}, matrix {rho.shape}")
    f = np.vdot(psi, rho @ psi)
    if abs(f.imag) > ATOL:
        raise ValueError(f"overlap has imaginary part {f.imag!r}; is rho Hermitian?")
    return float(f.real)


def bloch_vector(rho) -> np.ndarray:
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise ValueError("Bloch vector needs a single-qubit density matrix")
    return np.array([np.trace(rho @ s).real for s in PAULIS])


def bloch_state(theta: float, phi: float) -> np.ndarray:
    """cos(theta/2)|0> + exp(i phi) sin(theta/2)|1>."""
    return np.array([np.cos(theta / 2), np.exp(1j * phi) * np.sin(theta / 2)])


def random_state(rng: np.random.Generator, n_qubits: int = 1) -> np.ndarray:
    """Haar-random pure state."""
    psi = rng.normal(size=2**n_qubits) + 1j * rng.normal(size=2**n_qubits)
    return psi / np.linalg.norm(psi)
