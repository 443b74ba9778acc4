"""Single-qubit Pauli channels and their Bell-diagonal Choi states."""

from __future__ import annotations

import enum
from dataclasses import dataclass

import numpy as np

from .bell import bell_basis
from .linalg import ATOL, IDENTITY, PAULI_X, PAULI_Y, PAULI_Z, outer_product


class PauliError(enum.IntEnum):
    I = 0
    X = 1
    Y = 2
    Z = 3


@dataclass(frozen=True)
class PauliChannel:
    """Apply X, Y or Z with probabilities ``px``, ``py``, ``pz``; identity otherwise."""

    px: float
    py: float
    pz: float

    def __post_init__(self):
        probs = (self.px, self.py, self.pz)
        if not all(np.isfinite(probs)):
            raise ValueError(f"non-finite channel probabilities {probs!r}")
        if min(probs) < 0 or sum(probs) > 1 + ATOL:
            raise ValueError(f"invalid Pauli channel probabilities {probs!r}")
        for name, val in zip(("px", "py", "pz"), probs):
            object.__setattr__(self, name, float(val))

    @classmethod
    def identity(cls) -> PauliChannel:
        return cls(0.0, 0.0, 0.0)

    @classmethod
    def depolarizing(cls, p: float) -> PauliChannel:
        """Total error probability ``p`` split evenly over X, Y and Z."""
        return cls(p / 3, p / 3, p / 3)

    @property
    def p(self) -> float:
        return self.px + self.py + self.pz

    @property
    def probabilities(self) -> np.ndarray:
        """``(1 - p, px, py, pz)`` indexed by ``PauliError``."""
        return np.array([1 - self.p, self.px, self.py, self.pz])

    def as_array(self) -> np.ndarray:
        return np.array([self.px, self.py, self.pz])

    def is_depolarizing(self, tol: float = 1e-9) -> bool:
        probs = self.as_array()
        return bool(probs.max() - probs.min() < tol)

    def isclose(self, other: PauliChannel, atol: float = ATOL) -> bool:
        return bool(np.allclose(self.as_array(), other.as_array(), rtol=0, atol=atol))


@dataclass(frozen=True)
class BellDiagonal:
    """Weights of a two-qubit mixture of Phi+, Phi-, Psi+, Psi-.

    Negative weights down to ``-1e-12`` are treated as rounding noise, clamped
    to zero and the remainder renormalized.
    """

    phi_plus: float
    phi_minus: float
    psi_plus: float
    psi_minus: float

    def __post_init__(self):
        w = np.array([self.phi_plus, self.phi_minus, self.psi_plus, self.psi_minus], dtype=float)
        if not np.all(np.isfinite(w)) or w.min() < -ATOL or abs(w.sum() - 1) > ATOL:
            raise ValueError(f"invalid Bell-diagonal weights {w.tolist()!r}")
        if w.min() < 0:
            w = np.clip(w, 0, None)
            w /= w.sum()
        for name, val in zip(("phi_plus", "phi_minus", "psi_plus", "psi_minus"), w):
            object.__setattr__(self, name, float(val))

    def as_array(self) -> np.ndarray:
        return np.array([self.phi_plus, self.phi_minus, self.psi_plus, self.psi_minus])

    def density_matrix(self) -> np.ndarray:
        basis = bell_basis()
        return sum(w * outer_product(b) for w, b in zip(self.as_array(), basis))


def apply(channel: PauliChannel, rho) -> np.ndarray:
    """Output of the channel on a single-qubit density matrix."""
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (2, 2):
        raise ValueError("Pauli channel acts on single-qubit density matrices")
    return (
        (1 - channel.p) * rho
        + channel.px * PAULI_X @ rho @ PAULI_X
        + channel.py * PAULI_Y @ rho @ PAULI_Y
        + channel.pz * PAULI_Z @ rho @ PAULI_Z
    )


def apply_to_qubit(channel: PauliChannel, rho, qubit: int) -> np.ndarray:
    """Act with the channel on one qubit of a multi-qubit density matrix."""
    rho = np.asarray(rho, dtype=complex)
    n = int(np.log2(rho.shape[0]))
    if not 0 <= qubit < n:
        raise ValueError(f"qubit {qubit} out of range for {n} qubits")
    out = np.zeros_like(rho)
    for prob, pauli in zip(channel.probabilities, (IDENTITY, PAULI_X, PAULI_Y, PAULI_Z)):
        op = np.kron(np.kron(np.eye(2**qubit), pauli), np.eye(2 ** (n - qubit - 1)))
        out += prob * op @ rho @ op.conj().T
    return out


def choi_matrix(channel: PauliChannel) -> np.ndarray:
    """(id x channel) applied to |Phi+><Phi+|, reference qubit first."""
    phi = bell_basis()[0]
    return apply_to_qubit(channel, outer_product(phi), 1)


def choi_state(channel: PauliChannel) -> BellDiagonal:
    return BellDiagonal(1 - channel.p, channel.pz, channel.px, channel.py)


def channel_from_bell_diagonal(w: BellDiagonal) -> PauliChannel:
    return PauliChannel(px=w.psi_plus, py=w.psi_minus, pz=w.phi_minus)


def bell_diagonal_decompose(rho) -> tuple[BellDiagonal, float]:
    """Project a two-qubit state onto the Bell projectors.

    Returns
    -------
    weights : BellDiagonal
        ``<B_k|rho|B_k>`` for each Bell state.
    residual : float
        Frobenius norm of what the Bell-diagonal part fails to capture.
        Zero exactly when ``rho`` is a mixture of Bell states.
    """
    rho = np.asarray(rho, dtype=complex)
    if rho.shape != (4, 4):
        raise ValueError("expected a two-qubit density matrix")
    basis = bell_basis()
    w = np.array([np.vdot(b, rho @ b).real for b in basis])
    diag = sum(wk * outer_product(b) for wk, b in zip(w, basis))
    return BellDiagonal(*w), float(np.linalg.norm(rho - diag))


def bloch_action(channel: PauliChannel) -> np.ndarray:
    """Shrinking factors of the Bloch-vector components under the channel."""
    px, py, pz = channel.as_array()
    return np.array([1 - 2 * (py + pz), 1 - 2 * (px + pz), 1 - 2 * (px + py)])


def sample_error(channel: PauliChannel, seed=None, size: int | None = None):
    """Draw Pauli errors from the channel's distribution.

    ``seed`` is anything ``numpy.random.default_rng`` accepts, including an
    existing ``Generator``. With ``size=None`` a single ``PauliError`` is
    returned, otherwise an integer array of ``PauliError`` values.
    """
    rng = np.random.default_rng(seed)
    probs = np.clip(channel.probabilities, 0, None)
    draws = rng.choice(4, size=size, p=probs / probs.sum())
    if size is None:
        return PauliError(int(draws))
    return draws
