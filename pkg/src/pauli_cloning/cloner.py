"""Pauli cloning machines described by their post-cloning four-qubit state.

A cloner is fixed by double-Bell amplitudes ``(v, z, x, y)`` in the AB_CD
pairing, with qubit a the reference entangled with the input, b and c the two
copies and d the idle qubit (the machine). Every pair of qubits then holds a
Bell-diagonal state, so each output is reached from the input through a
Pauli channel.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .bell import Partition, double_bell_superposition, repartition
from .linalg import ATOL, KET_0, as_state, fidelity_pure, outer_product, reduced_density_matrix
from .pauli_channel import (
    PauliChannel,
    apply,
    bell_diagonal_decompose,
    channel_from_bell_diagonal,
)

log = logging.getLogger(__name__)

REFERENCE, OUTPUT_1, OUTPUT_2, IDLE = 0, 1, 2, 3

# partition pairing the reference with each output y1, y2, y3
_OUTPUT_PARTITIONS = (Partition.AB_CD, Partition.AC_BD, Partition.AD_BC)

# max spread among (px, py, pz) for an output to count as depolarizing
DEPOLARIZING_TOL = 1e-9


@dataclass(frozen=True, eq=False)
class PcmParams:
    """Normalized double-Bell amplitudes ``(v, z, x, y)`` of a cloner."""

    amps: np.ndarray

    def __post_init__(self):
        amps = np.array(self.amps, dtype=complex)
        if amps.shape != (4,) or not np.all(np.isfinite(amps)):
            raise ValueError("expected four finite amplitudes (v, z, x, y)")
        if abs(np.sum(np.abs(amps) ** 2) - 1) > ATOL:
            raise ValueError("amplitudes are not normalized")
        amps.setflags(write=False)
        object.__setattr__(self, "amps", amps)

    @classmethod
    def from_amplitudes(cls, v, z, x, y, normalize: bool = False) -> PcmParams:
        amps = np.array([v, z, x, y], dtype=complex)
        if normalize:
            norm = np.linalg.norm(amps)
            if norm == 0:
                raise ValueError("all amplitudes are zero")
            amps = amps / norm
        return cls(amps)

    v = property(lambda self: self.amps[0])
    z = property(lambda self: self.amps[1])
    x = property(lambda self: self.amps[2])
    y = property(lambda self: self.amps[3])

    @property
    def real_nonneg(self) -> bool:
        return bool(np.all(np.abs(self.amps.imag) <= ATOL) and np.all(self.amps.real >= -ATOL))

    def real_amps(self) -> np.ndarray:
        """Amplitudes as reals; raises if any has an imaginary part."""
        if np.any(np.abs(self.amps.imag) > ATOL):
            raise ValueError("amplitudes are not real")
        return self.amps.real.copy()

    def __repr__(self):
        v, z, x, y = np.round(self.amps, 12)
        return f"PcmParams(v={v}, z={z}, x={x}, y={y})"


@dataclass(frozen=True)
class PcmReport:
    channel_y1: PauliChannel
    channel_y2: PauliChannel
    channel_y3: PauliChannel
    fidelity_y1: float
    fidelity_y2: float
    fidelity_y3: float
    depolarizing_y1: bool = field(init=False)
    depolarizing_y2: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "depolarizing_y1", self.channel_y1.is_depolarizing(DEPOLARIZING_TOL))
        object.__setattr__(self, "depolarizing_y2", self.channel_y2.is_depolarizing(DEPOLARIZING_TOL))

    @property
    def channels(self) -> tuple[PauliChannel, PauliChannel, PauliChannel]:
        return self.channel_y1, self.channel_y2, self.channel_y3

    @property
    def fidelities(self) -> tuple[float, float, float]:
        return self.fidelity_y1, self.fidelity_y2, self.fidelity_y3


def build_state(params: PcmParams) -> np.ndarray:
    """The 16 amplitudes of the cloner state in (a, b, c, d) order."""
    return double_bell_superposition(params.amps, Partition.AB_CD)


def _channel_from_amps(amps) -> PauliChannel:
    w = np.abs(amps) ** 2
    return PauliChannel(px=w[2], py=w[3], pz=w[1])


def output_channels(params: PcmParams) -> tuple[PauliChannel, PauliChannel, PauliChannel]:
    """Channels seen by y1, y2 and the idle qubit y3, from the amplitude table."""
    return tuple(
        _channel_from_amps(repartition(params.amps, Partition.AB_CD, part))
        for part in _OUTPUT_PARTITIONS
    )


def output_channels_numeric(params: PcmParams):
    """Same channels as ``output_channels`` by explicit partial traces.

    Returns the three channels and the Bell-diagonal residual of each
    reduced reference/output state.
    """
    psi = build_state(params)
    channels, residuals = [], []
    for out in (OUTPUT_1, OUTPUT_2, IDLE):
        weights, residual = bell_diagonal_decompose(reduced_density_matrix(psi, [REFERENCE, out]))
        channels.append(channel_from_bell_diagonal(weights))
        residuals.append(residual)
    return tuple(channels), tuple(residuals)


def clone(params: PcmParams, psi=None) -> PcmReport:
    """Run the cloner on a single-qubit probe state (``|0>`` by default)."""
    psi = KET_0 if psi is None else as_state(psi)
    if psi.shape != (2,):
        raise ValueError("probe must be a single-qubit state")
    rho_in = outer_product(psi)
    channels = output_channels(params)
    fids = [fidelity_pure(psi, apply(ch, rho_in)) for ch in channels]
    return PcmReport(*channels, *fids)


def ucm_params() -> PcmParams:
    """The universal (state-independent, symmetric) cloner, fidelity 5/6."""
    return PcmParams(np.array([np.sqrt(3 / 4), np.sqrt(1 / 12), np.sqrt(1 / 12), np.sqrt(1 / 12)]))


def asymmetric_depolarizing_params(x: float) -> PcmParams:
    """Cloner whose first copy sees a depolarizing channel with p = 3 x^2.

    The second copy then sees a depolarizing channel with
    p' = 3/4 (v - x)^2, v = sqrt(1 - 3 x^2).
    """
    if not 0 <= x <= 1 / np.sqrt(3) + ATOL:
        raise ValueError(f"x must lie in [0, 1/sqrt(3)], got {x!r}")
    v = np.sqrt(max(0.0, 1 - 3 * x**2))
    return PcmParams(np.array([v, x, x, x]))


def _check_nonneg(*vals):
    if any(not np.isfinite(t) or t < 0 for t in vals):
        raise ValueError(f"amplitudes must be finite and nonnegative, got {vals!r}")


def rescale_to_ellipsoid(x: float, y: float, z: float) -> tuple[np.ndarray, float]:
    """Scale (x, y, z) uniformly onto x^2+y^2+z^2+xy+xz+yz = 1/2.

    Returns the scaled point and the scale factor applied.
    """
    _check_nonneg(x, y, z)
    q = x * x + y * y + z * z + x * y + x * z + y * z
    if q == 0:
        raise ValueError("(x, y, z) = 0 cannot be rescaled")
    scale = 1 / np.sqrt(2 * q)
    return np.array([x, y, z]) * scale, float(scale)


def symmetric_params(x: float, y: float, z: float) -> PcmParams:
    """Symmetric cloner (both copies see the same channel), v = x + y + z.

    Any nonnegative direction is accepted and rescaled onto the normalization
    surface; the scale factor is logged at debug level.
    """
    (x, y, z), scale = rescale_to_ellipsoid(x, y, z)
    log.debug("symmetric_params rescaled input by %.15g", scale)
    return PcmParams(np.array([x + y + z, z, x, y]))


def symmetric_params_bd(x: float, y: float, z: float) -> PcmParams:
    """Cloner with equal channels on y1 and the idle qubit, v = x - y + z."""
    _check_nonneg(x, y, z)
    v = x - y + z
    norm = np.sqrt(v * v + x * x + y * y + z * z)
    if norm == 0:
        raise ValueError("(x, y, z) = 0 cannot be rescaled")
    log.debug("symmetric_params_bd rescaled input by %.15g", 1 / norm)
    return PcmParams(np.array([v, z, x, y]) / norm)


def triplicator_params(x: float, z: float) -> PcmParams:
    """State-dependent 1->3 cloner: all three outputs see one 2-Pauli channel.

    (x, z) must lie on x^2 + z^2 + xz = 1/2.
    """
    _check_nonneg(x, z)
    if abs(x * x + z * z + x * z - 0.5) > 1e-10:
        raise ValueError(f"({x!r}, {z!r}) is off the triplicator ellipse")
    amps = np.array([x + z, z, x, 0.0])
    return PcmParams(amps / np.linalg.norm(amps))


def best_triplicator_map(psi) -> np.ndarray:
    """Single-qubit output of the most symmetric triplicator.

    psi -> 1/2 |psi><psi| + 1/6 |psi*><psi*| + 1/3 I/2, with the conjugate
    taken in the computational basis.
    """
    psi = as_state(psi)
    if psi.shape != (2,):
        raise ValueError("expected a single-qubit state")
    return 0.5 * outer_product(psi) + outer_product(psi.conj()) / 6 + np.eye(2) / 6
