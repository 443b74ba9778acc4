"""Pauli cloning machines, the no-cloning frontier and Pauli-channel capacity bounds."""

from .bell import (
    BellKind,
    Partition,
    bell_state,
    double_bell_coefficients,
    double_bell_state,
    repartition,
)
from .bounds import (
    CapacityBound,
    FrontierPoint,
    FrontierReport,
    capacity_upper_bound,
    ellipse_mesh,
    ellipsoid_mesh,
    ellipsoid_q,
    frontier_partner,
    no_cloning_lhs,
    verify_frontier,
)
from .cloner import (
    PcmParams,
    PcmReport,
    asymmetric_depolarizing_params,
    best_triplicator_map,
    build_state,
    clone,
    output_channels,
    output_channels_numeric,
    symmetric_params,
    symmetric_params_bd,
    triplicator_params,
    ucm_params,
)
from .linalg import (
    bloch_vector,
    fidelity_pure,
    outer_product,
    partial_trace,
    tensor,
)
from .pauli_channel import (
    BellDiagonal,
    PauliChannel,
    PauliError,
    apply,
    bell_diagonal_decompose,
    bloch_action,
    channel_from_bell_diagonal,
    choi_state,
    sample_error,
)

__version__ = "0.1.0"
