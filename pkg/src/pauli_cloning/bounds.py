"""No-cloning frontier, symmetric-cloner ellipsoid and capacity upper bound."""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass

import numpy as np

from .bell import Partition, repartition
from .cloner import DEPOLARIZING_TOL
from .pauli_channel import PauliChannel

# frontier x^2 + x'^2 + x x' = 1/4: minor axis along (1, 1)
FRONTIER_SEMIMINOR = 1 / np.sqrt(6)
FRONTIER_SEMIMAJOR = 1 / np.sqrt(2)
# oblate ellipsoid x^2+y^2+z^2+xy+xz+yz = 1/2, symmetry axis (1, 1, 1)
ELLIPSOID_POLAR_RADIUS = 0.5
ELLIPSOID_EQUATORIAL_RADIUS = 1.0
UCM_POINT = 1 / np.sqrt(12)

FRONTIER_LEVEL = 0.25
ELLIPSOID_LEVEL = 0.5
# slack for frontier violations in randomized sweeps
SWEEP_TOL = 1e-9
_SHARD_SIZE = 10_000


@dataclass(frozen=True)
class FrontierPoint:
    """Pair of copy-error amplitudes; each copy is depolarizing with p = 3 x^2."""

    x: float
    xp: float

    @property
    def p(self) -> float:
        return 3 * self.x**2

    @property
    def pp(self) -> float:
        return 3 * self.xp**2

    def as_dict(self) -> dict:
        return {"x": self.x, "xp": self.xp, "p": self.p, "pp": self.pp}


@dataclass(frozen=True)
class CapacityBound:
    q: float
    upper: float
    vanishing: bool


@dataclass(frozen=True)
class FrontierReport:
    """Outcome of ``verify_frontier``.

    ``tested`` samples had both copies depolarizing and were checked directly.
    The rest are ``skipped`` for the direct check but still checked after
    twirling: averaging a cloner over the Clifford group turns each copy's
    channel into a depolarizing one with the same total error p, so
    (sqrt(p/3), sqrt(p'/3)) must also respect the frontier. ``min_lhs`` is the
    smallest value of the no-cloning form over all samples.
    """

    n_samples: int
    seed: int | None
    tested: int
    skipped: int
    violations: int
    twirled_violations: int
    min_lhs: float

    @property
    def ok(self) -> bool:
        return self.violations == 0 and self.twirled_violations == 0

    def as_dict(self) -> dict:
        return asdict(self)


def _check_nonneg(*vals):
    if any(not np.isfinite(t) or t < 0 for t in vals):
        raise ValueError(f"arguments must be finite and nonnegative, got {vals!r}")


def no_cloning_lhs(x: float, xp: float) -> float:
    """x^2 + x'^2 + x x'; physically reachable pairs give at least 1/4."""
    _check_nonneg(x, xp)
    return x * x + xp * xp + x * xp


def frontier_partner(x: float) -> float:
    """The x' >= 0 that puts (x, x') on the frontier."""
    _check_nonneg(x)
    if x > 0.5:
        raise ValueError(f"x must lie in [0, 1/2], got {x!r}")
    return max(0.0, (np.sqrt(1 - 3 * x * x) - x) / 2)


def ellipsoid_q(x: float, y: float, z: float) -> float:
    _check_nonneg(x, y, z)
    return x * x + y * y + z * z + x * y + x * z + y * z


def capacity_upper_bound(channel: PauliChannel, tol: float = 1e-12) -> CapacityBound:
    """Upper bound on the quantum capacity of a Pauli channel.

    Interpolates linearly between the perfect channel and the symmetric
    cloner surface: C <= 1 - 2 q with q the ellipsoid form of
    (sqrt(px), sqrt(py), sqrt(pz)). Channels on or beyond the surface have
    zero capacity. Only defined for px, py, pz <= 1/2.

    ``tol`` is the slack below 1/2 at which q still counts as on the surface;
    loosen it when the probabilities are themselves rounded.
    """
    probs = channel.as_array()
    if np.any(probs > 0.5):
        raise ValueError(f"bound requires px, py, pz <= 1/2, got {probs.tolist()!r}")
    q = ellipsoid_q(*np.sqrt(probs))
    vanishing = q >= ELLIPSOID_LEVEL - tol
    upper = 0.0 if vanishing else max(0.0, 1 - 2 * q)
    return CapacityBound(q=float(q), upper=float(upper), vanishing=bool(vanishing))


def _random_real_params(rng: np.random.Generator, n: int) -> np.ndarray:
    a = np.abs(rng.normal(size=(n, 4)))
    return a / np.linalg.norm(a, axis=1, keepdims=True)


def _sweep_shard(args) -> tuple[int, int, int, float]:
    seed_seq, n = args
    rng = np.random.default_rng(seed_seq)
    amps = _random_real_params(rng, n)
    # weights (Phi+, Phi-, Psi+, Psi-) of reference/output pairs
    w1 = amps**2
    w2 = repartition(amps, Partition.AB_CD, Partition.AC_BD) ** 2
    dep1 = np.ptp(w1[:, 1:], axis=1) < DEPOLARIZING_TOL
    dep2 = np.ptp(w2[:, 1:], axis=1) < DEPOLARIZING_TOL
    both = dep1 & dep2
    x1 = np.sqrt((1 - w1[:, 0]) / 3)
    x2 = np.sqrt((1 - w2[:, 0]) / 3)
    lhs = x1 * x1 + x2 * x2 + x1 * x2
    violations = int(np.sum(lhs[both] < FRONTIER_LEVEL - SWEEP_TOL))
    twirled = int(np.sum(lhs[~both] < FRONTIER_LEVEL - SWEEP_TOL))
    return int(both.sum()), violations, twirled, float(lhs.min())


def verify_frontier(n_samples: int, seed: int | None = None, workers: int = 1) -> FrontierReport:
    """Check the no-cloning inequality on randomly drawn real cloners.

    Amplitudes are |Gaussian| 4-vectors, normalized. Samples are split into
    fixed-size shards, each with its own child seed, so the report depends on
    ``seed`` only and not on ``workers``.
    """
    if int(n_samples) != n_samples or n_samples < 1:
        raise ValueError(f"n_samples must be a positive integer, got {n_samples!r}")
    n_samples = int(n_samples)
    sizes = [_SHARD_SIZE] * (n_samples // _SHARD_SIZE)
    if n_samples % _SHARD_SIZE:
        sizes.append(n_samples % _SHARD_SIZE)
    children = np.random.SeedSequence(seed).spawn(len(sizes))
    jobs = list(zip(children, sizes))
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_sweep_shard, jobs))
    else:
        results = [_sweep_shard(job) for job in jobs]
    tested = sum(r[0] for r in results)
    return FrontierReport(
        n_samples=n_samples,
        seed=seed,
        tested=tested,
        skipped=n_samples - tested,
        violations=sum(r[1] for r in results),
        twirled_violations=sum(r[2] for r in results),
        min_lhs=min(r[3] for r in results),
    )


def ellipse_mesh(n: int) -> list[FrontierPoint]:
    """``n`` points on the frontier from (0, 1/2) to (1/2, 0)."""
    if n < 2:
        raise ValueError("mesh needs at least two points")
    return [FrontierPoint(float(x), frontier_partner(float(x))) for x in np.linspace(0, 0.5, n)]


def ellipsoid_mesh(n: int) -> list[tuple[float, float, float]]:
    """First-octant points of the symmetric-cloner ellipsoid.

    Directions come from an ``n`` x ``n`` grid in polar angle and azimuth,
    each scaled radially onto the surface. The z axis is emitted once, so the
    mesh has ``1 + (n - 1) * n`` points.
    """
    if n < 2:
        raise ValueError("mesh needs at least two points")
    points = []
    for i, theta in enumerate(np.linspace(0, np.pi / 2, n)):
        for phi in np.linspace(0, np.pi / 2, n)[: 1 if i == 0 else None]:
            u = np.array([np.sin(theta) * np.cos(phi), np.sin(theta) * np.sin(phi), np.cos(theta)])
            # cos(pi/2) is 6e-17, not 0
            u[np.abs(u) < 1e-15] = 0.0
            x, y, z = u / np.sqrt(2 * ellipsoid_q(*u))
            points.append((float(x), float(y), float(z)))
    return points
