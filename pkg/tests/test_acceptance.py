"""Acceptance criteria, one test each.

Every test records a PASS/FAIL line that is echoed in the pytest terminal
summary. Run directly with ``python tests/test_acceptance.py`` to get the
same lines without pytest.
"""

import time

import numpy as np

from pauli_cloning.bell import (
    BellKind,
    Partition,
    double_bell_coefficients,
    double_bell_state,
    repartition,
)
from pauli_cloning.bounds import capacity_upper_bound, ellipsoid_q, verify_frontier
from pauli_cloning.cloner import (
    PcmParams,
    asymmetric_depolarizing_params,
    best_triplicator_map,
    clone,
    output_channels,
    output_channels_numeric,
    symmetric_params,
    triplicator_params,
    ucm_params,
)
from pauli_cloning.linalg import outer_product, random_state
from pauli_cloning.pauli_channel import PauliChannel, apply

from conftest import ACCEPTANCE_LINES, random_complex_amps

SEED = 1998


def record(name: str, ok: bool, detail: str):
    line = f"[{'PASS' if ok else 'FAIL'}] {name}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def test_ac1_ucm_fidelity():
    rng = np.random.default_rng(SEED)
    start = time.perf_counter()
    worst = 0.0
    params = ucm_params()
    for _ in range(100):
        report = clone(params, random_state(rng))
        worst = max(worst, abs(report.fidelity_y1 - 5 / 6), abs(report.fidelity_y2 - 5 / 6))
    elapsed = time.perf_counter() - start
    record("AC1 UCM fidelity 5/6", worst <= 1e-12 and elapsed < 1, f"max dev {worst:.1e}, {elapsed:.3f}s")


def test_ac2_table_oracle():
    rng = np.random.default_rng(SEED)
    start = time.perf_counter()
    amps = random_complex_amps(rng, 10_000)
    basis_ab = np.array([double_bell_state(k, k, Partition.AB_CD) for k in BellKind])
    psi = amps @ basis_ab  # explicit 16-dimensional states
    worst = 0.0
    for part in (Partition.AC_BD, Partition.AD_BC):
        basis = np.array([double_bell_state(k, k, part) for k in BellKind])
        projected = psi @ basis.conj().T
        worst = max(worst, np.max(np.abs(projected - repartition(amps, Partition.AB_CD, part))))
    elapsed = time.perf_counter() - start
    record("AC2 Table-1 oracle", worst <= 1e-12 and elapsed < 10, f"max dev {worst:.1e}, {elapsed:.3f}s")


def test_ac3_phi_plus_identity():
    closed = repartition([1, 0, 0, 0], Partition.AB_CD, Partition.AC_BD)
    psi = double_bell_state(BellKind.PHI_PLUS, BellKind.PHI_PLUS, Partition.AB_CD)
    numeric = double_bell_coefficients(psi, Partition.AC_BD)
    dev = max(np.max(np.abs(closed - 0.5)), np.max(np.abs(numeric - 0.5 * np.eye(4))))
    record("AC3 Phi+Phi+ -> 1/2(...) in ac;bd", dev <= 1e-14, f"max dev {dev:.1e}")


def test_ac4_output_channel_oracle():
    rng = np.random.default_rng(SEED)
    start = time.perf_counter()
    worst = worst_res = 0.0
    for amps in random_complex_amps(rng, 10_000):
        params = PcmParams(amps)
        numeric, residuals = output_channels_numeric(params)
        for a, b in zip(output_channels(params), numeric):
            worst = max(worst, np.max(np.abs(a.as_array() - b.as_array())))
        worst_res = max(worst_res, max(residuals))
    elapsed = time.perf_counter() - start
    ok = worst <= 1e-12 and worst_res < 1e-12 and elapsed < 30
    record("AC4 output-channel oracle", ok, f"max dev {worst:.1e}, max residual {worst_res:.1e}, {elapsed:.2f}s")


def test_ac5_frontier_saturation():
    worst = 0.0
    for x in np.linspace(0, 0.5, 1000):
        y1, y2, _ = output_channels(asymmetric_depolarizing_params(x))
        x1, x2 = np.sqrt(y1.p / 3), np.sqrt(y2.p / 3)
        worst = max(worst, abs(x1 * x1 + x2 * x2 + x1 * x2 - 0.25))
    first = output_channels(asymmetric_depolarizing_params(0.0))
    last = output_channels(asymmetric_depolarizing_params(0.5))
    ends = max(
        abs(first[0].p - 0),
        abs(first[1].p - 0.75),
        abs(last[0].p - 0.75),
        abs(last[1].p - 0),
    )
    ok = worst <= 1e-13 and ends <= 1e-13
    record("AC5 frontier saturation", ok, f"max dev {worst:.1e}, endpoint dev {ends:.1e}")


def test_ac6_no_violation_sweep():
    start = time.perf_counter()
    report = verify_frontier(100_000, seed=7)
    elapsed = time.perf_counter() - start
    ok = report.violations == 0 and report.twirled_violations == 0 and elapsed < 60
    record(
        "AC6 no-violation sweep",
        ok,
        f"violations {report.violations} (tested {report.tested}), "
        f"twirled violations {report.twirled_violations}, min lhs {report.min_lhs:.6f}, {elapsed:.2f}s",
    )


def test_ac7_capacity_zeros():
    named = [PauliChannel(1 / 12, 1 / 12, 1 / 12), PauliChannel(1 / 6, 0, 1 / 6), PauliChannel(0, 0, 0.5)]
    bounds = [capacity_upper_bound(ch) for ch in named]
    dev = max(abs(b.q - 0.5) for b in bounds)
    identity = capacity_upper_bound(PauliChannel.identity())
    ok = all(b.vanishing and b.upper == 0 for b in bounds) and dev < 1e-12 and identity.upper == 1
    # channels strictly inside the surface must not be flagged
    ok = ok and not capacity_upper_bound(PauliChannel.depolarizing(0.24)).vanishing
    record("AC7 capacity zeros", ok, f"max |q - 1/2| {dev:.1e}, identity upper {identity.upper}")


def test_ac8_symmetric_family():
    rng = np.random.default_rng(SEED)
    worst_eq = worst_q = 0.0
    min_break = np.inf
    for x, y, z in rng.uniform(0, 1, size=(1000, 3)):
        params = symmetric_params(x, y, z)
        y1, y2, _ = output_channels(params)
        worst_eq = max(worst_eq, np.max(np.abs(y1.as_array() - y2.as_array())))
        worst_q = max(worst_q, abs(ellipsoid_q(*np.sqrt(y1.as_array())) - 0.5))
        v, zz, xx, yy = params.amps.real
        off = PcmParams.from_amplitudes(v + 1e-3, zz, xx, yy, normalize=True)
        b1, b2, _ = output_channels(off)
        w1 = np.append(1 - b1.p, b1.as_array())
        w2 = np.append(1 - b2.p, b2.as_array())
        min_break = min(min_break, np.max(np.abs(w1 - w2)))
    ok = worst_eq <= 1e-12 and worst_q <= 1e-12 and min_break > 1e-5
    record(
        "AC8 symmetric family",
        ok,
        f"channel dev {worst_eq:.1e}, |q - 1/2| {worst_q:.1e}, min off-constraint gap {min_break:.1e}",
    )


def test_ac9_triplicator():
    rng = np.random.default_rng(SEED)
    r6 = 1 / np.sqrt(6)
    target = np.array([1 / 6, 0, 1 / 6])
    chans = output_channels(triplicator_params(r6, r6))
    dev_ch = max(np.max(np.abs(ch.as_array() - target)) for ch in chans)
    two_pauli = PauliChannel(*target)
    dev_map = 0.0
    for _ in range(1000):
        psi = random_state(rng)
        dev_map = max(dev_map, np.max(np.abs(best_triplicator_map(psi) - apply(two_pauli, outer_product(psi)))))
    dev_fid = 0.0
    for _ in range(100):
        psi = rng.normal(size=2)
        psi /= np.linalg.norm(psi)
        dev_fid = max(dev_fid, abs(np.vdot(psi, best_triplicator_map(psi) @ psi).real - 5 / 6))
    ok = dev_ch <= 1e-12 and dev_map <= 1e-12 and dev_fid <= 1e-12
    record("AC9 triplicator", ok, f"channel dev {dev_ch:.1e}, map dev {dev_map:.1e}, fidelity dev {dev_fid:.1e}")


def test_ac10_scope_note():
    # exact capacities are out of scope; AC1-AC9 stand in for them
    ACCEPTANCE_LINES.append("[N/A ] AC10 exact Pauli-channel capacities: out of scope, covered by AC1-AC9")


if __name__ == "__main__":
    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_ac"):
            try:
                fn()
            except AssertionError:
                failed += 1
    raise SystemExit(1 if failed else 0)
