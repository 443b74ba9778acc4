"""Command-line front end.

Exit codes: 0 success, 1 verification failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

import numpy as np

from . import bounds, cloner
from .linalg import bloch_state
from .pauli_channel import PauliChannel

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _num(value):
    """Round floats to 15 significant digits so every format agrees."""
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (float, np.floating)):
        return float(f"{float(value):.15g}")
    return value


def _cell(value) -> str:
    value = _num(value)
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, float):
        return f"{value:.15g}"
    return "" if value is None else str(value)


def render(rows: list[dict], fmt: str, single: bool = False) -> str:
    rows = [{k: _num(v) for k, v in row.items()} for row in rows]
    if fmt == "json":
        return json.dumps(rows[0] if single else rows, indent=2)
    columns = list(rows[0]) if rows else []
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(columns)
        for row in rows:
            writer.writerow([_cell(row[c]) for c in columns])
        return buf.getvalue().rstrip("\n")
    cells = [[_cell(row[c]) for c in columns] for row in rows]
    widths = [max([len(c)] + [len(r[i]) for r in cells]) for i, c in enumerate(columns)]
    lines = ["  ".join(c.rjust(w) for c, w in zip(columns, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(v.rjust(w) for v, w in zip(r, widths)) for r in cells]
    return "\n".join(lines)


def real(text: str) -> float:
    """Parse a float or an exact fraction such as ``1/12``."""
    try:
        return float(Fraction(text.strip()))
    except (ValueError, ZeroDivisionError):
        try:
            return float(text)
        except ValueError:
            raise argparse.ArgumentTypeError(f"not a real number: {text!r}") from None


def _parse_probe(spec: str) -> np.ndarray:
    try:
        theta, phi = (float(t) for t in spec.split(","))
    except ValueError:
        raise UsageError(f"probe must be 'theta,phi' in radians, got {spec!r}") from None
    if not (np.isfinite(theta) and np.isfinite(phi)):
        raise UsageError("probe angles must be finite")
    return bloch_state(theta, phi)


def cmd_bound(args) -> tuple[list[dict], bool, int]:
    try:
        ch = PauliChannel(args.px, args.py, args.pz)
        cb = bounds.capacity_upper_bound(ch, tol=args.tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    row = {
        "px": ch.px,
        "py": ch.py,
        "pz": ch.pz,
        "q": cb.q,
        "capacity_upper": cb.upper,
        "vanishing": cb.vanishing,
    }
    return [row], True, EXIT_OK


def cmd_clone(args) -> tuple[list[dict], bool, int]:
    amps = np.array([args.v, args.z, args.x, args.y], dtype=float)
    if not np.all(np.isfinite(amps)):
        raise UsageError("amplitudes must be finite")
    norm = np.linalg.norm(amps)
    if norm == 0:
        raise UsageError("all amplitudes are zero")
    if abs(norm - 1) > 1e-9:
        print(f"warning: amplitudes have norm {norm:.15g}; normalizing", file=sys.stderr)
    params = cloner.PcmParams(amps / norm)
    report = cloner.clone(params, _parse_probe(args.probe))
    rows = []
    for name, ch, fid in zip(("y1", "y2", "y3"), report.channels, report.fidelities):
        rows.append(
            {
                "output": name,
                "px": ch.px,
                "py": ch.py,
                "pz": ch.pz,
                "p": ch.p,
                "fidelity": fid,
                "depolarizing": ch.is_depolarizing(cloner.DEPOLARIZING_TOL),
            }
        )
    return rows, False, EXIT_OK


def _check_mesh_size(n: int):
    if n < 2:
        raise UsageError("mesh size must be at least 2")


def cmd_frontier(args) -> tuple[list[dict], bool, int]:
    _check_mesh_size(args.n)
    return [pt.as_dict() for pt in bounds.ellipse_mesh(args.n)], False, EXIT_OK


def cmd_ellipsoid(args) -> tuple[list[dict], bool, int]:
    _check_mesh_size(args.n)
    rows = [
        {"x": x, "y": y, "z": z, "px": x * x, "py": y * y, "pz": z * z}
        for x, y, z in bounds.ellipsoid_mesh(args.n)
    ]
    return rows, False, EXIT_OK


def cmd_verify(args) -> tuple[list[dict], bool, int]:
    if args.samples < 1:
        raise UsageError("--samples must be at least 1")
    if args.workers < 1:
        raise UsageError("--workers must be at least 1")
    report = bounds.verify_frontier(args.samples, seed=args.seed, workers=args.workers)
    row = report.as_dict()
    row["ok"] = report.ok
    return [row], True, EXIT_OK if report.ok else EXIT_FAIL


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pauli-cloning",
        description="Pauli cloning machines, no-cloning frontier and Pauli-channel capacity bounds.",
    )
    parent = argparse.ArgumentParser(add_help=False)
    parent.add_argument("--format", choices=("json", "csv", "table"), default="table")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", parents=[parent], help="capacity upper bound of a Pauli channel")
    p.add_argument("--px", type=real, default=0.0)
    p.add_argument("--py", type=real, default=0.0)
    p.add_argument("--pz", type=real, default=0.0)
    p.add_argument(
        "--tol",
        type=float,
        default=1e-6,
        help="slack below q = 1/2 still reported as vanishing; covers rounded inputs",
    )
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("clone", parents=[parent], help="output channels and fidelities of a cloner")
    for name in ("v", "z", "x", "y"):
        p.add_argument(f"--{name}", type=real, default=0.0, help=f"double-Bell amplitude {name}")
    p.add_argument("--probe", default="0,0", help="probe state as 'theta,phi' Bloch angles (default |0>)")
    p.set_defaults(func=cmd_clone)

    p = sub.add_parser("frontier", parents=[parent], help="points on the no-cloning frontier")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_frontier)

    p = sub.add_parser("ellipsoid", parents=[parent], help="points on the symmetric-cloner ellipsoid")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_ellipsoid)

    p = sub.add_parser("verify", parents=[parent], help="randomized check of the no-cloning inequality")
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code is not None else EXIT_OK
    try:
        rows, single, code = args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    print(render(rows, args.format, single=single))
    return code


if __name__ == "__main__":
    sys.exit(main())
