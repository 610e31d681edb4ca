"""Command-line front end.

Subcommands: evolve, correlate, oracle, ito, verify, classical.  Exit codes:
0 success, 1 validation/usage error, 2 numerical property violation,
3 I/O error.  Outputs are deterministic for fixed inputs and seed.
"""

from __future__ import annotations

import argparse
import os
import sys

import numpy as np

from . import io
from .classical import compare_quantum_classical, diagonal_invariance_check
from .collision import (
    CollisionConfig,
    DEFAULT_BUDGET,
    ito_table_check,
    oracle_kernel_joint_mixed,
    oracle_kernel_sequential,
)
from .errors import QRegressError, ValidationError
from .linalg import mat_exp, unvec, vec
from .model import atom_model
from .regression import kernel_heisenberg, kernel_schrodinger
from .semigroup import generator_matrix
from .verify import run_all

EXIT_OK = 0
EXIT_VALIDATION = 1
EXIT_NUMERICAL = 2
EXIT_IO = 3

MODES = ("qrt-schrodinger", "qrt-heisenberg", "oracle-seq", "oracle-joint")


class UsageError(Exception):
    pass


class NumericalViolation(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _collision_config(args) -> CollisionConfig:
    budget = args.budget
    if budget is None:
        budget = int(os.environ.get("QREGRESS_BUDGET", DEFAULT_BUDGET))
    return CollisionConfig(dt=args.dt, trunc=args.trunc, budget=budget)


def cmd_evolve(args) -> int:
    model = io.load_model(args.model)
    rho = io.load_density(args.rho)
    if args.steps < 1:
        raise UsageError(f"--steps must be >= 1, got {args.steps}")
    if not args.t_end > 0:
        raise UsageError(f"--t-end must be positive, got {args.t_end}")
    d = model.dim
    gen = generator_matrix(model, "schrodinger").mat
    step = mat_exp(gen * (args.t_end / args.steps))
    header = ["t"]
    for i in range(d):
        for j in range(d):
            header += [f"rho_{i}_{j}_re", f"rho_{i}_{j}_im"]
    header.append("trace")
    lines = [",".join(header)]
    v = vec(rho.rho)
    for k in range(args.steps + 1):
        t = k * args.t_end / args.steps
        sigma = unvec(v, d)
        trace = np.trace(sigma)
        if abs(trace - 1.0) > 1e-10:
            raise NumericalViolation(
                f"trace drifted to {trace:.12g} at t = {t:.6g}"
            )
        row = [io.format_float(t)]
        for i in range(d):
            for j in range(d):
                row += [io.format_float(sigma[i, j].real), io.format_float(sigma[i, j].imag)]
        row.append(io.format_float(trace.real))
        lines.append(",".join(row))
        v = step @ v
    io.write_output("\n".join(lines) + "\n", args.out)
    return EXIT_OK


def _correlate_value(args, model, rho, query) -> complex:
    if args.mode == "qrt-schrodinger":
        return kernel_schrodinger(model, rho, query)
    if args.mode == "qrt-heisenberg":
        return kernel_heisenberg(model, rho, query)
    cfg = _collision_config(args)
    if args.mode == "oracle-seq":
        return oracle_kernel_sequential(model, rho, query, cfg)
    if args.mode == "oracle-joint":
        return oracle_kernel_joint_mixed(model, rho, query, cfg)
    raise UsageError(f"unknown mode {args.mode!r}")


def cmd_correlate(args) -> int:
    model = io.load_model(args.model)
    rho = io.load_density(args.rho)
    query = io.load_query(args.query)
    value = _correlate_value(args, model, rho, query)
    result = {
        "value": io.complex_pair(value),
        "mode": args.mode,
        "query": io.query_echo(query),
    }
    if args.mode.startswith("oracle"):
        result["dt"] = args.dt
        result["trunc"] = args.trunc
    io.write_output(io.json_text(result), args.out)
    return EXIT_OK


def cmd_oracle(args) -> int:
    """Convergence report: oracle kernel at dt and dt/2 against the exact one."""
    model = io.load_model(args.model)
    rho = io.load_density(args.rho)
    query = io.load_query(args.query)
    exact = kernel_schrodinger(model, rho, query)
    runs = []
    for dt in (args.dt, args.dt / 2):
        cfg = _collision_config(args)
        cfg = CollisionConfig(dt=dt, trunc=cfg.trunc, budget=cfg.budget)
        if args.mode == "oracle-joint":
            value = oracle_kernel_joint_mixed(model, rho, query, cfg)
        else:
            value = oracle_kernel_sequential(model, rho, query, cfg)
        runs.append({"dt": dt, "value": io.complex_pair(value), "abs_error": abs(value - exact)})
    ratio = runs[0]["abs_error"] / runs[1]["abs_error"] if runs[1]["abs_error"] else float("inf")
    result = {
        "mode": args.mode,
        "exact": io.complex_pair(exact),
        "runs": runs,
        "halving_ratio": ratio,
    }
    io.write_output(io.json_text(result), args.out)
    return EXIT_OK


def cmd_ito(args) -> int:
    report = ito_table_check(CollisionConfig(dt=args.dt, trunc=args.trunc))
    result = {
        "dt": args.dt,
        "trunc": args.trunc,
        "moments": {
            "bb_dag": io.complex_pair(report.bb_dag),
            "bdag_b": io.complex_pair(report.bdag_b),
            "bb": io.complex_pair(report.bb),
            "bdag_bdag": io.complex_pair(report.bdag_bdag),
        },
        "expected": {
            "bb_dag": [args.dt, 0.0],
            "bdag_b": [0.0, 0.0],
            "bb": [0.0, 0.0],
            "bdag_bdag": [0.0, 0.0],
        },
        "max_moment_error": report.moment_error,
        "commutator_defect": report.commutator_defect,
    }
    io.write_output(io.json_text(result), args.out)
    if report.moment_error > 1e-15 or report.commutator_defect > 1e-15:
        raise NumericalViolation(
            f"vacuum moments deviate by {report.moment_error:.3g}"
        )
    return EXIT_OK


def cmd_classical(args) -> int:
    model = io.load_model(args.model)
    rho = io.load_density(args.rho)
    query = io.load_query(args.query)
    invariant, Q_col = diagonal_invariance_check(model)
    if not invariant:
        raise ValidationError("model does not preserve the diagonal subalgebra")
    comparison = compare_quantum_classical(model, rho, query)
    result = {
        "quantum": io.complex_pair(comparison.quantum),
        "classical": comparison.classical,
        "diff": comparison.diff,
        "generator_columns": [[float(x) for x in row] for row in Q_col],
    }
    io.write_output(io.json_text(result), args.out)
    return EXIT_OK


def cmd_verify(args) -> int:
    extra = []
    if args.model is not None:
        extra.append(io.load_model(args.model))
    else:
        extra.append(atom_model(1.0))
    results = run_all(seed=args.seed, extra_models=extra)
    width = max(len(r.name) for r in results)
    lines = []
    for r in results:
        status = "PASS" if r.passed else "FAIL"
        lines.append(f"{status} {r.name:<{width}}  measured={r.measured:.6e}  bound={r.bound}")
    report = "\n".join(lines) + "\n"
    print(report, end="")
    if args.out is not None:
        payload = {
            "seed": args.seed,
            "checks": [
                {"name": r.name, "measured": r.measured, "bound": r.bound, "passed": r.passed}
                for r in results
            ],
        }
        io.write_output(io.json_text(payload), args.out)
    if not all(r.passed for r in results):
        failed = ", ".join(r.name for r in results if not r.passed)
        raise NumericalViolation(f"failed checks: {failed}")
    return EXIT_OK


def _add_io_flags(p, rho=True, query=False):
    p.add_argument("--model", required=True, help="model JSON file")
    if rho:
        p.add_argument("--rho", required=True, help="density operator JSON file")
    if query:
        p.add_argument("--query", required=True, help="correlation query JSON file")
    p.add_argument("--out", default=None, help="output path (default stdout)")


def _add_collision_flags(p):
    p.add_argument("--dt", type=float, default=0.01, help="collision step")
    p.add_argument("--trunc", type=int, default=2, help="ancilla truncation")
    p.add_argument("--budget", type=int, default=None,
                   help="joint-mode state-vector entry budget "
                        "(env QREGRESS_BUDGET, default 200000)")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qregress", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("evolve", help="reduced time evolution as CSV")
    _add_io_flags(p)
    p.add_argument("--t-end", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.set_defaults(func=cmd_evolve)

    p = sub.add_parser("correlate", help="multi-time correlation kernel")
    _add_io_flags(p, query=True)
    p.add_argument("--mode", choices=MODES, default="qrt-schrodinger")
    _add_collision_flags(p)
    p.set_defaults(func=cmd_correlate)

    p = sub.add_parser("oracle", help="oracle convergence report at dt and dt/2")
    _add_io_flags(p, query=True)
    p.add_argument("--mode", choices=("oracle-seq", "oracle-joint"), default="oracle-seq")
    _add_collision_flags(p)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("ito", help="vacuum increment moments")
    p.add_argument("--dt", type=float, default=0.01)
    p.add_argument("--trunc", type=int, default=2)
    p.add_argument("--out", default=None)
    p.set_defaults(func=cmd_ito)

    p = sub.add_parser("verify", help="run every property suite")
    p.add_argument("--model", default=None, help="extra model to include in the suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--out", default=None, help="also write a JSON report here")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("classical", help="quantum vs classical chain comparison")
    _add_io_flags(p, query=True)
    p.set_defaults(func=cmd_classical)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except QRegressError as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    except NumericalViolation as exc:
        print(f"numerical property violation: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
