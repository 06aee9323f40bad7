"""Command-line front end: ``solve``, ``verify`` and ``bench``.

Exit codes: 0 converged / verified, 2 not converged or residual above
tolerance, 1 usage or I/O error.  Diagnostics go to stderr; data goes to
the files named by flags (CSV logs, phase JSON) or to stdout.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from . import io as qio
from .chebyshev import evaluate_series
from .jacobian import jacobian_mps_real
from .linalg import condition_estimate
from .qsp import evaluate_g_real
from .solvers import NewtonBreakdown, SolverConfig, SolverReport, residual_l1, solve
from .targets import TargetSpec, build_target
from .types import InvalidInputError

log = logging.getLogger("qspnewton")

EXIT_OK, EXIT_ERROR, EXIT_NOT_CONVERGED = 0, 1, 2

LOG_HEADER = ["iter", "residual_l1", "elapsed_ms"]
BENCH_HEADER = [
    "target", "degree", "scale", "method", "iterations", "residual_l1", "wall_ms", "cond_estimate",
]
DEFAULT_SCALES = (0.5, 0.9, 0.99, 0.999)


class UsageError(Exception):
    pass


def _num(v: Optional[float]) -> str:
    # repr gives the shortest string that parses back to the same double
    return "" if v is None else repr(float(v))


def _opt_float(s: str) -> Optional[float]:
    return None if s == "" else float(s)


@dataclass
class RunRecord:
    """Everything needed to rerun a solve and compare its outcome."""

    command: list
    target: TargetSpec
    method: str
    residual_tol: float
    max_iter: int
    degree: int
    converged: bool
    iterations: int
    residual_history: list = field(default_factory=list)
    elapsed_ms: list = field(default_factory=list)
    wall_ms: float = 0.0
    cond_estimate: Optional[float] = None
    seed: int = 7
    outputs: dict = field(default_factory=dict)

    @classmethod
    def from_run(cls, command, spec, cfg: SolverConfig, degree: int, report: SolverReport, outputs=None):
        return cls(
            command=list(command),
            target=spec,
            method=cfg.method,
            residual_tol=cfg.residual_tol,
            max_iter=cfg.max_iter,
            degree=degree,
            converged=report.converged,
            iterations=report.iterations,
            residual_history=list(report.residual_history),
            elapsed_ms=[1e3 * t for t in report.elapsed],
            wall_ms=1e3 * report.wall_time,
            cond_estimate=report.condition_estimate,
            seed=cfg.seed,
            outputs=dict(outputs or {}),
        )

    @property
    def residual(self) -> float:
        return self.residual_history[-1] if self.residual_history else float("nan")

    def to_json(self) -> str:
        d = asdict(self)
        d["target"] = self.target.to_dict()
        return json.dumps(d, indent=1)

    @classmethod
    def from_json(cls, text: str) -> "RunRecord":
        d = json.loads(text)
        d["target"] = TargetSpec(**d["target"])
        return cls(**d)

    # per-iteration convergence log
    def log_rows(self):
        for k, (r, t) in enumerate(zip(self.residual_history, self.elapsed_ms)):
            yield [str(k), _num(r), _num(t)]

    def with_log(self, rows) -> "RunRecord":
        """Copy with history replaced by parsed ``iter,residual_l1,elapsed_ms`` rows."""
        res = [float(r["residual_l1"]) for r in rows]
        ms = [float(r["elapsed_ms"]) for r in rows]
        return RunRecord(**{**self.__dict__, "residual_history": res, "elapsed_ms": ms})

    # one row of a bench table
    def bench_row(self) -> dict:
        return {
            "target": self.target.label(),
            "degree": str(self.degree),
            "scale": _num(self.target.scale),
            "method": self.method,
            "iterations": str(self.iterations),
            "residual_l1": _num(self.residual),
            "wall_ms": _num(self.wall_ms),
            "cond_estimate": _num(self.cond_estimate),
        }

    @classmethod
    def from_bench_row(cls, row: dict, residual_tol: float = 1e-12, max_iter: Optional[int] = None):
        spec = TargetSpec.from_label(row["target"], scale=_opt_float(row["scale"]))
        if spec.kind == "gaussian":
            spec.degree = int(row["degree"])
        residual = float(row["residual_l1"])
        cfg = SolverConfig(method=row["method"], residual_tol=residual_tol, max_iter=max_iter)
        return cls(
            command=[],
            target=spec,
            method=cfg.method,
            residual_tol=cfg.residual_tol,
            max_iter=cfg.max_iter,
            degree=int(row["degree"]),
            converged=residual < residual_tol,
            iterations=int(row["iterations"]),
            residual_history=[residual],
            wall_ms=float(row["wall_ms"]),
            cond_estimate=_opt_float(row["cond_estimate"]),
        )


def write_log(path, record: RunRecord) -> None:
    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh)
        w.writerow(LOG_HEADER)
        w.writerows(record.log_rows())


def read_csv(path) -> list:
    with open(path, newline="", encoding="utf-8") as fh:
        return list(csv.DictReader(fh))


def bench_csv(records) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=BENCH_HEADER, lineterminator="\n")
    w.writeheader()
    for r in records:
        w.writerow(r.bench_row())
    return buf.getvalue()


# ---------------------------------------------------------------- argparse


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on bad flags; 2 is reserved for "not converged"
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _float_list(text: str) -> list:
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"not a comma-separated list of numbers: {text!r}") from exc


def _add_target_flags(p: argparse.ArgumentParser, required: bool) -> None:
    g = p.add_argument_group("target")
    g.add_argument("--target", choices=["cos", "sin", "gaussian", "file"], required=required)
    g.add_argument("--tau", type=float, help="evolution time for cos/sin targets")
    g.add_argument("--mu", type=float, help="gaussian center")
    g.add_argument("--sigma", type=float, help="gaussian width")
    g.add_argument("--degree", type=int, help="gaussian polynomial degree (even)")
    g.add_argument("--scale", type=float, help="rescale the target to this sup-norm")
    g.add_argument("--eps0", type=float, default=1e-14, help="Jacobi-Anger truncation accuracy")
    g.add_argument("--coef-file", help="coefficient JSON (implies --target file)")


def _spec_from_args(args) -> TargetSpec:
    kind = args.target
    if args.coef_file is not None:
        if kind not in (None, "file"):
            raise UsageError("--coef-file only goes with --target file")
        kind = "file"
    if kind is None:
        raise UsageError("give --target or --coef-file")
    return TargetSpec(
        kind=kind, tau=args.tau, mu=args.mu, sigma=args.sigma, degree=args.degree,
        path=args.coef_file, scale=args.scale, eps0=args.eps0,
    )


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="qspnewton", description="Symmetric QSP phase factors by Newton's method.")
    parser.add_argument("-v", "--verbose", action="store_true", help="log every iteration to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("solve", help="compute phase factors for a target")
    _add_target_flags(p, required=False)
    p.add_argument("--method", choices=["newton", "fpi"], default="newton")
    p.add_argument("--tol", type=float, default=1e-12, help="stop when ||F(phi) - c||_1 < tol")
    p.add_argument("--max-iter", type=int, help="default 100 (newton) / 100000 (fpi)")
    p.add_argument("--out", help="write reduced phases here (JSON)")
    p.add_argument("--log", help="write the convergence log here (CSV)")
    p.add_argument("--record", help="write a JSON run record here")
    p.add_argument("--cond", action="store_true", help="estimate cond(DF) at the result")
    p.add_argument("--seed", type=int, default=7, help="start vector seed for --cond")
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("verify", help="check phase factors against a target")
    p.add_argument("--phases", required=True, help="reduced phase JSON")
    _add_target_flags(p, required=False)
    p.add_argument("--grid", type=int, default=1000, help="points for the pointwise check")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--cond", action="store_true")
    p.add_argument("--seed", type=int, default=7)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("bench", help="run a suite of solves and print a CSV table")
    p.add_argument("--suite", choices=["hamiltonian", "gaussian"], required=True)
    p.add_argument("--tau-list", type=_float_list, default=[100.0], help="hamiltonian suite, e.g. 100,500")
    p.add_argument("--scale-list", type=_float_list, default=list(DEFAULT_SCALES))
    p.add_argument("--methods", "--method", type=lambda s: [m for m in s.split(",") if m], default=["newton"])
    p.add_argument("--mu", type=float, default=0.5)
    p.add_argument("--sigma", type=float, default=0.01)
    p.add_argument("--degree", type=int, default=100)
    p.add_argument("--eps0", type=float, default=1e-14)
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--max-iter", type=int)
    p.add_argument("--cond", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--seed", type=int, default=7)
    p.add_argument("--out", help="write the CSV here instead of stdout")
    p.set_defaults(func=cmd_bench)
    return parser


# ---------------------------------------------------------------- commands


def run_solve(spec: TargetSpec, cfg: SolverConfig, command=()):
    """Build the target and solve; returns (phases, record)."""
    c = build_target(spec)
    try:
        phi, report = solve(c, cfg)
    except NewtonBreakdown as exc:
        print(f"newton breakdown: {exc}", file=sys.stderr)
        phi, report = exc.phases, exc.report
    return phi, RunRecord.from_run(command, spec, cfg, c.degree, report)


def cmd_solve(args) -> int:
    spec = _spec_from_args(args)
    cfg = SolverConfig(
        method=args.method, residual_tol=args.tol, max_iter=args.max_iter,
        condition=args.cond, seed=args.seed,
    )
    phi, record = run_solve(spec, cfg, sys.argv[1:])
    for key in ("out", "log", "record"):
        if getattr(args, key):
            record.outputs[key] = getattr(args, key)
    if args.out:
        qio.save_phases(args.out, phi)
    if args.log:
        write_log(args.log, record)
    if args.record:
        Path(args.record).write_text(record.to_json() + "\n", encoding="utf-8")

    status = "converged" if record.converged else "not converged"
    print(
        f"{spec.label()} degree={record.degree} method={record.method} {status} "
        f"iterations={record.iterations} residual_l1={record.residual:.3e} "
        f"wall_ms={record.wall_ms:.1f}"
        + ("" if record.cond_estimate is None else f" cond={record.cond_estimate:.6g}")
    )
    return EXIT_OK if record.converged else EXIT_NOT_CONVERGED


def cmd_verify(args) -> int:
    phi = qio.load_phases(args.phases)
    c = build_target(_spec_from_args(args))
    if args.grid < 2:
        raise UsageError("--grid must be at least 2")
    res = residual_l1(phi, c)
    x = np.cos(np.linspace(0.0, np.pi, args.grid))
    pointwise = float(np.max(np.abs(evaluate_g_real(x, phi) - evaluate_series(c, x))))
    print(f"residual_l1 {res:.6e}")
    print(f"max_pointwise_error {pointwise:.6e}")
    if args.cond:
        print(f"cond_estimate {condition_estimate(jacobian_mps_real(phi), seed=args.seed):.12g}")
    return EXIT_OK if res < args.tol else EXIT_NOT_CONVERGED


def bench_specs(args) -> list:
    if not args.scale_list:
        raise UsageError("--scale-list is empty")
    if args.suite == "hamiltonian":
        if not args.tau_list:
            raise UsageError("--tau-list is empty")
        return [
            TargetSpec("cos", tau=tau, scale=a, eps0=args.eps0)
            for tau in args.tau_list for a in args.scale_list
        ]
    return [
        TargetSpec("gaussian", mu=args.mu, sigma=args.sigma, degree=args.degree, scale=a)
        for a in args.scale_list
    ]


def cmd_bench(args) -> int:
    specs = bench_specs(args)
    if not args.methods:
        raise UsageError("--methods is empty")
    records = []
    for spec in specs:
        for method in args.methods:
            cfg = SolverConfig(
                method=method, residual_tol=args.tol, max_iter=args.max_iter,
                record_history=False, condition=args.cond, seed=args.seed,
            )
            _, record = run_solve(spec, cfg, sys.argv[1:])
            log.info("%s %s: %d iterations", spec.label(), method, record.iterations)
            records.append(record)
    table = bench_csv(records)
    if args.out:
        Path(args.out).write_text(table, encoding="utf-8")
    else:
        sys.stdout.write(table)
    return EXIT_OK if all(r.converged for r in records) else EXIT_NOT_CONVERGED


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(
        level=logging.DEBUG if args.verbose else logging.WARNING,
        format="%(name)s: %(message)s",
    )
    try:
        return args.func(args)
    except (UsageError, InvalidInputError, OSError) as exc:
        print(f"qspnewton {args.command}: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
