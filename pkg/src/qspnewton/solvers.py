"""Solving F(phi) = c for reduced phase factors: Newton and fixed-point iteration."""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from .chebyshev import coefficients_from_samples, sample_grid
from .jacobian import jacobian_fd, jacobian_mps_real
from .linalg import SingularMatrixError, condition_estimate, lu_solve
from .qsp import evaluate_g_complex, evaluate_g_real
from .types import ChebyshevCoeffVector, InvalidInputError, ReducedPhaseFactors

log = logging.getLogger(__name__)

DEFAULT_MAX_ITER = {"newton": 100, "fpi": 100_000}


@dataclass
class SolverConfig:
    method: str = "newton"
    residual_tol: float = 1e-12
    max_iter: Optional[int] = None
    record_history: bool = True
    fd_check: bool = False
    initial: Optional[np.ndarray] = None
    condition: bool = False
    seed: int = 7

    def __post_init__(self):
        if self.method not in DEFAULT_MAX_ITER:
            raise InvalidInputError(f"unknown method {self.method!r}")
        if self.max_iter is None:
            self.max_iter = DEFAULT_MAX_ITER[self.method]
        if not self.residual_tol > 0:
            raise InvalidInputError("residual_tol must be positive")
        if self.max_iter < 1:
            raise InvalidInputError("max_iter must be at least 1")


@dataclass
class SolverReport:
    converged: bool = False
    iterations: int = 0
    residual_history: list = field(default_factory=list)
    elapsed: list = field(default_factory=list)
    wall_time: float = 0.0
    condition_estimate: Optional[float] = None
    fd_check_error: Optional[float] = None

    @property
    def residual(self) -> float:
        return self.residual_history[-1] if self.residual_history else float("nan")


class NewtonBreakdown(RuntimeError):
    """The Jacobian became singular; carries the iterate and report so far."""

    def __init__(self, message: str, phases: ReducedPhaseFactors, report: SolverReport):
        super().__init__(message)
        self.phases = phases
        self.report = report


def evaluate_F(phi: ReducedPhaseFactors, kernel: str = "real") -> ChebyshevCoeffVector:
    """Chebyshev coefficients of g(., phi): sample on the grid, then transform."""
    x = sample_grid(phi.degree)
    if kernel == "real":
        g = evaluate_g_real(x, phi)
    elif kernel == "complex":
        g = evaluate_g_complex(x, phi)
    else:
        raise InvalidInputError(f"unknown kernel {kernel!r}")
    return coefficients_from_samples(g, phi.parity)


def _check_pair(phi: ReducedPhaseFactors, c: ChebyshevCoeffVector):
    if phi.parity is not c.parity or phi.dtilde != c.dtilde:
        raise InvalidInputError(
            f"phases ({phi.parity.value}, {phi.dtilde}) do not match "
            f"coefficients ({c.parity.value}, {c.dtilde})"
        )


def residual_l1(phi: ReducedPhaseFactors, c: ChebyshevCoeffVector) -> float:
    """||F(phi) - c||_1."""
    _check_pair(phi, c)
    return float(np.sum(np.abs(evaluate_F(phi).coeffs - c.coeffs)))


def _initial(c: ChebyshevCoeffVector, cfg: SolverConfig) -> ReducedPhaseFactors:
    if cfg.initial is None:
        return ReducedPhaseFactors.zeros(c.dtilde, c.parity)
    phi = ReducedPhaseFactors(c.parity, cfg.initial)
    _check_pair(phi, c)
    return phi


def _iterate(c: ChebyshevCoeffVector, cfg: SolverConfig, step):
    """Shared driver: evaluate residual, stop or apply ``step``, repeat."""
    phi = _initial(c, cfg)
    report = SolverReport()
    start = time.perf_counter()
    last = None
    while True:
        f = evaluate_F(phi).coeffs
        diff = f - c.coeffs
        res = float(np.sum(np.abs(diff)))
        last = res
        if cfg.record_history:
            report.residual_history.append(res)
            report.elapsed.append(time.perf_counter() - start)
        log.debug("%s iter %d residual %.3e", cfg.method, report.iterations, res)
        if res < cfg.residual_tol:
            report.converged = True
            break
        if report.iterations >= cfg.max_iter or not np.isfinite(res):
            break
        try:
            phi = ReducedPhaseFactors(c.parity, phi.phases - step(phi, diff, report))
        except SingularMatrixError as exc:
            report.wall_time = time.perf_counter() - start
            raise NewtonBreakdown(
                f"singular Jacobian at iteration {report.iterations}", phi, report
            ) from exc
        report.iterations += 1
    if not cfg.record_history:
        report.residual_history.append(last)
        report.elapsed.append(time.perf_counter() - start)
    report.wall_time = time.perf_counter() - start
    if cfg.condition:
        report.condition_estimate = condition_estimate(jacobian_mps_real(phi), seed=cfg.seed)
    return phi, report


def newton_solve(c: ChebyshevCoeffVector, cfg: Optional[SolverConfig] = None):
    """Newton's method from phi = 0: phi <- phi - DF(phi)^{-1} (F(phi) - c).

    Returns ``(phases, report)``.  Non-convergence is reported, not raised;
    a singular Jacobian raises :class:`NewtonBreakdown`.
    """
    cfg = cfg or SolverConfig()

    def step(phi, diff, report):
        jac = jacobian_mps_real(phi)
        if cfg.fd_check and report.fd_check_error is None:
            fd = jacobian_fd(phi)
            report.fd_check_error = float(np.linalg.norm(jac - fd) / np.linalg.norm(fd))
        return lu_solve(jac, diff)

    return _iterate(c, cfg, step)


def fpi_solve(c: ChebyshevCoeffVector, cfg: Optional[SolverConfig] = None):
    """Fixed-point iteration phi <- phi - (F(phi) - c) / 2 (Newton with DF frozen at 2I)."""
    cfg = cfg or SolverConfig(method="fpi")
    return _iterate(c, cfg, lambda phi, diff, report: 0.5 * diff)


def solve(c: ChebyshevCoeffVector, cfg: Optional[SolverConfig] = None):
    cfg = cfg or SolverConfig()
    return (newton_solve if cfg.method == "newton" else fpi_solve)(c, cfg)
