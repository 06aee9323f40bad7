"""Dense LU solves and a cheap 2-norm condition estimate."""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np
import scipy.linalg


class SingularMatrixError(np.linalg.LinAlgError):
    """A pivot vanished to working precision."""


PIVOT_FLOOR = 1e-300


@dataclass(frozen=True)
class LuFactorization:
    """Packed LU factors with partial pivoting (LAPACK getrf layout)."""

    lu: np.ndarray
    piv: np.ndarray

    @classmethod
    def of(cls, a) -> "LuFactorization":
        a = np.asarray(a, dtype=float)
        if a.ndim != 2 or a.shape[0] != a.shape[1]:
            raise ValueError(f"expected a square matrix, got shape {a.shape}")
        if not np.all(np.isfinite(a)):
            raise SingularMatrixError("matrix has non-finite entries")
        with warnings.catch_warnings():
            # exact zero pivots are reported below as SingularMatrixError
            warnings.simplefilter("ignore", scipy.linalg.LinAlgWarning)
            lu, piv = scipy.linalg.lu_factor(a, check_finite=False)
        if np.min(np.abs(np.diag(lu)), initial=np.inf) < PIVOT_FLOOR:
            raise SingularMatrixError("zero pivot in LU factorization")
        return cls(lu, piv)

    def solve(self, b, trans: int = 0) -> np.ndarray:
        return scipy.linalg.lu_solve((self.lu, self.piv), b, trans=trans, check_finite=False)

    def permutation(self) -> np.ndarray:
        """Row order p such that A[p] = L U."""
        perm = np.arange(self.lu.shape[0])
        for i, j in enumerate(self.piv):
            perm[i], perm[j] = perm[j], perm[i]
        return perm

    def factors(self):
        lower = np.tril(self.lu, -1) + np.eye(self.lu.shape[0])
        return lower, np.triu(self.lu)


def lu_solve(a, b) -> np.ndarray:
    """Solve a x = b by partial-pivoted LU."""
    b = np.asarray(b, dtype=float)
    fac = LuFactorization.of(a)
    if b.shape[0] != fac.lu.shape[0]:
        raise ValueError("right-hand side does not conform")
    return fac.solve(b)


def condition_estimate(a, iterations: int = 100, seed: int | None = 7) -> float:
    """kappa_2(a) ~ sigma_max / sigma_min.

    sigma_max by power iteration on a^T a, sigma_min by inverse iteration
    with the LU factors of a.  Returns inf for a singular matrix.
    """
    a = np.asarray(a, dtype=float)
    try:
        fac = LuFactorization.of(a)
    except SingularMatrixError:
        return float("inf")
    rng = np.random.default_rng(seed)
    n = a.shape[0]

    v = rng.standard_normal(n)
    v /= np.linalg.norm(v)
    big = 0.0
    for _ in range(iterations):
        w = a.T @ (a @ v)
        big = np.linalg.norm(w)
        if big == 0.0:
            return float("inf")
        v = w / big

    u = rng.standard_normal(n)
    u /= np.linalg.norm(u)
    small_inv = 0.0
    for _ in range(iterations):
        # (a^T a)^{-1} u = a^{-1} a^{-T} u
        w = fac.solve(fac.solve(u, trans=1))
        small_inv = np.linalg.norm(w)
        if not np.isfinite(small_inv):
            return float("inf")
        u = w / small_inv
    return float(np.sqrt(big * small_inv))
