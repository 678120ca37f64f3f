"""Spectral norm of a nonnegative circulant by three independent routes.

A circulant commutes with its transpose, so its 2-norm equals its
spectral radius; with nonnegative entries the zero-frequency eigenvalue
(the plain row sum) has the largest modulus by the triangle inequality.
spectral_norm_sum returns that row sum exactly, while spectral_norm_dft
and spectral_norm_power recompute the same number through diagonalization
and through a dense Gram power iteration, so the three can be
cross-checked against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from .circulant import (
    EXACT_DOUBLE_BOUND,
    CirculantMatrix,
    eigenvalues_dft,
    to_dense,
)
from .errors import PrecisionLoss

__all__ = [
    "GRAM_SAFE_BOUND",
    "METHOD_NAMES",
    "ConvergenceRecord",
    "MethodResult",
    "NormReport",
    "spectral_norm_sum",
    "spectral_norm_dft",
    "spectral_norm_power",
    "spectral_radius",
    "compare_methods",
]

#: Entry guard for the power path: the Gram matrix is formed in exact
#: integers first, and entries below 2**26 keep its float64 conversion
#: faithful at desk scale.
GRAM_SAFE_BOUND = 2**26

METHOD_NAMES = ("sum", "dft", "power")


def spectral_norm_sum(matrix: CirculantMatrix) -> int:
    """Exact spectral norm of a nonnegative circulant: the first-row sum."""
    return sum(matrix.first_row)


def spectral_radius(matrix: CirculantMatrix) -> float:
    """max_k |lambda_k| over the DFT eigenvalues.

    For nonnegative rows the maximum is attained at k = 0, where the
    eigenvalue is real and equals the entry sum.
    """
    return float(np.abs(eigenvalues_dft(matrix).values).max())


def spectral_norm_dft(matrix: CirculantMatrix) -> float:
    """Spectral norm via diagonalization; identical to spectral_radius.

    Exposed separately because norm-equals-radius is exactly the step
    that needs a normal matrix, and keeping both names makes the
    cross-checks read naturally.
    """
    return spectral_radius(matrix)


@dataclass(frozen=True)
class ConvergenceRecord:
    """Outcome of a power iteration: step count, final residual, flag."""

    iterations: int
    residual: float
    converged: bool


def spectral_norm_power(
    matrix: CirculantMatrix,
    rel_tol: float = 1e-8,
    max_iter: int | None = None,
) -> tuple[float, ConvergenceRecord]:
    """Spectral norm as sqrt of the dominant eigenvalue of G = A^T A.

    G is formed in exact integer arithmetic, converted to float64, and
    iterated from the deterministic all-ones seed, which is never
    orthogonal to the Perron direction of a nonnegative symmetric
    matrix. Convergence requires both conditions at once:

      * relative change of the Rayleigh quotient below rel_tol, and
      * residual ||G v - theta v|| / theta below 10 * rel_tol,

    since Rayleigh stagnation alone can mask slow progress under
    eigenvalue ties. If max_iter (default 50 * n + 1000) is exhausted
    first, the best estimate is returned with converged=False rather
    than raising.

    Raises PrecisionLoss when an entry reaches 2**26.
    """
    if rel_tol <= 0:
        raise ValueError("rel_tol must be positive")
    n = matrix.order
    if max_iter is None:
        max_iter = 50 * n + 1000
    if max_iter < 1:
        raise ValueError("max_iter must be positive")
    for c in matrix.first_row:
        if c >= GRAM_SAFE_BOUND:
            raise PrecisionLoss(
                f"entry {c} reaches 2**26; the dense Gram path would lose exactness"
            )
    if spectral_norm_sum(matrix) == 0:
        return 0.0, ConvergenceRecord(iterations=0, residual=0.0, converged=True)

    dense = to_dense(matrix)
    gram = (dense.T @ dense).astype(np.float64)
    v = np.full(n, 1.0 / math.sqrt(n))
    theta = 0.0
    theta_prev = None
    residual = math.inf
    for iteration in range(1, max_iter + 1):
        w = gram @ v
        theta = float(v @ w)
        residual = float(np.linalg.norm(w - theta * v)) / theta
        if (
            theta_prev is not None
            and abs(theta - theta_prev) <= rel_tol * theta
            and residual <= 10 * rel_tol
        ):
            return math.sqrt(theta), ConvergenceRecord(iteration, residual, True)
        theta_prev = theta
        v = w / np.linalg.norm(w)
    return math.sqrt(theta), ConvergenceRecord(max_iter, residual, False)


@dataclass(frozen=True)
class MethodResult:
    """One method's norm value; value is None when skipped or failed."""

    method: str
    value: float | None
    exact_value: int | None = None
    note: str | None = None


@dataclass(frozen=True)
class NormReport:
    """Per-method norm values with their mutual agreement diagnostics."""

    order: int
    methods: tuple[MethodResult, ...]
    max_pairwise_relative_gap: float
    rel_tol: float
    agrees: bool


def compare_methods(
    matrix: CirculantMatrix,
    rel_tol: float = 1e-8,
    methods: Sequence[str] = METHOD_NAMES,
    max_iter: int | None = None,
) -> NormReport:
    """Run the requested norm methods and report their mutual agreement.

    Methods whose entry guard is violated (power needs entries below
    2**26, dft below 2**53) are skipped and marked in their note instead
    of raising, as is a power run that fails to converge. The pairwise
    gap divides by max(values, 1), so the all-zero matrix agrees
    trivially, and agrees is gap <= rel_tol.
    """
    wanted = list(dict.fromkeys(methods))
    unknown = [m for m in wanted if m not in METHOD_NAMES]
    if unknown:
        raise ValueError(f"unknown methods {unknown}; expected subset of {METHOD_NAMES}")

    max_entry = max(matrix.first_row)
    results: list[MethodResult] = []
    for method in wanted:
        if method == "sum":
            exact = spectral_norm_sum(matrix)
            try:
                value = float(exact)
            except OverflowError:
                value = math.inf
            results.append(MethodResult("sum", value, exact_value=exact))
        elif method == "dft":
            if max_entry >= EXACT_DOUBLE_BOUND:
                results.append(
                    MethodResult("dft", None, note="skipped: entries reach 2**53")
                )
            else:
                results.append(MethodResult("dft", spectral_norm_dft(matrix)))
        else:
            if max_entry >= GRAM_SAFE_BOUND:
                results.append(
                    MethodResult("power", None, note="skipped: entries reach 2**26")
                )
            else:
                value, record = spectral_norm_power(
                    matrix, rel_tol=rel_tol, max_iter=max_iter
                )
                note = None
                if not record.converged:
                    note = f"no convergence after {record.iterations} iterations"
                results.append(MethodResult("power", value, note=note))

    values = [r.value for r in results if r.value is not None]
    gap = 0.0
    if len(values) >= 2:
        denom = max(max(values), 1.0)
        gap = max(abs(a - b) for a, b in combinations(values, 2)) / denom
    return NormReport(
        order=matrix.order,
        methods=tuple(results),
        max_pairwise_relative_gap=gap,
        rel_tol=rel_tol,
        agrees=gap <= rel_tol,
    )
