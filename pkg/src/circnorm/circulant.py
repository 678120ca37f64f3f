"""First-row circulant matrices with exact integer entries.

The dense layout follows the classical convention: row i is the first
row cyclically right-shifted i places, i.e. dense[i][j] = c[(j - i) % n],
so the first column reads (c0, c(n-1), ..., c1) top to bottom.

Eigenvalues use the positive-sign Fourier convention

    lambda_k = sum_j c_j * w**(j*k),   w = exp(+2j*pi/n),

which makes lambda_0 the plain entry sum. The eigenvalue set of a real
circulant is conjugation-symmetric, so moduli (and hence the spectral
radius) do not depend on the sign convention, but tests need one fixed
choice and this is it.

Matrices and spectra are immutable after construction; every function
here is pure and safe to call concurrently.
"""

from __future__ import annotations

from dataclasses import dataclass
from operator import index as _as_int
from typing import Sequence

import numpy as np

from .errors import DimensionMismatch, NegativeEntry, PrecisionLoss
from .sequences import SequenceId, prefix

__all__ = [
    "EXACT_DOUBLE_BOUND",
    "CirculantMatrix",
    "Spectrum",
    "from_sequence",
    "to_dense",
    "matvec_naive",
    "matvec_fft",
    "eigenvalues_dft",
    "all_ones_eigencheck",
]

#: Integers with magnitude below this convert to float64 without rounding.
EXACT_DOUBLE_BOUND = 2**53


@dataclass(frozen=True)
class CirculantMatrix:
    """circ(c0, ..., c(n-1)) stored as its first row of nonnegative ints."""

    first_row: tuple[int, ...]

    def __post_init__(self) -> None:
        row = tuple(_as_int(c) for c in self.first_row)
        object.__setattr__(self, "first_row", row)
        if not row:
            raise ValueError("circulant matrix needs at least one entry")
        for c in row:
            if c < 0:
                raise NegativeEntry(f"first row contains negative entry {c}")

    @property
    def order(self) -> int:
        return len(self.first_row)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigenvalues lambda_0, ..., lambda_(n-1) of a circulant (complex128)."""

    values: np.ndarray

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "values", np.asarray(self.values, dtype=np.complex128)
        )

    @property
    def order(self) -> int:
        return len(self.values)


def from_sequence(seq: SequenceId, n: int) -> CirculantMatrix:
    """circ(t(0), ..., t(n-1)) for the given sequence.

    Raises NegativeEntry if any of the first n terms is negative, which
    can happen for custom recurrences; the four builtins are nonnegative
    everywhere.
    """
    return CirculantMatrix(tuple(prefix(seq, n)))


def to_dense(matrix: CirculantMatrix) -> np.ndarray:
    """Dense n x n matrix with exact integer entries (dtype=object).

    Row i is the first row right-shifted i places. Object dtype keeps
    Python ints, so downstream products (Gram matrices, normality
    checks) stay exact at any magnitude.
    """
    row = np.array(matrix.first_row, dtype=object)
    return np.stack([np.roll(row, i) for i in range(matrix.order)])


def matvec_naive(matrix: CirculantMatrix, vector: Sequence[int]) -> list[int]:
    """Exact product to_dense(matrix) @ vector in O(n^2).

    Works directly off the first row, never materializing the dense
    matrix; with integer input the result is exact at any size.
    """
    row = matrix.first_row
    n = len(row)
    if len(vector) != n:
        raise DimensionMismatch(
            f"vector has length {len(vector)}, matrix order is {n}"
        )
    return [
        sum(row[(j - i) % n] * vector[j] for j in range(n)) for i in range(n)
    ]


def _require_exact_double(values, what: str) -> None:
    for x in values:
        if isinstance(x, (int, np.integer)) and abs(int(x)) >= EXACT_DOUBLE_BOUND:
            raise PrecisionLoss(
                f"{what} {x} has magnitude >= 2**53 and would round in float64"
            )


def _eigenvalue_array(matrix: CirculantMatrix) -> np.ndarray:
    # n * ifft realizes the positive-sign transform: lambda_k = sum_j c_j w^(jk).
    c = np.asarray(matrix.first_row, dtype=np.float64)
    return matrix.order * np.fft.ifft(c)


def matvec_fft(matrix: CirculantMatrix, vector: Sequence[float]) -> np.ndarray:
    """Same product as matvec_naive via the FFT, in float64, O(n log n).

    The transform length is exactly n (mixed-radix, no padding). Each
    output component stays within relative 1e-10 of the exact product,
    measured against the largest exact component with a 1e-12 absolute
    floor. Raises PrecisionLoss if an integer input would round on
    conversion to float64.
    """
    n = matrix.order
    if len(vector) != n:
        raise DimensionMismatch(
            f"vector has length {len(vector)}, matrix order is {n}"
        )
    _require_exact_double(matrix.first_row, "matrix entry")
    _require_exact_double(vector, "vector entry")
    v = np.asarray(vector, dtype=np.float64)
    return np.fft.ifft(_eigenvalue_array(matrix) * np.fft.fft(v)).real


def eigenvalues_dft(matrix: CirculantMatrix) -> Spectrum:
    """All n eigenvalues lambda_k = sum_j c_j w^(jk), w = exp(+2j*pi/n).

    lambda_0 is the entry sum (exactly, up to float64 roundoff); the
    rest come in conjugate pairs since the entries are real. Raises
    PrecisionLoss when an entry is too large for exact float64.
    """
    _require_exact_double(matrix.first_row, "matrix entry")
    return Spectrum(_eigenvalue_array(matrix))


def all_ones_eigencheck(matrix: CirculantMatrix) -> list[int]:
    """Exact residual of the all-ones eigenvector identity.

    Returns matvec_naive(matrix, ones) - entry_sum * ones in integer
    arithmetic. The zero vector certifies that every row sums to the
    entry sum, i.e. that the entry sum is an eigenvalue with the
    all-ones eigenvector.
    """
    total = sum(matrix.first_row)
    ones = [1] * matrix.order
    return [y - total for y in matvec_naive(matrix, ones)]
