"""Dense complex matrix kernel.

Matrices are plain 2-D ``complex128`` numpy arrays, stored row-major. Every
index convention in the package derives from :func:`vec`, which stacks
columns with the row index running fastest.

"""

from __future__ import annotations

from dataclasses import dataclass
import logging
import typing as tp

import numpy as np
import numpy.typing as npt
import scipy.linalg

from .exceptions import (
    DimensionMismatch,
    InvariantViolation,
    NonFiniteEntries,
    NotHermitian,
)

_logger = logging.getLogger(__name__)

TOL_HERM = 1e-12
TOL_PSD = -1e-9
TOL_SVD = 1e-10
TOL_TRACE = 1e-12

CMatrix = npt.NDArray[np.complex128]
Subsystem = tp.Literal['A', 'B']


def as_cmatrix(values: tp.Any) -> CMatrix:
    """Coerce to a finite 2-D complex matrix."""
    mat = np.asarray(values, dtype=np.complex128)
    if mat.ndim == 0:
        mat = mat.reshape(1, 1)
    elif mat.ndim == 1:
        mat = mat.reshape(1, -1)
    elif mat.ndim != 2:
        raise DimensionMismatch(f"Expected a 2-D matrix, got {mat.ndim} dimensions")
    if mat.size == 0:
        raise DimensionMismatch("Matrix must have at least one entry")
    if not np.all(np.isfinite(mat)):
        raise NonFiniteEntries("Matrix contains NaN or Inf entries")
    return mat


def from_entries(rows: int, cols: int, entries: tp.Sequence[complex]) -> CMatrix:
    """Build a matrix from a row-major entry sequence."""
    if rows < 1 or cols < 1:
        raise DimensionMismatch(f"Shape must be positive, got {rows}x{cols}")
    if len(entries) != rows * cols:
        raise DimensionMismatch(f"Expected {rows * cols} entries for a {rows}x{cols} matrix, got {len(entries)}")
    return as_cmatrix(np.asarray(entries, dtype=np.complex128).reshape(rows, cols))


def identity(d: int) -> CMatrix:
    return np.eye(d, dtype=np.complex128)


def dagger(a: CMatrix) -> CMatrix:
    return a.conj().T


def kron(a: CMatrix, b: CMatrix) -> CMatrix:
    """Kronecker product, entry ``[i*b.rows + mu, j*b.cols + nu] = a[i, j] * b[mu, nu]``."""
    return np.kron(a, b)


def vec(a: CMatrix) -> CMatrix:
    """Stack the columns of ``a`` into a single column, row index fastest."""
    return np.reshape(a, (-1, 1), order='F')


def unvec(v: CMatrix, rows: int, cols: int) -> CMatrix:
    """Inverse of :func:`vec`."""
    if v.size != rows * cols:
        raise DimensionMismatch(f"Cannot fold {v.size} entries into {rows}x{cols}")
    return np.reshape(v, (rows, cols), order='F')


def svd(m: CMatrix) -> tuple[CMatrix, npt.NDArray[np.float64], CMatrix]:
    """Thin SVD ``m = U @ diag(sigma) @ V^dagger`` with sigma descending.

    ``gesdd`` occasionally fails to converge on degenerate inputs; ``gesvd``
    is the fallback.

    """
    try:
        u, sigma, vh = scipy.linalg.svd(m, full_matrices=False, lapack_driver='gesdd')
    except np.linalg.LinAlgError:
        _logger.debug("gesdd did not converge on a %dx%d matrix, retrying with gesvd", *m.shape)
        u, sigma, vh = scipy.linalg.svd(m, full_matrices=False, lapack_driver='gesvd')
    return u, sigma, dagger(vh)


def singular_values(m: CMatrix) -> npt.NDArray[np.float64]:
    try:
        return scipy.linalg.svdvals(m)
    except np.linalg.LinAlgError:
        return scipy.linalg.svd(m, compute_uv=False, lapack_driver='gesvd')


def trace_norm(m: CMatrix) -> float:
    """Sum of singular values."""
    return float(np.sum(singular_values(m)))


def hermiticity_error(m: CMatrix) -> float:
    return float(np.max(np.abs(m - dagger(m))))


def hermitian_eigenvalues(m: CMatrix, tol_herm: float = TOL_HERM) -> npt.NDArray[np.float64]:
    """Real spectrum of a Hermitian matrix, ascending."""
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionMismatch(f"Eigenvalues need a square matrix, got {m.shape}")
    error = hermiticity_error(m)
    if error > tol_herm:
        raise NotHermitian(f"Matrix deviates from Hermitian by {error:.3e} (tolerance {tol_herm:.1e})")
    return scipy.linalg.eigvalsh(m)


@dataclass(frozen=True)
class SubsystemDims:
    m: int
    n: int

    def __post_init__(self):
        if int(self.m) != self.m or int(self.n) != self.n or self.m < 1 or self.n < 1:
            raise DimensionMismatch(f"Subsystem dimensions must be positive integers, got ({self.m}, {self.n})")

    @property
    def total(self) -> int:
        return self.m * self.n

    def check_square(self, mat: CMatrix, what: str = "matrix") -> None:
        """Raise unless ``mat`` is square of size m*n."""
        if mat.ndim != 2 or mat.shape != (self.total, self.total):
            raise DimensionMismatch(
                f"{what} has shape {mat.shape}, expected ({self.total}, {self.total}) for m={self.m}, n={self.n}")

    def __str__(self):
        return f"{self.m}x{self.n}"


@dataclass(frozen=True, eq=False)
class DensityState:
    """A bipartite density matrix on an m x n space.

    The matrix is copied on construction and made read-only. Validation
    checks Hermiticity, unit trace and positivity unless ``checked`` is False.

    """
    dims: SubsystemDims
    mat: CMatrix
    checked: bool = True
    tol_herm: float = TOL_HERM
    tol_psd: float = TOL_PSD

    def __post_init__(self):
        mat = np.array(as_cmatrix(self.mat), dtype=np.complex128, copy=True)
        self.dims.check_square(mat, "density matrix")
        mat.setflags(write=False)
        object.__setattr__(self, 'mat', mat)
        if self.checked:
            self.validate()

    @classmethod
    def from_matrix(cls, mat: tp.Any, dims: tp.Union[SubsystemDims, tuple[int, int]], *,
                    checked: bool = True, tol_herm: float = TOL_HERM, tol_psd: float = TOL_PSD) -> DensityState:
        if not isinstance(dims, SubsystemDims):
            dims = SubsystemDims(*dims)
        return cls(dims, mat, checked=checked, tol_herm=tol_herm, tol_psd=tol_psd)

    @property
    def m(self) -> int:
        return self.dims.m

    @property
    def n(self) -> int:
        return self.dims.n

    def validate(self) -> None:
        """Raise :class:`InvariantViolation` naming the first failed check."""
        error = hermiticity_error(self.mat)
        if error > self.tol_herm:
            raise InvariantViolation(f"Not Hermitian: max |rho_ij - conj(rho_ji)| = {error:.3e}")
        trace = np.trace(self.mat)
        if abs(trace.real - 1) > TOL_TRACE or abs(trace.imag) > TOL_TRACE:
            raise InvariantViolation(f"Trace is {trace.real:.15g}{trace.imag:+.3e}j, expected 1")
        lowest = scipy.linalg.eigvalsh(self.mat)[0]
        if lowest < self.tol_psd:
            raise InvariantViolation(f"Not positive semidefinite: min eigenvalue {lowest:.3e}")


def _tensor(rho: DensityState) -> np.ndarray:
    # axes (i, mu, j, nu)
    return rho.mat.reshape(rho.m, rho.n, rho.m, rho.n)


def partial_trace(rho: DensityState, trace_out: Subsystem) -> CMatrix:
    """Trace out one subsystem: ``'B'`` leaves rho_A (m x m), ``'A'`` leaves rho_B (n x n)."""
    t = _tensor(rho)
    if trace_out == 'B':
        return np.einsum('ikjk->ij', t)
    if trace_out == 'A':
        return np.einsum('kikj->ij', t)
    raise ValueError(f"Unknown subsystem {trace_out!r}, expected 'A' or 'B'")


def reduced_states(rho: DensityState) -> tuple[CMatrix, CMatrix]:
    """Return ``(rho_A, rho_B)``."""
    return partial_trace(rho, 'B'), partial_trace(rho, 'A')
