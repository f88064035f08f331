"""State generators: Werner and Horodecki families, random ensembles and local unitaries.

Every random generator takes an explicit integer seed and builds its own
``numpy.random.Generator`` from it, so results are a pure function of the
parameters and the seed.

"""

from __future__ import annotations

from dataclasses import dataclass, field
import logging
import math
import typing as tp

import numpy as np
import scipy.linalg

from .exceptions import DimensionMismatch, NotUnitary, ParamOutOfRange
from .matlin import (
    CMatrix,
    DensityState,
    SubsystemDims,
    as_cmatrix,
    dagger,
    identity,
    kron,
)

_logger = logging.getLogger(__name__)

TOL_UNITARY = 1e-8
SEED_MAX = 2 ** 64 - 1


@dataclass(frozen=True, eq=False)
class LabeledState:
    name: str
    state: DensityState
    params: dict[str, float] = field(default_factory=dict)

    @property
    def dims(self) -> SubsystemDims:
        return self.state.dims

    @property
    def label(self) -> str:
        if not self.params:
            return self.name
        return f"{self.name}({', '.join(f'{k}={v:g}' for k, v in self.params.items())})"


def rng_from_seed(seed: int) -> np.random.Generator:
    if int(seed) != seed or not 0 <= seed <= SEED_MAX:
        raise ParamOutOfRange(f"Seed must be an unsigned 64-bit integer, got {seed}")
    return np.random.default_rng(int(seed))


def _hermitize(mat: CMatrix) -> CMatrix:
    return (mat + dagger(mat)) / 2


def swap_operator(d: int) -> CMatrix:
    """``V = sum_ij |ij><ji|``, so ``V (alpha (x) beta) = beta (x) alpha``."""
    if d < 1:
        raise ParamOutOfRange(f"Swap dimension must be positive, got {d}")
    swap = np.zeros((d * d, d * d), dtype=np.complex128)
    for i in range(d):
        for j in range(d):
            swap[i * d + j, j * d + i] = 1
    return swap


def werner(d: int, f: float) -> LabeledState:
    """``((d - f) I + (d f - 1) V) / (d^3 - d)``; entangled exactly for ``-1 <= f < 0``."""
    if d < 2:
        raise ParamOutOfRange(f"Werner dimension must be at least 2, got {d}")
    if not -1 <= f <= 1:
        raise ParamOutOfRange(f"Werner parameter f must lie in [-1, 1], got {f}")
    mat = ((d - f) * identity(d * d) + (d * f - 1) * swap_operator(d)) / (d ** 3 - d)
    return LabeledState('werner', DensityState(SubsystemDims(d, d), mat), {'d': d, 'f': f})


def horodecki_3x3(c: float) -> LabeledState:
    """Horodecki's 3x3 bound entangled state, real and symmetric, defined for ``0 < c < 1``."""
    if not 0 < c < 1:
        raise ParamOutOfRange(f"Horodecki parameter c must lie in (0, 1), got {c}")
    mat = np.diag([c, c, c, c, c, c, (1 + c) / 2, c, (1 + c) / 2]).astype(np.complex128)
    for i, j in ((0, 4), (0, 8), (4, 8)):
        mat[i, j] = mat[j, i] = c
    mat[6, 8] = mat[8, 6] = math.sqrt(1 - c * c) / 2
    return LabeledState('horodecki', DensityState(SubsystemDims(3, 3), mat / (8 * c + 1)), {'c': c})


def maximally_mixed(dims: SubsystemDims) -> LabeledState:
    return LabeledState('maximally-mixed', DensityState(dims, identity(dims.total) / dims.total))


def _unit_vector(rng: np.random.Generator, d: int) -> CMatrix:
    psi = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return (psi / np.linalg.norm(psi)).reshape(-1, 1)


def _projector(psi: CMatrix) -> CMatrix:
    return psi @ dagger(psi)


def product_state(psi_a: tp.Sequence[complex], psi_b: tp.Sequence[complex]) -> LabeledState:
    """Pure product state from two (not necessarily normalized) local vectors."""
    a = np.asarray(psi_a, dtype=np.complex128).reshape(-1, 1)
    b = np.asarray(psi_b, dtype=np.complex128).reshape(-1, 1)
    psi = kron(a / np.linalg.norm(a), b / np.linalg.norm(b))
    return LabeledState('product', DensityState(SubsystemDims(a.size, b.size), _projector(psi)))


def bell_singlet() -> LabeledState:
    psi = np.array([0, 1, -1, 0], dtype=np.complex128).reshape(-1, 1) / math.sqrt(2)
    return LabeledState('singlet', DensityState(SubsystemDims(2, 2), _projector(psi)))


def random_separable(dims: SubsystemDims, k: int, seed: int) -> LabeledState:
    """Mixture of k pure product states with flat-simplex weights."""
    if k < 1:
        raise ParamOutOfRange(f"Separable ensemble needs at least one term, got k={k}")
    rng = rng_from_seed(seed)
    weights = rng.exponential(size=k)
    weights /= weights.sum()
    mat = np.zeros((dims.total, dims.total), dtype=np.complex128)
    for weight in weights:
        psi = _unit_vector(rng, dims.m)
        phi = _unit_vector(rng, dims.n)
        mat += weight * kron(_projector(psi), _projector(phi))
    mat = _hermitize(mat)
    mat /= np.trace(mat).real
    return LabeledState('separable', DensityState(dims, mat), {'m': dims.m, 'n': dims.n, 'k': k, 'seed': seed})


def random_density(dim: int, seed: int) -> CMatrix:
    """``G G^dagger / Tr(G G^dagger)`` for a seeded complex Gaussian G."""
    if dim < 2:
        raise ParamOutOfRange(f"Random density dimension must be at least 2, got {dim}")
    rng = rng_from_seed(seed)
    g = rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))
    mat = _hermitize(g @ dagger(g))
    return mat / np.trace(mat).real


def random_mixed_state(dims: SubsystemDims, seed: int) -> LabeledState:
    mat = random_density(dims.total, seed)
    return LabeledState('random', DensityState(dims, mat), {'m': dims.m, 'n': dims.n, 'seed': seed})


def random_unitary(dim: int, seed: int) -> CMatrix:
    """Haar unitary from the QR factors of a complex Gaussian matrix.

    The phases of R's diagonal are pushed into Q so the distribution is Haar
    rather than QR-algorithm dependent.

    """
    if dim < 1:
        raise ParamOutOfRange(f"Unitary dimension must be positive, got {dim}")
    rng = rng_from_seed(seed)
    z = (rng.standard_normal((dim, dim)) + 1j * rng.standard_normal((dim, dim))) / math.sqrt(2)
    q, r = scipy.linalg.qr(z)
    diagonal = np.diagonal(r)
    return q * (diagonal / np.abs(diagonal))


def is_unitary(u: CMatrix, tol: float = TOL_UNITARY) -> bool:
    return u.shape[0] == u.shape[1] and np.max(np.abs(dagger(u) @ u - identity(u.shape[0]))) <= tol


def local_unitary_conjugate(rho: DensityState, w_a: CMatrix, w_b: CMatrix,
                            tol: float = TOL_UNITARY) -> DensityState:
    """``(W_A (x) W_B) rho (W_A^dagger (x) W_B^dagger)``."""
    w_a, w_b = as_cmatrix(w_a), as_cmatrix(w_b)
    if w_a.shape != (rho.m, rho.m) or w_b.shape != (rho.n, rho.n):
        raise DimensionMismatch(
            f"Local unitaries have shapes {w_a.shape} and {w_b.shape}, expected ({rho.m}, {rho.m}) and ({rho.n}, {rho.n})")
    for name, w in (('W_A', w_a), ('W_B', w_b)):
        if not is_unitary(w, tol):
            raise NotUnitary(f"{name} is not unitary within {tol:.0e}")
    w = kron(w_a, w_b)
    return DensityState(rho.dims, w @ rho.mat @ dagger(w), tol_herm=rho.tol_herm, tol_psd=rho.tol_psd)


def save_state(state: LabeledState, path: str) -> None:
    from .writer import write_state
    write_state(state, path)


def load_state(path: str, checked: bool = True) -> LabeledState:
    from .reader import read_state
    return read_state(path, checked=checked)
