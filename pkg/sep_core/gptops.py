"""Generalized partial transpositions of bipartite matrices.

A bipartite matrix entry is addressed as ``rho[(i, mu), (j, nu)]`` with row
index ``i*n + mu`` and column index ``j*n + nu``. Each of the four flags
moves one index digit between the row group and the column group:

- ``rA`` moves ``i`` to the columns, ``cA`` moves ``j`` to the rows
- ``rB`` moves ``mu`` to the columns, ``cB`` moves ``nu`` to the rows

Inside a group, digits from A are more significant than digits from B, and
within one subsystem the column-origin digit is more significant than the
row-origin digit. With this ordering ``{cA, rB}`` is exactly the realigned
matrix and ``{rA, cA}`` is the usual partial transpose on A.

"""

from __future__ import annotations

from dataclasses import dataclass, fields
import logging
import typing as tp

import numpy as np
import numpy.typing as npt

from .matlin import CMatrix, SubsystemDims, Subsystem, kron, svd, unvec

_logger = logging.getLogger(__name__)

RANK_CUTOFF = 1e-12

FLAG_NAMES = ('rA', 'cA', 'rB', 'cB')
EMPTY_CODE = 'none'

# Tensor axes of rho reshaped to (m, n, m, n): i=0, mu=1, j=2, nu=3.
_AXIS_I, _AXIS_MU, _AXIS_J, _AXIS_NU = range(4)
_SIGNIFICANCE = (_AXIS_J, _AXIS_I, _AXIS_NU, _AXIS_MU)


@dataclass(frozen=True, order=True)
class GptOpSet:
    """A subset Y of {rA, cA, rB, cB}."""
    rA: bool = False
    cA: bool = False
    rB: bool = False
    cB: bool = False

    @classmethod
    def parse(cls, code: str) -> GptOpSet:
        """Parse codes like ``"cA,rB"``; ``""``, ``"none"`` and ``"∅"`` give the empty set."""
        code = code.strip()
        if code in ('', EMPTY_CODE, '∅', '{}'):
            return cls()
        flags = {}
        for part in code.strip('{}').split(','):
            name = part.strip()
            if name not in FLAG_NAMES:
                raise ValueError(f"Unknown transposition code {name!r}, expected one of {', '.join(FLAG_NAMES)}")
            flags[name] = True
        return cls(**flags)

    @classmethod
    def from_index(cls, index: int) -> GptOpSet:
        """Inverse of :attr:`index`; rA is the most significant bit."""
        if not 0 <= index < 16:
            raise ValueError(f"GPT subset index must be in 0..15, got {index}")
        return cls(bool(index & 8), bool(index & 4), bool(index & 2), bool(index & 1))

    @classmethod
    def all(cls) -> tuple[GptOpSet, ...]:
        """All 16 subsets in counter order."""
        return tuple(cls.from_index(k) for k in range(16))

    @property
    def index(self) -> int:
        return 8 * self.rA + 4 * self.cA + 2 * self.rB + self.cB

    @property
    def code(self) -> str:
        names = [f.name for f in fields(self) if getattr(self, f.name)]
        return ','.join(names) if names else EMPTY_CODE

    def side_flags(self, side: Subsystem) -> tuple[bool, bool]:
        """(row flag, column flag) for one subsystem."""
        if side == 'A':
            return self.rA, self.cA
        if side == 'B':
            return self.rB, self.cB
        raise ValueError(f"Unknown subsystem {side!r}")

    def __str__(self):
        return self.code


REALIGNMENT = GptOpSet(cA=True, rB=True)
PARTIAL_TRANSPOSE_A = GptOpSet(rA=True, cA=True)
PARTIAL_TRANSPOSE_B = GptOpSet(rB=True, cB=True)
FULL_TRANSPOSE = GptOpSet(True, True, True, True)


@dataclass(frozen=True, eq=False)
class KronTermList:
    terms: tuple[tuple[CMatrix, CMatrix], ...]
    sigma: npt.NDArray[np.float64]

    @property
    def rank(self) -> int:
        return len(self.terms)

    def reconstruct(self) -> CMatrix:
        """Sum of ``kron(X_i, Y_i)``."""
        return sum(kron(x, y) for x, y in self.terms)


class SlotMatrix(np.ndarray):
    """A matrix produced by T_r or T_c that remembers where the original digits sit.

    ``base_shape`` is the shape of the untransposed matrix. ``row_moved`` is set
    once its row digit has moved to the columns and ``col_moved`` once its column
    digit has moved to the rows. Views and arithmetic results are plain again.

    """
    base_shape: tp.Optional[tuple[int, int]]
    row_moved: bool
    col_moved: bool

    def __array_finalize__(self, obj):
        self.base_shape = None
        self.row_moved = False
        self.col_moved = False


def _slots(a: CMatrix) -> tuple[tuple[int, int], bool, bool]:
    if isinstance(a, SlotMatrix) and a.base_shape is not None:
        return a.base_shape, a.row_moved, a.col_moved
    if a.ndim != 2:
        raise ValueError(f"Expected a 2-D matrix, got {a.ndim} dimensions")
    return a.shape, False, False


def _groups(row_moved: bool, col_moved: bool) -> tuple[list[int], list[int]]:
    # Digit 0 is the original row index, digit 1 the original column index.
    # The column-origin digit is the more significant one in either group.
    in_rows = {0: not row_moved, 1: col_moved}
    rows = [d for d in (1, 0) if in_rows[d]]
    cols = [d for d in (1, 0) if not in_rows[d]]
    return rows, cols


def _move(a: CMatrix, row: bool, col: bool) -> SlotMatrix:
    base_shape, row_moved, col_moved = _slots(a)
    rows, cols = _groups(row_moved, col_moved)
    order = rows + cols
    tensor = np.asarray(a).reshape([base_shape[d] for d in order])
    base = tensor.transpose([order.index(0), order.index(1)])
    row_moved, col_moved = row_moved or row, col_moved or col
    rows, cols = _groups(row_moved, col_moved)
    shape = (int(np.prod([base_shape[d] for d in rows])), int(np.prod([base_shape[d] for d in cols])))
    out = base.transpose(rows + cols).reshape(shape).view(SlotMatrix)
    out.base_shape = base_shape
    out.row_moved, out.col_moved = row_moved, col_moved
    return out


def row_transposition(a: CMatrix) -> SlotMatrix:
    """T_r: move the row index to the columns.

    On a plain matrix this is ``vec(a)^t``. Applied after :func:`col_transposition`
    it gives ``a^t``; moving an index that already moved changes nothing.

    """
    return _move(a, row=True, col=False)


def col_transposition(a: CMatrix) -> SlotMatrix:
    """T_c: move the column index to the rows; ``vec(a)`` on a plain matrix."""
    return _move(a, row=False, col=True)


def local_transposition(a: CMatrix, row: bool, col: bool) -> CMatrix:
    """Apply T_r and/or T_c to one subsystem factor."""
    if not (row or col):
        return a
    return np.asarray(_move(a, row=row, col=col))


def _check(rho: CMatrix, dims: SubsystemDims) -> None:
    dims.check_square(rho)


def gpt_transform(rho: CMatrix, dims: SubsystemDims, yset: GptOpSet) -> CMatrix:
    """Apply T_Y by one-shot regrouping of the four index digits."""
    _check(rho, dims)
    m, n = dims.m, dims.n
    sizes = {_AXIS_I: m, _AXIS_MU: n, _AXIS_J: m, _AXIS_NU: n}
    row_axes = {_AXIS_I, _AXIS_MU}
    if yset.rA:
        row_axes.discard(_AXIS_I)
    if yset.cA:
        row_axes.add(_AXIS_J)
    if yset.rB:
        row_axes.discard(_AXIS_MU)
    if yset.cB:
        row_axes.add(_AXIS_NU)
    rows = [axis for axis in _SIGNIFICANCE if axis in row_axes]
    cols = [axis for axis in _SIGNIFICANCE if axis not in row_axes]
    shape = (int(np.prod([sizes[a] for a in rows])), int(np.prod([sizes[a] for a in cols])))
    return rho.reshape(m, n, m, n).transpose(rows + cols).reshape(shape)


def realign(rho: CMatrix, dims: SubsystemDims) -> CMatrix:
    """Realigned matrix: row ``j*m + i`` holds ``vec`` of block (i, j) transposed into a row."""
    _check(rho, dims)
    m, n = dims.m, dims.n
    return rho.reshape(m, n, m, n).transpose(_AXIS_J, _AXIS_I, _AXIS_NU, _AXIS_MU).reshape(m * m, n * n)


def partial_transpose(rho: CMatrix, dims: SubsystemDims, side: Subsystem) -> CMatrix:
    if side == 'A':
        return gpt_transform(rho, dims, PARTIAL_TRANSPOSE_A)
    if side == 'B':
        return gpt_transform(rho, dims, PARTIAL_TRANSPOSE_B)
    raise ValueError(f"Unknown subsystem {side!r}, expected 'A' or 'B'")


def kron_decompose(z: CMatrix, dims: SubsystemDims, cutoff: float = RANK_CUTOFF) -> KronTermList:
    """Write ``z`` as a sum of ``kron(X_i, Y_i)`` from the SVD of its realignment.

    ``vec(X_i) = sqrt(sigma_i) u_i`` and ``vec(Y_i) = sqrt(sigma_i) conj(v_i)``;
    only singular values above ``cutoff`` contribute.

    """
    _check(z, dims)
    m, n = dims.m, dims.n
    u, sigma, v = svd(realign(z, dims))
    kept = sigma[sigma > cutoff]
    terms = []
    for k, s in enumerate(kept):
        scale = np.sqrt(s)
        x = unvec(scale * u[:, k], m, m)
        y = unvec(scale * v[:, k].conj(), n, n)
        terms.append((x, y))
    _logger.debug("Kronecker decomposition on %s: rank %d of %d", dims, len(terms), len(sigma))
    return KronTermList(tuple(terms), kept)


def gpt_transform_termwise(z: CMatrix, dims: SubsystemDims, yset: GptOpSet,
                           cutoff: float = RANK_CUTOFF) -> CMatrix:
    """T_Y applied factor by factor: sum of ``T_A(X_i) (x) T_B(Y_i)``."""
    decomposition = kron_decompose(z, dims, cutoff)
    row_a, col_a = yset.side_flags('A')
    row_b, col_b = yset.side_flags('B')
    if decomposition.rank == 0:
        return np.zeros_like(gpt_transform(z, dims, yset))
    return sum(
        kron(local_transposition(x, row_a, col_a), local_transposition(y, row_b, col_b))
        for x, y in decomposition.terms
    )
