"""Separability criteria and their verdict records.

The generalized reduction criterion maps a state to

    rho~ = a*b*I - a*(I_m (x) rho_B) - b*(rho_A (x) I_n) + rho

and requires ``||T_Y(rho~)|| <= h_a * h_b`` for every GPT subset Y when rho is
separable. ``(a, b) = (0, 0)`` is the GPT criterion, ``(0, 1)`` and ``(1, 0)``
with Y empty are the two halves of the reduction criterion.

PPT and reduction are also provided in their eigenvalue form so they can be
used as independent oracles.

"""

from __future__ import annotations

from dataclasses import dataclass
import cmath
import logging
import math
import typing as tp

import numpy as np

from .exceptions import ParamOutOfRange
from .gptops import REALIGNMENT, GptOpSet, gpt_transform, partial_transpose, realign
from .matlin import (
    CMatrix,
    DensityState,
    Subsystem,
    SubsystemDims,
    dagger,
    hermitian_eigenvalues,
    identity,
    kron,
    reduced_states,
    trace_norm,
)

_logger = logging.getLogger(__name__)

TOL_VERDICT = 1e-8

CRITERIA = tp.Literal['generalized-reduction', 'ppt', 'reduction', 'realignment']
NORM_CRITERIA = ('generalized-reduction', 'realignment')


@dataclass(frozen=True)
class ReductionParams:
    a: complex = 0
    b: complex = 0

    def __post_init__(self):
        for name in ('a', 'b'):
            value = complex(getattr(self, name))
            if not cmath.isfinite(value):
                raise ParamOutOfRange(f"Reduction parameter {name} must be finite, got {value}")

    @property
    def is_real(self) -> bool:
        return complex(self.a).imag == 0 and complex(self.b).imag == 0

    def __str__(self):
        return f"a={_format_scalar(self.a)}, b={_format_scalar(self.b)}"


@dataclass(frozen=True)
class BoundPair:
    h_a: float
    h_b: float

    @property
    def product(self) -> float:
        return self.h_a * self.h_b


@dataclass(frozen=True)
class CriterionVerdict:
    """One criterion evaluation.

    For the norm-type criteria the statistic is a trace norm and
    ``violation = max(statistic - bound, 0)``. For the eigenvalue-type
    criteria (ppt, reduction) the statistic is a minimum eigenvalue, the bound
    is 0 and ``violation = max(bound - statistic, 0)``.

    """
    criterion: CRITERIA
    statistic: float
    bound: float
    violation: float
    entangled: bool
    params: tp.Optional[ReductionParams] = None
    yset: tp.Optional[GptOpSet] = None

    @property
    def norm_type(self) -> bool:
        return self.criterion in NORM_CRITERIA


def _format_scalar(x: complex) -> str:
    x = complex(x)
    if x.imag == 0:
        return f"{x.real:.17g}"
    return f"{x.real:.17g}{x.imag:+.17g}j"


def _norm_verdict(criterion: CRITERIA, statistic: float, bound: float, tol_verdict: float,
                  params: tp.Optional[ReductionParams] = None,
                  yset: tp.Optional[GptOpSet] = None) -> CriterionVerdict:
    violation = max(statistic - bound, 0.0)
    return CriterionVerdict(criterion, statistic, bound, violation, violation > tol_verdict, params, yset)


def _eigen_verdict(criterion: CRITERIA, statistic: float, tol_verdict: float) -> CriterionVerdict:
    return CriterionVerdict(criterion, statistic, 0.0, max(-statistic, 0.0), statistic < -tol_verdict)


def generalized_reduction_map(rho: DensityState, p: ReductionParams) -> CMatrix:
    """``a*b*I - a*(I_m (x) rho_B) - b*(rho_A (x) I_n) + rho``; terms with zero weight are skipped."""
    m, n = rho.m, rho.n
    a, b = complex(p.a), complex(p.b)
    result = np.array(rho.mat, dtype=np.complex128, copy=True)
    if a == 0 and b == 0:
        return result
    rho_a, rho_b = reduced_states(rho)
    if a * b != 0:
        result += a * b * identity(m * n)
    if a != 0:
        result -= a * kron(identity(m), rho_b)
    if b != 0:
        result -= b * kron(rho_a, identity(n))
    return result


def h_factor(x: complex, dim: int, row_in: bool, col_in: bool) -> float:
    """Per-subsystem bound factor.

    ``|x-1| + (dim-1)|x|`` when both or neither transposition flag is set,
    ``sqrt(|x-1|^2 + (dim-1)|x|^2)`` when exactly one is.

    """
    x = complex(x)
    if row_in == col_in:
        return abs(x - 1) + (dim - 1) * abs(x)
    return math.sqrt(abs(x - 1) ** 2 + (dim - 1) * abs(x) ** 2)


def bound_pair(p: ReductionParams, dims: SubsystemDims, yset: GptOpSet) -> BoundPair:
    return BoundPair(
        h_factor(p.a, dims.m, yset.rA, yset.cA),
        h_factor(p.b, dims.n, yset.rB, yset.cB),
    )


def _evaluate_mapped(mapped: CMatrix, dims: SubsystemDims, p: ReductionParams, yset: GptOpSet,
                     tol_verdict: float) -> CriterionVerdict:
    statistic = trace_norm(gpt_transform(mapped, dims, yset))
    bound = bound_pair(p, dims, yset).product
    return _norm_verdict('generalized-reduction', statistic, bound, tol_verdict, p, yset)


def evaluate(rho: DensityState, p: ReductionParams, yset: GptOpSet,
             tol_verdict: float = TOL_VERDICT) -> CriterionVerdict:
    """Test ``||T_Y(rho~)|| <= h_a * h_b``."""
    return _evaluate_mapped(generalized_reduction_map(rho, p), rho.dims, p, yset, tol_verdict)


def evaluate_all_Y(rho: DensityState, p: ReductionParams,
                   tol_verdict: float = TOL_VERDICT) -> list[CriterionVerdict]:
    """One verdict per GPT subset, in counter order."""
    mapped = generalized_reduction_map(rho, p)
    return [_evaluate_mapped(mapped, rho.dims, p, yset, tol_verdict) for yset in GptOpSet.all()]


def detected(verdicts: tp.Iterable[CriterionVerdict]) -> bool:
    return any(verdict.entangled for verdict in verdicts)


def scan_params(rho: DensityState, a_values: tp.Iterable[complex], b_values: tp.Iterable[complex],
                ysets: tp.Optional[tp.Sequence[GptOpSet]] = None,
                tol_verdict: float = TOL_VERDICT) -> CriterionVerdict:
    """Evaluate over an (a, b) grid and return the verdict with the largest violation."""
    ysets = GptOpSet.all() if ysets is None else tuple(ysets)
    b_values = tuple(b_values)
    best = None
    for a in a_values:
        for b in b_values:
            p = ReductionParams(a, b)
            mapped = generalized_reduction_map(rho, p)
            for yset in ysets:
                verdict = _evaluate_mapped(mapped, rho.dims, p, yset, tol_verdict)
                if best is None or verdict.violation > best.violation:
                    best = verdict
    if best is None:
        raise ValueError("Parameter scan needs at least one (a, b, Y) point")
    return best


def ppt_check(rho: DensityState, side: Subsystem = 'A', tol_verdict: float = TOL_VERDICT) -> CriterionVerdict:
    """Minimum eigenvalue of the partial transpose.

    Both sides have the same spectrum for Hermitian rho, A is used by default.

    """
    lowest = hermitian_eigenvalues(partial_transpose(rho.mat, rho.dims, side), rho.tol_herm)[0]
    return _eigen_verdict('ppt', float(lowest), tol_verdict)


def _hermitian_part(m: CMatrix) -> CMatrix:
    return (m + dagger(m)) / 2


def reduction_eigenvalues(rho: DensityState) -> dict[str, float]:
    """Minimum eigenvalues of ``rho_A (x) I - rho`` (key ``'A'``) and ``I (x) rho_B - rho`` (key ``'B'``).

    A partial trace adds up the Hermiticity error of ``rho`` over the traced
    dimension, so both operators are symmetrized before the eigensolve.

    """
    rho_a, rho_b = reduced_states(rho)
    side_a = _hermitian_part(kron(rho_a, identity(rho.n)) - rho.mat)
    side_b = _hermitian_part(kron(identity(rho.m), rho_b) - rho.mat)
    return {
        'A': float(hermitian_eigenvalues(side_a, rho.tol_herm)[0]),
        'B': float(hermitian_eigenvalues(side_b, rho.tol_herm)[0]),
    }


def reduction_check(rho: DensityState, side: tp.Optional[Subsystem] = None,
                    tol_verdict: float = TOL_VERDICT) -> CriterionVerdict:
    lowest = reduction_eigenvalues(rho)
    statistic = min(lowest.values()) if side is None else lowest[side]
    return _eigen_verdict('reduction', statistic, tol_verdict)


def realignment_check(rho: DensityState, tol_verdict: float = TOL_VERDICT) -> CriterionVerdict:
    statistic = trace_norm(realign(rho.mat, rho.dims))
    return _norm_verdict('realignment', statistic, 1.0, tol_verdict, ReductionParams(0, 0), REALIGNMENT)
