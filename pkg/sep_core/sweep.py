"""Parameter sweeps over (family parameter, b) grids and threshold search.

Grid points are evaluated independently, optionally on a thread pool, and
always returned in grid order: family parameter major, then b.

"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
import logging
import math
import os
import typing as tp

from .criteria import (
    TOL_VERDICT,
    CriterionVerdict,
    ReductionParams,
    evaluate,
    ppt_check,
    realignment_check,
    reduction_check,
)
from .exceptions import EmptyRecords, NoSignChange, ParamOutOfRange
from .gptops import REALIGNMENT, GptOpSet
from .states import LabeledState, horodecki_3x3, load_state, werner
from .writer import write_records
from .writer.writer import RECORD_FORMATS

_logger = logging.getLogger(__name__)

FAMILIES = tp.Literal['werner-3', 'werner-d', 'horodecki', 'file']
THRESHOLD_CRITERIA = tp.Literal['grc', 'ppt', 'reduction', 'realignment']

DEFAULT_STEP = 0.05
THRESHOLD_TOL = 1e-6
GRID_DECIMALS = 12
THREADS_ENV = 'SEPSCOPE_THREADS'


@dataclass(frozen=True)
class Axis:
    start: float
    stop: float
    step: float = DEFAULT_STEP

    def __post_init__(self):
        if not self.step > 0:
            raise ParamOutOfRange(f"Axis step must be positive, got {self.step}")
        if self.start > self.stop:
            raise ParamOutOfRange(f"Axis start {self.start} exceeds stop {self.stop}")

    @classmethod
    def single(cls, value: float) -> Axis:
        return cls(value, value)

    def points(self) -> list[float]:
        """``start + k*step``, with the last point clamped to ``stop``."""
        count = math.ceil((self.stop - self.start) / self.step - 1e-9) + 1
        points = [round(self.start + k * self.step, GRID_DECIMALS) for k in range(count)]
        points[-1] = min(points[-1], self.stop)
        return points


@dataclass(frozen=True)
class GridSpec:
    family: FAMILIES
    a: float
    b_axis: Axis
    param_axis: Axis = Axis.single(0.0)
    yset: GptOpSet = REALIGNMENT
    source: tp.Optional[str] = None
    d: int = 3


@dataclass(frozen=True)
class SweepRecord:
    family_param: float
    a: float
    b: float
    yset: str
    statistic: float
    bound: float
    violation: float

    @classmethod
    def from_verdict(cls, family_param: float, a: float, b: float, verdict: CriterionVerdict) -> SweepRecord:
        return cls(family_param, a, b, verdict.yset.code, verdict.statistic, verdict.bound, verdict.violation)


@dataclass(frozen=True)
class SweepSummary:
    size: int
    max_violation: float
    argmax: tuple[tuple[float, float], ...] = field(default_factory=tuple)


def family_state(family: FAMILIES, param: float, source: tp.Optional[str] = None, d: int = 3) -> LabeledState:
    """One member of a sweep family; ``d`` is the local dimension of ``werner-d``."""
    if family == 'werner-3':
        return werner(3, param)
    if family == 'werner-d':
        return werner(d, param)
    if family == 'horodecki':
        return horodecki_3x3(param)
    if family == 'file':
        if source is None:
            raise ValueError("The file family needs a state file path")
        return load_state(source)
    raise ValueError(f"Unknown family {family!r}")


def worker_count(requested: tp.Optional[int] = None) -> int:
    """Worker threads: ``SEPSCOPE_THREADS`` caps the request, default is the CPU count."""
    count = requested or os.cpu_count() or 1
    cap = os.environ.get(THREADS_ENV)
    if cap:
        try:
            count = min(count, int(cap))
        except ValueError:
            raise ValueError(f"{THREADS_ENV} must be an integer, got {cap!r}")
    return max(count, 1)


def run_sweep(spec: GridSpec, workers: tp.Optional[int] = None,
              tol_verdict: float = TOL_VERDICT) -> list[SweepRecord]:
    params = spec.param_axis.points() if spec.family != 'file' else [0.0]
    b_values = spec.b_axis.points()
    # States are built up front so range errors surface before any work is scheduled
    states = {param: family_state(spec.family, param, spec.source, spec.d).state for param in params}
    tasks = [(param, b) for param in params for b in b_values]

    def task(point: tuple[float, float]) -> SweepRecord:
        param, b = point
        verdict = evaluate(states[param], ReductionParams(spec.a, b), spec.yset, tol_verdict)
        return SweepRecord.from_verdict(param, spec.a, b, verdict)

    count = min(worker_count(workers), len(tasks))
    _logger.debug("Sweeping %s: %d x %d grid on %d workers", spec.family, len(params), len(b_values), count)
    if count == 1:
        return [task(point) for point in tasks]
    with ThreadPoolExecutor(max_workers=count) as pool:
        indexed = list(zip(range(len(tasks)), pool.map(task, tasks)))
    indexed.sort(key=lambda item: item[0])
    return [record for _, record in indexed]


def summarize(records: tp.Sequence[SweepRecord], ties: float = 1e-12) -> SweepSummary:
    if not records:
        raise EmptyRecords("No sweep records to summarize")
    best = max(record.violation for record in records)
    argmax = tuple((r.family_param, r.b) for r in records if best - r.violation <= ties)
    return SweepSummary(len(records), best, argmax)


def _detects(family: FAMILIES, param: float, a: float, b: float, yset: GptOpSet,
             criterion: THRESHOLD_CRITERIA, tol_verdict: float, d: int) -> bool:
    rho = family_state(family, param, d=d).state
    if criterion == 'grc':
        return evaluate(rho, ReductionParams(a, b), yset, tol_verdict).entangled
    if criterion == 'ppt':
        return ppt_check(rho, tol_verdict=tol_verdict).entangled
    if criterion == 'reduction':
        return reduction_check(rho, tol_verdict=tol_verdict).entangled
    if criterion == 'realignment':
        return realignment_check(rho, tol_verdict).entangled
    raise ValueError(f"Unknown criterion {criterion!r}")


def find_threshold(family: FAMILIES, a: float, b: float, yset: GptOpSet, lo: float, hi: float,
                   criterion: THRESHOLD_CRITERIA = 'grc', tol: float = THRESHOLD_TOL,
                   tol_verdict: float = TOL_VERDICT, d: int = 3) -> float:
    """Bisect for the family parameter where detection switches on or off."""
    if family == 'file':
        raise ValueError("Threshold search needs a parameterized family")
    lo, hi = sorted((lo, hi))
    detects_lo = _detects(family, lo, a, b, yset, criterion, tol_verdict, d)
    detects_hi = _detects(family, hi, a, b, yset, criterion, tol_verdict, d)
    if detects_lo == detects_hi:
        raise NoSignChange(
            f"{criterion} gives the same verdict ({'entangled' if detects_lo else 'not detected'}) at {lo} and {hi}")
    steps = 0
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if _detects(family, mid, a, b, yset, criterion, tol_verdict, d) == detects_lo:
            lo = mid
        else:
            hi = mid
        steps += 1
    _logger.debug("Threshold for %s on %s after %d bisection steps: [%r, %r]", criterion, family, steps, lo, hi)
    return (lo + hi) / 2


def emit(records: tp.Sequence[SweepRecord], fmt: RECORD_FORMATS, path: tp.Union[str, os.PathLike]) -> None:
    if not records:
        raise EmptyRecords("Refusing to write an empty sweep")
    write_records(records, fmt, path)
