import argparse
from typing import List, Sequence, Iterable, TYPE_CHECKING

from sep_core.criteria import CriterionVerdict
from sep_core.exceptions import ParamOutOfRange
from sep_core.gptops import GptOpSet
from sep_core.matlin import DensityState, SubsystemDims
from sep_core.reader import read_state
from sep_core.states import (
    LabeledState,
    werner,
    horodecki_3x3,
    random_separable,
    random_mixed_state,
    maximally_mixed,
)
from .defaults import Defaults
from .literals import BUILTIN_STATES

if TYPE_CHECKING:
    from .cli import ConfigType


def format_float(value: float) -> str:
    return format(value, Defaults.FLOAT_FORMAT)


def parse_ysets(code: str) -> List[GptOpSet]:
    """``"all"`` expands to the 16 subsets, anything else is a single subset code."""
    if code.strip() == 'all':
        return list(Defaults.ALL_YSETS)
    return [GptOpSet.parse(code)]


def yset_argument(code: str) -> List[GptOpSet]:
    # Unknown codes are rejected at parse time, before any computation
    try:
        return parse_ysets(code)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


def complex_scalar(real: float, imag: float = 0.0) -> complex:
    return complex(real, imag) if imag else real


def add_reduction_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--a', '--a-re', dest='a', type=float, default=0.0, help="real part of a (default 0)")
    parser.add_argument('--a-im', type=float, default=0.0, help="imaginary part of a")
    parser.add_argument('--b', '--b-re', dest='b', type=float, default=0.0, help="real part of b (default 0)")
    parser.add_argument('--b-im', type=float, default=0.0, help="imaginary part of b")


def add_state_arguments(parser: argparse.ArgumentParser, required: bool = True):
    source = parser.add_mutually_exclusive_group(required=required)
    source.add_argument('--builtin', choices=BUILTIN_STATES.__args__, help="built-in state family")
    source.add_argument('--file', help="state file (JSON with m, n, re, im)")
    parser.add_argument('--unchecked', action='store_true', help="skip density matrix checks when loading a file")
    add_family_arguments(parser)


def add_family_arguments(parser: argparse.ArgumentParser):
    parser.add_argument('--d', type=int, default=3, help="Werner dimension (default 3)")
    parser.add_argument('--f', type=float, help="Werner parameter in [-1, 1]")
    parser.add_argument('--c', type=float, help="Horodecki parameter in (0, 1)")
    parser.add_argument('--m', type=int, default=3, help="dimension of subsystem A (default 3)")
    parser.add_argument('--n', type=int, default=3, help="dimension of subsystem B (default 3)")
    parser.add_argument('--k', type=int, default=12, help="terms in a random separable mixture (default 12)")
    parser.add_argument('--seed', type=int, default=0, help="random seed (default 0)")


def _required(args: argparse.Namespace, name: str, family: str) -> float:
    value = getattr(args, name)
    if value is None:
        raise ParamOutOfRange(f"The {family} family needs --{name}")
    return value


def build_builtin(family: str, args: argparse.Namespace) -> LabeledState:
    if family == 'werner':
        return werner(args.d, _required(args, 'f', family))
    if family == 'horodecki':
        return horodecki_3x3(_required(args, 'c', family))
    dims = SubsystemDims(args.m, args.n)
    if family == 'separable':
        return random_separable(dims, args.k, args.seed)
    if family == 'random':
        return random_mixed_state(dims, args.seed)
    if family == 'maximally-mixed':
        return maximally_mixed(dims)
    raise ValueError(f"Unknown state family {family!r}")


def build_state(args: argparse.Namespace, config: 'ConfigType') -> LabeledState:
    if args.file:
        state = read_state(args.file, checked=False)
        if args.unchecked:
            return state
        # Re-validate with the configured tolerances
        checked = DensityState(state.dims, state.state.mat, tol_herm=config.tol_herm, tol_psd=config.tol_psd)
        return LabeledState(state.name, checked, state.params)
    return build_builtin(args.builtin, args)


def verdict_row(verdict: CriterionVerdict) -> List[str]:
    return [
        verdict.criterion,
        verdict.yset.code if verdict.yset is not None else '-',
        format_float(verdict.statistic),
        format_float(verdict.bound),
        format_float(verdict.violation),
        'yes' if verdict.entangled else 'no',
    ]


def format_table(columns: Sequence[str], rows: Iterable[Sequence[str]]) -> str:
    """Whitespace aligned table with a fixed column order."""
    rows = [list(map(str, row)) for row in rows]
    widths = [max(len(str(column)), *(len(row[i]) for row in rows)) if rows else len(str(column))
              for i, column in enumerate(columns)]
    lines = ['  '.join(str(column).ljust(width) for column, width in zip(columns, widths)).rstrip()]
    for row in rows:
        lines.append('  '.join(cell.ljust(width) for cell, width in zip(row, widths)).rstrip())
    return '\n'.join(lines)
