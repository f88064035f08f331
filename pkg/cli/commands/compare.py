import argparse
from dataclasses import dataclass
from typing import Dict, List

from sep_core.criteria import (
    ReductionParams,
    detected,
    evaluate_all_Y,
    ppt_check,
    realignment_check,
    reduction_check,
    scan_params,
)
from sep_core.matlin import SubsystemDims
from sep_core.states import LabeledState, horodecki_3x3, random_mixed_state, random_separable, werner
from .base import CommandBase
from ..defaults import Defaults
from ..helpers import format_table
from ..literals import COMPARE_FAMILIES

FLAG_COLUMNS = ('ppt', 'reduction', 'realignment', 'gpt', 'grc')


@dataclass
class StateFlags:
    label: str
    flags: Dict[str, bool]


class CompareCommand(CommandBase):
    NAME = 'compare'
    HELP = "Run every criterion over an ensemble of states and count which ones each criterion flags."

    def add_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument('--family', choices=COMPARE_FAMILIES.__args__, default='separable')
        parser.add_argument('--count', type=int, default=20, help="ensemble size for random families (default 20)")
        parser.add_argument('--seed', type=int, default=0, help="first seed, state i uses seed + i (default 0)")
        parser.add_argument('--m', type=int, default=3)
        parser.add_argument('--n', type=int, default=3)
        parser.add_argument('--k', type=int, default=12, help="terms per separable mixture (default 12)")

    def ensemble(self, args: argparse.Namespace) -> List[LabeledState]:
        if args.family == 'werner':
            return [werner(3, f) for f in Defaults.COMPARE_WERNER_F]
        if args.family == 'horodecki':
            return [horodecki_3x3(c) for c in Defaults.COMPARE_HORODECKI_C]
        if args.count < 1:
            raise ValueError(f"--count must be positive, got {args.count}")
        dims = SubsystemDims(args.m, args.n)
        if args.family == 'separable':
            return [random_separable(dims, args.k, args.seed + i) for i in range(args.count)]
        return [random_mixed_state(dims, args.seed + i) for i in range(args.count)]

    def flags(self, labeled: LabeledState) -> StateFlags:
        rho = labeled.state
        tol = self.config.tol_verdict
        grid = [float(x) for x in self.config.compare_grid]
        return StateFlags(labeled.label, {
            'ppt': ppt_check(rho, tol_verdict=tol).entangled,
            'reduction': reduction_check(rho, tol_verdict=tol).entangled,
            'realignment': realignment_check(rho, tol).entangled,
            'gpt': detected(evaluate_all_Y(rho, ReductionParams(0, 0), tol)),
            'grc': scan_params(rho, grid, grid, tol_verdict=tol).entangled,
        })

    def __call__(self, args: argparse.Namespace) -> int:
        results = [self.flags(labeled) for labeled in self.ensemble(args)]
        rows = [[result.label, *('yes' if result.flags[name] else 'no' for name in FLAG_COLUMNS)]
                for result in results]
        print(format_table(('state', *FLAG_COLUMNS), rows))
        counts = {name: sum(result.flags[name] for result in results) for name in FLAG_COLUMNS}
        print(self.cli.paint(Defaults.SUMMARY_COLOR,
                             f"flagged out of {len(results)}: "
                             + ', '.join(f"{name} {counts[name]}" for name in FLAG_COLUMNS)))
        beyond_gpt = [result.label for result in results if result.flags['grc'] and not result.flags['gpt']]
        print(f"flagged by grc but not gpt: {len(beyond_gpt)}")
        for label in beyond_gpt:
            print(self.cli.paint(Defaults.DETECTED_COLOR, f"  {label}"))
        return Defaults.EXIT_CLEAN
