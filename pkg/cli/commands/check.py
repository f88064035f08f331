import argparse
import sys
from typing import List, Tuple

from sep_core.criteria import (
    CriterionVerdict,
    ReductionParams,
    evaluate,
    ppt_check,
    realignment_check,
    reduction_check,
)
from sep_core.states import LabeledState
from .base import CommandBase
from ..defaults import Defaults
from ..helpers import (
    add_reduction_arguments,
    add_state_arguments,
    build_state,
    complex_scalar,
    format_table,
    verdict_row,
    yset_argument,
)
from ..literals import CRITERION_NAMES


class CheckCommand(CommandBase):
    NAME = 'check'
    HELP = "Evaluate separability criteria on one state and print a verdict table."

    def add_arguments(self, parser: argparse.ArgumentParser):
        add_state_arguments(parser)
        parser.add_argument('--criterion', choices=CRITERION_NAMES.__args__,
                            help="criterion to run; grc is the generalized reduction criterion (default from config)")
        add_reduction_arguments(parser)
        parser.add_argument('--yset', type=yset_argument, default='all',
                            help="GPT subset for grc, e.g. 'cA,rB', 'none' or 'all' (default all)")

    def verdicts(self, args: argparse.Namespace) -> Tuple[LabeledState, List[CriterionVerdict]]:
        labeled = build_state(args, self.config)
        rho = labeled.state
        tol = self.config.tol_verdict
        criterion = args.criterion or self.config.default_criterion
        verdicts = []
        if criterion in ('grc', 'all'):
            params = ReductionParams(complex_scalar(args.a, args.a_im), complex_scalar(args.b, args.b_im))
            verdicts.extend(evaluate(rho, params, yset, tol) for yset in args.yset)
        if criterion in ('ppt', 'all'):
            verdicts.append(ppt_check(rho, tol_verdict=tol))
        if criterion in ('reduction', 'all'):
            verdicts.append(reduction_check(rho, tol_verdict=tol))
        if criterion in ('realignment', 'all'):
            verdicts.append(realignment_check(rho, tol))
        return labeled, verdicts

    def __call__(self, args: argparse.Namespace) -> int:
        labeled, verdicts = self.verdicts(args)
        print(f"state: {labeled.label} [{labeled.dims}]")
        print(format_table(Defaults.VERDICT_COLUMNS, map(verdict_row, verdicts)))
        if any(verdict.entangled for verdict in verdicts):
            self.cli.warn("entangled: detected by at least one criterion")
            return Defaults.EXIT_ENTANGLED
        print(self.cli.paint(Defaults.SUMMARY_COLOR, f"not detected: {Defaults.NOT_DETECTED_WORDING}"),
              file=sys.stderr)
        return Defaults.EXIT_CLEAN
