import argparse

from sep_core.gptops import GptOpSet, REALIGNMENT
from sep_core.sweep import Axis, GridSpec, emit, find_threshold, run_sweep, summarize
from .base import CommandBase
from ..defaults import Defaults
from ..helpers import format_float
from ..literals import SWEEP_FAMILIES, OUTPUT_FORMATS

ARGMAX_SHOWN = 8


def _yset(code: str) -> GptOpSet:
    try:
        return GptOpSet.parse(code)
    except ValueError as e:
        raise argparse.ArgumentTypeError(str(e))


class SweepCommand(CommandBase):
    NAME = 'sweep'
    HELP = "Evaluate N over a (family parameter, b) grid at fixed a and write CSV or JSON."

    def add_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument('--family', choices=SWEEP_FAMILIES.__args__, required=True)
        parser.add_argument('--file', help="state file for the file family")
        parser.add_argument('--d', type=int, default=3, help="local dimension for werner-d (default 3)")
        parser.add_argument('--a', type=float, default=0.0, help="fixed a (default 0)")
        parser.add_argument('--b-start', type=float, default=Defaults.B_AXIS[0])
        parser.add_argument('--b-stop', type=float, default=Defaults.B_AXIS[1])
        parser.add_argument('--b-step', type=float, help="b step (default from config, 0.05)")
        parser.add_argument('--param-start', type=float, help="f or c start (default: whole family range)")
        parser.add_argument('--param-stop', type=float)
        parser.add_argument('--param-step', type=float, help="f or c step (default from config, 0.05)")
        parser.add_argument('--yset', type=_yset, default=REALIGNMENT, help="GPT subset (default cA,rB)")
        parser.add_argument('--format', choices=OUTPUT_FORMATS.__args__, help="output format (default from config)")
        parser.add_argument('--out', required=True, help="output file")
        parser.add_argument('--threshold', type=float, nargs=2, metavar=('LO', 'HI'),
                            help="also bisect for the detection threshold in the family parameter")
        parser.add_argument('--threshold-b', type=float, default=0.0, help="b used for --threshold (default 0)")

    def grid_spec(self, args: argparse.Namespace) -> GridSpec:
        step = self.config.default_step
        family_range = Defaults.HORODECKI_AXIS if args.family == 'horodecki' else Defaults.WERNER_AXIS
        param_axis = Axis(
            family_range[0] if args.param_start is None else args.param_start,
            family_range[1] if args.param_stop is None else args.param_stop,
            args.param_step or step,
        )
        if args.family == 'file':
            if not args.file:
                raise ValueError("The file family needs --file")
            param_axis = Axis.single(0.0)
        b_axis = Axis(args.b_start, args.b_stop, args.b_step or step)
        return GridSpec(args.family, args.a, b_axis, param_axis, args.yset, args.file, args.d)

    def __call__(self, args: argparse.Namespace) -> int:
        spec = self.grid_spec(args)
        records = run_sweep(spec, self.config.threads, self.config.tol_verdict)
        emit(records, args.format or self.config.output_format, args.out)
        summary = summarize(records)
        shown = ', '.join(f"({format_float(p)}, {format_float(b)})" for p, b in summary.argmax[:ARGMAX_SHOWN])
        if len(summary.argmax) > ARGMAX_SHOWN:
            shown += f", ... {len(summary.argmax) - ARGMAX_SHOWN} more"
        print(f"grid {len(spec.param_axis.points()) if spec.family != 'file' else 1}"
              f"x{len(spec.b_axis.points())} = {summary.size} points; "
              f"max N = {format_float(summary.max_violation)} at (param, b) = {shown}")
        if args.threshold:
            if args.family == 'file':
                raise ValueError("--threshold needs a parameterized family")
            lo, hi = args.threshold
            threshold = find_threshold(args.family, args.a, args.threshold_b, args.yset, lo, hi,
                                       tol=self.config.threshold_tol, tol_verdict=self.config.tol_verdict, d=args.d)
            print(f"threshold = {format_float(threshold)}")
        return Defaults.EXIT_CLEAN
