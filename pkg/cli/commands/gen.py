import argparse

from sep_core.writer import write_state
from .base import CommandBase
from ..defaults import Defaults
from ..helpers import add_family_arguments, build_builtin
from ..literals import GEN_FAMILIES


class GenCommand(CommandBase):
    NAME = 'gen'
    HELP = "Generate a state and write it as a state file. Random families are deterministic per seed."

    def add_arguments(self, parser: argparse.ArgumentParser):
        parser.add_argument('family', choices=GEN_FAMILIES.__args__)
        add_family_arguments(parser)
        parser.add_argument('--out', required=True, help="output state file")

    def __call__(self, args: argparse.Namespace) -> int:
        labeled = build_builtin(args.family, args)
        write_state(labeled, args.out)
        print(f"wrote {labeled.label} [{labeled.dims}] to {args.out}")
        return Defaults.EXIT_CLEAN
