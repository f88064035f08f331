import argparse
import json
import logging
import os
import sys
from numbers import Number
from typing import TypedDict, Union, List, Optional, Dict, Type, TYPE_CHECKING

import appdirs
from box import Box
from colorama import Fore, just_fix_windows_console

from sep_core.criteria import TOL_VERDICT
from sep_core.matlin import TOL_HERM, TOL_PSD
from sep_core.sweep import DEFAULT_STEP, THRESHOLD_TOL
from .defaults import Defaults
from .literals import OUTPUT_FORMATS, CRITERION_NAMES

if TYPE_CHECKING:
    from .commands import CommandBase

AUTHOR = "sepscope"
APP_NAME = "sepscope"
USER_CONFIG_DIR = appdirs.user_config_dir(APP_NAME, AUTHOR)
CONFIG_ENV = 'SEPSCOPE_CONFIG'


class ConfigDict(TypedDict):
    debug: bool
    color: bool
    threads: Union[None, int]
    tol_herm: Number
    tol_psd: Number
    tol_verdict: Number
    threshold_tol: Number
    default_step: Number
    output_format: OUTPUT_FORMATS
    default_criterion: CRITERION_NAMES
    compare_grid: List[Number]


DEFAULT_CONFIG: ConfigDict = {
    'debug': False,
    'color': True,
    'threads': None,
    'tol_herm': TOL_HERM,
    'tol_psd': TOL_PSD,
    'tol_verdict': TOL_VERDICT,
    'threshold_tol': THRESHOLD_TOL,
    'default_step': DEFAULT_STEP,
    'output_format': 'csv',
    'default_criterion': 'all',
    'compare_grid': list(Defaults.COMPARE_GRID),
}

ConfigType = Box[ConfigDict]


def config_file_path(file: Optional[str] = None) -> str:
    if file:
        return file
    if env_file := os.environ.get(CONFIG_ENV):
        return env_file
    # Portable mode, a config next to where we run wins over the user one
    if os.path.exists('config.json'):
        return 'config.json'
    return os.path.join(USER_CONFIG_DIR, 'config.json')


def load_config(file: Optional[str] = None) -> ConfigType:
    config = dict(DEFAULT_CONFIG)
    file = config_file_path(file)

    # Ensure config directory path exists
    if base_dir := os.path.dirname(file):
        os.makedirs(base_dir, exist_ok=True)

    if os.path.exists(file):
        exists = True
        with open(file) as f:
            current_json = json.load(f)
            # Check if there are any new keys
            changes = len(config.keys() - current_json.keys()) != 0
            config = {**config, **current_json}
    else:
        changes = True
        exists = False
    if changes:
        with open(file, "w") as f:
            json.dump(config, f, indent=4)
        if not exists:
            print(f"Config file created at {file}. You can edit it manually if you want.", file=sys.stderr)
    if config['output_format'] not in OUTPUT_FORMATS.__args__:
        raise ValueError(f"Invalid output_format: {config['output_format']}")
    if config['default_criterion'] not in CRITERION_NAMES.__args__:
        raise ValueError(f"Invalid default_criterion: {config['default_criterion']}")
    if config['threads'] is not None and (not isinstance(config['threads'], int) or config['threads'] < 1):
        raise ValueError(f"Invalid threads: {config['threads']}")
    return Box(config)


class CLI:
    DESCRIPTION = (
        "Entanglement detection for bipartite density matrices with the generalized reduction criterion "
        "and its special cases.")
    EPILOG = (
        f"Exit codes: {Defaults.EXIT_CLEAN} = completed, nothing detected; "
        f"{Defaults.EXIT_ENTANGLED} = entanglement detected; "
        f"{Defaults.EXIT_USAGE} = input or usage error. {Defaults.NOT_DETECTED_WORDING}.")

    commands: Dict[str, 'CommandBase']
    config: ConfigType

    def __init__(self):
        from .commands import COMMANDS
        just_fix_windows_console()
        self.parser = self.build_parser(COMMANDS)
        self.config = None

    def build_parser(self, command_types: List[Type['CommandBase']]) -> argparse.ArgumentParser:
        parser = argparse.ArgumentParser(prog=APP_NAME, description=self.DESCRIPTION, epilog=self.EPILOG)
        parser.add_argument('--config', help="config file path (default: per-user config directory)")
        parser.add_argument('--debug', action='store_true', default=None, help="enable debug logging")
        parser.add_argument('--no-color', dest='color', action='store_false', default=None,
                            help="disable coloured messages")
        parser.add_argument('--threads', type=int, help="sweep worker threads")
        parser.add_argument('--tol-verdict', type=float, help=f"verdict threshold (default {TOL_VERDICT:g})")
        parser.add_argument('--tol-herm', type=float, help=f"Hermiticity tolerance (default {TOL_HERM:g})")
        parser.add_argument('--tol-psd', type=float, help=f"positivity tolerance (default {TOL_PSD:g})")
        subparsers = parser.add_subparsers(dest='command', required=True, metavar='command')
        self.commands = {}
        for command_type in command_types:
            command = command_type(self)
            sub = subparsers.add_parser(command.NAME, help=command.HELP, description=command.HELP,
                                        epilog=self.EPILOG)
            command.add_arguments(sub)
            self.commands[command.NAME] = command
        return parser

    def apply_overrides(self, args: argparse.Namespace):
        # Overrides live for this run only and are never written back
        for key in ('debug', 'color', 'threads', 'tol_verdict', 'tol_herm', 'tol_psd'):
            value = getattr(args, key)
            if value is not None:
                self.config[key] = value

    def setup_logging(self):
        logging.basicConfig(
            level=logging.DEBUG if self.config.debug else logging.WARNING,
            format='%(levelname)s %(name)s: %(message)s',
            force=True,
        )

    def paint(self, color: str, message: str) -> str:
        if self.config is not None and not self.config.color:
            return message
        return f"{color}{message}{Fore.RESET}"

    def warn(self, message: str):
        print(self.paint(Defaults.WARNING_COLOR, message), file=sys.stderr)

    def error(self, message: str):
        print(self.paint(Defaults.ERROR_COLOR, message), file=sys.stderr)

    def __call__(self, argv: Optional[List[str]] = None) -> int:
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else Defaults.EXIT_USAGE
        try:
            self.config = load_config(args.config)
        except (ValueError, OSError) as e:
            self.error(f"Could not load config: {e}")
            return Defaults.EXIT_USAGE
        self.apply_overrides(args)
        self.setup_logging()
        try:
            return self.commands[args.command](args)
        except (ValueError, OSError) as e:
            self.error(f"{type(e).__name__}: {e}")
            return Defaults.EXIT_USAGE
