import argparse
from abc import ABC, abstractmethod
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from cli import CLI


class CommandBase(ABC):
    NAME: str = "unknown"
    HELP: str = ""

    def __init__(self, cli: 'CLI'):
        self.cli = cli

    @property
    def config(self):
        return self.cli.config

    def add_arguments(self, parser: argparse.ArgumentParser):  # Extra arguments
        pass

    @abstractmethod
    def __call__(self, args: argparse.Namespace) -> int:
        ...
