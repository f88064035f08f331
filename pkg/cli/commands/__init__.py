from .base import CommandBase
from .check import CheckCommand
from .sweep import SweepCommand
from .gen import GenCommand
from .compare import CompareCommand

COMMANDS = [CheckCommand, SweepCommand, GenCommand, CompareCommand]

__all__ = ['CommandBase', 'COMMANDS', 'CheckCommand', 'SweepCommand', 'GenCommand', 'CompareCommand']
