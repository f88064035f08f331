from .exceptions import StateParseError
from .reader import read_state, parse_state

__all__ = ['StateParseError', 'read_state', 'parse_state']
