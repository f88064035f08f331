"""Read state files.

A state file is a UTF-8 JSON object::

    {"m": 3, "n": 3, "re": [[...], ...], "im": [[...], ...],
     "name": "werner", "params": {"d": 3, "f": -0.5}}

``re`` and ``im`` are row-major (m*n) x (m*n) arrays of reals.

"""

from __future__ import annotations

import json
import math
import numbers
import os
import typing as tp

import numpy as np

from .exceptions import StateParseError
from ..matlin import DensityState, SubsystemDims
from ..states import LabeledState


def _dimension(data: dict, key: str) -> int:
    if key not in data:
        raise StateParseError("Missing subsystem dimension", field=key)
    value = data[key]
    if isinstance(value, bool) or not isinstance(value, int) or value < 1:
        raise StateParseError(f"Expected a positive integer, got {value!r}", field=key)
    return value


def _real_array(data: dict, key: str, size: int) -> np.ndarray:
    if key not in data:
        raise StateParseError("Missing matrix part", field=key)
    rows = data[key]
    if not isinstance(rows, list) or len(rows) != size:
        found = len(rows) if isinstance(rows, list) else type(rows).__name__
        raise StateParseError(f"Expected {size} rows for m*n={size}, got {found}", field=key)
    for r, row in enumerate(rows):
        if not isinstance(row, list) or len(row) != size:
            found = len(row) if isinstance(row, list) else type(row).__name__
            raise StateParseError(f"Expected {size} columns, got {found}", field=f"{key}[{r}]")
        for c, value in enumerate(row):
            if isinstance(value, bool) or not isinstance(value, numbers.Real):
                raise StateParseError(f"Expected a real number, got {value!r}", field=f"{key}[{r}][{c}]")
            if not math.isfinite(value):
                raise StateParseError(f"Non-finite entry {value!r}", field=f"{key}[{r}][{c}]")
    return np.asarray(rows, dtype=np.float64)


def _params(data: dict) -> dict[str, float]:
    params = data.get('params', {})
    if not isinstance(params, dict):
        raise StateParseError("Expected an object of named reals", field='params')
    for key, value in params.items():
        if isinstance(value, bool) or not isinstance(value, numbers.Real):
            raise StateParseError(f"Expected a real number, got {value!r}", field=f"params.{key}")
    return dict(params)


def parse_state(text: str, checked: bool = True) -> LabeledState:
    """Parse state-file text.

    Structural problems raise :class:`StateParseError`; a well formed matrix
    that is not a density matrix raises ``InvariantViolation`` unless
    ``checked`` is False.

    """
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise StateParseError(e.msg, line=e.lineno, column=e.colno) from e
    if not isinstance(data, dict):
        raise StateParseError(f"Expected a JSON object, got {type(data).__name__}", line=1)
    dims = SubsystemDims(_dimension(data, 'm'), _dimension(data, 'n'))
    mat = _real_array(data, 're', dims.total) + 1j * _real_array(data, 'im', dims.total)
    name = data.get('name', 'file')
    if not isinstance(name, str):
        raise StateParseError(f"Expected text, got {name!r}", field='name')
    return LabeledState(name, DensityState(dims, mat, checked=checked), _params(data))


def read_state(path: tp.Union[str, os.PathLike], checked: bool = True) -> LabeledState:
    with open(path, encoding='utf-8') as f:
        return parse_state(f.read(), checked=checked)
