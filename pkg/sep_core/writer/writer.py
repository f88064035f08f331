"""Write state files and sweep record files."""

from __future__ import annotations

import csv
import json
import os
import typing as tp

import numpy as np

if tp.TYPE_CHECKING:
    from ..states import LabeledState

RECORD_FIELDS = ('family_param', 'a', 'b', 'yset', 'statistic', 'bound', 'violation')
RECORD_FORMATS = tp.Literal['csv', 'json']


def state_to_dict(state: 'LabeledState') -> dict:
    mat = np.asarray(state.state.mat)
    return {
        'name': state.name,
        'params': dict(state.params),
        'm': state.dims.m,
        'n': state.dims.n,
        're': mat.real.tolist(),
        'im': mat.imag.tolist(),
    }


def write_state(state: 'LabeledState', path: tp.Union[str, os.PathLike]) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(state_to_dict(state), f, indent=1)
        f.write('\n')


def _csv_value(value: tp.Any) -> str:
    if isinstance(value, float):
        return format(value, '.17g')
    return str(value)


def write_records(records: tp.Sequence[tp.Any], fmt: RECORD_FORMATS, path: tp.Union[str, os.PathLike]) -> None:
    """Write records exposing :data:`RECORD_FIELDS` attributes as CSV or a JSON array."""
    rows = [{name: getattr(record, name) for name in RECORD_FIELDS} for record in records]
    if fmt == 'csv':
        with open(path, 'w', encoding='utf-8', newline='') as f:
            writer = csv.writer(f, lineterminator='\n')
            writer.writerow(RECORD_FIELDS)
            for row in rows:
                writer.writerow([_csv_value(row[name]) for name in RECORD_FIELDS])
    elif fmt == 'json':
        with open(path, 'w', encoding='utf-8') as f:
            json.dump(rows, f, indent=1)
            f.write('\n')
    else:
        raise ValueError(f"Unknown record format {fmt!r}, expected 'csv' or 'json'")
