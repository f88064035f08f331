import csv
import json

import numpy as np
import pytest

from sep_core.exceptions import InvariantViolation
from sep_core.matlin import SubsystemDims
from sep_core.reader import StateParseError, parse_state, read_state
from sep_core.states import horodecki_3x3, load_state, random_mixed_state, save_state, werner
from sep_core.sweep import SweepRecord
from sep_core.writer import RECORD_FIELDS, state_to_dict, write_records, write_state


def _state_text(**overrides) -> str:
    data = state_to_dict(werner(2, 0.5))
    data.update(overrides)
    return json.dumps(data)


@pytest.mark.parametrize('labeled', [werner(3, -0.5), horodecki_3x3(0.3), random_mixed_state(SubsystemDims(2, 3), 4)],
                         ids=lambda s: s.name)
def test_state_file_round_trip(tmp_path, labeled):
    path = tmp_path / 'state.json'
    save_state(labeled, str(path))
    loaded = load_state(str(path))
    assert loaded.dims == labeled.dims
    assert loaded.name == labeled.name
    assert loaded.params == labeled.params
    assert np.max(np.abs(loaded.state.mat - labeled.state.mat)) <= 1e-15


def test_bad_trace_is_an_invariant_violation(tmp_path):
    mat = np.diag([0.3, 0.2, 0.2, 0.2])
    path = tmp_path / 'bad.json'
    path.write_text(json.dumps({'m': 2, 'n': 2, 're': mat.tolist(), 'im': np.zeros((4, 4)).tolist()}))
    with pytest.raises(InvariantViolation):
        read_state(path)
    assert read_state(path, checked=False).state.checked is False


def test_size_mismatch_is_a_parse_error():
    with pytest.raises(StateParseError) as info:
        parse_state(_state_text(m=3))
    assert info.value.field == 're'


@pytest.mark.parametrize('overrides, field', [
    ({'m': 0}, 'm'),
    ({'n': True}, 'n'),
    ({'im': None}, 'im'),
    ({'params': []}, 'params'),
    ({'params': {'f': 'x'}}, 'params.f'),
    ({'name': 3}, 'name'),
])
def test_field_errors(overrides, field):
    with pytest.raises(StateParseError) as info:
        parse_state(_state_text(**overrides))
    assert info.value.field == field


def test_bad_entry_location():
    data = state_to_dict(werner(2, 0.5))
    data['re'][1][2] = 'a'
    with pytest.raises(StateParseError, match=r"re\[1\]\[2\]"):
        parse_state(json.dumps(data))


def test_malformed_json_reports_line():
    with pytest.raises(StateParseError) as info:
        parse_state('{\n  "m": 2,\n  "n": \n}')
    assert info.value.line == 4
    with pytest.raises(StateParseError):
        parse_state('[1, 2]')


def _records():
    return [
        SweepRecord(-1.0, 0.0, 0.0, 'cA,rB', 5 / 3, 1.0, 2 / 3),
        SweepRecord(-0.5, 0.0, 0.0, 'cA,rB', 7 / 6, 1.0, 1 / 6),
    ]


def test_csv_records(tmp_path):
    path = tmp_path / 'out.csv'
    write_records(_records(), 'csv', path)
    lines = path.read_text().splitlines()
    assert len(lines) == 3
    assert lines[0] == 'family_param,a,b,yset,statistic,bound,violation'
    with open(path, newline='') as f:
        rows = list(csv.DictReader(f))
    assert float(rows[0]['violation']) == 2 / 3
    assert rows[1]['yset'] == 'cA,rB'


def test_json_records(tmp_path):
    path = tmp_path / 'out.json'
    write_records(_records(), 'json', path)
    loaded = [SweepRecord(**row) for row in json.loads(path.read_text())]
    assert loaded == _records()
    assert list(json.loads(path.read_text())[0]) == list(RECORD_FIELDS)


def test_unknown_record_format(tmp_path):
    with pytest.raises(ValueError):
        write_records(_records(), 'xml', tmp_path / 'out.xml')


def test_write_state_is_json(tmp_path):
    path = tmp_path / 'w.json'
    write_state(werner(3, 0), path)
    data = json.loads(path.read_text(encoding='utf-8'))
    assert (data['m'], data['n'], data['name']) == (3, 3, 'werner')
    assert len(data['re']) == 9 and len(data['im'][0]) == 9
