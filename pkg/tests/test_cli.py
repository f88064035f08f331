import json

import pytest

from cli import load_config, main
from cli.cli import DEFAULT_CONFIG
from cli.helpers import format_table, parse_ysets
from sep_core.gptops import REALIGNMENT
from sep_core.states import load_state


@pytest.fixture
def run(config_path, capsys):
    def runner(*argv):
        code = main(['--config', config_path, '--no-color', *argv])
        captured = capsys.readouterr()
        return code, captured.out, captured.err
    return runner


class TestConfig:
    def test_defaults_written(self, config_path):
        config = load_config(config_path)
        assert config.tol_verdict == DEFAULT_CONFIG['tol_verdict']
        with open(config_path) as f:
            assert json.load(f).keys() == DEFAULT_CONFIG.keys()

    def test_missing_keys_are_added(self, config_path):
        with open(config_path, 'w') as f:
            json.dump({'debug': True}, f)
        config = load_config(config_path)
        assert config.debug is True
        with open(config_path) as f:
            assert 'compare_grid' in json.load(f)

    def test_invalid_value(self, config_path, run):
        with open(config_path, 'w') as f:
            json.dump({**DEFAULT_CONFIG, 'output_format': 'xml'}, f)
        code, _, err = run('check', '--builtin', 'maximally-mixed', '--m', '2', '--n', '2')
        assert code == 2
        assert 'output_format' in err

    def test_env_path(self, tmp_path, monkeypatch):
        path = tmp_path / 'env' / 'config.json'
        monkeypatch.setenv('SEPSCOPE_CONFIG', str(path))
        load_config()
        assert path.exists()


def test_parse_ysets():
    assert len(parse_ysets('all')) == 16
    assert parse_ysets('cA,rB') == [REALIGNMENT]
    with pytest.raises(ValueError):
        parse_ysets('cC')


def test_format_table_keeps_column_order():
    table = format_table(('x', 'longer'), [['1', '2'], ['333', '4']])
    assert table.splitlines()[0].split() == ['x', 'longer']
    assert table.splitlines()[2].split() == ['333', '4']


class TestCheck:
    def test_werner_grc(self, run):
        code, out, _ = run('check', '--builtin', 'werner', '--d', '3', '--f', '-1', '--criterion', 'grc',
                           '--a', '0', '--b', '0', '--yset', 'cA,rB')
        assert code == 1
        row = out.splitlines()[2].split()
        assert row[:2] == ['generalized-reduction', 'cA,rB']
        assert float(row[4]) == pytest.approx(2 / 3)
        assert row[5] == 'yes'

    def test_horodecki_ppt(self, run):
        code, out, err = run('check', '--builtin', 'horodecki', '--c', '0.5', '--criterion', 'ppt')
        assert code == 0
        assert out.splitlines()[2].split()[-1] == 'no'
        assert 'never proven separable' in err

    def test_all_criteria(self, run):
        code, out, _ = run('check', '--builtin', 'horodecki', '--c', '0.5')
        assert code == 1
        assert len(out.splitlines()) == 2 + 16 + 3

    def test_complex_parameters(self, run):
        code, _, _ = run('check', '--builtin', 'maximally-mixed', '--m', '2', '--n', '2', '--criterion', 'grc',
                         '--a-re', '0.5', '--a-im', '0.5', '--b', '1')
        assert code == 0

    def test_bad_trace_file(self, run, tmp_path):
        path = tmp_path / 'bad.json'
        path.write_text(json.dumps({'m': 1, 'n': 2, 're': [[0.5, 0], [0, 0.4]], 'im': [[0, 0], [0, 0]]}))
        code, _, err = run('check', '--file', str(path))
        assert code == 2
        assert 'Trace' in err
        code, _, _ = run('check', '--file', str(path), '--unchecked', '--criterion', 'realignment')
        assert code == 0

    def test_malformed_file(self, run, tmp_path):
        path = tmp_path / 'broken.json'
        path.write_text('{"m": 2,')
        code, _, err = run('check', '--file', str(path))
        assert code == 2
        assert 'line 1' in err

    def test_unknown_yset(self, run):
        code, out, _ = run('check', '--builtin', 'werner', '--f', '0', '--yset', 'cA,zz')
        assert code == 2
        assert out == ''

    def test_missing_family_parameter(self, run):
        code, _, err = run('check', '--builtin', 'werner')
        assert code == 2
        assert '--f' in err


class TestSweep:
    def test_werner_default_grid(self, run, tmp_path):
        out_path = tmp_path / 'fig1.csv'
        code, out, _ = run('sweep', '--family', 'werner-3', '--a', '0', '--out', str(out_path))
        assert code == 0
        assert out.startswith('grid 41x41 = 1681 points; max N = 0.6666666666666')
        assert '(-1, 0)' in out
        assert len(out_path.read_text().splitlines()) == 1682

    def test_json_and_threshold(self, run, tmp_path):
        out_path = tmp_path / 'fig1.json'
        code, out, _ = run('sweep', '--family', 'werner-3', '--b-start', '0', '--b-stop', '0', '--format', 'json',
                           '--out', str(out_path), '--threshold', '-1', '0')
        assert code == 0
        assert len(json.loads(out_path.read_text())) == 41
        threshold = float(out.splitlines()[-1].split('=')[1])
        assert threshold == pytest.approx(-1 / 3, abs=1e-6)

    def test_werner_dimension(self, run, tmp_path):
        code, out, _ = run('sweep', '--family', 'werner-d', '--d', '4', '--b-start', '0', '--b-stop', '0',
                           '--out', str(tmp_path / 'w4.csv'), '--threshold', '1', '-1')
        assert code == 0
        assert float(out.splitlines()[-1].split('=')[1]) == pytest.approx(-0.5, abs=1e-6)

    def test_horodecki_range_error(self, run, tmp_path):
        code, _, err = run('sweep', '--family', 'horodecki', '--param-start', '0', '--out', str(tmp_path / 'x.csv'))
        assert code == 2
        assert 'ParamOutOfRange' in err

    def test_file_needs_path(self, run, tmp_path):
        code, _, _ = run('sweep', '--family', 'file', '--out', str(tmp_path / 'x.csv'))
        assert code == 2


class TestGen:
    def test_werner(self, run, tmp_path):
        path = tmp_path / 'w.json'
        code, out, _ = run('gen', 'werner', '--d', '3', '--f', '-0.5', '--out', str(path))
        assert code == 0
        assert 'werner(d=3, f=-0.5)' in out
        assert load_state(str(path)).params == {'d': 3, 'f': -0.5}

    def test_separable_deterministic(self, run, tmp_path):
        first, second = tmp_path / 'a.json', tmp_path / 'b.json'
        for path in (first, second):
            code, _, _ = run('gen', 'separable', '--m', '3', '--n', '3', '--k', '20', '--seed', '7', '--out', str(path))
            assert code == 0
        assert first.read_bytes() == second.read_bytes()

    def test_horodecki_boundary(self, run, tmp_path):
        code, _, err = run('gen', 'horodecki', '--c', '1', '--out', str(tmp_path / 'h.json'))
        assert code == 2
        assert '(0, 1)' in err


def _counts(out: str) -> dict:
    line = next(line for line in out.splitlines() if line.startswith('flagged out of'))
    pairs = line.split(': ', 1)[1].split(', ')
    return {name: int(count) for name, count in (pair.split() for pair in pairs)}


class TestCompare:
    def test_separable_ensemble(self, run):
        code, out, _ = run('compare', '--family', 'separable', '--count', '50', '--seed', '3')
        assert code == 0
        assert set(_counts(out).values()) == {0}

    def test_werner_ensemble(self, run):
        code, out, _ = run('compare', '--family', 'werner')
        assert code == 0
        counts = _counts(out)
        assert counts['ppt'] == 10
        assert counts['realignment'] == 7
        assert counts['reduction'] == 0
        assert counts['grc'] >= counts['gpt'] >= counts['ppt']

    def test_horodecki_ensemble(self, run):
        code, out, _ = run('compare', '--family', 'horodecki')
        assert code == 0
        assert _counts(out) == {'ppt': 0, 'reduction': 0, 'realignment': 19, 'gpt': 19, 'grc': 19}

    def test_bad_count(self, run):
        code, _, _ = run('compare', '--family', 'random', '--count', '0')
        assert code == 2
