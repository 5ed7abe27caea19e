"""
Tests for the command-line entry point
"""

import json

import pytest

from src.cli.main import build_parser, load_spec, main
from src.utils.exceptions import InvalidSpec


@pytest.fixture
def write_json(tmp_path):
    def _write(name, payload):
        path = tmp_path / name
        path.write_text(json.dumps(payload))
        return str(path)
    return _write


class TestParser:
    """Tests for build_parser."""

    def test_spec_command(self):
        args = build_parser().parse_args(['quiver', '--spec', 'p2.json', '--truncation', '3'])
        assert (args.command, args.spec) == ('quiver', 'p2.json')
        assert (args.truncation, args.seed) == (3, None)
        assert args.format == 'json'

    def test_unknown_command(self):
        with pytest.raises(SystemExit):
            build_parser().parse_args(['integrate', '--spec', 'p2.json'])


class TestLoadSpec:
    """Tests for load_spec."""

    def test_valid(self, write_json, p2_spec_dict):
        spec = load_spec(write_json('p2.json', p2_spec_dict))
        assert spec.p == 5

    def test_invalid(self, write_json):
        with pytest.raises(InvalidSpec):
            load_spec(write_json('bad.json', {'rho': [[1], [1]], 'lambda': [1, 2], 'p': 5}))

    def test_documented_keys(self, write_json, p2_spec_dict):
        spec = load_spec(write_json('p2.json', dict(p2_spec_dict, n=3, k=1)))
        assert (spec.n, spec.rank) == (3, 1)

    def test_wrong_row_count(self, write_json, p2_spec_dict):
        with pytest.raises(InvalidSpec):
            load_spec(write_json('p2.json', dict(p2_spec_dict, n=2)))


class TestMain:
    """End-to-end runs on small specs."""

    def test_chambers(self, write_json, p2_spec_dict, tmp_path):
        out = tmp_path / 'report.json'
        assert main(['chambers', '--spec', write_json('p2.json', p2_spec_dict),
                     '--out', str(out)]) == 0
        report = json.loads(out.read_text())
        assert report['passed'] is True
        assert report['results']['chambers']['class_count'] == 3
        assert report['results']['chambers']['bases'] == [[1, 2], [1, 3], [2, 3]]
        assert len(report['spec_digest']) == 64

    def test_stdout(self, write_json, p2_spec_dict, capsys):
        assert main(['hilbert', '--spec', write_json('p2.json', p2_spec_dict),
                     '--truncation', '2']) == 0
        report = json.loads(capsys.readouterr().out)
        assert report['results']['hilbert']['H']['entries']['A,A'] == [1, 0, 8]
        assert report['provenance']['truncation'] == 2

    def test_non_smooth_chambers_still_pass(self, write_json, p2_spec_dict, tmp_path):
        out = tmp_path / 'report.json'
        spec = write_json('p2.json', dict(p2_spec_dict, **{'lambda': [-1]}))
        assert main(['chambers', '--spec', spec, '--out', str(out)]) == 0
        report = json.loads(out.read_text())
        assert 'non_smooth_parameter' in report['warnings']
        assert 'vertex_incidence' not in report['results']['chambers']['checks']

    def test_invalid_spec(self, write_json, tmp_path):
        out = tmp_path / 'error.json'
        spec = write_json('bad.json', {'rho': [[1], [1]], 'lambda': [1, 2], 'p': 5})
        assert main(['chambers', '--spec', spec, '--out', str(out)]) == 2
        assert json.loads(out.read_text())['error']['error_type'] == 'InvalidSpec'

    def test_missing_spec(self, tmp_path):
        out = tmp_path / 'error.json'
        assert main(['chambers', '--spec', str(tmp_path / 'absent.json'),
                     '--out', str(out)]) == 2

    def test_non_saturated(self, write_json, tmp_path):
        out = tmp_path / 'error.json'
        spec = write_json('bad.json', {'rho': [[2], [2]], 'lambda': [0], 'p': 3})
        assert main(['chambers', '--spec', spec, '--out', str(out)]) == 2
        assert json.loads(out.read_text())['results']['error']['error_type'] == 'NonSaturated'

    def test_render_svg(self, write_json, p2_spec_dict, tmp_path):
        out = tmp_path / 'p2.svg'
        assert main(['render', '--spec', write_json('p2.json', p2_spec_dict),
                     '--format', 'svg', '--out', str(out)]) == 0
        assert out.read_text().startswith('<svg')

    def test_render_needs_a_plane(self, write_json, tmp_path):
        out = tmp_path / 'report.json'
        spec = write_json('circle.json', {'rho': [[]], 'lambda': [], 'p': 3, 'k': 0})
        assert main(['render', '--spec', spec, '--out', str(out)]) == 2

    def test_timings_are_opt_in(self, write_json, p2_spec_dict, tmp_path, monkeypatch):
        out = tmp_path / 'report.json'
        spec = write_json('p2.json', p2_spec_dict)
        main(['chambers', '--spec', spec, '--out', str(out)])
        assert 'timings' not in json.loads(out.read_text())

        monkeypatch.setenv('HTK_INCLUDE_TIMINGS', 'true')
        main(['chambers', '--spec', spec, '--out', str(out)])
        assert 'chambers' in json.loads(out.read_text())['timings']

    def test_analyze_projective_plane(self, write_json, p2_spec_dict, tmp_path):
        out = tmp_path / 'report.json'
        assert main(['analyze', '--spec', write_json('p2.json', p2_spec_dict),
                     '--out', str(out)]) == 0
        report = json.loads(out.read_text())
        assert report['passed'] is True
        checks = report['provenance']['checks']
        assert {'chambers', 'quiver', 'koszul-check', 'oracle', 'tilting'} <= set(checks)
        for step, values in checks.items():
            assert all(values.values()), step
        assert 'non_smooth_parameter' not in report['warnings']

    def test_runs_are_byte_identical(self, write_json, p2_spec_dict, tmp_path):
        spec = write_json('p2.json', p2_spec_dict)
        first, second = tmp_path / 'first.json', tmp_path / 'second.json'
        assert main(['analyze', '--spec', spec, '--out', str(first)]) == 0
        assert main(['analyze', '--spec', spec, '--out', str(second)]) == 0
        assert first.read_bytes() == second.read_bytes()

    def test_root_logging_is_left_alone(self, write_json, p2_spec_dict, tmp_path, mocker):
        basic_config = mocker.patch('logging.basicConfig')
        out = tmp_path / 'report.json'
        main(['chambers', '--spec', write_json('p2.json', p2_spec_dict), '--out', str(out)])
        basic_config.assert_not_called()

    def test_corpus(self, write_json, tmp_path):
        out = tmp_path / 'corpus.json'
        bounds = write_json('bounds.json', {'n_max': 2, 'k_max': 0, 'p_max': 3})
        assert main(['corpus', '--seed', '1', '--count', '2', '--bounds', bounds,
                     '--out', str(out)]) == 0
        specs = json.loads(out.read_text())
        assert [s['name'] for s in specs] == ['corpus-1-0', 'corpus-1-1']

    def test_corpus_bad_bounds(self, write_json, tmp_path):
        out = tmp_path / 'error.json'
        bounds = write_json('bounds.json', {'n_max': 9})
        assert main(['corpus', '--bounds', bounds, '--out', str(out)]) == 2
