import json

import pytest
import yaml

from src.cli import cli, main
from src.data.data_ingestion import GOLDEN_PATH


def _invoke(runner, params_file, *args):
    return runner.invoke(cli, ['--params', params_file, *args])


def _payload(result):
    assert result.exit_code == 0, result.stderr
    document = json.loads(result.stdout)
    assert document['version'] == 1
    assert 'E7' in document['convention_note']
    return document['payload']


class TestCommands:
    def test_rootsys(self, runner, params_file):
        payload = _payload(_invoke(runner, params_file, 'rootsys',
                                   '--algebra', 'G2'))
        assert payload['dimension'] == 14
        assert len(payload['positive_roots']) == 6
        assert payload['highest_root'] == [3, 2]

    def test_irrep(self, runner, params_file):
        payload = _payload(_invoke(runner, params_file, 'irrep', '--algebra',
                                   'E7', '--weight', '1,0,0,0,0,0,0'))
        assert payload['dimension'] == 56
        assert payload['self_dual'] is True
        assert payload['form'] == 'symplectic'

    def test_irrep_multiplicities(self, runner, params_file):
        payload = _payload(_invoke(runner, params_file, 'irrep', '--algebra',
                                   'G2', '--weight', '1,0',
                                   '--multiplicities'))
        assert payload['multiplicity_sum'] == 7
        assert payload['weight_multiplicities']['0,0'] == 1
        assert payload['weight_multiplicities']['1,0'] == 1

    def test_freudenthal_limit_comes_from_params(self, runner, tmp_path):
        path = tmp_path / 'params.yaml'
        path.write_text(yaml.safe_dump({
            'reptheory': {'freudenthal_max_dim': 1000},
            'logging': {'level': 'WARNING', 'to_file': False},
        }))
        args = ['irrep', '--algebra', 'A1', '--weight', '600',
                '--multiplicities']
        payload = _payload(_invoke(runner, str(path), *args))
        assert payload['dimension'] == 601
        assert payload['multiplicity_sum'] == 601

        path.write_text(yaml.safe_dump({
            'reptheory': {'freudenthal_max_dim': 600},
            'logging': {'level': 'WARNING', 'to_file': False},
        }))
        assert main(['--params', str(path), *args]) == 1

    def test_orbit_by_weight(self, runner, params_file):
        payload = _payload(_invoke(runner, params_file, 'orbit', '--algebra',
                                   'E7', '--weight', '1,0,0,0,0,0,0'))
        assert payload['orbit_dim'] == 28
        assert payload['lagrangian'] is True

    def test_orbit_by_module(self, runner, params_file):
        payload = _payload(_invoke(runner, params_file, 'orbit', '--module',
                                   'A1:1 * G2:1,0'))
        assert payload['orbit_dim'] == 7
        assert payload['lagrangian'] is True

    def test_grading(self, runner, params_file):
        payload = _payload(_invoke(runner, params_file, 'grading',
                                   '--algebra', 'F4'))
        assert payload['module'] == 'C3:0,0,1'
        assert payload['module_dim'] == 14

    def test_table1(self, runner, params_file):
        payload = _payload(_invoke(runner, params_file, 'table1'))
        assert [row['module_dim'] for row in payload] == [
            8, 8, 8, 4, 14, 20, 32, 56]

    def test_classify_uses_params(self, runner, params_file):
        result = _invoke(runner, params_file, 'classify')
        document = json.loads(result.stdout)
        assert document['inputs']['max_classical_rank'] == 6
        modules = [e['module'] for e in document['payload']]
        assert 'E7:1,0,0,0,0,0,0' in modules

    def test_realforms_with_weight(self, runner, params_file):
        payload = _payload(_invoke(runner, params_file, 'realforms',
                                   '--algebra', 'D6', '--weight',
                                   '0,0,0,0,1,0'))
        assert 'so*(12)' in [row['name'] for row in payload]
        assert all('metric_signatures' in row for row in payload)

    def test_verify_main_theorem(self, runner, params_file):
        payload = _payload(_invoke(runner, params_file,
                                   'verify-main-theorem', '--n', '5'))
        assert len(payload['cases']) == 12
        assert len(payload['compact_stabilizer_forms']['discrepancies']) == 1

    def test_table_format(self, runner, params_file):
        result = _invoke(runner, params_file, 'grading', '--algebra', 'G2',
                         '--format', 'table')
        assert result.exit_code == 0
        assert 'module_dim' in result.stdout
        assert '|' in result.stdout

    def test_json_is_deterministic(self, runner, params_file):
        first = _invoke(runner, params_file, 'orbit', '--module',
                        'A3:1,0,0 + A3:0,0,1')
        second = _invoke(runner, params_file, 'orbit', '--module',
                         'A3:1,0,0 + A3:0,0,1')
        assert first.stdout == second.stdout


class TestExitCodes:
    @pytest.mark.parametrize('args', [
        ['orbit'],
        ['orbit', '--algebra', 'A2', '--weight', '1,0', '--module',
         'A2:1,0'],
        ['nosuch'],
        ['irrep', '--algebra', 'A2', '--weight', 'x'],
        ['irrep', '--algebra', 'Q2', '--weight', '1,0'],
        ['grading', '--algebra', 'E7', '--format', 'xml'],
        ['realforms', '--algebra', 'A2', '--weight=-1,1'],
        ['irrep', '--algebra', 'A1', '--weight', '700', '--multiplicities'],
    ])
    def test_usage_errors(self, params_file, args):
        assert main(['--params', params_file, *args]) == 1

    def test_invalid_params_file(self, tmp_path):
        path = tmp_path / 'params.yaml'
        path.write_text(yaml.safe_dump(
            {'classify': {'max_classical_rank': 0}}))
        assert main(['--params', str(path), 'rootsys', '--algebra',
                     'A2']) == 1

    def test_success(self, params_file):
        assert main(['--params', params_file, 'rootsys', '--algebra',
                     'A2']) == 0

    def test_corrupted_golden_is_a_violation(self, runner, params_file,
                                             tmp_path):
        with open(GOLDEN_PATH, encoding='utf-8') as file:
            document = yaml.safe_load(file)
        document['table1'][-1]['stabilizer'] = 'E7'
        path = tmp_path / 'golden.yaml'
        path.write_text(yaml.safe_dump(document))
        args = ['--params', params_file, 'table1', '--golden', str(path)]
        result = runner.invoke(cli, args)
        assert result.exit_code == 2
        assert 'classification violation' in result.stderr
        assert main(args) == 2
