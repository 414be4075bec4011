import pytest
import yaml
from click.testing import CliRunner

from src.data.data_ingestion import load_golden


@pytest.fixture(scope='session')
def golden():
    return load_golden()


@pytest.fixture
def params_file(tmp_path):
    path = tmp_path / 'params.yaml'
    path.write_text(yaml.safe_dump({
        'classify': {'max_exceptional': True, 'max_classical_rank': 6},
        'table1': {'n': 4},
        'realforms': {'n': 5},
        'logging': {'level': 'WARNING', 'to_file': False},
    }))
    return str(path)


@pytest.fixture
def runner():
    return CliRunner(mix_stderr=False)
