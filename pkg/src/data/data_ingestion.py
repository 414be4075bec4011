# data ingestion
import os
from typing import Literal, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from src.exceptions import GoldenDataError
from src.logger import logging

GOLDEN_PATH = os.path.join(os.path.dirname(__file__), 'paper_data.yaml')


class SearchConfig(BaseModel):
    """Bounds of the classification search."""

    model_config = ConfigDict(frozen=True)

    max_exceptional: bool = True
    max_classical_rank: int = Field(16, ge=2)


class ReptheoryConfig(BaseModel):
    freudenthal_max_dim: int = Field(500, ge=1)


class Table1Config(BaseModel):
    n: int = Field(8, ge=3)


class RealFormsConfig(BaseModel):
    n: int = Field(5, ge=5)


class LoggingConfig(BaseModel):
    level: str = 'INFO'
    to_file: bool = True
    log_dir: str = 'logs'


class Params(BaseModel):
    classify: SearchConfig = Field(default_factory=SearchConfig)
    reptheory: ReptheoryConfig = Field(default_factory=ReptheoryConfig)
    table1: Table1Config = Field(default_factory=Table1Config)
    realforms: RealFormsConfig = Field(default_factory=RealFormsConfig)
    logging: LoggingConfig = Field(default_factory=LoggingConfig)


class Table1Entry(BaseModel):
    key: str
    algebra: str
    wolf_space: str
    wolf_real_dim: str
    group: str
    module: str
    module_dim: str
    stabilizer: str
    anchor: str


class RealStructureEntry(BaseModel):
    case: str
    group: str
    module: str
    real_forms: list[str]
    when: Optional[Literal['n even']] = None
    anchor: str


class CompactStabilizerEntry(BaseModel):
    case: str
    group: str
    module: str
    real_form: str
    stabilizer: str
    center_dim: int
    anchor: str


class MainTheoremEntry(BaseModel):
    case: str
    space: str
    group: str
    module: str
    real_form: str
    stabilizer: str
    center_dim: int
    metric: Union[Literal['positive', 'negative'], list[str]]
    anchor: str


class GoldenData(BaseModel):
    version: int
    convention: str
    table1: list[Table1Entry]
    real_structures: list[RealStructureEntry]
    compact_stabilizer_forms: list[CompactStabilizerEntry]
    main_theorem: list[MainTheoremEntry]


def load_params(params_path: str = 'params.yaml') -> Params:
    """Load parameters from a YAML file; defaults when it does not exist."""
    if not os.path.exists(params_path):
        logging.warning('No parameter file at %s, using defaults',
                        params_path)
        return Params()
    try:
        with open(params_path, 'r') as file:
            params = yaml.safe_load(file) or {}
        logging.debug('Parameters retrieved from %s', params_path)
        return Params.model_validate(params)
    except yaml.YAMLError as e:
        logging.error('YAML error: %s', e)
        raise
    except ValidationError as e:
        logging.error('Invalid parameters in %s: %s', params_path, e)
        raise


def load_golden(path: Optional[str] = None) -> GoldenData:
    """Load the golden source data, read-only and schema-checked."""
    path = path or GOLDEN_PATH
    try:
        with open(path, 'r', encoding='utf-8') as file:
            document = yaml.safe_load(file)
        golden = GoldenData.model_validate(document)
        logging.debug('Golden data version %d loaded from %s',
                      golden.version, path)
        return golden
    except FileNotFoundError as e:
        logging.error('Golden data file not found: %s', path)
        raise GoldenDataError(f"golden data file not found: {path}") from e
    except yaml.YAMLError as e:
        logging.error('YAML error in golden data: %s', e)
        raise GoldenDataError(f"golden data is not valid YAML: {e}") from e
    except ValidationError as e:
        logging.error('Golden data does not match its schema: %s', e)
        raise GoldenDataError(f"golden data schema mismatch: {e}") from e
