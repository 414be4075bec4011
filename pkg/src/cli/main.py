# command line entry point
import functools
import sys
from typing import Callable, Optional

import click
import yaml
from pydantic import ValidationError

from src.classify import classify_all
from src.cli.report import Report
from src.data.data_ingestion import Params, load_golden, load_params
from src.exceptions import ClassificationViolation, LieTheoryError
from src.grading import highest_root_grading, table1
from src.logger import configure_logger, logging
from src.orbits import is_lagrangian
from src.realforms import (enumerate_real_forms, hermitian_signature,
                           reproduce_compact_stabilizer_forms,
                           verify_main_theorem)
from src.reptheory import (IrrepDescriptor, ModuleDescriptor, dual,
                           form_type, freudenthal_multiplicities,
                           is_self_dual, weyl_dimension)
from src.rootsys import SimpleType, Weight, build_root_system
from src.visualization.visualize import render

FORMAT = click.option('--format', 'fmt', type=click.Choice(['json', 'table']),
                      default='json', show_default=True)
ALGEBRA = click.option('--algebra', required=True,
                       help='Cartan type such as E7 or D6.')


def _emit(report: Report, fmt: str) -> None:
    if fmt == 'json':
        click.echo(report.to_json())
    else:
        click.echo(render(report.table if report.table is not None
                          else report.payload))


def reporting(command: Callable) -> Callable:
    """Exit 2 on a classification violation, 1 on any other failure."""
    @functools.wraps(command)
    def wrapper(*args, **kwargs):
        try:
            return command(*args, **kwargs)
        except ClassificationViolation as e:
            logging.error('Classification violation: %s', e)
            click.echo(f"classification violation: {e}", err=True)
            sys.exit(2)
        except LieTheoryError as e:
            raise click.ClickException(str(e)) from e
    return wrapper


def _params() -> Params:
    return click.get_current_context().find_root().obj


@click.group()
@click.option('--params', 'params_path', default='params.yaml',
              show_default=True, help='Parameter file.')
@click.pass_context
def cli(ctx: click.Context, params_path: str) -> None:
    """Lagrangian highest weight orbits and special pseudo-Kaehler cones."""
    try:
        params = load_params(params_path)
    except (yaml.YAMLError, ValidationError) as e:
        raise click.ClickException(f"invalid parameter file: {e}") from e
    configure_logger(params.logging.level, params.logging.to_file,
                     params.logging.log_dir)
    ctx.obj = params


@cli.command()
@ALGEBRA
@FORMAT
@reporting
def rootsys(algebra: str, fmt: str) -> None:
    """Cartan matrix and positive roots."""
    rs = build_root_system(SimpleType.parse(algebra))
    payload = rs.to_dict()
    payload['dimension'] = rs.dimension
    payload['highest_root'] = list(rs.highest_root)
    _emit(Report('rootsys', {'algebra': algebra}, payload), fmt)


@cli.command()
@ALGEBRA
@click.option('--weight', required=True,
              help='Comma-separated fundamental-weight coordinates.')
@click.option('--multiplicities', is_flag=True,
              help='Add the Freudenthal weight-multiplicity table.')
@FORMAT
@reporting
def irrep(algebra: str, weight: str, multiplicities: bool, fmt: str) -> None:
    """Dimension, dual and invariant form of an irreducible module."""
    d = IrrepDescriptor(SimpleType.parse(algebra), Weight.parse(weight))
    payload = {
        'irrep': str(d),
        'dimension': weyl_dimension(d),
        'dual': str(dual(d)),
        'self_dual': is_self_dual(d),
        'form': form_type(d).value,
    }
    if multiplicities:
        table = freudenthal_multiplicities(
            d, max_dim=_params().reptheory.freudenthal_max_dim)
        payload['weight_multiplicities'] = {
            str(mu): m for mu, m in sorted(table.items())}
        payload['multiplicity_sum'] = sum(table.values())
    inputs = {'algebra': algebra, 'weight': weight,
              'multiplicities': multiplicities}
    _emit(Report('irrep', inputs, payload), fmt)


@cli.command()
@click.option('--algebra', help='Cartan type of a simple algebra.')
@click.option('--weight', help='Highest weight, with --algebra.')
@click.option('--module', 'module_text',
              help='Module such as "A1:1 * G2:1,0" or "C3:1,0,0 + C3:1,0,0".')
@FORMAT
@reporting
def orbit(algebra: Optional[str], weight: Optional[str],
          module_text: Optional[str], fmt: str) -> None:
    """Orbit of the highest weight vector and the Lagrangian verdict."""
    if module_text and (algebra or weight):
        raise click.UsageError('use either --module or --algebra/--weight')
    if module_text:
        module = ModuleDescriptor.parse(module_text)
    elif algebra and weight:
        module = ModuleDescriptor.irreducible(IrrepDescriptor(
            SimpleType.parse(algebra), Weight.parse(weight)))
    else:
        raise click.UsageError('--algebra and --weight, or --module, '
                               'are required')
    inputs = {'algebra': algebra, 'weight': weight, 'module': module_text}
    _emit(Report('orbit', inputs, is_lagrangian(module).to_dict()), fmt)


@cli.command()
@click.option('--max-classical', type=click.IntRange(min=2),
              help='Largest rank of the classical families.')
@FORMAT
@reporting
def classify(max_classical: Optional[int], fmt: str) -> None:
    """All Lagrangian highest weight orbits within the bounds."""
    cfg = _params().classify
    if max_classical is not None:
        cfg = cfg.model_copy(update={'max_classical_rank': max_classical})
    entries = [entry.to_dict() for entry in classify_all(cfg)]
    table = [{
        'module': e['module'],
        'dim V': e['orbit']['module_dim'],
        'orbit': e['orbit']['orbit_dim'],
        "H'": e['orbit']['levi'],
        'standard for': e['standard_for'],
        'extends to': e['extension']['module'] if e['extension'] else None,
    } for e in entries]
    _emit(Report('classify', cfg.model_dump(), entries, table=table), fmt)


@cli.command(name='table1')
@click.option('--n', 'n', type=click.IntRange(min=3),
              help='Value of n in the parametric rows.')
@click.option('--golden', type=click.Path(exists=True, dir_okay=False),
              help='Alternative golden data file.')
@FORMAT
@reporting
def table1_command(n: Optional[int], golden: Optional[str], fmt: str) -> None:
    """Re-derive the standard modules of the highest-root gradings."""
    n = n if n is not None else _params().table1.n
    rows = [row.to_dict() for row in table1(n, load_golden(golden))]
    columns = ['algebra', 'wolf_space', 'wolf_real_dim', 'group', 'module',
               'module_dim', 'stabilizer']
    table = [{c: row[c] for c in columns} for row in rows]
    _emit(Report('table1', {'n': n}, rows, table=table), fmt)


@cli.command()
@ALGEBRA
@FORMAT
@reporting
def grading(algebra: str, fmt: str) -> None:
    """Five-step grading by the highest root."""
    payload = highest_root_grading(SimpleType.parse(algebra)).to_dict()
    _emit(Report('grading', {'algebra': algebra}, payload), fmt)


@cli.command()
@ALGEBRA
@click.option('--weight', help='Highest weight for the compactness test.')
@FORMAT
@reporting
def realforms(algebra: str, weight: Optional[str], fmt: str) -> None:
    """Inner real forms up to conjugacy, with stabilizer and signature."""
    t = SimpleType.parse(algebra)
    w = Weight.parse(weight) if weight else None
    payload = []
    for g in enumerate_real_forms(t):
        row = g.to_dict()
        if w is not None:
            signature = hermitian_signature(g, w)
            row['h0_compact'] = signature.h0_compact
            row['metric_signatures'] = [
                list(s) for s in signature.metric_signatures]
        payload.append(row)
    _emit(Report('realforms', {'algebra': algebra, 'weight': weight},
                 payload), fmt)


@cli.command(name='verify-main-theorem')
@click.option('--n', 'n', type=click.IntRange(min=5),
              help='Value of n in the parametric cases.')
@click.option('--golden', type=click.Path(exists=True, dir_okay=False),
              help='Alternative golden data file.')
@FORMAT
@reporting
def verify_main_theorem_command(n: Optional[int], golden: Optional[str],
                                fmt: str) -> None:
    """Compact stabilizers, indices and signatures of the twelve cases."""
    n = n if n is not None else _params().realforms.n
    data = load_golden(golden)
    cases = [case.to_dict() for case in verify_main_theorem(n, data)]
    compact = reproduce_compact_stabilizer_forms(n, data).to_dict()
    payload = {'cases': cases, 'compact_stabilizer_forms': compact}
    table = [{k: case[k] for k in ('case', 'space', 'real_form', 'index',
                                   'stabilizer', 'metric_signatures',
                                   'expected_metric')} for case in cases]
    _emit(Report('verify-main-theorem', {'n': n}, payload, table=table),
          fmt)


def main(argv: Optional[list[str]] = None) -> int:
    """Run the command line; usage errors exit 1, violations exit 2."""
    try:
        result = cli.main(args=argv, prog_name='lagrangian-cones',
                          standalone_mode=False)
    except click.ClickException as e:
        e.show()
        return 1
    except click.exceptions.Abort:
        return 1
    except SystemExit as e:
        return int(e.code or 0)
    return result if isinstance(result, int) else 0
