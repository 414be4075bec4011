# plain-text tables for reports
from typing import Any, Optional, Sequence

from tabulate import tabulate

TABLE_FORMAT = 'github'


def _cell(value: Any) -> str:
    if value is None:
        return '-'
    if isinstance(value, bool):
        return 'yes' if value else 'no'
    if isinstance(value, (list, tuple)):
        return ', '.join(_cell(v) for v in value)
    if isinstance(value, dict):
        return '; '.join(f"{k}={_cell(v)}" for k, v in sorted(value.items()))
    return str(value)


def render_rows(rows: Sequence[dict],
                columns: Optional[Sequence[str]] = None) -> str:
    """One line per row; columns default to the keys of the first row."""
    if not rows:
        return '(no rows)'
    columns = list(columns or rows[0].keys())
    body = [[_cell(row.get(c)) for c in columns] for row in rows]
    return tabulate(body, headers=columns, tablefmt=TABLE_FORMAT)


def render_mapping(mapping: dict) -> str:
    """Scalars as a two-column table, lists of records as their own tables."""
    scalars = []
    tables = []
    for key in sorted(mapping):
        value = mapping[key]
        if (isinstance(value, list) and value
                and all(isinstance(v, dict) for v in value)):
            tables.append(f"{key}:\n{render_rows(value)}")
        else:
            scalars.append([key, _cell(value)])
    parts = []
    if scalars:
        parts.append(tabulate(scalars, headers=['field', 'value'],
                              tablefmt=TABLE_FORMAT))
    parts.extend(tables)
    return '\n\n'.join(parts)


def render(payload: Any, columns: Optional[Sequence[str]] = None) -> str:
    if isinstance(payload, list):
        return render_rows(payload, columns)
    if isinstance(payload, dict):
        return render_mapping(payload)
    return _cell(payload)
