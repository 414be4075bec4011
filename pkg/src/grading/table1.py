# standard symplectic modules, one row per family of simple algebras
from __future__ import annotations

from dataclasses import dataclass
from typing import Any, Optional

from src.data.data_ingestion import GoldenData, Table1Entry, load_golden
from src.data.data_preprocessing import (evaluate, parse_group_label,
                                         parse_module_label)
from src.exceptions import ClassificationViolation
from src.grading.highest_root import highest_root_grading
from src.logger import logging
from src.orbits import is_lagrangian
from src.reptheory import ModuleDescriptor, canonical_module_key
from src.rootsys import SimpleType, sorted_types, types_to_str


@dataclass(frozen=True)
class Table1Row:
    key: str
    algebra: SimpleType
    wolf_space: str
    wolf_real_dim: int
    group: tuple[SimpleType, ...]
    module: ModuleDescriptor
    module_dim: int
    stabilizer: tuple[SimpleType, ...]
    center_dim: int
    lagrangian: bool
    anchor: str

    def to_dict(self) -> dict[str, Any]:
        return {
            'key': self.key,
            'algebra': str(self.algebra),
            'wolf_space': self.wolf_space,
            'wolf_real_dim': self.wolf_real_dim,
            'group': types_to_str(self.group),
            'module': str(self.module),
            'module_dim': self.module_dim,
            'stabilizer': types_to_str(self.stabilizer),
            'center_dim': self.center_dim,
            'lagrangian': self.lagrangian,
            'anchor': self.anchor,
        }


def _violation(entry: Table1Entry, what: str, computed, expected) -> None:
    message = (f"standard module row {entry.key}: {what} computed as "
               f"{computed}, golden data says {expected}")
    logging.error(message)
    raise ClassificationViolation(message)


def table1_row(entry: Table1Entry, n: int) -> Table1Row:
    """
    Re-derive one row from the highest-root grading and check it.

    Args:
        entry (Table1Entry): golden row with labels in n.
        n (int): value substituted for n.

    Returns:
        Table1Row: the computed row.
    """
    algebras = parse_group_label(entry.algebra, n)
    if len(algebras) != 1:
        _violation(entry, 'algebra', types_to_str(algebras), 'a simple type')
    l = algebras[0]
    grading = highest_root_grading(l)
    if grading.module is None:
        _violation(entry, 'module', 'trivial', entry.module)

    group = tuple(sorted_types(grading.levi_types))
    expected_group = tuple(sorted_types(parse_group_label(entry.group, n)))
    if group != expected_group:
        _violation(entry, 'G', types_to_str(group),
                   types_to_str(expected_group))

    expected_module = parse_module_label(entry.module, entry.group, n)
    if canonical_module_key(grading.module) != canonical_module_key(
            expected_module):
        _violation(entry, 'V', grading.module, expected_module)

    module_dim = grading.module_dim
    if module_dim != evaluate(entry.module_dim, n):
        _violation(entry, 'dim V', module_dim, entry.module_dim)
    if grading.wolf_real_dim != 2 * module_dim or (
            grading.wolf_real_dim != evaluate(entry.wolf_real_dim, n)):
        _violation(entry, 'dim of the Wolf space', grading.wolf_real_dim,
                   entry.wolf_real_dim)

    report = is_lagrangian(grading.module)
    stabilizer = tuple(sorted_types(report.levi_types))
    expected_stabilizer = tuple(sorted_types(
        parse_group_label(entry.stabilizer, n)))
    if stabilizer != expected_stabilizer:
        _violation(entry, "H'", types_to_str(stabilizer),
                   types_to_str(expected_stabilizer))

    return Table1Row(
        key=entry.key, algebra=l, wolf_space=entry.wolf_space,
        wolf_real_dim=grading.wolf_real_dim, group=group,
        module=grading.module, module_dim=module_dim, stabilizer=stabilizer,
        center_dim=grading.center_dim, lagrangian=report.lagrangian,
        anchor=entry.anchor)


def table1(n: int = 8, golden: Optional[GoldenData] = None
           ) -> list[Table1Row]:
    """Every standard-module row, the parametric families taken at ``n``."""
    golden = golden or load_golden()
    rows = [table1_row(entry, n) for entry in golden.table1]
    logging.info('Standard module rows reproduced: %d at n = %d', len(rows), n)
    return rows
