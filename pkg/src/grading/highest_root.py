"""Five-step grading of a simple Lie algebra by its highest root."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Optional

from src.exceptions import ClassificationViolation
from src.logger import logging
from src.reptheory import IrrepDescriptor, ModuleDescriptor
from src.rootsys import (Root, SimpleType, Weight, build_root_system,
                         sub_root_system, types_to_str)

GRADES = (-2, -1, 0, 1, 2)


@dataclass(frozen=True)
class HighestRootGrading:
    """Eigenspaces of ad(h_mu) and the module l_{-1} of g = [l_0, l_0]."""

    source: SimpleType
    pieces: dict[int, tuple[Root, ...]]
    levi_types: tuple[SimpleType, ...]
    module: Optional[ModuleDescriptor]
    center_dim: int

    @property
    def module_dim(self) -> int:
        return len(self.pieces[-1])

    @property
    def wolf_real_dim(self) -> int:
        """dim_R L/Sp(1).K = dim l - 3 - (dim l_0 - 1)."""
        dim_l0 = self.source.rank + len(self.pieces[0])
        return self.source.dimension - 3 - (dim_l0 - 1)

    def to_dict(self) -> dict[str, Any]:
        return {
            'algebra': str(self.source),
            'piece_sizes': {str(k): len(v) for k, v in self.pieces.items()},
            'levi': types_to_str(self.levi_types),
            'center_dim': self.center_dim,
            'module': str(self.module) if self.module else None,
            'module_dim': self.module_dim,
            'wolf_real_dim': self.wolf_real_dim,
        }


def _highest_in_minus_one(rs, minus_one: tuple[Root, ...],
                          simple: list[Root]) -> list[Root]:
    # beta is a g-highest weight of l_{-1} when beta + gamma is no root
    # for every simple root gamma of g.
    highest = []
    for beta in minus_one:
        if not any(rs.is_root(tuple(b + g for b, g in zip(beta, gamma)))
                   for gamma in simple):
            highest.append(beta)
    return highest


@lru_cache(maxsize=None)
def highest_root_grading(l: SimpleType) -> HighestRootGrading:
    """Grade every root of ``l`` by its pairing with the highest coroot."""
    rs = build_root_system(l)
    mu = rs.highest_root
    buckets: dict[int, list[Root]] = {k: [] for k in GRADES}
    for root in rs.roots:
        k = rs.root_pairing(root, mu)
        if k not in buckets:
            raise ClassificationViolation(
                f"root {root} of {l} has grade {k} outside -2..2")
        buckets[k].append(root)
    pieces = {k: tuple(sorted(v)) for k, v in buckets.items()}
    minus_mu = tuple(-c for c in mu)
    if pieces[2] != (mu,) or pieces[-2] != (minus_mu,):
        raise ClassificationViolation(
            f"grades +-2 of {l} are not spanned by the highest root")

    def keep(root: Root) -> bool:
        return rs.root_pairing(root, mu) == 0

    simple = [gamma for component in sub_root_system(rs, keep).components
              for gamma in component.base]
    highest = _highest_in_minus_one(rs, pieces[-1], simple)

    def label_key(ordering: tuple[Root, ...]) -> tuple:
        weights = [tuple(rs.root_pairing(beta, gamma) for gamma in ordering)
                   for beta in highest]
        return tuple(sorted(weights, reverse=True))

    levi = sub_root_system(rs, keep, label_key=label_key)
    module = None
    if levi.components:
        summands = []
        for beta in highest:
            summands.append(tuple(
                IrrepDescriptor(component.type, Weight(tuple(
                    rs.root_pairing(beta, gamma) for gamma in component.base)))
                for component in levi.components))
        summands.sort(key=lambda s: tuple(d.highest_weight for d in s),
                      reverse=True)
        module = ModuleDescriptor(tuple(summands))

    levi_types = tuple(levi.types)
    grading = HighestRootGrading(
        source=l, pieces=pieces, levi_types=levi_types, module=module,
        center_dim=l.rank - sum(t.rank for t in levi_types))
    if module is not None and module.dimension != grading.module_dim:
        raise ClassificationViolation(
            f"l_-1 of {l} has {grading.module_dim} roots but the module "
            f"{module} has dimension {module.dimension}")
    logging.debug('Highest root grading of %s: g = %s, l_-1 = %s', l,
                  types_to_str(levi_types), module)
    return grading


def standard_module_of(l: SimpleType
                       ) -> tuple[tuple[SimpleType, ...],
                                  Optional[ModuleDescriptor], int]:
    """(g, l_{-1}, dim l_{-1}) for the simple algebra ``l``."""
    grading = highest_root_grading(l)
    return grading.levi_types, grading.module, grading.module_dim
