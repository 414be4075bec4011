# classification of Lagrangian highest weight orbits
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Optional

from src.classify.enumeration import (bounded_symplectic_irreps,
                                      simple_types_in_range)
from src.data.data_ingestion import SearchConfig
from src.exceptions import ClassificationViolation
from src.grading import standard_module_of
from src.logger import logging
from src.orbits import OrbitReport, is_lagrangian
from src.reptheory import (IrrepDescriptor, ModuleDescriptor,
                           canonical_module_key, dual, orthogonal_standard)
from src.rootsys import Family, SimpleType, types_to_str

_A1 = SimpleType(Family.A, 1)
_G2 = SimpleType(Family.G, 2)


@dataclass(frozen=True)
class StandardExtension:
    """A larger group acting on the same space, with the same orbit."""

    algebra: tuple[SimpleType, ...]
    module: ModuleDescriptor
    orbit_dim: int
    standard_for: SimpleType

    def to_dict(self) -> dict[str, Any]:
        return {
            'algebra': types_to_str(self.algebra),
            'module': str(self.module),
            'orbit_dim': self.orbit_dim,
            'standard_for': str(self.standard_for),
        }


@dataclass(frozen=True)
class ClassificationEntry:
    module: ModuleDescriptor
    orbit: OrbitReport
    standard_for: Optional[SimpleType] = None
    extension: Optional[StandardExtension] = None

    def check_dichotomy(self) -> None:
        """A Lagrangian orbit is standard or extends, never both or neither."""
        if self.orbit.lagrangian and (
                (self.standard_for is None) == (self.extension is None)):
            raise ClassificationViolation(
                f"{self.module}: a Lagrangian orbit must come from exactly "
                f"one standard module or one extension")

    def to_dict(self) -> dict[str, Any]:
        return {
            'module': str(self.module),
            'orbit': self.orbit.to_dict(),
            'standard_for': (str(self.standard_for)
                             if self.standard_for else None),
            'extension': (self.extension.to_dict()
                          if self.extension else None),
        }


def _candidate_algebras(rank: int) -> list[SimpleType]:
    cfg = SearchConfig(max_exceptional=True,
                       max_classical_rank=max(rank + 2, 2))
    return [t for t in simple_types_in_range(cfg)
            if t.rank in (rank + 1, rank + 2)]


@lru_cache(maxsize=None)
def _standard_algebra_by_key(key: tuple, rank: int) -> Optional[SimpleType]:
    for l in _candidate_algebras(rank):
        _, module, _ = standard_module_of(l)
        if module is not None and canonical_module_key(module) == key:
            return l
    return None


def standard_algebra_for(module: ModuleDescriptor) -> Optional[SimpleType]:
    """
    The simple algebra l whose highest-root grading yields ``module``.

    The centre of l_0 has dimension one or two, so only ranks rk g + 1
    and rk g + 2 are searched.
    """
    rank = sum(t.rank for t in module.factors)
    return _standard_algebra_by_key(canonical_module_key(module), rank)


def _irreducible(*factors: IrrepDescriptor) -> ModuleDescriptor:
    return ModuleDescriptor.irreducible(*factors)


def _with_dual(u: tuple[IrrepDescriptor, ...]) -> ModuleDescriptor:
    return ModuleDescriptor((u, tuple(dual(d) for d in u)))


def _extension_target(module: ModuleDescriptor
                      ) -> Optional[ModuleDescriptor]:
    key = canonical_module_key(module)
    factors = module.factors
    if (len(module.summands) == 2 and len(factors) == 1
            and factors[0].family == Family.C):
        n = factors[0].rank
        u = (IrrepDescriptor.fundamental(factors[0], 1),)
        if key == canonical_module_key(_with_dual(u)):
            a = SimpleType(Family.A, 2 * n - 1)
            return _with_dual((IrrepDescriptor.fundamental(a, 1),))
    b5 = SimpleType(Family.B, 5)
    if key == canonical_module_key(
            _irreducible(IrrepDescriptor.fundamental(b5, 5))):
        d6 = SimpleType(Family.D, 6)
        return _irreducible(IrrepDescriptor.fundamental(d6, 5))
    standard_a1 = IrrepDescriptor.fundamental(_A1, 1)
    if key == canonical_module_key(_irreducible(
            standard_a1, IrrepDescriptor.fundamental(_G2, 1))):
        b3 = SimpleType(Family.B, 3)
        return _irreducible(standard_a1, IrrepDescriptor.fundamental(b3, 1))
    return None


def detect_standard_extension(entry: ClassificationEntry
                              ) -> Optional[StandardExtension]:
    """
    Extension of a Lagrangian module to a standard module of a larger group.

    Only Sp(n) on C^2n + C^2n*, Spin(11) on its spinors and SL(2) x G2 on
    C^2 (x) C^7 extend. Each candidate is accepted only when the larger
    group's orbit has the same dimension and its module is standard.
    """
    module, orbit = entry.module, entry.orbit
    target = _extension_target(module)
    if target is None:
        return None
    target_orbit = is_lagrangian(target)
    standard_for = standard_algebra_for(target)
    if (target_orbit.orbit_dim != orbit.orbit_dim
            or not target_orbit.lagrangian or standard_for is None):
        message = (f"{module} does not extend to {target}: orbit dims "
                   f"{orbit.orbit_dim} and {target_orbit.orbit_dim}, "
                   f"standard for {standard_for}")
        logging.error(message)
        raise ClassificationViolation(message)
    return StandardExtension(algebra=target.factors, module=target,
                             orbit_dim=target_orbit.orbit_dim,
                             standard_for=standard_for)


def classification_entry(module: ModuleDescriptor) -> ClassificationEntry:
    orbit = is_lagrangian(module)
    if not orbit.lagrangian:
        return ClassificationEntry(module=module, orbit=orbit)
    extension = detect_standard_extension(
        ClassificationEntry(module=module, orbit=orbit))
    standard_for = None if extension else standard_algebra_for(module)
    entry = ClassificationEntry(module=module, orbit=orbit,
                                standard_for=standard_for,
                                extension=extension)
    try:
        entry.check_dichotomy()
        return entry
    except ClassificationViolation as e:
        logging.error('Classification dichotomy failed: %s', e)
        raise


def classify_simple(cfg: SearchConfig) -> list[ClassificationEntry]:
    """Lagrangian members of the bounded enumeration over simple groups."""
    entries = []
    for d in bounded_symplectic_irreps(cfg):
        entry = classification_entry(_irreducible(d))
        if entry.orbit.lagrangian:
            entries.append(entry)
    logging.info('Simple groups: %d Lagrangian modules', len(entries))
    return entries


def semisimple_modules(cfg: SearchConfig) -> list[ModuleDescriptor]:
    """U + U* for SL and Sp, C^2 (x) C^m for SO(m) and C^2 (x) C^7 for G2."""
    n_max = cfg.max_classical_rank
    modules = []
    for r in range(1, n_max + 1):
        a = SimpleType(Family.A, r)
        modules.append(_with_dual((IrrepDescriptor.fundamental(a, 1),)))
    for n in range(2, n_max + 1):
        c = SimpleType(Family.C, n)
        modules.append(_with_dual((IrrepDescriptor.fundamental(c, 1),)))
    standard_a1 = IrrepDescriptor.fundamental(_A1, 1)
    for m in range(3, 2 * n_max + 2):
        modules.append(_irreducible(standard_a1, *orthogonal_standard(m)))
    modules.append(_irreducible(standard_a1,
                                IrrepDescriptor.fundamental(_G2, 1)))
    return modules


def classify_semisimple(cfg: SearchConfig) -> list[ClassificationEntry]:
    entries = []
    for module in semisimple_modules(cfg):
        entry = classification_entry(module)
        if not entry.orbit.lagrangian:
            message = f"{module} is expected to have a Lagrangian orbit"
            logging.error(message)
            raise ClassificationViolation(message)
        entries.append(entry)
    logging.info('Semisimple and reducible: %d Lagrangian modules',
                 len(entries))
    return entries


def classify_all(cfg: SearchConfig) -> list[ClassificationEntry]:
    """Every Lagrangian highest weight orbit in range, canonically sorted."""
    entries = classify_simple(cfg) + classify_semisimple(cfg)
    return sorted(entries, key=lambda e: canonical_module_key(e.module))
