"""Highest-weight-vector orbits and the Lagrangian verdict."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import lru_cache
from typing import Any, Sequence

import numpy as np

from src.exceptions import ClassificationViolation, OrbitError
from src.logger import logging
from src.reptheory import (FormType, IrrepDescriptor, ModuleDescriptor,
                           TensorProduct, dual, equivalent_irreps,
                           orthogonal_standard, tensor_form_type,
                           weyl_dimension)
from src.rootsys import (Family, SimpleType, Weight, build_root_system,
                         sorted_types, sub_root_system_type, types_to_str)

_A1 = SimpleType(Family.A, 1)
_G2 = SimpleType(Family.G, 2)


@dataclass(frozen=True)
class OrbitReport:
    """Orbit data of the highest weight vector of ``module``."""

    module: ModuleDescriptor
    levi_types: tuple[SimpleType, ...]
    orbit_dim: int
    module_dim: int
    totally_isotropic: bool
    lagrangian: bool
    form: FormType
    reasons: tuple[str, ...] = field(default=())

    def __post_init__(self) -> None:
        if self.orbit_dim < 1:
            raise ClassificationViolation(
                f"orbit of {self.module} has dimension {self.orbit_dim}")
        if self.lagrangian and not (self.totally_isotropic
                                    and 2 * self.orbit_dim == self.module_dim):
            raise ClassificationViolation(
                f"{self.module} marked Lagrangian with orbit dimension "
                f"{self.orbit_dim} in a module of dimension {self.module_dim}")

    def to_dict(self) -> dict[str, Any]:
        summands = self.module.summands
        weight = None
        if len(summands) == 1 and len(summands[0]) == 1:
            weight = str(summands[0][0].highest_weight)
        return {
            'algebra': types_to_str(self.module.factors),
            'module': str(self.module),
            'weight': weight,
            'levi': types_to_str(self.levi_types),
            'orbit_dim': self.orbit_dim,
            'module_dim': self.module_dim,
            'totally_isotropic': self.totally_isotropic,
            'lagrangian': self.lagrangian,
            'form': self.form.value,
            'reasons': list(self.reasons),
        }


@lru_cache(maxsize=None)
def _levi_by_support(algebra: SimpleType,
                     support: tuple[bool, ...]) -> tuple[SimpleType, ...]:
    # The stabilizer Levi only depends on which coordinates vanish.
    rs = build_root_system(algebra)
    weight = Weight(tuple(int(s) for s in support))
    types = sub_root_system_type(
        rs, lambda root: rs.pairing(weight, root) == 0)
    return tuple(sorted_types(types))


def _levi(d: IrrepDescriptor) -> tuple[SimpleType, ...]:
    support = tuple(c != 0 for c in d.highest_weight.coords)
    return _levi_by_support(d.algebra, support)


def _require_nonzero(d: IrrepDescriptor) -> None:
    if d.highest_weight.is_zero:
        raise OrbitError(
            f"the highest weight orbit of the trivial module {d} is a point")


def levi_of_stabilizer(d: IrrepDescriptor) -> list[SimpleType]:
    """Simple types of H', the semisimple Levi part of the stabilizer.

    The roots orthogonal to the highest weight form the Dynkin diagram with
    every node in the support of the weight deleted.
    """
    _require_nonzero(d)
    return list(_levi(d))


def orbit_dimension_levi(d: IrrepDescriptor) -> int:
    """dim C = (dim G - rk G - dim H' + rk H') / 2 + 1."""
    _require_nonzero(d)
    levi = _levi(d)
    g = d.algebra
    twice = (g.dimension - g.rank
             - sum(t.dimension for t in levi) + sum(t.rank for t in levi))
    return twice // 2 + 1


def _projective_dimension(d: IrrepDescriptor) -> int:
    rs = build_root_system(d.algebra)
    return int(np.count_nonzero(rs.coroot_pairings(d.highest_weight)))


def orbit_dimension_roots(d: IrrepDescriptor) -> int:
    """Positive roots not orthogonal to the highest weight, plus one."""
    _require_nonzero(d)
    return _projective_dimension(d) + 1


def tensor_orbit_dimension(factors: Sequence[IrrepDescriptor]) -> int:
    """Orbit of v_1 (x) ... (x) v_k: the projective orbit is a product."""
    if all(d.highest_weight.is_zero for d in factors):
        raise OrbitError("every factor of the tensor product is trivial")
    total = 1
    for d in factors:
        if d.highest_weight.is_zero:
            continue
        by_roots = orbit_dimension_roots(d)
        by_levi = orbit_dimension_levi(d)
        if by_roots != by_levi:
            raise ClassificationViolation(
                f"orbit dimension of {d}: {by_roots} by root counting, "
                f"{by_levi} by the Levi formula")
        total += by_roots - 1
    return total


def _tensor_levi(factors: Sequence[IrrepDescriptor]
                 ) -> tuple[SimpleType, ...]:
    types: list[SimpleType] = []
    for d in factors:
        if d.highest_weight.is_zero:
            types.append(d.algebra)
        else:
            types.extend(_levi(d))
    return tuple(sorted_types(types))


def twice_is_root(factors: Sequence[IrrepDescriptor]) -> bool:
    """Whether 2 Lambda is a root of g.

    Roots live in one simple ideal, so this needs a single nontrivial
    factor; then it happens exactly for the standard module of Sp(n).
    """
    nontrivial = [d for d in factors if not d.highest_weight.is_zero]
    if len(nontrivial) != 1:
        return False
    d = nontrivial[0]
    rs = build_root_system(d.algebra)
    doubled = d.highest_weight.scale(2)
    return any(rs.fundamental_coords(root) == doubled
               for root in rs.positive_roots)


def is_standard_special_linear_or_symplectic(summand: TensorProduct) -> bool:
    """U is C^n for SL(n) (either dual) or C^2n for Sp(n)."""
    if len(summand) != 1:
        return False
    d = summand[0]
    rank = d.algebra.rank
    if d.algebra.family == Family.A:
        return d.highest_weight in (Weight.fundamental(1, rank),
                                    Weight.fundamental(rank, rank))
    if d.algebra.family == Family.C:
        return d.highest_weight == Weight.fundamental(1, rank)
    return False


def _transitive_on_null_cone(factors: Sequence[IrrepDescriptor]) -> bool:
    """Orthogonal factor whose null cone is one orbit: SO(m) or G2 in SO(7)."""
    if len(factors) == 1 and factors[0].algebra == _G2:
        return factors[0].highest_weight == Weight.fundamental(1, 2)
    m = math.prod(weyl_dimension(d) for d in factors)
    if m < 3:
        return False
    standard = orthogonal_standard(m)
    if len(standard) != len(factors):
        return False
    remaining = list(standard)
    for d in factors:
        match = next((s for s in remaining
                      if s.algebra == d.algebra and equivalent_irreps(s, d)),
                     None)
        if match is None:
            return False
        remaining.remove(match)
    return True


def matches_sl2_times_orthogonal(factors: Sequence[IrrepDescriptor]) -> bool:
    """C^2 (x) C^n under SL(2) x G' with G' transitive on null vectors."""
    standard_a1 = IrrepDescriptor.fundamental(_A1, 1)
    for i, d in enumerate(factors):
        if d != standard_a1:
            continue
        rest = list(factors[:i]) + list(factors[i + 1:])
        if rest and _transitive_on_null_cone(rest):
            return True
    return False


def _reducible_report(m: ModuleDescriptor) -> OrbitReport:
    u = m.summands[0]
    orbit_dim = tensor_orbit_dimension(u)
    dim_u = math.prod(weyl_dimension(d) for d in u)
    open_orbit = orbit_dim == dim_u
    expected = is_standard_special_linear_or_symplectic(u)
    if open_orbit != expected:
        raise ClassificationViolation(
            f"{m}: orbit of U is {'open' if open_orbit else 'not open'} but "
            f"U is {'' if expected else 'not '}a standard SL or Sp module")
    reasons = ['U + U* carries the canonical symplectic form; U is '
               'Lagrangian']
    if open_orbit:
        reasons.append('the orbit is open in U')
    else:
        reasons.append(f'the orbit has dimension {orbit_dim} < dim U = '
                       f'{dim_u}')
    return OrbitReport(module=m, levi_types=_tensor_levi(u),
                       orbit_dim=orbit_dim, module_dim=2 * dim_u,
                       totally_isotropic=True, lagrangian=open_orbit,
                       form=FormType.SYMPLECTIC, reasons=tuple(reasons))


def _irreducible_report(m: ModuleDescriptor) -> OrbitReport:
    factors = m.summands[0]
    form = tensor_form_type(factors)
    orbit_dim = tensor_orbit_dimension(factors)
    module_dim = m.dimension
    levi = _tensor_levi(factors)
    if form != FormType.SYMPLECTIC:
        return OrbitReport(module=m, levi_types=levi, orbit_dim=orbit_dim,
                           module_dim=module_dim, totally_isotropic=False,
                           lagrangian=False, form=form,
                           reasons=('not symplectic',))

    reasons = []
    isotropic = not twice_is_root(factors)
    if not isotropic:
        reasons.append('2 Lambda is a root: the orbit is not totally '
                       'isotropic')
    half = 2 * orbit_dim == module_dim
    if not half:
        reasons.append(f'2 * orbit_dim = {2 * orbit_dim} differs from '
                       f'dim V = {module_dim}')
    computed = isotropic and half

    nontrivial = [d for d in factors if not d.highest_weight.is_zero]
    if len(nontrivial) == 1:
        return OrbitReport(module=m, levi_types=levi, orbit_dim=orbit_dim,
                           module_dim=module_dim, totally_isotropic=isotropic,
                           lagrangian=computed, form=form,
                           reasons=tuple(reasons))

    shape = matches_sl2_times_orthogonal(nontrivial)
    if shape and not computed:
        raise ClassificationViolation(
            f"{m} has the shape C^2 (x) C^n but fails the dimension count")
    if computed and not shape:
        reasons.append('dimension count holds but the orthogonal factor is '
                       'not known to act transitively on its null cone')
    elif shape:
        reasons.append('C^2 (x) C^n with G\' transitive on the null cone')
    return OrbitReport(module=m, levi_types=levi, orbit_dim=orbit_dim,
                       module_dim=module_dim, totally_isotropic=isotropic,
                       lagrangian=shape, form=form, reasons=tuple(reasons))


def is_lagrangian(m: ModuleDescriptor) -> OrbitReport:
    """Whether the highest weight vector of ``m`` has a Lagrangian orbit."""
    if not m.summands or not any(m.summands):
        raise OrbitError("empty module")
    try:
        summands = m.summands
        if len(summands) == 2 and summands[1] == tuple(
                dual(d) for d in summands[0]):
            report = _reducible_report(m)
        elif len(summands) == 1:
            report = _irreducible_report(m)
        else:
            first = summands[0]
            report = OrbitReport(
                module=m, levi_types=_tensor_levi(first),
                orbit_dim=tensor_orbit_dimension(first),
                module_dim=m.dimension, totally_isotropic=False,
                lagrangian=False, form=FormType.NONE,
                reasons=('reducible module is not of the form U + U*',))
    except ClassificationViolation as e:
        logging.error('Orbit computation for %s violated a theorem: %s', m, e)
        raise
    logging.debug('Orbit of %s: dim %d, lagrangian %s', m, report.orbit_dim,
                  report.lagrangian)
    return report


def orbit_report(algebra: SimpleType, weight: Weight) -> OrbitReport:
    return is_lagrangian(
        ModuleDescriptor.irreducible(IrrepDescriptor(algebra, weight)))
