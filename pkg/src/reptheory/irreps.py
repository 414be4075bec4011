from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache
from typing import Iterable

from src.exceptions import RepresentationError, RootSystemError
from src.rootsys import (Family, SimpleType, Weight, automorphisms,
                         build_root_system)


class FormType(str, Enum):
    ORTHOGONAL = 'orthogonal'
    SYMPLECTIC = 'symplectic'
    NONE = 'none'


@dataclass(frozen=True, order=True)
class IrrepDescriptor:
    """Irreducible module of a simple algebra, given by its highest weight."""

    algebra: SimpleType
    highest_weight: Weight

    def __post_init__(self) -> None:
        if not isinstance(self.highest_weight, Weight):
            object.__setattr__(self, 'highest_weight',
                               Weight(tuple(self.highest_weight)))
        if self.highest_weight.rank != self.algebra.rank:
            raise RepresentationError(
                f"weight {self.highest_weight} has {self.highest_weight.rank} "
                f"coordinates but {self.algebra} has rank {self.algebra.rank}")
        if not self.highest_weight.is_dominant:
            raise RepresentationError(
                f"weight {self.highest_weight} is not dominant")

    @classmethod
    def parse(cls, text: str) -> IrrepDescriptor:
        """Parse the text form ``E7:1,0,0,0,0,0,0``."""
        name, sep, coords = text.partition(':')
        if not sep:
            raise RepresentationError(
                f"expected TYPE:w1,...,wn, got {text!r}")
        try:
            algebra = SimpleType.parse(name)
        except RootSystemError as e:
            raise RepresentationError(str(e)) from e
        return cls(algebra, Weight.parse(coords))

    @classmethod
    def fundamental(cls, algebra: SimpleType, index: int,
                    multiple: int = 1) -> IrrepDescriptor:
        return cls(algebra, Weight.fundamental(index, algebra.rank, multiple))

    def __str__(self) -> str:
        return f"{self.algebra}:{self.highest_weight}"


TensorProduct = tuple[IrrepDescriptor, ...]


@dataclass(frozen=True)
class ModuleDescriptor:
    """Direct sum of tensor products over one semisimple algebra."""

    summands: tuple[TensorProduct, ...]

    def __post_init__(self) -> None:
        summands = tuple(tuple(s) for s in self.summands)
        object.__setattr__(self, 'summands', summands)
        factor_lists = {tuple(d.algebra for d in s) for s in summands}
        if len(factor_lists) > 1:
            raise RepresentationError(
                "summands live over different semisimple algebras")

    @classmethod
    def irreducible(cls, *factors: IrrepDescriptor) -> ModuleDescriptor:
        return cls((tuple(factors),))

    @classmethod
    def parse(cls, text: str) -> ModuleDescriptor:
        """Parse ``A1:1 * B3:1,0,0 + ...``."""
        summands = []
        for summand in text.split('+'):
            factors = [IrrepDescriptor.parse(part.strip())
                       for part in summand.split('*') if part.strip()]
            if not factors:
                raise RepresentationError(f"empty summand in {text!r}")
            summands.append(tuple(factors))
        return cls(tuple(summands))

    @property
    def factors(self) -> tuple[SimpleType, ...]:
        if not self.summands:
            return ()
        return tuple(d.algebra for d in self.summands[0])

    @property
    def is_irreducible(self) -> bool:
        return len(self.summands) == 1

    @property
    def dimension(self) -> int:
        return module_dimension(self)

    def __str__(self) -> str:
        return ' + '.join(' * '.join(str(d) for d in s) for s in self.summands)


@lru_cache(maxsize=4096)
def weyl_dimension(d: IrrepDescriptor) -> int:
    """Exact dimension from the Weyl product over positive roots."""
    rs = build_root_system(d.algebra)
    shifted = Weight(tuple(c + 1 for c in d.highest_weight.coords))
    numerators = rs.coroot_pairings(shifted).tolist()
    denominators = rs.coroot_matrix.sum(axis=1).tolist()
    numerator = math.prod(int(v) for v in numerators)
    denominator = math.prod(int(v) for v in denominators)
    dimension, remainder = divmod(numerator, denominator)
    if remainder:
        raise RepresentationError(
            f"Weyl product for {d} is not integral")
    return dimension


def dual_highest_weight(d: IrrepDescriptor) -> Weight:
    """-w0(lambda): reflect -lambda back into the dominant chamber."""
    rs = build_root_system(d.algebra)
    return rs.dominant_conjugate(-d.highest_weight)


def dual(d: IrrepDescriptor) -> IrrepDescriptor:
    return IrrepDescriptor(d.algebra, dual_highest_weight(d))


def is_self_dual(d: IrrepDescriptor) -> bool:
    return dual_highest_weight(d) == d.highest_weight


def form_type(d: IrrepDescriptor) -> FormType:
    """Invariant bilinear form: parity of <lambda, 2 rho^v>."""
    if not is_self_dual(d):
        return FormType.NONE
    rs = build_root_system(d.algebra)
    parity = sum(a * b for a, b in zip(d.highest_weight.coords,
                                       rs.sum_positive_coroots)) % 2
    return FormType.SYMPLECTIC if parity else FormType.ORTHOGONAL


def tensor_form_type(factors: Iterable[IrrepDescriptor]) -> FormType:
    """Symplectic iff an odd number of factors is symplectic."""
    symplectic = 0
    for d in factors:
        kind = form_type(d)
        if kind == FormType.NONE:
            return FormType.NONE
        symplectic += kind == FormType.SYMPLECTIC
    return FormType.SYMPLECTIC if symplectic % 2 else FormType.ORTHOGONAL


def semisimple_form_type(m: ModuleDescriptor) -> FormType:
    if len(m.summands) != 1:
        raise RepresentationError(
            f"form type needs a single tensor product, got {len(m.summands)} "
            "summands")
    return tensor_form_type(m.summands[0])


def module_dimension(m: ModuleDescriptor) -> int:
    return sum(math.prod(weyl_dimension(d) for d in s) for s in m.summands)


def dual_module(m: ModuleDescriptor) -> ModuleDescriptor:
    return ModuleDescriptor(tuple(tuple(dual(d) for d in s)
                                  for s in m.summands))


def special_linear_standard(m: int) -> list[IrrepDescriptor]:
    """Defining module of SL(m); empty for the trivial group SL(1)."""
    if m < 1:
        raise RepresentationError(f"SL({m}) does not exist")
    if m == 1:
        return []
    return [IrrepDescriptor.fundamental(SimpleType(Family.A, m - 1), 1)]


def symplectic_standard(k: int) -> list[IrrepDescriptor]:
    """Defining 2k-dimensional module of Sp(k)."""
    if k < 1:
        raise RepresentationError(f"Sp({k}) does not exist")
    if k == 1:
        return [IrrepDescriptor.fundamental(SimpleType(Family.A, 1), 1)]
    return [IrrepDescriptor.fundamental(SimpleType(Family.C, k), 1)]


def orthogonal_standard(m: int) -> list[IrrepDescriptor]:
    """Defining module of SO(m) as irreducible factors of canonical types.

    SO(4) is not simple and yields the tensor product of two A1 factors.
    """
    if m < 3:
        raise RepresentationError(f"SO({m}) is not semisimple")
    a1 = SimpleType(Family.A, 1)
    if m == 3:
        return [IrrepDescriptor.fundamental(a1, 1, 2)]
    if m == 4:
        return [IrrepDescriptor.fundamental(a1, 1)] * 2
    if m == 5:
        return [IrrepDescriptor.fundamental(SimpleType(Family.C, 2), 2)]
    if m == 6:
        return [IrrepDescriptor.fundamental(SimpleType(Family.A, 3), 2)]
    family = Family.B if m % 2 else Family.D
    return [IrrepDescriptor.fundamental(SimpleType(family, m // 2), 1)]


def canonical_irrep(d: IrrepDescriptor) -> IrrepDescriptor:
    """Representative of ``d`` modulo Dynkin-diagram automorphisms."""
    best = max(d.highest_weight.permute(sigma)
               for sigma in automorphisms(d.algebra))
    return IrrepDescriptor(d.algebra, best)


def equivalent_irreps(first: IrrepDescriptor,
                      second: IrrepDescriptor) -> bool:
    return canonical_irrep(first) == canonical_irrep(second)


def canonical_module_key(m: ModuleDescriptor) -> tuple:
    """Key equal for modules that agree up to diagram automorphisms."""
    return tuple(sorted(tuple(sorted(canonical_irrep(d) for d in s))
                        for s in m.summands))
