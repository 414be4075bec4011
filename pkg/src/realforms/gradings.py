"""Real forms with a compact Cartan subalgebra as Z/2 gradings of the roots.

A grading assigns 0 (compact) or 1 (noncompact) to every simple root and
extends additively to the root lattice.
"""
from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Optional, Sequence, Union

from src.data.data_preprocessing import (RealFormFactor, RealFormSpec,
                                         exceptional_real_form_names,
                                         parse_real_form)
from src.exceptions import RealFormError, RepresentationError
from src.logger import logging
from src.rootsys import (Family, Root, SimpleType, Weight, build_root_system,
                         sorted_types, sub_root_system_type, types_to_str)

Epsilon = tuple[int, ...]


def _parity(root: Root, epsilon: Epsilon) -> int:
    return sum(c * e for c, e in zip(root, epsilon)) % 2


@lru_cache(maxsize=None)
def _compact_types(algebra: SimpleType,
                   epsilon: Epsilon) -> tuple[SimpleType, ...]:
    rs = build_root_system(algebra)
    types = sub_root_system_type(
        rs, lambda root: _parity(root, epsilon) == 0)
    return tuple(sorted_types(types))


def _factor_index(algebra: SimpleType, epsilon: Epsilon) -> int:
    rs = build_root_system(algebra)
    noncompact = sum(_parity(root, epsilon) for root in rs.positive_roots)
    compact = len(rs.positive_roots) - noncompact
    return 2 * noncompact - (algebra.rank + 2 * compact)


@dataclass(frozen=True)
class RealFormGrading:
    """One epsilon per simple factor of a semisimple algebra."""

    algebra: tuple[SimpleType, ...]
    epsilon: tuple[Epsilon, ...]

    def __post_init__(self) -> None:
        if len(self.algebra) != len(self.epsilon):
            raise RealFormError(
                f"{len(self.epsilon)} gradings for {len(self.algebra)} "
                "simple factors")
        for t, eps in zip(self.algebra, self.epsilon):
            if len(eps) != t.rank or any(e not in (0, 1) for e in eps):
                raise RealFormError(
                    f"grading {eps} is not a Z/2 label of the {t.rank} "
                    f"simple roots of {t}")

    @classmethod
    def simple(cls, algebra: SimpleType, epsilon: Sequence[int]
               ) -> RealFormGrading:
        return cls((algebra,), (tuple(epsilon),))

    def is_compact(self, factor: int, root: Root) -> bool:
        return _parity(root, self.epsilon[factor]) == 0

    @property
    def index(self) -> int:
        """dim p - dim k; additive over simple factors."""
        return sum(_factor_index(t, eps)
                   for t, eps in zip(self.algebra, self.epsilon))

    @property
    def compact_types(self) -> tuple[SimpleType, ...]:
        types: list[SimpleType] = []
        for t, eps in zip(self.algebra, self.epsilon):
            types.extend(_compact_types(t, eps))
        return tuple(sorted_types(types))

    @property
    def center_dim(self) -> int:
        """Dimension of the centre of the maximal compact subalgebra."""
        rank = sum(t.rank for t in self.algebra)
        return rank - sum(t.rank for t in self.compact_types)

    @property
    def name(self) -> str:
        return real_form_name(self)

    def to_dict(self) -> dict[str, Any]:
        return {
            'algebra': types_to_str(self.algebra),
            'epsilon': [list(eps) for eps in self.epsilon],
            'index': self.index,
            'compact': types_to_str(self.compact_types),
            'center_dim': self.center_dim,
            'name': self.name,
        }


def index(g: RealFormGrading) -> int:
    return g.index


def _reflect_epsilon(matrix, epsilon: Epsilon, i: int) -> Epsilon:
    # epsilon composed with s_i: alpha_j -> alpha_j - <alpha_j, alpha_i^v>
    # alpha_i
    return tuple((e - int(matrix[i][j]) * epsilon[i]) % 2
                 for j, e in enumerate(epsilon))


def weyl_orbit(algebra: SimpleType, epsilon: Epsilon) -> frozenset:
    """All gradings conjugate to ``epsilon`` under the Weyl group."""
    matrix = build_root_system(algebra).cartan_matrix
    seen = {tuple(epsilon)}
    queue = deque(seen)
    while queue:
        current = queue.popleft()
        for i in range(algebra.rank):
            image = _reflect_epsilon(matrix, current, i)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return frozenset(seen)


@lru_cache(maxsize=None)
def enumerate_real_forms(algebra: SimpleType) -> tuple[RealFormGrading, ...]:
    """
    Weyl-orbit representatives of all 2^rank gradings of ``algebra``.

    Args:
        algebra (SimpleType): a simple type.

    Returns:
        tuple: one grading per orbit, the smallest epsilon of the orbit,
            sorted by index.
    """
    remaining = set(itertools.product((0, 1), repeat=algebra.rank))
    representatives = []
    while remaining:
        orbit = weyl_orbit(algebra, min(remaining))
        remaining -= orbit
        representatives.append(RealFormGrading.simple(algebra, min(orbit)))
    representatives.sort(key=lambda g: (g.index, g.epsilon))
    logging.debug('%s: %d Weyl orbits of gradings, indices %s', algebra,
                  len(representatives), [g.index for g in representatives])
    return tuple(representatives)


def normalize_weights(g: RealFormGrading,
                      weights: Union[Weight, Sequence[Weight]]
                      ) -> tuple[Weight, ...]:
    if isinstance(weights, Weight):
        weights = (weights,)
    weights = tuple(weights)
    if len(weights) != len(g.algebra) or any(
            w.rank != t.rank for w, t in zip(weights, g.algebra)):
        raise RealFormError(
            f"weights {[str(w) for w in weights]} do not match the "
            f"algebra {types_to_str(g.algebra)}")
    negative = [str(w) for w in weights if not w.is_dominant]
    if negative:
        raise RepresentationError(
            f"highest weights must be dominant, got {negative}")
    return weights


def _factor_compactness(algebra: SimpleType, epsilon: Epsilon,
                        weight: Weight) -> bool:
    rs = build_root_system(algebra)
    return all(_parity(root, epsilon) == 0 for root in rs.positive_roots
               if rs.pairing(weight, root) == 0)


def stabilizer_compactness(g: RealFormGrading,
                           weights: Union[Weight, Sequence[Weight]]) -> bool:
    """Whether every root orthogonal to the highest weight is compact."""
    weights = normalize_weights(g, weights)
    if all(w.is_zero for w in weights):
        raise RealFormError("the highest weight must be nonzero")
    return all(_factor_compactness(t, eps, w)
               for t, eps, w in zip(g.algebra, g.epsilon, weights))


def _classical_names(algebra: SimpleType) -> list[str]:
    r = algebra.rank
    if algebra.family == Family.A:
        if r == 1:
            return ['su(2)', 'sl(2,R)']
        return [f"su({r + 1})"] + [f"su({p},{r + 1 - p})"
                                   for p in range(1, (r + 1) // 2 + 1)]
    if algebra.family == Family.B:
        return [f"so({2 * r + 1})"] + [f"so({p},{2 * r + 1 - p})"
                                       for p in range(1, r + 1)]
    if algebra.family == Family.C:
        return ([f"sp({r})"]
                + [f"sp({p},{r - p})" for p in range(1, r // 2 + 1)]
                + [f"sp({r},R)"])
    if algebra.family == Family.D:
        return ([f"so({2 * r})"]
                + [f"so({p},{2 * r - p})" for p in range(2, r + 1, 2)]
                + [f"so*({2 * r})"])
    return exceptional_real_form_names(algebra)


@lru_cache(maxsize=None)
def real_forms_of(algebra: SimpleType) -> tuple[RealFormFactor, ...]:
    """Named inner real forms of a simple algebra."""
    forms = []
    for name in _classical_names(algebra):
        factor = parse_real_form(name).factors[0]
        if factor.algebra != algebra.canonical():
            raise RealFormError(f"{name} is not a real form of {algebra}")
        forms.append(factor)
    return tuple(forms)


def _factor_name(algebra: SimpleType, epsilon: Epsilon) -> str:
    key = (algebra.canonical(), _factor_index(algebra, epsilon),
           _compact_types(algebra, epsilon))
    for factor in real_forms_of(algebra):
        if factor.key == key:
            return factor.name
    return f"{str(algebra).lower()}({key[1]})"


def real_form_name(g: RealFormGrading) -> str:
    """Classical alias or exceptional index name, e.g. 'e7(-25)'."""
    return ' + '.join(_factor_name(t, eps)
                      for t, eps in zip(g.algebra, g.epsilon))


def _candidates(factor: RealFormFactor) -> list[Epsilon]:
    t = factor.algebra
    matches = []
    for eps in itertools.product((0, 1), repeat=t.rank):
        if _factor_index(t, eps) != factor.index:
            continue
        if _compact_types(t, eps) == factor.compact_types:
            matches.append(eps)
    return matches


def resolve_real_form(spec: RealFormSpec,
                      weights: Optional[Sequence[Weight]] = None
                      ) -> RealFormGrading:
    """
    A grading realizing ``spec``, matched by index and maximal compact type.

    When highest weights are given, a grading that makes the stabilizer
    compact is preferred in every factor.
    """
    if weights is not None and len(weights) != len(spec.factors):
        raise RealFormError(
            f"{len(weights)} weights for the {len(spec.factors)} factors "
            f"of {spec.name}")
    chosen = []
    for i, factor in enumerate(spec.factors):
        if not factor.inner:
            raise RealFormError(
                f"{factor.name} has no compact Cartan subalgebra")
        candidates = _candidates(factor)
        if not candidates:
            logging.error('No grading of %s realizes %s', factor.algebra,
                          factor.name)
            raise RealFormError(
                f"no grading of {factor.algebra} has index {factor.index} "
                f"and compact part {types_to_str(factor.compact_types)}")
        best = candidates[0]
        if weights is not None and not weights[i].is_zero:
            best = next((eps for eps in candidates
                         if _factor_compactness(factor.algebra, eps,
                                                weights[i])), best)
        chosen.append(best)
    return RealFormGrading(spec.algebra, tuple(chosen))
