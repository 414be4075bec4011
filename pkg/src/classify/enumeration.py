"""Bounded search for symplectic irreducible modules of simple algebras.

A symplectic module with a Lagrangian highest weight orbit satisfies
dim V <= dim G - rk G + 2, which leaves finitely many candidates per type.
"""
from __future__ import annotations

import itertools
import math
from typing import Iterator

from src.data.data_ingestion import SearchConfig
from src.exceptions import InstanceTooLargeError
from src.logger import logging
from src.reptheory import (FormType, IrrepDescriptor, form_type,
                           weyl_dimension)
from src.rootsys import Family, SimpleType, Weight

BRUTE_FORCE_MAX_POINTS = 10 ** 6

_CLASSICAL_MIN_RANK = {Family.A: 1, Family.B: 3, Family.C: 2, Family.D: 4}
_EXCEPTIONAL = (SimpleType(Family.E, 6), SimpleType(Family.E, 7),
                SimpleType(Family.E, 8), SimpleType(Family.F, 4),
                SimpleType(Family.G, 2))


def dimension_bound(t: SimpleType) -> int:
    return t.dimension - t.rank + 2


def simple_types_in_range(cfg: SearchConfig) -> list[SimpleType]:
    """Every simple algebra once: A1.., B3.., C2.., D4.. and E, F, G."""
    types = [SimpleType(family, rank)
             for family, low in _CLASSICAL_MIN_RANK.items()
             for rank in range(low, cfg.max_classical_rank + 1)]
    if cfg.max_exceptional:
        types.extend(_EXCEPTIONAL)
    return types


def _dimension(t: SimpleType, coords) -> int:
    return weyl_dimension(IrrepDescriptor(t, Weight(tuple(coords))))


def _dfs(t: SimpleType, bound: int, prefix: list[int]) -> Iterator[Weight]:
    # Completing the prefix with zeros gives the smallest dimension below
    # this node, since the Weyl dimension grows in every coordinate.
    if len(prefix) == t.rank:
        yield Weight(tuple(prefix))
        return
    padding = [0] * (t.rank - len(prefix) - 1)
    c = 0
    while _dimension(t, prefix + [c] + padding) <= bound:
        yield from _dfs(t, bound, prefix + [c])
        c += 1


def dominant_weights(t: SimpleType, max_dim: int) -> list[Weight]:
    """Every dominant weight of ``t`` whose irrep has dimension <= max_dim."""
    return list(_dfs(t, max_dim, []))


def _is_candidate(d: IrrepDescriptor) -> bool:
    return (not d.highest_weight.is_zero
            and form_type(d) == FormType.SYMPLECTIC)


def enumerate_symplectic_bounded(t: SimpleType) -> list[IrrepDescriptor]:
    """Symplectic irreps of ``t`` within the dimension bound, by pruned DFS."""
    bound = dimension_bound(t)
    found = [IrrepDescriptor(t, weight)
             for weight in dominant_weights(t, bound)]
    result = sorted(d for d in found if _is_candidate(d))
    logging.debug('%s: %d weights within dim %d, %d symplectic', t,
                  len(found), bound, len(result))
    return result


def brute_force_bounded(t: SimpleType) -> list[IrrepDescriptor]:
    """The same set by scanning a box of weights, without pruning."""
    bound = dimension_bound(t)
    ranges = []
    for i in range(t.rank):
        c = 0
        while _dimension(t, Weight.fundamental(i + 1, t.rank, c + 1).coords
                         ) <= bound:
            c += 1
        ranges.append(range(c + 1))
    points = math.prod(len(r) for r in ranges)
    if points > BRUTE_FORCE_MAX_POINTS:
        raise InstanceTooLargeError(
            f"brute force over {points} weights of {t} exceeds "
            f"{BRUTE_FORCE_MAX_POINTS}")
    result = []
    for coords in itertools.product(*ranges):
        d = IrrepDescriptor(t, Weight(coords))
        if weyl_dimension(d) <= bound and _is_candidate(d):
            result.append(d)
    return sorted(result)


def bounded_symplectic_irreps(cfg: SearchConfig) -> list[IrrepDescriptor]:
    result = []
    for t in simple_types_in_range(cfg):
        result.extend(enumerate_symplectic_bounded(t))
    logging.info('Bounded enumeration: %d symplectic irreps up to rank %d',
                 len(result), cfg.max_classical_rank)
    return result
