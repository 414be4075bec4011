"""Identification of sub-root-systems through their Dynkin diagrams."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Iterable, Optional

import networkx as nx
import numpy as np
from networkx.algorithms.isomorphism import DiGraphMatcher

from src.exceptions import RootSystemError
from src.logger import logging
from src.rootsys.cartan import cartan_matrix, simple_root_lengths
from src.rootsys.root_system import RootSystem, positive_roots_from_cartan
from src.rootsys.types import Family, Root, SimpleType

LabelKey = Callable[[tuple[Root, ...]], tuple]


@dataclass(frozen=True)
class SubRootSystemComponent:
    """One simple component, its base listed in the node order of ``type``."""

    type: SimpleType
    base: tuple[Root, ...]


@dataclass(frozen=True)
class SubRootSystem:
    roots: frozenset
    components: tuple[SubRootSystemComponent, ...]

    @property
    def types(self) -> list[SimpleType]:
        return [component.type for component in self.components]

    @property
    def positive_count(self) -> int:
        return sum(1 for root in self.roots if any(c > 0 for c in root))


def dynkin_graph(matrix: np.ndarray) -> nx.DiGraph:
    """Directed Dynkin graph; edge weights are the Cartan entries."""
    graph = nx.DiGraph()
    n = matrix.shape[0]
    graph.add_nodes_from(range(n))
    for i in range(n):
        for j in range(n):
            if i != j and matrix[i, j] != 0:
                graph.add_edge(i, j, weight=int(matrix[i, j]))
    return graph


def _edge_match(first: dict, second: dict) -> bool:
    return first['weight'] == second['weight']


def identify_cartan(matrix: np.ndarray) -> SimpleType:
    """Cartan type of an indecomposable Cartan matrix, up to isomorphism."""
    n = matrix.shape[0]
    count = len(positive_roots_from_cartan(matrix))
    lengths = simple_root_lengths(matrix)
    if len(set(lengths)) == 1:
        if count == n * (n + 1) // 2:
            return SimpleType(Family.A, n)
        if n >= 4 and count == n * (n - 1):
            return SimpleType(Family.D, n)
        if (n, count) in ((6, 36), (7, 63), (8, 120)):
            return SimpleType(Family.E, n)
    else:
        if (n, count) == (2, 6):
            return SimpleType(Family.G, 2)
        if (n, count) == (4, 24):
            return SimpleType(Family.F, 4)
        if count == n * n:
            short = sum(1 for length in lengths if length < max(lengths))
            if short == 1 and n >= 3:
                return SimpleType(Family.B, n)
            return SimpleType(Family.C, n)
    raise RootSystemError(
        f"Cartan matrix of rank {n} with {count} positive roots "
        "matches no simple type")


def _isomorphisms(matrix: np.ndarray,
                  simple_type: SimpleType) -> list[dict[int, int]]:
    reference = dynkin_graph(cartan_matrix(simple_type))
    matcher = DiGraphMatcher(dynkin_graph(matrix), reference,
                             edge_match=_edge_match)
    return list(matcher.isomorphisms_iter())


@lru_cache(maxsize=None)
def automorphisms(simple_type: SimpleType) -> tuple[tuple[int, ...], ...]:
    """Dynkin-diagram symmetries as permutations of the 0-based nodes."""
    maps = _isomorphisms(cartan_matrix(simple_type), simple_type)
    perms = {tuple(mapping[i] for i in range(simple_type.rank))
             for mapping in maps}
    return tuple(sorted(perms))


def _check_closed(rs: RootSystem, kept: set) -> None:
    for alpha in kept:
        if tuple(-c for c in alpha) not in kept:
            raise RootSystemError(
                f"kept roots are not closed under negation: {alpha}")
    positive = [alpha for alpha in kept if rs.is_positive(alpha)]
    if not positive:
        return
    roots = np.array(sorted(kept), dtype=np.int64)
    alphas = np.array(positive, dtype=np.int64)
    coroots = np.array([rs.coroot(alpha) for alpha in positive],
                       dtype=np.int64)
    # pairings[b, a] = <beta_b, alpha_a^v>
    pairings = (roots @ rs.cartan_matrix.T) @ coroots.T
    for a, alpha in enumerate(alphas):
        reflected = roots - np.outer(pairings[:, a], alpha)
        for row in reflected.tolist():
            if tuple(row) not in kept:
                raise RootSystemError(
                    f"kept roots are not closed under the reflection "
                    f"in {positive[a]}")


def _base(positive: list[Root]) -> list[Root]:
    positive_set = set(positive)
    base = []
    for beta in positive:
        decomposable = any(
            tuple(b - g for b, g in zip(beta, gamma)) in positive_set
            for gamma in positive if gamma != beta)
        if not decomposable:
            base.append(beta)
    return sorted(base)


def sub_root_system(rs: RootSystem, keep: Callable[[Root], bool],
                    label_key: Optional[LabelKey] = None) -> SubRootSystem:
    """Sub-root-system of the roots selected by ``keep``.

    ``label_key`` picks, among the Dynkin-diagram isomorphisms of a
    component onto its reference diagram, the ordering of the base that
    maximizes the key; by default the lexicographically largest base.
    """
    kept = {root for root in rs.roots if keep(root)}
    _check_closed(rs, kept)
    positive = sorted(root for root in kept if rs.is_positive(root))
    base = _base(positive)
    n = len(base)
    matrix = np.array([[rs.root_pairing(base[j], base[i]) for j in range(n)]
                       for i in range(n)], dtype=np.int64).reshape(n, n)

    undirected = dynkin_graph(matrix).to_undirected()
    components = []
    for nodes in nx.connected_components(undirected):
        nodes = sorted(nodes)
        block = matrix[np.ix_(nodes, nodes)]
        simple_type = identify_cartan(block)
        orderings = []
        for mapping in _isomorphisms(block, simple_type):
            ordered = [None] * len(nodes)
            for local, target in mapping.items():
                ordered[target] = base[nodes[local]]
            orderings.append(tuple(ordered))
        key = label_key or (lambda ordering: ordering)
        components.append(SubRootSystemComponent(
            type=simple_type, base=max(orderings, key=key)))

    components.sort(key=lambda c: (c.type, c.base))
    logging.debug('Sub-root-system of %s: %s', rs.type,
                  [str(c.type) for c in components])
    return SubRootSystem(roots=frozenset(kept), components=tuple(components))


def sub_root_system_type(rs: RootSystem,
                         keep: Callable[[Root], bool]) -> list[SimpleType]:
    """Multiset of simple types of the sub-root-system selected by ``keep``."""
    return sub_root_system(rs, keep).types


def sorted_types(types: Iterable[SimpleType]) -> list[SimpleType]:
    return sorted(t.canonical() for t in types)
