from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any

import numpy as np
import sympy

from src.exceptions import RootSystemError
from src.logger import logging
from src.rootsys.cartan import cartan_matrix, simple_root_lengths
from src.rootsys.types import Root, SimpleType, Weight


def positive_roots_from_cartan(matrix: np.ndarray) -> tuple[Root, ...]:
    """Positive roots in simple-root coordinates, sorted by height.

    Closure by root strings: beta + alpha_i is a root exactly when the
    alpha_i-string through beta extends upward, i.e. p - <beta, alpha_i^v> > 0
    where p counts the steps down.
    """
    rank = matrix.shape[0]
    simple = [tuple(int(i == j) for j in range(rank)) for i in range(rank)]
    found = set(simple)
    layer = sorted(simple)
    ordered = list(layer)
    while layer:
        next_layer = set()
        for root in layer:
            for i in range(rank):
                p = 0
                lower = list(root)
                while True:
                    lower[i] -= 1
                    if tuple(lower) not in found:
                        break
                    p += 1
                if p - int(np.dot(matrix[i], root)) > 0:
                    raised = root[:i] + (root[i] + 1,) + root[i + 1:]
                    if raised not in found:
                        found.add(raised)
                        next_layer.add(raised)
        layer = sorted(next_layer)
        ordered.extend(layer)
    return tuple(ordered)


def _root_length(root: Root, matrix: np.ndarray,
                 lengths: tuple[Fraction, ...]) -> Fraction:
    total = Fraction(0)
    for i, ci in enumerate(root):
        if ci == 0:
            continue
        for j, cj in enumerate(root):
            if cj:
                total += ci * cj * int(matrix[i, j]) * lengths[i] / 2
    return total


@dataclass(frozen=True, eq=False)
class RootSystem:
    """Immutable exact model of a simple root system."""

    type: SimpleType
    cartan_matrix: np.ndarray = field(repr=False)
    positive_roots: tuple[Root, ...] = field(repr=False)
    simple_lengths: tuple[Fraction, ...] = field(repr=False)
    root_lengths: dict[Root, Fraction] = field(repr=False)
    coroots: dict[Root, Root] = field(repr=False)
    fundamental_weights: tuple[tuple[Fraction, ...], ...] = field(repr=False)
    highest_root: Root = field(repr=False)
    sum_positive_coroots: tuple[int, ...] = field(repr=False)
    _coroot_matrix: np.ndarray = field(repr=False)
    _gram: tuple[tuple[int, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return self.type.rank

    @property
    def dimension(self) -> int:
        return 2 * len(self.positive_roots) + self.rank

    @property
    def roots(self) -> tuple[Root, ...]:
        return self.positive_roots + tuple(
            tuple(-c for c in root) for root in self.positive_roots)

    @property
    def simple_roots(self) -> tuple[Root, ...]:
        return tuple(tuple(int(i == j) for j in range(self.rank))
                     for i in range(self.rank))

    @property
    def coroot_matrix(self) -> np.ndarray:
        """Rows are the positive coroots in simple-coroot coordinates."""
        return self._coroot_matrix

    def is_root(self, root: Root) -> bool:
        return root in self.root_lengths

    def is_positive(self, root: Root) -> bool:
        return any(c > 0 for c in root)

    def coroot(self, root: Root) -> Root:
        root = tuple(root)
        if root in self.coroots:
            return self.coroots[root]
        negated = tuple(-c for c in root)
        if negated in self.coroots:
            return tuple(-c for c in self.coroots[negated])
        raise RootSystemError(f"{root} is not a root of {self.type}")

    def fundamental_coords(self, root: Root) -> Weight:
        """The root as a weight: its pairings with the simple coroots."""
        if len(root) != self.rank:
            raise RootSystemError(
                f"root {root} does not belong to {self.type}")
        values = self.cartan_matrix @ np.array(root)
        return Weight(tuple(int(v) for v in values))

    def pairing(self, weight: Weight, root: Root) -> int:
        """<weight, root^v>."""
        if len(weight.coords) != self.rank:
            raise RootSystemError(
                f"weight {weight} does not belong to {self.type}")
        coroot = self.coroot(root)
        return sum(w * c for w, c in zip(weight.coords, coroot))

    def root_pairing(self, beta: Root, alpha: Root) -> int:
        """<beta, alpha^v> for two roots."""
        return self.pairing(self.fundamental_coords(beta), alpha)

    def reflect(self, alpha: Root, beta: Root) -> Root:
        """s_alpha(beta)."""
        k = self.root_pairing(beta, alpha)
        return tuple(b - k * a for a, b in zip(alpha, beta))

    def reflect_weight(self, weight: Weight, index: int) -> Weight:
        """Simple reflection s_i (0-based) applied to a weight."""
        coords = weight.coords
        shift = coords[index]
        column = self.cartan_matrix[:, index]
        return Weight(tuple(c - shift * int(a)
                            for c, a in zip(coords, column)))

    def dominant_conjugate(self, weight: Weight) -> Weight:
        while True:
            negative = [i for i, c in enumerate(weight.coords) if c < 0]
            if not negative:
                return weight
            weight = self.reflect_weight(weight, negative[0])

    def inner_product_scaled(self, first: Weight, second: Weight) -> int:
        """(first, second) times a fixed positive integer scale."""
        return sum(a * g * b
                   for a, row in zip(first.coords, self._gram)
                   for g, b in zip(row, second.coords))

    def coroot_pairings(self, weight: Weight) -> np.ndarray:
        """<weight, alpha^v> for every positive root, in root order."""
        return self._coroot_matrix @ np.array(weight.coords, dtype=np.int64)

    def to_dict(self) -> dict[str, Any]:
        return {
            'type': str(self.type),
            'rank': self.rank,
            'cartan_matrix': [[int(v) for v in row]
                              for row in self.cartan_matrix],
            'positive_roots': [list(root) for root in self.positive_roots],
        }

    @classmethod
    def from_dict(cls, document: dict[str, Any]) -> RootSystem:
        """Rebuild from a JSON document, checking it against the closure."""
        try:
            simple_type = SimpleType.parse(document['type'])
            rs = build_root_system(simple_type)
        except KeyError as e:
            logging.error('Root system document lacks key: %s', e)
            raise RootSystemError(f"missing key {e}") from e
        if rs.to_dict() != {
            'type': document['type'],
            'rank': document.get('rank'),
            'cartan_matrix': document.get('cartan_matrix'),
            'positive_roots': document.get('positive_roots'),
        }:
            raise RootSystemError(
                f"document does not match the root system of {simple_type}")
        return rs

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=4)

    @classmethod
    def from_json(cls, text: str) -> RootSystem:
        try:
            document = json.loads(text)
        except json.JSONDecodeError as e:
            raise RootSystemError(f"invalid root system JSON: {e}") from e
        if not isinstance(document, dict):
            raise RootSystemError("root system JSON must be an object")
        return cls.from_dict(document)


def _fundamental_weights(
        matrix: np.ndarray) -> tuple[tuple[Fraction, ...], ...]:
    inverse = sympy.Matrix(matrix.tolist()).T.inv()
    return tuple(tuple(Fraction(int(entry.p), int(entry.q))
                       for entry in inverse.row(i))
                 for i in range(matrix.shape[0]))


def _scaled_gram(fundamental: tuple[tuple[Fraction, ...], ...],
                 lengths: tuple[Fraction, ...]) -> tuple[tuple[int, ...], ...]:
    # (pi_i, pi_j) = M[j][i] * |alpha_i|^2 / 2
    n = len(lengths)
    gram = [[fundamental[j][i] * lengths[i] / 2 for j in range(n)]
            for i in range(n)]
    scale = math.lcm(*(entry.denominator for row in gram for entry in row))
    return tuple(tuple(int(entry * scale) for entry in row) for row in gram)


@lru_cache(maxsize=None)
def build_root_system(simple_type: SimpleType) -> RootSystem:
    """Construct the root system of ``simple_type`` by root-string closure."""
    matrix = cartan_matrix(simple_type)
    positive = positive_roots_from_cartan(matrix)
    lengths = simple_root_lengths(matrix)

    root_lengths: dict[Root, Fraction] = {}
    coroots: dict[Root, Root] = {}
    for root in positive:
        length = _root_length(root, matrix, lengths)
        coroot = []
        for c, d in zip(root, lengths):
            value = c * d / length
            if value.denominator != 1:
                raise RootSystemError(
                    f"non-integral coroot for {root} in {simple_type}")
            coroot.append(int(value))
        root_lengths[root] = length
        root_lengths[tuple(-c for c in root)] = length
        coroots[root] = tuple(coroot)

    coroot_matrix = np.array([coroots[root] for root in positive],
                             dtype=np.int64)
    coroot_matrix.setflags(write=False)
    two_rho_check = tuple(int(v) for v in coroot_matrix.sum(axis=0))
    fundamental = _fundamental_weights(matrix)

    rs = RootSystem(
        type=simple_type,
        cartan_matrix=matrix,
        positive_roots=positive,
        simple_lengths=lengths,
        root_lengths=root_lengths,
        coroots=coroots,
        fundamental_weights=fundamental,
        highest_root=positive[-1],
        sum_positive_coroots=two_rho_check,
        _coroot_matrix=coroot_matrix,
        _gram=_scaled_gram(fundamental, lengths),
    )
    logging.debug('Built root system %s with %d positive roots',
                  simple_type, len(positive))
    return rs


def pairing(rs: RootSystem, weight: Weight, root: Root) -> int:
    """<weight, root^v> in the root system ``rs``."""
    return rs.pairing(weight, root)
