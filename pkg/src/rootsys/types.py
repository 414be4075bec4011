from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from src.exceptions import RepresentationError, RootSystemError

Root = tuple[int, ...]

CONVENTION_NOTE = (
    "Bourbaki node numbering for all types except E7, numbered along the "
    "chain 1-2-3-4-5-6 with node 7 attached to node 4 (pi_1 is the "
    "56-dimensional weight); weights are given in fundamental-weight "
    "coordinates, roots in simple-root coordinates, long roots have "
    "squared length 2."
)


class Family(str, Enum):
    A = 'A'
    B = 'B'
    C = 'C'
    D = 'D'
    E = 'E'
    F = 'F'
    G = 'G'


_TYPE_PATTERN = re.compile(r'^\s*([A-Ga-g])\s*_?\s*(\d+)\s*$')


@dataclass(frozen=True, order=True)
class SimpleType:
    """A complex simple Lie algebra named by its Cartan type."""

    family: Family
    rank: int

    def __post_init__(self) -> None:
        object.__setattr__(self, 'family', Family(self.family))
        if not isinstance(self.rank, int) or isinstance(self.rank, bool):
            raise RootSystemError(
                f"rank must be an integer, got {self.rank!r}")
        family, rank = self.family, self.rank
        if family == Family.A and rank < 1:
            raise RootSystemError("for A[n], 'n' must be at least 1")
        if family == Family.B and rank < 2:
            raise RootSystemError("for B[n], 'n' must be at least 2")
        if family == Family.C and rank < 2:
            raise RootSystemError("for C[n], 'n' must be at least 2")
        if family == Family.D and rank < 3:
            raise RootSystemError("for D[n], 'n' must be at least 3")
        if family == Family.E and rank not in (6, 7, 8):
            raise RootSystemError("for E[n], 'n' must equal 6, 7 or 8")
        if family == Family.F and rank != 4:
            raise RootSystemError("for F[n], 'n' must equal 4")
        if family == Family.G and rank != 2:
            raise RootSystemError("for G[n], 'n' must equal 2")

    @classmethod
    def parse(cls, text: str) -> SimpleType:
        match = _TYPE_PATTERN.match(text)
        if match is None:
            raise RootSystemError(f"cannot parse Cartan type {text!r}")
        return cls(Family(match.group(1).upper()), int(match.group(2)))

    def __str__(self) -> str:
        return f"{self.family.value}{self.rank}"

    @property
    def is_exceptional(self) -> bool:
        return self.family in (Family.E, Family.F, Family.G)

    @property
    def dimension(self) -> int:
        """Closed-form dimension of the algebra, independent of root data."""
        n = self.rank
        if self.family == Family.A:
            return n * (n + 2)
        if self.family in (Family.B, Family.C):
            return n * (2 * n + 1)
        if self.family == Family.D:
            return n * (2 * n - 1)
        return {6: 78, 7: 133, 8: 248, 4: 52, 2: 14}[n]

    def canonical(self) -> SimpleType:
        """Representative of the isomorphism class (B2 -> C2, D3 -> A3)."""
        if self.family == Family.B and self.rank == 2:
            return SimpleType(Family.C, 2)
        if self.family == Family.D and self.rank == 3:
            return SimpleType(Family.A, 3)
        return self


def types_to_str(types: Iterable[SimpleType]) -> str:
    names = [str(t) for t in types]
    return 'x'.join(names) if names else '{e}'


@dataclass(frozen=True, order=True)
class Weight:
    """Integral weight in fundamental-weight coordinates."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        try:
            coords = tuple(int(c) for c in self.coords)
        except (TypeError, ValueError) as e:
            raise RepresentationError(f"invalid weight {self.coords!r}") from e
        object.__setattr__(self, 'coords', coords)

    @classmethod
    def parse(cls, text: str) -> Weight:
        parts = [p.strip() for p in text.split(',')]
        if not parts or any(not re.fullmatch(r'-?\d+', p) for p in parts):
            raise RepresentationError(f"cannot parse weight {text!r}")
        return cls(tuple(int(p) for p in parts))

    @classmethod
    def zero(cls, rank: int) -> Weight:
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, index: int, rank: int, multiple: int = 1) -> Weight:
        """multiple * pi_index, with 1-based node numbering."""
        if not 1 <= index <= rank:
            raise RepresentationError(
                f"fundamental weight pi_{index} does not exist in rank {rank}")
        return cls(tuple(multiple if i == index - 1 else 0
                         for i in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.coords)

    @property
    def is_dominant(self) -> bool:
        return all(c >= 0 for c in self.coords)

    @property
    def is_zero(self) -> bool:
        return not any(self.coords)

    def _check(self, other: Weight) -> None:
        if len(other.coords) != len(self.coords):
            raise RootSystemError(
                f"weights {self} and {other} live in different ranks")

    def __add__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Weight) -> Weight:
        self._check(other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __neg__(self) -> Weight:
        return Weight(tuple(-c for c in self.coords))

    def scale(self, factor: int) -> Weight:
        return Weight(tuple(factor * c for c in self.coords))

    def permute(self, permutation: tuple[int, ...]) -> Weight:
        """Relabel nodes: coordinate i moves to position permutation[i]."""
        coords = [0] * len(self.coords)
        for source, target in enumerate(permutation):
            coords[target] = self.coords[source]
        return Weight(tuple(coords))

    def __str__(self) -> str:
        return ','.join(str(c) for c in self.coords)
