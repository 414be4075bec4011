"""Cartan matrices of the simple Lie algebras.

Entry ``[i][j]`` is the pairing of the simple root ``j`` with the simple
coroot ``i``. Nodes follow Bourbaki, except for E7 (see CONVENTION_NOTE).
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

import numpy as np

from src.rootsys.types import Family, SimpleType


def _chain(n: int) -> np.ndarray:
    matrix = 2 * np.eye(n, dtype=np.int64)
    for i in range(n - 1):
        matrix[i, i + 1] = matrix[i + 1, i] = -1
    return matrix


def _fill_a(n: int) -> np.ndarray:
    return _chain(n)


def _fill_b(n: int) -> np.ndarray:
    matrix = _chain(n)
    matrix[n - 1, n - 2] = -2
    return matrix


def _fill_c(n: int) -> np.ndarray:
    matrix = _chain(n)
    matrix[n - 2, n - 1] = -2
    return matrix


def _fill_d(n: int) -> np.ndarray:
    matrix = _chain(n)
    matrix[n - 2, n - 1] = matrix[n - 1, n - 2] = 0
    matrix[n - 3, n - 1] = matrix[n - 1, n - 3] = -1
    return matrix


def _fill_e(n: int) -> np.ndarray:
    matrix = 2 * np.eye(n, dtype=np.int64)
    if n == 7:
        # chain 1-2-3-4-5-6, node 7 on node 4
        edges = [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (3, 6)]
    else:
        # Bourbaki: chain 1-3-4-5-6(-7-8), node 2 on node 4
        edges = [(0, 2), (1, 3)] + [(i, i + 1) for i in range(2, n - 1)]
    for i, j in edges:
        matrix[i, j] = matrix[j, i] = -1
    return matrix


def _fill_f(n: int) -> np.ndarray:
    matrix = _chain(4)
    matrix[2, 1] = -2
    return matrix


def _fill_g(n: int) -> np.ndarray:
    return np.array([[2, -3], [-1, 2]], dtype=np.int64)


_FILLERS = {
    Family.A: _fill_a,
    Family.B: _fill_b,
    Family.C: _fill_c,
    Family.D: _fill_d,
    Family.E: _fill_e,
    Family.F: _fill_f,
    Family.G: _fill_g,
}


@lru_cache(maxsize=None)
def cartan_matrix(simple_type: SimpleType) -> np.ndarray:
    """Integer Cartan matrix of ``simple_type`` (read-only array)."""
    matrix = _FILLERS[simple_type.family](simple_type.rank)
    matrix.setflags(write=False)
    return matrix


def simple_root_lengths(matrix: np.ndarray) -> tuple[Fraction, ...]:
    """Squared lengths of the simple roots, the longest normalized to 2.

    Works component by component, so it also serves Cartan matrices of
    semisimple sub-root-systems.
    """
    n = matrix.shape[0]
    lengths: list[Fraction | None] = [None] * n
    for start in range(n):
        if lengths[start] is not None:
            continue
        lengths[start] = Fraction(1)
        component = [start]
        stack = [start]
        while stack:
            i = stack.pop()
            for j in range(n):
                if j != i and matrix[i, j] != 0 and lengths[j] is None:
                    lengths[j] = lengths[i] * Fraction(
                        int(matrix[i, j]), int(matrix[j, i]))
                    component.append(j)
                    stack.append(j)
        longest = max(lengths[k] for k in component)
        for k in component:
            lengths[k] = 2 * lengths[k] / longest
    return tuple(lengths)
