"""Equitable partition by string blocks and the induced quotient of the Seidel matrix."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .chain import ChainSpec

__all__ = [
    "TraceCheck",
    "equitable_partition",
    "quotient_matrix",
    "characteristic_matrix",
    "symmetrized_quotient",
    "verify_trace_identities",
    "cell_sign",
]


def equitable_partition(spec: ChainSpec) -> list[tuple[int, ...]]:
    """Cells ``C_1..C_2k`` as 0-based vertex index tuples, in block order."""
    cells = []
    start = 0
    for size in spec.sizes:
        cells.append(tuple(range(start, start + size)))
        start += size
    return cells


def cell_sign(a: int, b: int) -> int:
    """Seidel entry between distinct vertices of cells ``a`` and ``b`` (0-based).

    Even cells hold 0-vertices of block ``a // 2``, odd cells 1-vertices.
    A 0-vertex of block i and a 1-vertex of block j are adjacent iff j >= i.
    """
    if a % 2 == b % 2:
        return 1
    zero, one = (a, b) if a % 2 == 0 else (b, a)
    return -1 if one // 2 >= zero // 2 else 1


def quotient_matrix(spec: ChainSpec) -> np.ndarray:
    sizes = spec.sizes
    m = len(sizes)
    q = np.empty((m, m), dtype=np.int64)
    for a in range(m):
        for b in range(m):
            q[a, b] = sizes[a] - 1 if a == b else cell_sign(a, b) * sizes[b]
    return q


def characteristic_matrix(spec: ChainSpec) -> np.ndarray:
    p = np.zeros((spec.n, 2 * spec.k), dtype=np.int64)
    for j, cell in enumerate(equitable_partition(spec)):
        p[list(cell), j] = 1
    return p


def symmetrized_quotient(spec: ChainSpec) -> np.ndarray:
    """``D^(1/2) Q D^(-1/2)`` with ``D`` the diagonal of cell sizes.

    Off-diagonal entries are built as ``sign * sqrt(d_a * d_b)`` so the result
    is exactly symmetric rather than symmetric up to rounding.
    """
    sizes = spec.sizes
    m = len(sizes)
    out = np.empty((m, m), dtype=float)
    for a in range(m):
        for b in range(m):
            if a == b:
                out[a, b] = sizes[a] - 1
            else:
                out[a, b] = cell_sign(a, b) * math.sqrt(sizes[a] * sizes[b])
    return out


@dataclass(frozen=True)
class TraceCheck:
    trace: int
    trace_sq: int
    expected_trace: int
    expected_trace_sq: int

    @property
    def ok(self) -> bool:
        return self.trace == self.expected_trace and self.trace_sq == self.expected_trace_sq


def verify_trace_identities(spec: ChainSpec) -> TraceCheck:
    q = [[int(x) for x in row] for row in quotient_matrix(spec)]
    m = len(q)
    trace = sum(q[i][i] for i in range(m))
    # trace(Q^2) = sum_ij q_ij q_ji, exact in Python ints
    trace_sq = sum(q[i][j] * q[j][i] for i in range(m) for j in range(m))
    n, k = spec.n, spec.k
    return TraceCheck(trace, trace_sq, n - 2 * k, n * n - 2 * n + 2 * k)
