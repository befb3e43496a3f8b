"""Chain graphs from their binary-string representation.

A connected chain graph is built from a string ``0^s1 1^t1 ... 0^sk 1^tk``:
each ``0`` adds an isolated vertex, each ``1`` adds a vertex joined to every
``0``-vertex added so far.  Vertices are numbered in string order.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import combinations, groupby

import numpy as np

__all__ = [
    "ChainSpec",
    "ChainStringError",
    "parse_chain_string",
    "canonical_string",
    "adjacency_matrix",
    "seidel_matrix",
    "neg_one_basis",
    "is_chain_graph",
]


class ChainStringError(ValueError):
    """Raised for text that is not a valid connected chain-graph string."""


@dataclass(frozen=True)
class ChainSpec:
    """Run-length form ``((s_1, t_1), ..., (s_k, t_k))`` of a chain graph."""

    parts: tuple[tuple[int, int], ...]

    def __post_init__(self):
        parts = tuple((int(s), int(t)) for s, t in self.parts)
        if not parts:
            raise ValueError("a chain graph needs at least one (s, t) pair")
        for s, t in parts:
            if s < 1 or t < 1:
                raise ValueError(f"block sizes must be positive, got {(s, t)}")
        object.__setattr__(self, "parts", parts)

    @classmethod
    def from_sizes(cls, sizes) -> "ChainSpec":
        """Build from the flat sequence ``s_1, t_1, ..., s_k, t_k``."""
        sizes = tuple(sizes)
        if len(sizes) % 2:
            raise ValueError("flat size sequence must have even length")
        return cls(tuple(zip(sizes[::2], sizes[1::2])))

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        return sum(s + t for s, t in self.parts)

    @property
    def s(self) -> tuple[int, ...]:
        return tuple(p[0] for p in self.parts)

    @property
    def t(self) -> tuple[int, ...]:
        return tuple(p[1] for p in self.parts)

    @property
    def sizes(self) -> tuple[int, ...]:
        """Cell sizes in block order: ``s_1, t_1, s_2, ..., t_k``."""
        return tuple(x for pair in self.parts for x in pair)

    def __str__(self) -> str:
        return canonical_string(self)


_TOKEN = re.compile(r"([01])\^(\d+)")


def parse_chain_string(text: str) -> ChainSpec:
    """Parse either a raw bit string (``"010011"``) or caret tokens (``"0^2 1^3"``)."""
    stripped = text.strip()
    if not stripped:
        raise ChainStringError("empty chain string")

    if set(stripped) <= {"0", "1"}:
        if len(stripped) < 2:
            raise ChainStringError("a raw bit string needs at least two symbols")
        runs = [(bit, len(list(group))) for bit, group in groupby(stripped)]
    else:
        runs = []
        for token in stripped.split():
            m = _TOKEN.fullmatch(token)
            if m is None:
                raise ChainStringError(f"malformed run token {token!r}")
            bit, exp = m.group(1), int(m.group(2))
            if exp == 0:
                raise ChainStringError(f"zero exponent in token {token!r}")
            if runs and runs[-1][0] == bit:
                raise ChainStringError(
                    f"run tokens must alternate 0 and 1; {token!r} repeats {bit!r}"
                )
            runs.append((bit, exp))

    if runs[0][0] != "0" or runs[-1][0] != "1":
        raise ChainStringError("chain string must start with 0 and end with 1")
    counts = [c for _, c in runs]
    return ChainSpec(tuple(zip(counts[::2], counts[1::2])))


def canonical_string(spec: ChainSpec) -> str:
    return " ".join(f"0^{s} 1^{t}" for s, t in spec.parts)


def _block_labels(spec: ChainSpec) -> list[tuple[int, int]]:
    # (kind, block index) per vertex; kind 0 = isolated-added, 1 = dominating
    labels = []
    for j, (s, t) in enumerate(spec.parts):
        labels.extend([(0, j)] * s)
        labels.extend([(1, j)] * t)
    return labels


def adjacency_matrix(spec: ChainSpec) -> np.ndarray:
    labels = _block_labels(spec)
    n = len(labels)
    zero_block = np.array([j if kind == 0 else -1 for kind, j in labels])
    adj = np.zeros((n, n), dtype=np.int64)
    for v, (kind, j) in enumerate(labels):
        if kind == 1:
            # dominates every 0-vertex from blocks s_1..s_j
            nbrs = (zero_block >= 0) & (zero_block <= j)
            adj[v, nbrs] = 1
            adj[nbrs, v] = 1
    return adj


def seidel_matrix(spec: ChainSpec) -> np.ndarray:
    adj = adjacency_matrix(spec)
    n = adj.shape[0]
    return np.ones((n, n), dtype=np.int64) - np.eye(n, dtype=np.int64) - 2 * adj


def _helmert_rows(size: int) -> list[list[int]]:
    # e_1 + ... + e_j - j e_{j+1}, j = 1..size-1
    return [[1] * j + [-j] + [0] * (size - j - 1) for j in range(1, size)]


def neg_one_basis(spec: ChainSpec) -> list[tuple[int, ...]]:
    """Orthogonal integer eigenvectors of the Seidel matrix for eigenvalue -1.

    Each block of size ``m >= 2`` contributes ``m - 1`` vectors supported on
    that block and summing to zero there, so ``n - 2k`` vectors in total.
    """
    n = spec.n
    vectors = []
    offset = 0
    for size in spec.sizes:
        for row in _helmert_rows(size):
            v = [0] * n
            v[offset:offset + size] = row
            vectors.append(tuple(v))
        offset += size
    return vectors


def _check_simple_graph(adj: np.ndarray) -> np.ndarray:
    adj = np.asarray(adj)
    if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
        raise ValueError("adjacency matrix must be square")
    if not np.isin(adj, (0, 1)).all():
        raise ValueError("adjacency matrix must be 0/1")
    if not (adj == adj.T).all():
        raise ValueError("adjacency matrix must be symmetric")
    if np.diag(adj).any():
        raise ValueError("adjacency matrix must have zero diagonal")
    return adj.astype(bool)


def is_chain_graph(adj) -> bool:
    """True iff no induced C3, 2K2 or C5 occurs; exhaustive, for small graphs only."""
    a = _check_simple_graph(adj)
    n = a.shape[0]
    for u, v, w in combinations(range(n), 3):
        if a[u, v] and a[v, w] and a[u, w]:
            return False
    for quad in combinations(range(n), 4):
        sub = a[np.ix_(quad, quad)]
        # induced 2K2: exactly two edges, every vertex of degree one
        if sub.sum() == 4 and (sub.sum(axis=1) == 1).all():
            return False
    for five in combinations(range(n), 5):
        sub = a[np.ix_(five, five)]
        # 2-regular on five vertices can only be C5
        if (sub.sum(axis=1) == 2).all():
            return False
    return True
