"""Generalized Petersen graphs P(n, m) and their all-pairs distance tables.

P(n, m) has outer-cycle vertices u_1..u_n, inner vertices v_1..v_n, spokes
u_i v_i, and inner edges v_i v_{i+m}, all subscripts taken modulo n. Legal
parameters are n >= 3 and 1 <= m <= floor((n-1)/2); that range excludes the
multigraph cases and keeps every instance a connected cubic graph.

Matrices use a fixed linearization: outer block at positions 0..n-1, inner
block at n..2n-1, both in subscript order. All public subscripts are 1-based.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import kernels

OUTER = "u"
INNER = "v"

PROV_BFS = "bfs"
PROV_CLOSED_FORM = "closed-form"


class ParameterDomainError(ValueError):
    """(n, m) outside n >= 3, 1 <= m <= floor((n-1)/2)."""


def wrap(i: int, n: int) -> int:
    """Normalize a subscript into 1..n (arithmetic mod n, 0 maps to n)."""
    return (i - 1) % n + 1


@dataclass(frozen=True, order=True)
class VertexRef:
    """A vertex u_i (ring "u") or v_i (ring "v"), subscript 1-based.

    Ordering matches the matrix linearization: all outer vertices before all
    inner ones, each block by subscript.
    """

    ring: str
    index: int

    def __post_init__(self):
        if self.ring not in (OUTER, INNER):
            raise ValueError(f"bad ring {self.ring!r}")
        if self.index < 1:
            raise ValueError(f"subscript must be >= 1, got {self.index}")

    @classmethod
    def u(cls, i: int) -> "VertexRef":
        return cls(OUTER, i)

    @classmethod
    def v(cls, i: int) -> "VertexRef":
        return cls(INNER, i)

    @classmethod
    def parse(cls, text: str) -> "VertexRef":
        ring, idx = text[:1], text[1:]
        if ring not in (OUTER, INNER) or not idx.isdigit():
            raise ValueError(f"cannot parse vertex {text!r}")
        return cls(ring, int(idx))

    @classmethod
    def from_lin(cls, pos: int, n: int) -> "VertexRef":
        if pos < n:
            return cls(OUTER, pos + 1)
        return cls(INNER, pos - n + 1)

    def lin(self, n: int) -> int:
        """Linear matrix position for graphs on n subscripts."""
        if not 1 <= self.index <= n:
            raise ParameterDomainError(f"subscript {self.index} outside 1..{n}")
        return self.index - 1 + (0 if self.ring == OUTER else n)

    def corresponding(self) -> "VertexRef":
        """The spoke partner: u_i for v_i and vice versa."""
        return VertexRef(INNER if self.ring == OUTER else OUTER, self.index)

    def label(self) -> str:
        return f"{self.ring}{self.index}"


@dataclass(frozen=True)
class GPParams:
    """Parameters (n, m) of a generalized Petersen graph."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 3:
            raise ParameterDomainError(f"n must be >= 3, got {self.n}")
        if not 1 <= self.m <= (self.n - 1) // 2:
            raise ParameterDomainError(
                f"m must be in 1..{(self.n - 1) // 2} for n={self.n}, got {self.m}"
            )


@dataclass(frozen=True, eq=False)
class GPInstance:
    """A constructed P(n, m): parameters plus the (2n, 3) adjacency table."""

    params: GPParams
    adjacency: np.ndarray  # int32, row per vertex in linear order

    @property
    def n(self) -> int:
        return self.params.n

    @property
    def num_vertices(self) -> int:
        return 2 * self.params.n

    @property
    def num_edges(self) -> int:
        return 3 * self.params.n

    def neighbors(self, x: VertexRef) -> list[VertexRef]:
        """The three neighbors of x, in linear order."""
        n = self.params.n
        row = sorted(int(p) for p in self.adjacency[x.lin(n)])
        return [VertexRef.from_lin(p, n) for p in row]


def build_graph(params: GPParams) -> GPInstance:
    """Construct P(n, m) with edges u_i u_{i+1}, u_i v_i, v_i v_{i+m}."""
    n, m = params.n, params.m
    idx = np.arange(n, dtype=np.int32)
    adj = np.empty((2 * n, 3), dtype=np.int32)
    adj[:n, 0] = (idx + 1) % n          # u_{i+1}
    adj[:n, 1] = (idx - 1) % n          # u_{i-1}
    adj[:n, 2] = idx + n                # v_i
    adj[n:, 0] = idx                    # u_i
    adj[n:, 1] = (idx + m) % n + n      # v_{i+m}
    adj[n:, 2] = (idx - m) % n + n      # v_{i-m}
    adj.flags.writeable = False
    return GPInstance(params, adj)


@dataclass(frozen=True, eq=False)
class DistanceOracle:
    """All-pairs distance table for one P(n, m), tagged with its provenance.

    The matrix is (2n, 2n) uint16, symmetric with zero diagonal, laid out in
    the linear vertex order. Immutable after construction; safe to share
    across threads.
    """

    params: GPParams
    matrix: np.ndarray
    provenance: str

    def __post_init__(self):
        self.matrix.flags.writeable = False

    @property
    def n(self) -> int:
        return self.params.n

    def distance(self, a: VertexRef, b: VertexRef) -> int:
        n = self.params.n
        return int(self.matrix[a.lin(n), b.lin(n)])

    def diameter(self) -> int:
        return int(self.matrix.max())


def bfs_all_pairs(g: GPInstance) -> DistanceOracle:
    """Ground-truth oracle: one BFS per source over the cubic adjacency."""
    matrix = kernels.bfs_all_pairs(g.adjacency)
    return DistanceOracle(g.params, matrix, PROV_BFS)


def bfs_oracle(n: int, m: int = 3) -> DistanceOracle:
    """Convenience: build P(n, m) and its BFS oracle in one call."""
    return bfs_all_pairs(build_graph(GPParams(n, m)))
