"""Numpy implementations of the two hot kernels.

These are the import-time fallback for the compiled `_speedups` extension
and the reference its results are tested against. Both backends must return
bit-identical arrays and indices.
"""

from __future__ import annotations

import numpy as np

UNSET = np.uint16(0xFFFF)


def bfs_all_pairs(adj: np.ndarray) -> np.ndarray:
    """Level-synchronous BFS from every source at once.

    adj is (nv, deg) int32; returns (nv, nv) uint16. Unreached pairs keep
    0xFFFF, which never occurs for connected graphs of the sizes used here.
    """
    nv = adj.shape[0]
    dist = np.full((nv, nv), UNSET, dtype=np.uint16)
    np.fill_diagonal(dist, 0)
    reached = np.eye(nv, dtype=bool)
    frontier = np.eye(nv, dtype=bool)
    cols = [np.ascontiguousarray(adj[:, t]) for t in range(adj.shape[1])]
    level = 0
    while frontier.any():
        level += 1
        nxt = frontier[:, cols[0]]
        for c in cols[1:]:
            nxt |= frontier[:, c]
        nxt &= ~reached
        dist[nxt] = level
        reached |= nxt
        frontier = nxt
    return dist


def pack_bits(width: int) -> int:
    """Bits per packed distance coordinate for candidate sets of this width."""
    return 16 if width <= 4 else 10


def scan_resolving(dist: np.ndarray, cands: np.ndarray) -> int:
    """Index of the first candidate row whose 2n packed representations are
    all distinct, or -1 when none is resolving.

    dist is (nv, nv) uint16; cands is (M, s) integer columns into dist.
    Distances must fit pack_bits(s) bits per coordinate (s <= 6).
    """
    if cands.shape[0] == 0:
        return -1
    nv = dist.shape[0]
    s = cands.shape[1]
    bits = pack_bits(s)
    cols = dist[:, cands.reshape(-1)].reshape(nv, cands.shape[0], s)
    codes = np.zeros((nv, cands.shape[0]), dtype=np.uint64)
    for t in range(s):
        codes <<= np.uint64(bits)
        codes |= cols[:, :, t].astype(np.uint64)
    codes.sort(axis=0)
    collides = (codes[1:] == codes[:-1]).any(axis=0)
    hits = np.nonzero(~collides)[0]
    return int(hits[0]) if hits.size else -1
