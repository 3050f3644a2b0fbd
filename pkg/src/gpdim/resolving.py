"""Resolving sets, exhaustive metric-dimension search, and the constructive
four-landmark set for n = 6k + 2.

The search enumerates candidate landmark sets in lexicographic order over
the linear vertex layout and asks the scan kernel for the first candidate
whose metric representations are pairwise distinct. Rotational symmetry
optionally restricts enumeration to sets containing subscript 1 (u_1, or
v_1 for all-inner sets); rotation preserves rings, so this loses nothing.

Worker parallelism splits the candidate stream into contiguous batches and
consumes results strictly in stream order, so verdicts, witnesses, and
counts are identical for every worker count.
"""

from __future__ import annotations

import itertools
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from typing import Iterator, Sequence

import numpy as np

from . import kernels
from .formulas import split_residue, FormulaDomainError
from .graph import DistanceOracle, VertexRef

BATCH_SIZE = 8192
DEFAULT_MAX_SIZE = 6
WORKERS_ENV = "GPDIM_WORKERS"


def worker_count() -> int:
    """Worker count from GPDIM_WORKERS, defaulting to available parallelism."""
    raw = os.environ.get(WORKERS_ENV, "")
    if raw.strip():
        count = int(raw)
        if count < 1:
            raise ValueError(f"{WORKERS_ENV} must be >= 1, got {count}")
        return count
    return os.cpu_count() or 1


def representation(
    oracle: DistanceOracle, z: VertexRef, landmarks: Sequence[VertexRef]
) -> tuple[int, ...]:
    """r(z|W): distances from z to each landmark, in landmark order."""
    return tuple(oracle.distance(z, w) for w in landmarks)


def is_resolving(oracle: DistanceOracle, landmarks: Sequence[VertexRef]):
    """True when all 2n representations are distinct; otherwise the
    lexicographically smallest colliding vertex pair (a, b), a < b."""
    n = oracle.n
    cols = oracle.matrix[:, [w.lin(n) for w in landmarks]]
    seen: dict[bytes, int] = {}
    best: tuple[int, int] | None = None
    for pos in range(2 * n):
        key = cols[pos].tobytes()
        if key in seen:
            pair = (seen[key], pos)
            if best is None or pair < best:
                best = pair
        else:
            seen[key] = pos
    if best is None:
        return True
    return (VertexRef.from_lin(best[0], n), VertexRef.from_lin(best[1], n))


def recognizes_all_outer(oracle: DistanceOracle, landmarks: Sequence[VertexRef]):
    """True when every outer subscript is recognized by some landmark;
    otherwise the smallest unrecognized subscript. Necessary for resolving:
    an unrecognized u_i collides with u_{i+2}."""
    n = oracle.n
    recognized = np.zeros(n, dtype=bool)
    for w in landmarks:
        col = oracle.matrix[w.lin(n), :n]
        recognized |= col != np.roll(col, -2)
    missing = np.nonzero(~recognized)[0]
    if missing.size == 0:
        return True
    return int(missing[0]) + 1


@dataclass(frozen=True)
class SizeVerdict:
    """Outcome of exhausting all candidate landmark sets of one size."""

    size: int
    witness: tuple[VertexRef, ...] | None  # None: no resolving set of this size
    candidates_checked: int
    symmetry: bool

    @property
    def found(self) -> bool:
        return self.witness is not None


@dataclass(frozen=True)
class DimensionResult:
    n: int
    m: int
    dimension: int | None  # None when every size up to max_size was exhausted
    witness: tuple[VertexRef, ...] | None
    exhausted: tuple[int, ...]
    symmetry: bool


def _candidate_stream(num_vertices: int, size: int, use_symmetry: bool) -> Iterator[tuple[int, ...]]:
    n = num_vertices // 2
    if not use_symmetry or size > num_vertices - 1:
        yield from itertools.combinations(range(num_vertices), size)
        return
    # Sets with an outer vertex rotate onto u_1; all-inner sets onto v_1.
    for rest in itertools.combinations(range(1, num_vertices), size - 1):
        yield (0, *rest)
    for rest in itertools.combinations(range(n + 1, num_vertices), size - 1):
        yield (n, *rest)


def _batches(stream: Iterator[tuple[int, ...]], size: int) -> Iterator[np.ndarray]:
    while True:
        block = list(itertools.islice(stream, BATCH_SIZE))
        if not block:
            return
        yield np.array(block, dtype=np.int64).reshape(len(block), size)


def _prune_batch(oracle: DistanceOracle, batch: np.ndarray) -> np.ndarray:
    """Keep only candidates that recognize every outer subscript."""
    n = oracle.n
    outer = oracle.matrix[:, :n]
    bad = outer != np.roll(outer, -2, axis=1)  # bad[w, i-1]: w recognizes u_i
    covered = bad[batch[:, 0]]
    for t in range(1, batch.shape[1]):
        covered = covered | bad[batch[:, t]]
    return covered.all(axis=1)


def _scan_batch(matrix: np.ndarray, batch: np.ndarray, keep: np.ndarray | None) -> tuple[int, int]:
    """Scan one batch; return (hit offset in the original batch or -1, batch length)."""
    if keep is None:
        hit = kernels.scan_resolving(matrix, batch)
        return hit, batch.shape[0]
    idx = np.nonzero(keep)[0]
    if idx.size == 0:
        return -1, batch.shape[0]
    hit = kernels.scan_resolving(matrix, np.ascontiguousarray(batch[idx]))
    return (int(idx[hit]) if hit >= 0 else -1), batch.shape[0]


def exhaust_size(
    oracle: DistanceOracle,
    size: int,
    use_symmetry: bool = True,
    workers: int | None = None,
    prune_unrecognized: bool = False,
) -> SizeVerdict:
    """Search every candidate set of the given size for a resolving set.

    Returns the first resolving set in enumeration order, or records that
    none exists. candidates_checked counts enumerated candidates up to and
    including the hit (pruned candidates still count as enumerated).
    """
    if not 1 <= size <= 2 * oracle.n:
        raise ValueError(f"size must be in 1..{2 * oracle.n}, got {size}")
    if workers is None:
        workers = worker_count()
    matrix = oracle.matrix
    if size > 4 and int(matrix.max()) >= 1 << kernels.pack_bits(size):
        raise ValueError("distances too large to pack for this landmark count")

    stream = _candidate_stream(2 * oracle.n, size, use_symmetry)
    checked = 0
    hit_batch: np.ndarray | None = None
    hit_off = -1

    def job(batch: np.ndarray):
        keep = _prune_batch(oracle, batch) if prune_unrecognized else None
        return _scan_batch(matrix, batch, keep)

    batches = _batches(stream, size)
    if workers <= 1:
        for batch in batches:
            off, length = job(batch)
            if off >= 0:
                checked += off + 1
                hit_batch, hit_off = batch, off
                break
            checked += length
    else:
        # Bounded in-order pipeline: results are consumed in submission
        # order, so the outcome never depends on scheduling.
        with ThreadPoolExecutor(max_workers=workers) as pool:
            pending = []
            done = False
            while not done:
                while len(pending) < 2 * workers:
                    batch = next(batches, None)
                    if batch is None:
                        break
                    pending.append((pool.submit(job, batch), batch))
                if not pending:
                    break
                future, batch = pending.pop(0)
                off, length = future.result()
                if off >= 0:
                    checked += off + 1
                    hit_batch, hit_off = batch, off
                    done = True
                else:
                    checked += length

    witness = None
    if hit_batch is not None:
        witness = tuple(
            VertexRef.from_lin(int(p), oracle.n) for p in hit_batch[hit_off]
        )
    return SizeVerdict(size, witness, checked, use_symmetry)


def metric_dimension(
    oracle: DistanceOracle,
    max_size: int = DEFAULT_MAX_SIZE,
    use_symmetry: bool = True,
    workers: int | None = None,
) -> DimensionResult:
    """Smallest landmark-set size that resolves the graph, up to max_size."""
    exhausted: list[int] = []
    for size in range(1, max_size + 1):
        verdict = exhaust_size(oracle, size, use_symmetry, workers)
        if verdict.found:
            return DimensionResult(
                oracle.n,
                oracle.params.m,
                size,
                verdict.witness,
                tuple(exhausted),
                use_symmetry,
            )
        exhausted.append(size)
    return DimensionResult(
        oracle.n, oracle.params.m, None, None, tuple(exhausted), use_symmetry
    )


# ---------------------------------------------------------------------------
# The constructive resolving set for n = 6k + 2 and its published
# representation families.
# ---------------------------------------------------------------------------


def canonical_set_6k2(k: int, unchecked: bool = False) -> tuple[VertexRef, ...]:
    """The four-landmark resolving set (u_1, u_{3k-2}, v_{3k-1}, v_{6k+2})."""
    split_residue(6 * k + 2, unchecked)  # enforces k >= 6 unless unchecked
    return (
        VertexRef.u(1),
        VertexRef.u(3 * k - 2),
        VertexRef.v(3 * k - 1),
        VertexRef.v(6 * k + 2),
    )


def expected_rep_6k2(x: VertexRef, k: int) -> tuple[int, int, int, int]:
    """Published metric representation of x against canonical_set_6k2(k).

    Six piecewise families, one per (ring, subscript mod 3), each split into
    index windows that together cover all 2n vertices of P(6k+2, 3).
    """
    n = 6 * k + 2
    if not 1 <= x.index <= n:
        raise FormulaDomainError(f"subscript {x.index} outside 1..{n}")
    i, rem = divmod(x.index, 3)
    if x.ring == VertexRef.u(1).ring:
        if rem == 0:
            if i == 1:
                return (2, k + 1, k + 1, 2)
            if 2 <= i <= k - 2:
                return (i + 3, k - i + 2, k - i + 2, i + 1)
            if i == k - 1:
                return (k + 2, 1, 3, k)
            if i == k:
                return (k + 3, 2, 2, k + 1)
            if k + 1 <= i <= 2 * k - 1:
                return (2 * k - i + 3, i - k + 4, i - k + 2, 2 * k - i + 3)
            if i == 2 * k:
                return (3, k + 2, k + 2, 3)
        elif rem == 1:
            if i == 0:
                return (0, k + 1, k + 1, 2)
            if 1 <= i <= k - 2:
                return (i + 2, k - i + 1, k - i + 1, i + 2)
            if i == k - 1:
                return (k + 1, 0, 2, k + 1)
            if i == k:
                return (k + 2, 3, 3, k + 2)
            if k + 1 <= i <= 2 * k - 1:
                return (2 * k - i + 4, i - k + 3, i - k + 3, 2 * k - i + 2)
            if i == 2 * k:
                return (2, k + 3, k + 1, 2)
        else:
            if i == 0:
                return (1, k + 2, k, 3)
            if 1 <= i <= k - 3:
                return (i + 3, k - i + 2, k - i, i + 3)
            if i == k - 2:
                return (k + 1, 2, 2, k + 1)
            if i == k - 1:
                return (k + 2, 1, 1, k + 2)
            if i == k:
                return (k + 3, 4, 2, k + 1)
            if k + 1 <= i <= 2 * k - 1:
                return (2 * k - i + 3, i - k + 4, i - k + 2, 2 * k - i + 1)
            if i == 2 * k:
                return (1, k + 2, k + 2, 1)
    else:
        if rem == 0:
            if 1 <= i <= k - 1:
                return (i + 2, k - i + 1, k - i + 3, i)
            if i == k:
                return (k + 2, 3, 3, k)
            if i == k + 1:
                return (k + 1, 4, 4, k + 1)
            if k + 2 <= i <= 2 * k - 1:
                return (2 * k - i + 2, i - k + 3, i - k + 3, 2 * k - i + 4)
            if i == 2 * k:
                return (2, k + 1, k + 3, 4)
        elif rem == 1:
            if 0 <= i <= k - 1:
                return (i + 1, k - i, k - i + 2, i + 3)
            if i == k:
                return (k + 1, 2, 4, k + 3)
            if k + 1 <= i <= 2 * k - 2:
                return (2 * k - i + 3, i - k + 2, i - k + 4, 2 * k - i + 3)
            if i == 2 * k - 1:
                return (4, k + 1, k + 1, 4)
            if i == 2 * k:
                return (3, k + 2, k, 3)
        else:
            if 0 <= i <= k - 2:
                return (i + 2, k - i + 1, k - i - 1, i + 4)
            if i == k - 1:
                return (k + 1, 2, 0, k + 1)
            if i == k:
                return (k + 2, 3, 1, k)
            if k + 1 <= i <= 2 * k - 1:
                return (2 * k - i + 2, i - k + 3, i - k + 1, 2 * k - i)
            if i == 2 * k:
                return (2, k + 1, k + 1, 0)
    raise AssertionError(f"no family window covers {x.label()} for k={k}")
