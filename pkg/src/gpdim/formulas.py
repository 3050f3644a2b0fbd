"""Closed-form distances in P(n, 3) for n = 6k + r, r in {2, 3, 4, 5}.

Every formula is a piecewise expression in the cyclic subscript gap
L = min(|i-j|, n-|i-j|) and the helper gap_cost(L) = L - 2*floor(L/3),
which counts the cheapest mix of 3-steps and 1-steps spanning L. The
formulas are stated for k >= 6; smaller k is refused unless unchecked=True,
and verify_formulas() cross-validates everything against the BFS oracle.

Residues 0 and 1 mod 6 have no closed form here; callers fall back to BFS.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .graph import (
    INNER,
    OUTER,
    PROV_CLOSED_FORM,
    DistanceOracle,
    GPParams,
    VertexRef,
    bfs_oracle,
)

FORMULA_RESIDUES = (2, 3, 4, 5)
MIN_K = 6


class FormulaDomainError(ValueError):
    """n outside the residue classes or below the k >= 6 threshold."""


def gap_cost(L: int) -> int:
    """L - 2*floor(L/3); writing L = 3m + i with i in {0,1,2} this is m + i."""
    return L - 2 * (L // 3)


def cyclic_gap(i: int, j: int, n: int) -> int:
    """Cyclic subscript gap min(|i-j|, n-|i-j|), for subscripts in 1..n."""
    _check_subscript(i, n)
    _check_subscript(j, n)
    d = abs(i - j)
    return min(d, n - d)


def clockwise_distance(i: int, j: int, n: int) -> int:
    """Edges crossed moving clockwise from subscript i to subscript j.

    Depends only on subscripts, so it applies to any mix of outer and inner
    vertices. Equal subscripts give 0 (the unique consistent extension).
    """
    _check_subscript(i, n)
    _check_subscript(j, n)
    return (j - i) % n


def _check_subscript(i: int, n: int) -> None:
    if not 1 <= i <= n:
        raise FormulaDomainError(f"subscript {i} outside 1..{n}")


def split_residue(n: int, unchecked: bool = False) -> tuple[int, int]:
    """Return (k, r) with n = 6k + r, enforcing the formula domain."""
    r = n % 6
    if r not in FORMULA_RESIDUES:
        raise FormulaDomainError(
            f"no closed form for n = {n} (n mod 6 = {r}); use the BFS oracle"
        )
    k = n // 6
    if k < MIN_K and not unchecked:
        raise FormulaDomainError(
            f"closed forms are stated for k >= {MIN_K} (n >= {6 * MIN_K + 2}); "
            f"got n = {n} (k = {k}); pass unchecked=True to compute anyway"
        )
    if k < 1:
        raise FormulaDomainError(f"n = {n} too small even for unchecked mode")
    return k, r


def _dist_outer_outer(L: int, k: int, r: int) -> int:
    if r == 5:
        if L <= 2:
            return L
        if L <= 3 * k + 1:
            return gap_cost(L) + 2
        if L == 3 * k + 2:
            return k + 3
        raise AssertionError(f"gap {L} out of range for n = 6k+5")
    if L <= 2:
        return L
    return gap_cost(L) + 2


def _dist_outer_inner(L: int, k: int, r: int) -> int:
    if r == 5:
        if L <= 3 * k + 1:
            return gap_cost(L) + 1
        if L == 3 * k + 2:
            return k + 2
        raise AssertionError(f"gap {L} out of range for n = 6k+5")
    return gap_cost(L) + 1


def _dist_inner_inner(L: int, k: int, r: int) -> int:
    if L % 3 == 0:
        return gap_cost(L)
    if r == 3:
        return gap_cost(L) + 2
    if r == 4:
        if L == 3 * k + 1:
            return k + 1
        return gap_cost(L) + 2
    if r == 5:
        if L == 3 * k - 1:
            return k + 2
        if L == 3 * k + 2:
            return k + 1
        return gap_cost(L) + 2
    # r == 2
    if L == 3 * k - 1:
        return k + 1
    return gap_cost(L) + 2


def closed_form_distance(
    n: int, a: VertexRef, b: VertexRef, unchecked: bool = False
) -> int:
    """d(a, b) in P(n, 3) by the residue-class formulas."""
    k, r = split_residue(n, unchecked)
    L = cyclic_gap(a.index, b.index, n)
    if a.ring == OUTER and b.ring == OUTER:
        return _dist_outer_outer(L, k, r)
    if a.ring == INNER and b.ring == INNER:
        return _dist_inner_inner(L, k, r)
    return _dist_outer_inner(L, k, r)


def closed_form_oracle(n: int, unchecked: bool = False) -> DistanceOracle:
    """Full (2n, 2n) distance table from the closed forms.

    Built by evaluating the scalar formulas once per distinct gap value and
    broadcasting through a gap-lookup, so the matrix and the scalar function
    cannot drift apart.
    """
    k, r = split_residue(n, unchecked)
    gaps = np.arange(n // 2 + 1)
    uu = np.array([_dist_outer_outer(int(L), k, r) for L in gaps], dtype=np.uint16)
    uv = np.array([_dist_outer_inner(int(L), k, r) for L in gaps], dtype=np.uint16)
    vv = np.array([_dist_inner_inner(int(L), k, r) for L in gaps], dtype=np.uint16)

    idx = np.arange(n)
    diff = np.abs(idx[:, None] - idx[None, :])
    gap = np.minimum(diff, n - diff)
    matrix = np.empty((2 * n, 2 * n), dtype=np.uint16)
    matrix[:n, :n] = uu[gap]
    matrix[:n, n:] = uv[gap]
    matrix[n:, :n] = uv[gap]
    matrix[n:, n:] = vv[gap]
    return DistanceOracle(GPParams(n, 3), matrix, PROV_CLOSED_FORM)


@dataclass(frozen=True)
class FormulaCheck:
    """Outcome of comparing the closed forms against BFS for one n."""

    n: int
    pairs_checked: int
    mismatches: tuple[tuple[str, str, int, int], ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def verify_formulas(ns, unchecked: bool = False) -> list[FormulaCheck]:
    """Compare closed_form_oracle against bfs_all_pairs on all (2n)^2 pairs."""
    results = []
    for n in ns:
        closed = closed_form_oracle(n, unchecked).matrix
        bfs = bfs_oracle(n, 3).matrix
        bad = np.argwhere(closed != bfs)
        mismatches = tuple(
            (
                VertexRef.from_lin(int(i), n).label(),
                VertexRef.from_lin(int(j), n).label(),
                int(closed[i, j]),
                int(bfs[i, j]),
            )
            for i, j in bad
        )
        results.append(FormulaCheck(n, closed.size, mismatches))
    return results
