"""Catalog of the unresolvable-pair witnesses quoted in the lower-bound
case analyses, and a checker that replays them against a distance oracle.

Each claim names a three-landmark set that fails to resolve the graph. Most
claims also name the specific colliding pair, and some print the shared
representation; the checker asserts exactly what is claimed:

  * the landmark set is not resolving,
  * the named pair (if any) has identical representations,
  * the printed representation value (if any) matches.

Claims exist for n mod 6 in {3, 4, 5}; the n mod 6 = 2 analysis derives its
contradictions from recognition counts alone and names no pairs.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .formulas import split_residue
from .graph import DistanceOracle, VertexRef, wrap
from .resolving import is_resolving, representation


@dataclass(frozen=True)
class PairClaim:
    """One quoted failure: a landmark set plus, optionally, its bad pair."""

    claim_id: str
    landmarks: tuple[VertexRef, ...]
    pair: tuple[VertexRef, VertexRef] | None = None
    printed_rep: tuple[int, ...] | None = None


@dataclass(frozen=True)
class ClaimResult:
    claim: PairClaim
    ok: bool
    detail: str


@dataclass(frozen=True)
class WitnessCheck:
    n: int
    results: tuple[ClaimResult, ...] = field(default_factory=tuple)

    @property
    def ok(self) -> bool:
        return all(r.ok for r in self.results)

    @property
    def failures(self) -> tuple[ClaimResult, ...]:
        return tuple(r for r in self.results if not r.ok)


def _set_label(landmarks) -> str:
    return "{" + ",".join(w.label() for w in landmarks) + "}"


def _claims_mod3(k: int, n: int) -> list[PairClaim]:
    U = VertexRef.u

    def mk(tag, subs, pair=None):
        lms = tuple(U(wrap(s, n)) for s in subs)
        pr = tuple(U(wrap(p, n)) for p in pair) if pair else None
        return PairClaim(f"mod3/{tag}:{_set_label(lms)}", lms, pr)

    # Three displayed batches of candidate sets; every one must fail. The
    # analysis names colliding pairs for two of them.
    return [
        mk("display1", (1, 2, 3), pair=(3 * k + 2, 3 * k + 5)),
        mk("display1", (1, 2, 6 * k + 3)),
        mk("display1", (1, 5, 3), pair=(3 * k + 1, 3 * k + 8)),
        mk("display2", (1, 6 * k + 2, 3)),
        mk("display2", (1, 6 * k + 2, 6 * k)),
        mk("display2", (1, 6 * k + 2, 6 * k + 3)),
        mk("display3", (1, 6 * k + 2, 3)),
        mk("display3", (1, 2, 3)),
        mk("display3", (1, 5, 3)),
    ]


def _claims_mod4(k: int, n: int) -> list[PairClaim]:
    U, V = VertexRef.u, VertexRef.v

    def claim(tag, lms, pair, rep=None):
        return PairClaim(f"mod4/{tag}:{_set_label(lms)}", tuple(lms), pair, rep)

    claims = [
        claim(
            "case1",
            (U(1), U(3 * k + 1), U(6 * k + 4)),
            (U(3 * k - 9), U(3 * k + 13)),
        )
    ]
    # Forcing steps: with the middle landmark dropped to the inner cycle,
    # a fixed outer pair collides whatever rings the other two sit on.
    for first in (U(1), V(1)):
        for third in (U(6 * k + 4), V(6 * k + 4)):
            claims.append(
                claim(
                    "case1-inner-mid",
                    (first, V(3 * k - 2), third),
                    (U(3 * k - 1), U(3 * k + 1)),
                )
            )
        for third in (U(6 * k + 1), V(6 * k + 1)):
            claims.append(
                claim(
                    "case1-inner-mid",
                    (first, V(3 * k - 2), third),
                    (U(3 * k), U(3 * k + 2)),
                )
            )
    # Ring-by-ring collisions with printed representations.
    claims += [
        claim(
            "case1-rep",
            (U(1), U(3 * k - 2), U(6 * k + 4)),
            (V(2), V(6 * k + 2)),
            (2, k + 1, 3),
        ),
        claim(
            "case1-rep",
            (U(1), U(3 * k - 2), V(6 * k + 4)),
            (V(2), V(6 * k + 2)),
            (2, k + 1, 4),
        ),
        claim(
            "case1-rep",
            (V(1), U(3 * k - 2), U(6 * k + 4)),
            (V(3 * k - 4), V(3 * k + 4)),
            (k + 1, 3, k + 1),
        ),
        claim(
            "case1-rep",
            (V(1), U(3 * k - 2), V(6 * k + 4)),
            (U(6 * k + 1), U(6 * k + 3)),
            (3, k + 3, 2),
        ),
        claim(
            "case1-rep",
            (U(1), U(3 * k - 2), U(6 * k + 1)),
            (V(6 * k + 2), V(6 * k + 4)),
            (2, k + 1, 2),
        ),
        claim(
            "case1-rep",
            (U(1), U(3 * k - 2), V(6 * k + 1)),
            (V(3 * k - 3), V(3 * k + 1)),
            (k + 1, 2, k),
        ),
        claim(
            "case1-rep",
            (V(1), U(3 * k - 2), U(6 * k + 1)),
            (V(3 * k - 4), V(3 * k + 2)),
            (k + 1, 3, k + 2),
        ),
        claim(
            "case1-rep",
            (V(1), U(3 * k - 2), V(6 * k + 1)),
            (U(6 * k + 2), U(6 * k + 4)),
            (2, k + 2, 2),
        ),
        claim("case4", (U(1), U(2), U(3)), (U(3 * k + 2), U(3 * k + 6))),
        claim(
            "case4-table",
            (U(1), U(3 * k - 1), U(6 * k + 3)),
            (U(3 * k - 9), U(3 * k + 11)),
        ),
        claim(
            "case4-table",
            (U(1), U(3 * k + 2), U(6 * k + 3)),
            (U(3 * k), U(3 * k + 4)),
        ),
        claim(
            "case4-table",
            (U(1), U(3 * k - 1), U(6 * k - 3)),
            (U(3 * k - 3), U(3 * k + 1)),
        ),
        claim(
            "case4-table",
            (U(1), U(3 * k - 1), U(6 * k)),
            (U(3 * k - 3), U(3 * k + 1)),
        ),
    ]
    return claims


def _claims_mod5(k: int, n: int) -> list[PairClaim]:
    U, V = VertexRef.u, VertexRef.v

    def claim(tag, lms, pair):
        return PairClaim(f"mod5/{tag}:{_set_label(lms)}", tuple(lms), pair)

    claims = [
        claim("case3", (U(1), U(2), U(6 * k + 5)), (U(3 * k + 1), U(3 * k + 6))),
        claim("case3", (U(1), V(5), V(6 * k + 2)), (U(3), U(6 * k + 4))),
        claim("case3", (V(1), U(5), U(6 * k + 2)), (V(3), V(6 * k + 4))),
        # Five-row table closing case 3.
        claim("case3-table", (U(1), V(5), U(6 * k + 5)), (V(3 * k + 3), V(3 * k + 4))),
        claim("case3-table", (V(1), U(5), U(6 * k + 5)), (V(3), V(6 * k + 4))),
        claim("case3-table", (U(1), V(5), V(6 * k + 5)), (U(3), U(6 * k + 4))),
        claim("case3-table", (V(1), U(5), V(6 * k + 5)), (U(3 * k + 3), V(3 * k + 7))),
        claim("case3-table", (V(1), V(5), U(6 * k + 5)), (V(3 * k), V(3 * k + 7))),
    ]
    # Case 4 table, first block (third landmark around subscript 6k+2).
    block1 = [
        ((V(1), U(6 * k - 5), U(6 * k + 2)), (V(6 * k - 4), V(6 * k - 2))),
        ((V(1), V(6 * k - 5), U(6 * k + 2)), (U(6 * k - 4), U(6 * k - 2))),
        ((U(1), U(6 * k - 5), V(6 * k + 2)), (V(6 * k), V(6 * k + 4))),
        ((U(1), V(6 * k - 5), V(6 * k + 2)), (U(6 * k - 4), U(6 * k - 2))),
        ((V(1), U(6 * k - 2), U(6 * k + 2)), (V(6 * k - 1), V(6 * k + 1))),
        ((V(1), V(6 * k - 2), U(6 * k + 2)), (U(6 * k), U(6 * k + 4))),
        ((U(1), U(6 * k - 2), V(6 * k + 2)), (V(6 * k), V(6 * k + 4))),
        ((U(1), V(6 * k - 2), V(6 * k + 2)), (U(6 * k - 1), U(6 * k + 1))),
        ((V(1), U(6 * k + 1), V(6 * k + 2)), (V(3 * k - 4), V(3 * k + 3))),
        ((V(1), U(6 * k + 1), U(6 * k + 2)), (V(3 * k - 4), V(3 * k + 3))),
        ((V(1), V(6 * k + 1), U(6 * k + 2)), (U(6 * k), U(6 * k + 4))),
        ((V(1), V(6 * k + 1), V(6 * k + 2)), (U(6 * k + 3), U(6 * k + 5))),
        ((U(1), U(6 * k + 1), V(6 * k + 2)), (V(6 * k), V(6 * k + 4))),
        ((U(1), U(6 * k + 1), U(6 * k + 2)), (V(6 * k + 3), V(6 * k + 5))),
        ((U(1), V(6 * k + 1), U(6 * k + 2)), (V(6 * k + 3), V(6 * k + 5))),
        ((U(1), V(6 * k + 1), V(6 * k + 2)), (U(3 * k - 1), V(3 * k + 3))),
    ]
    # Case 4 table, second block (third landmark around subscript 6k+5).
    block2 = [
        ((U(1), U(6 * k - 2), V(6 * k + 5)), (V(6 * k - 10), U(6 * k - 7))),
        ((U(1), V(6 * k - 2), V(6 * k + 5)), (V(6 * k), V(5))),
        ((U(1), V(6 * k - 2), U(6 * k + 5)), (U(6 * k - 1), U(6 * k + 1))),
        ((V(1), V(6 * k - 2), U(6 * k + 5)), (U(6 * k + 3), U(2))),
        ((U(1), U(6 * k + 1), U(6 * k + 5)), (V(6 * k + 3), V(2))),
        ((U(1), U(6 * k + 1), V(6 * k + 5)), (V(6 * k + 3), V(2))),
        ((V(1), U(6 * k + 1), V(6 * k + 5)), (U(3 * k + 3), V(3 * k - 1))),
        ((U(1), V(6 * k + 1), U(6 * k + 5)), (V(6 * k), V(5))),
        ((U(1), V(6 * k + 1), V(6 * k + 5)), (V(6 * k), V(5))),
        ((V(1), V(6 * k + 1), U(6 * k + 5)), (U(6 * k + 3), U(2))),
        ((V(1), V(6 * k + 1), V(6 * k + 5)), (U(6 * k + 3), U(2))),
        ((V(1), U(6 * k + 1), U(6 * k + 5)), (V(6 * k + 2), V(6 * k + 4))),
    ]
    for lms, pair in block1:
        claims.append(claim("case4-table1", lms, pair))
    for lms, pair in block2:
        claims.append(claim("case4-table2", lms, pair))
    return claims


def witness_claims(n: int, unchecked: bool = False) -> list[PairClaim]:
    """All quoted unresolvable-pair claims for this n (may be empty)."""
    k, r = split_residue(n, unchecked)
    if r == 3:
        return _claims_mod3(k, n)
    if r == 4:
        return _claims_mod4(k, n)
    if r == 5:
        return _claims_mod5(k, n)
    return []


def verify_witness_pairs(oracle: DistanceOracle, unchecked: bool = False) -> WitnessCheck:
    """Replay every quoted claim for oracle's n against computed distances."""
    results = []
    for claim in witness_claims(oracle.n, unchecked):
        resolved = is_resolving(oracle, claim.landmarks)
        if resolved is True:
            results.append(
                ClaimResult(claim, False, "set unexpectedly resolves the graph")
            )
            continue
        if claim.pair is None:
            results.append(ClaimResult(claim, True, "fails to resolve, as claimed"))
            continue
        ra = representation(oracle, claim.pair[0], claim.landmarks)
        rb = representation(oracle, claim.pair[1], claim.landmarks)
        if ra != rb:
            results.append(
                ClaimResult(
                    claim,
                    False,
                    f"named pair has distinct representations {ra} vs {rb}",
                )
            )
            continue
        if claim.printed_rep is not None and ra != claim.printed_rep:
            results.append(
                ClaimResult(
                    claim,
                    False,
                    f"pair collides but at {ra}, printed {claim.printed_rep}",
                )
            )
            continue
        results.append(ClaimResult(claim, True, f"pair collides at {ra}"))
    return WitnessCheck(oracle.n, tuple(results))
