"""Acceptance suite: one test per acceptance criterion, exact tolerances.

Each test prints a single PASS line on success (run with `pytest -s` to see
them); a failing assertion marks the criterion failed. Criteria:

  1 closed-form/BFS equivalence, n in 38..200, residues 2,3,4,5, in <10s
  2 recognizer tables reproduce for k in 6..12, zero mismatches
  3 good lists for u1 and v1 reproduce for k in 6..12, exact set equality
  4 no 3-element resolving set for n in {38,39,40,41,44,45,46,47}
  5 constructive upper bound for n = 6k+2, k in 6..20; dimension 4 all around
  6 every quoted unresolvable pair collides as stated (k = 6)
  7 property suites (gap function, shift lemma, monotonicity, symmetry, P(n,2))
  8 byte-identical reports across worker counts
"""

import json
import os
import random
import subprocess
import sys
import time

from gpdim.cli import main as cli_main
from gpdim.formulas import gap_cost, verify_formulas
from gpdim.graph import VertexRef, wrap
from gpdim.recognition import (
    expected_good_u1,
    expected_good_v1,
    good_set,
    is_good,
    verify_tables,
)
from gpdim.resolving import (
    canonical_set_6k2,
    exhaust_size,
    expected_rep_6k2,
    is_resolving,
    metric_dimension,
    representation,
)
from gpdim.witnesses import verify_witness_pairs

U, V = VertexRef.u, VertexRef.v

LOWER_BOUND_INSTANCES = (38, 39, 40, 41, 44, 45, 46, 47)


def test_criterion_1_closed_form_equivalence():
    ns = [n for n in range(38, 201) if n % 6 in (2, 3, 4, 5)]
    start = time.perf_counter()
    checks = verify_formulas(ns)
    elapsed = time.perf_counter() - start
    bad = [c.n for c in checks if not c.ok]
    assert not bad, f"closed form disagrees with BFS at n = {bad}"
    assert all(c.pairs_checked == (2 * c.n) ** 2 for c in checks)
    assert elapsed < 10.0, f"distance verification took {elapsed:.1f}s"
    print(
        f"PASS criterion 1: closed form == BFS on {len(ns)} graphs, "
        f"{sum(c.pairs_checked for c in checks)} pairs, {elapsed:.2f}s"
    )


def test_criterion_2_table_reproduction(oracle):
    rows = 0
    for k in range(6, 13):
        for r in (2, 3, 4, 5):
            n = 6 * k + r
            check = verify_tables(oracle(n))
            rows += check.rows_checked
            bad = [m.row.instance_id() for m in check.mismatches]
            assert not bad, f"n={n}: table rows diverge: {bad}"
    print(f"PASS criterion 2: tables reproduce, {rows} row instances, k=6..12")


def test_criterion_3_good_list_reproduction(oracle):
    checked = 0
    for k in range(6, 13):
        for r in (2, 3, 4, 5):
            n = 6 * k + r
            o = oracle(n)
            assert good_set(o, U(1)) == expected_good_u1(n), f"u1 list, n={n}"
            assert good_set(o, V(1)) == expected_good_v1(n), f"v1 list, n={n}"
            checked += 2
    print(f"PASS criterion 3: {checked} good lists match exactly, k=6..12")


def test_criterion_4_lower_bound_theorems(oracle):
    for n in LOWER_BOUND_INSTANCES:
        start = time.perf_counter()
        verdict = exhaust_size(oracle(n), 3, use_symmetry=True)
        elapsed = time.perf_counter() - start
        assert verdict.witness is None, f"n={n}: unexpected 3-set {verdict.witness}"
        assert elapsed < 2.0, f"n={n}: symmetric search took {elapsed:.2f}s"
        start = time.perf_counter()
        full = exhaust_size(oracle(n), 3, use_symmetry=False)
        elapsed = time.perf_counter() - start
        assert full.witness is None
        assert full.candidates_checked > verdict.candidates_checked
        assert elapsed < 30.0, f"n={n}: full search took {elapsed:.2f}s"
    print(
        "PASS criterion 4: no 3-element resolving set for n in "
        f"{LOWER_BOUND_INSTANCES}"
    )


def test_criterion_5_upper_bound(oracle, tmp_path):
    for k in range(6, 21):
        n = 6 * k + 2
        o = oracle(n)
        W = canonical_set_6k2(k)
        assert is_resolving(o, W) is True, f"k={k}: canonical set not resolving"
        reps = set()
        for pos in range(2 * n):
            x = VertexRef.from_lin(pos, n)
            r = representation(o, x, W)
            assert r == expected_rep_6k2(x, k), f"k={k}: family mismatch at {x.label()}"
            reps.add(r)
        assert len(reps) == 2 * n, f"k={k}: representations not pairwise distinct"
    for n in (38, 44):
        assert metric_dimension(oracle(n)).dimension == 4
        out = tmp_path / f"dim{n}.jsonl"
        assert cli_main(["dim", "--n", str(n), "--format", "jsonl",
                         "--out", str(out)]) == 0
        (record,) = [json.loads(line) for line in out.read_text().splitlines()]
        assert record["dimension"] == 4
    for n in (39, 40, 41, 45, 46, 47):
        result = metric_dimension(oracle(n))
        assert result.dimension == 4, f"n={n}: searched dimension {result.dimension}"
        assert is_resolving(oracle(n), result.witness) is True
    print(
        "PASS criterion 5: canonical 4-set resolves for k=6..20; "
        "dim=4 at n=38,44 and by search for residues 3,4,5"
    )


def test_criterion_6_proof_witness_pairs(oracle):
    totals = {}
    for n in (39, 40, 41):
        check = verify_witness_pairs(oracle(n))
        failures = [r.claim.claim_id + ": " + r.detail for r in check.failures]
        assert not failures, f"n={n}: {failures}"
        totals[n] = len(check.results)
    assert totals == {39: 9, 40: 22, 41: 36}
    print(
        "PASS criterion 6: all quoted unresolvable pairs collide "
        f"({sum(totals.values())} claims at k=6)"
    )


def test_criterion_7_property_suites(oracle):
    # Gap-function growth with slack two, exhaustive on 0..400.
    values = [gap_cost(L) for L in range(401)]
    for L2 in range(399):
        assert min(values[L2 + 2 :]) >= values[L2]
    assert gap_cost(3) < gap_cost(2)  # not monotone

    # Shift lemma: 5000 random samples per residue class.
    for n in (38, 39, 40, 41):
        o = oracle(n)
        rng = random.Random(16180 + n)
        for _ in range(5000):
            i = rng.randrange(1, n)
            j = rng.randrange(1, n + 1)
            if is_good(o, wrap(j - i, n), U(1)):
                assert is_good(o, j, U(wrap(1 + i, n))), f"lemma fails n={n} i={i} j={j}"

    # Superset monotonicity: 200 random samples per graph.
    rng = random.Random(31415)
    for n in (38, 39):
        o = oracle(n)
        base = list(exhaust_size(o, 4).witness)
        for _ in range(200):
            extra = [
                VertexRef.from_lin(p, n)
                for p in rng.sample(range(2 * n), rng.randint(1, 4))
            ]
            W = base + [x for x in extra if x not in base]
            assert is_resolving(o, W) is True

    # Symmetry-reduction soundness: identical verdicts with and without.
    for n in (38, 39):
        o = oracle(n)
        assert (
            exhaust_size(o, 3, use_symmetry=True).found
            == exhaust_size(o, 3, use_symmetry=False).found
        )

    # Cross-check against the published P(n,2) dimension.
    assert metric_dimension(oracle(10, 2)).dimension == 3
    assert metric_dimension(oracle(11, 2)).dimension == 3
    print("PASS criterion 7: property suites (gap function, shift lemma, "
          "monotonicity, symmetry soundness, P(n,2) cross-check)")


def test_criterion_8_deterministic_reports(tmp_path):
    outputs = {}
    for workers in ("1", "4"):
        env = dict(os.environ, GPDIM_WORKERS=workers)
        proc = subprocess.run(
            [sys.executable, "-m", "gpdim.cli", "verify", "lower",
             "--range", "38:41", "--format", "jsonl"],
            capture_output=True,
            env=env,
            check=True,
        )
        outputs[workers] = proc.stdout
    assert outputs["1"] == outputs["4"], "reports differ across worker counts"
    assert b'"found": 0' in outputs["1"]
    print("PASS criterion 8: byte-identical reports for 1 and 4 workers")
