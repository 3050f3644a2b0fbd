"""Command-line front end.

Commands:
  gpdim dim        exact metric dimension of one P(n, m)
  gpdim verify     replay a verification campaign (distances, tables, lower,
                   upper, good-lists, witness-pairs)
  gpdim report     re-render a saved jsonl report as human/jsonl/csv

Exit codes: 0 all verified/computed, 1 a claim failed verification,
2 usage or parameter-domain error. GPDIM_WORKERS controls search
parallelism; output bytes are identical for every worker count.
"""

from __future__ import annotations

import argparse
import sys
import time
from typing import Callable

from . import __version__
from .formulas import FORMULA_RESIDUES, MIN_K, FormulaDomainError, verify_formulas
from .graph import GPParams, ParameterDomainError, VertexRef, bfs_all_pairs, build_graph
from .recognition import expected_good_u1, expected_good_v1, good_set, verify_tables
from .resolving import (
    DEFAULT_MAX_SIZE,
    canonical_set_6k2,
    exhaust_size,
    expected_rep_6k2,
    is_resolving,
    metric_dimension,
    representation,
)
from .report import (
    FORMATS,
    Report,
    STATUS_COMPUTED,
    STATUS_FAILED,
    STATUS_VERIFIED,
    load_jsonl,
    render,
)
from .witnesses import verify_witness_pairs

VERIFY_KINDS = ("distances", "tables", "lower", "upper", "good-lists", "witness-pairs")

# Default instance selections, matching the published validity envelopes.
DEFAULT_RANGES = {
    "distances": (38, 200),
    "lower": (38, 47),
}
DEFAULT_K_RANGES = {
    "tables": (6, 12),
    "good-lists": (6, 12),
    "witness-pairs": (6, 12),
    "upper": (6, 20),
}


def _parse_range(text: str) -> tuple[int, int]:
    lo, sep, hi = text.partition(":")
    if not sep:
        raise ValueError(f"range must be lo:hi, got {text!r}")
    lo_i, hi_i = int(lo), int(hi)
    if lo_i > hi_i:
        raise ValueError(f"empty range {text!r}")
    return lo_i, hi_i


def _parse_mod6(text: str) -> tuple[int, ...]:
    values = tuple(sorted({int(tok) for tok in text.split(",") if tok.strip()}))
    bad = [v for v in values if v not in FORMULA_RESIDUES]
    if bad or not values:
        raise ValueError(
            f"--mod6 accepts a subset of {','.join(map(str, FORMULA_RESIDUES))}, got {text!r}"
        )
    return values


def _select_n(args, kind: str) -> list[int]:
    """Resolve --n / --range / --k plus --mod6 into a list of n values."""
    residues = args.mod6
    if args.n is not None:
        return [args.n]
    if args.range is not None:
        lo, hi = args.range
        return [n for n in range(lo, hi + 1) if n % 6 in residues]
    if args.k is not None:
        lo, hi = args.k
        return [6 * k + r for k in range(lo, hi + 1) for r in sorted(residues)]
    if kind in DEFAULT_RANGES:
        lo, hi = DEFAULT_RANGES[kind]
        return [n for n in range(lo, hi + 1) if n % 6 in residues]
    lo, hi = DEFAULT_K_RANGES[kind]
    return [6 * k + r for k in range(lo, hi + 1) for r in sorted(residues)]


def _select_k(args) -> list[int]:
    """Instance selection for the upper-bound check (k values, n = 6k+2)."""
    if args.n is not None:
        if args.n % 6 != 2:
            raise FormulaDomainError(
                f"the constructive set exists for n = 6k+2 only, got n={args.n}"
            )
        return [args.n // 6]
    if args.k is not None:
        lo, hi = args.k
    elif args.range is not None:
        lo, hi = args.range
        return [n // 6 for n in range(lo, hi + 1) if n % 6 == 2]
    else:
        lo, hi = DEFAULT_K_RANGES["upper"]
    return list(range(lo, hi + 1))


def _emit(report: Report, args) -> None:
    text = render(report, args.format, include_timing=args.timing)
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _witness_labels(witness) -> list[str]:
    return [w.label() for w in witness] if witness else []


def cmd_dim(args) -> int:
    params = GPParams(args.n, args.m)
    t0 = time.perf_counter()
    oracle = bfs_all_pairs(build_graph(params))
    result = metric_dimension(
        oracle, max_size=args.max_size, use_symmetry=not args.no_symmetry
    )
    elapsed = time.perf_counter() - t0
    finding = {
        "kind": "dim",
        "n": result.n,
        "m": result.m,
        "dimension": result.dimension,
        "witness": _witness_labels(result.witness),
        "exhausted_sizes": list(result.exhausted),
        "symmetry": int(result.symmetry),
    }
    report = Report(
        command="dim",
        params={"kind": "dim", "n": args.n, "m": args.m, "max_size": args.max_size,
                "symmetry": int(not args.no_symmetry)},
        status=STATUS_COMPUTED,
        findings=[finding],
        timings={f"P({args.n},{args.m})": elapsed},
        version=__version__,
    )
    _emit(report, args)
    return 0


def _verify_distances(ns, unchecked, findings, timings) -> bool:
    ok = True
    for n in ns:
        t0 = time.perf_counter()
        (check,) = verify_formulas([n], unchecked=unchecked)
        timings[f"n={n}"] = time.perf_counter() - t0
        findings.append(
            {
                "kind": "distances",
                "n": n,
                "pairs_checked": check.pairs_checked,
                "mismatches": len(check.mismatches),
            }
        )
        for a, b, closed, bfs in check.mismatches:
            findings.append(
                {"kind": "distance-mismatch", "n": n, "a": a, "b": b,
                 "closed": closed, "bfs": bfs}
            )
        ok &= check.ok
    return ok


def _verify_tables(ns, unchecked, findings, timings) -> bool:
    ok = True
    for n in ns:
        t0 = time.perf_counter()
        oracle = bfs_all_pairs(build_graph(GPParams(n, 3)))
        check = verify_tables(oracle, unchecked=unchecked)
        timings[f"n={n}"] = time.perf_counter() - t0
        quarantined = sum(m.quarantined for m in check.mismatches)
        findings.append(
            {
                "kind": "tables",
                "n": n,
                "rows_checked": check.rows_checked,
                "mismatches": len(check.mismatches) - quarantined,
                "quarantined": quarantined,
            }
        )
        for mm in check.mismatches:
            findings.append(
                {
                    "kind": "table-mismatch",
                    "n": n,
                    "row": mm.row.instance_id(),
                    "target": mm.row.target,
                    "predicted": sorted(mm.row.predicted),
                    "computed": sorted(mm.computed),
                    "quarantined": int(mm.quarantined),
                }
            )
        ok &= check.ok
    return ok


def _require_envelope(n: int, unchecked: bool) -> None:
    """Lower-bound claims are published for n mod 6 in {2,3,4,5}, k >= 6;
    anything else (including residues 0 and 1) needs --unchecked."""
    if unchecked:
        return
    if n % 6 not in FORMULA_RESIDUES or n // 6 < MIN_K:
        raise FormulaDomainError(
            f"n={n} is outside the published envelope (n mod 6 in 2..5 and "
            f"k >= {MIN_K}); pass --unchecked to search it anyway"
        )


def _verify_lower(ns, unchecked, use_symmetry, findings, timings) -> bool:
    ok = True
    for n in ns:
        _require_envelope(n, unchecked)
        t0 = time.perf_counter()
        oracle = bfs_all_pairs(build_graph(GPParams(n, 3)))
        verdict = exhaust_size(oracle, 3, use_symmetry=use_symmetry)
        timings[f"n={n}"] = time.perf_counter() - t0
        findings.append(
            {
                "kind": "lower",
                "n": n,
                "m": 3,
                "size": 3,
                "found": int(verdict.found),
                "candidates_checked": verdict.candidates_checked,
                "symmetry": int(verdict.symmetry),
            }
        )
        if verdict.found:
            findings.append(
                {
                    "kind": "lower-counterexample",
                    "n": n,
                    "witness": _witness_labels(verdict.witness),
                }
            )
            ok = False
    return ok


def _verify_upper(ks, unchecked, findings, timings) -> bool:
    ok = True
    for k in ks:
        n = 6 * k + 2
        t0 = time.perf_counter()
        landmarks = canonical_set_6k2(k, unchecked=unchecked)
        oracle = bfs_all_pairs(build_graph(GPParams(n, 3)))
        reps = set()
        details = []
        for pos in range(2 * n):
            x = VertexRef.from_lin(pos, n)
            got = representation(oracle, x, landmarks)
            if got != expected_rep_6k2(x, k):
                details.append(
                    {
                        "kind": "upper-family-mismatch",
                        "k": k,
                        "n": n,
                        "vertex": x.label(),
                        "computed": list(got),
                        "predicted": list(expected_rep_6k2(x, k)),
                    }
                )
            reps.add(got)
        resolving = is_resolving(oracle, landmarks) is True
        distinct = len(reps) == 2 * n
        timings[f"k={k}"] = time.perf_counter() - t0
        findings.append(
            {
                "kind": "upper",
                "k": k,
                "n": n,
                "resolving": int(resolving),
                "family_mismatches": len(details),
                "distinct": int(distinct),
            }
        )
        findings.extend(details)
        ok &= resolving and distinct and not details
    return ok


def _verify_good_lists(ns, unchecked, findings, timings) -> bool:
    ok = True
    for n in ns:
        t0 = time.perf_counter()
        oracle = bfs_all_pairs(build_graph(GPParams(n, 3)))
        for vertex, expected in (
            (VertexRef.u(1), expected_good_u1(n, unchecked)),
            (VertexRef.v(1), expected_good_v1(n, unchecked)),
        ):
            computed = good_set(oracle, vertex)
            match = computed == expected
            findings.append(
                {
                    "kind": "good-lists",
                    "n": n,
                    "vertex": vertex.label(),
                    "expected_size": len(expected),
                    "computed_size": len(computed),
                    "match": int(match),
                }
            )
            if not match:
                findings.append(
                    {
                        "kind": "good-list-mismatch",
                        "n": n,
                        "vertex": vertex.label(),
                        "missing": sorted(expected - computed),
                        "extra": sorted(computed - expected),
                    }
                )
                ok = False
        timings[f"n={n}"] = time.perf_counter() - t0
    return ok


def _verify_witness_pairs(ns, unchecked, findings, timings) -> bool:
    ok = True
    for n in ns:
        t0 = time.perf_counter()
        oracle = bfs_all_pairs(build_graph(GPParams(n, 3)))
        check = verify_witness_pairs(oracle, unchecked=unchecked)
        timings[f"n={n}"] = time.perf_counter() - t0
        findings.append(
            {
                "kind": "witness-pairs",
                "n": n,
                "claims": len(check.results),
                "failures": len(check.failures),
            }
        )
        for failure in check.failures:
            findings.append(
                {
                    "kind": "witness-pair-fail",
                    "n": n,
                    "claim": failure.claim.claim_id,
                    "detail": failure.detail,
                }
            )
        ok &= check.ok
    return ok


def cmd_verify(args) -> int:
    findings: list[dict] = []
    timings: dict[str, float] = {}
    kind = args.kind
    if kind == "upper":
        instances = _select_k(args)
        ok = _verify_upper(instances, args.unchecked, findings, timings)
        selection = {"k": " ".join(map(str, instances))}
    else:
        instances = _select_n(args, kind)
        selection = {"n": " ".join(map(str, instances))}
        if kind == "distances":
            ok = _verify_distances(instances, args.unchecked, findings, timings)
        elif kind == "tables":
            ok = _verify_tables(instances, args.unchecked, findings, timings)
        elif kind == "lower":
            ok = _verify_lower(
                instances, args.unchecked, not args.no_symmetry, findings, timings
            )
        elif kind == "good-lists":
            ok = _verify_good_lists(instances, args.unchecked, findings, timings)
        else:
            ok = _verify_witness_pairs(instances, args.unchecked, findings, timings)
    report = Report(
        command=f"verify {kind}",
        params={"kind": kind, **selection, "unchecked": int(args.unchecked)},
        status=STATUS_VERIFIED if ok else STATUS_FAILED,
        findings=findings,
        timings=timings,
        version=__version__,
    )
    _emit(report, args)
    return 0 if ok else 1


def cmd_report(args) -> int:
    with open(args.input) as fh:
        findings = load_jsonl(fh.read())
    primary = next(
        (f["kind"] for f in findings if f.get("kind") in set(VERIFY_KINDS) | {"dim"}),
        "dim",
    )
    report = Report(
        command="report",
        params={"kind": primary, "input": args.input},
        status=STATUS_COMPUTED,
        findings=findings,
        version=__version__,
    )
    _emit(report, args)
    return 0


def _add_output_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--format", choices=FORMATS, default="human")
    parser.add_argument("--out", metavar="PATH", help="write output to a file")
    parser.add_argument(
        "--timing", action="store_true",
        help="include wall-clock timings (human format; non-deterministic)",
    )


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="gpdim",
        description="Exact metric-dimension toolkit for generalized Petersen graphs",
    )
    parser.add_argument("--version", action="version", version=f"gpdim {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p_dim = sub.add_parser("dim", help="compute the metric dimension of P(n,m)")
    p_dim.add_argument("--n", type=int, required=True)
    p_dim.add_argument("--m", type=int, default=3)
    p_dim.add_argument("--max-size", type=int, default=DEFAULT_MAX_SIZE)
    p_dim.add_argument("--no-symmetry", action="store_true",
                       help="disable the rotational search reduction")
    _add_output_flags(p_dim)
    p_dim.set_defaults(func=cmd_dim)

    p_ver = sub.add_parser("verify", help="verify published claims against oracles")
    p_ver.add_argument("kind", choices=VERIFY_KINDS)
    p_ver.add_argument("--n", type=int, help="single instance")
    p_ver.add_argument("--range", type=_parse_range, metavar="LO:HI",
                       help="inclusive n range, filtered by --mod6")
    p_ver.add_argument("--k", type=_parse_range, metavar="LO:HI",
                       help="inclusive k range (n = 6k + r per --mod6)")
    p_ver.add_argument("--mod6", type=_parse_mod6, default=FORMULA_RESIDUES,
                       metavar="LIST", help="residues to keep (subset of 2,3,4,5)")
    p_ver.add_argument("--unchecked", action="store_true",
                       help="allow k < 6, outside the published validity envelope")
    p_ver.add_argument("--no-symmetry", action="store_true")
    _add_output_flags(p_ver)
    p_ver.set_defaults(func=cmd_verify)

    p_rep = sub.add_parser("report", help="re-render a saved jsonl report")
    p_rep.add_argument("--input", required=True, metavar="PATH")
    _add_output_flags(p_rep)
    p_rep.set_defaults(func=cmd_report)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    func: Callable = args.func
    try:
        return func(args)
    except (ParameterDomainError, FormulaDomainError, ValueError, OSError) as exc:
        print(f"gpdim: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
