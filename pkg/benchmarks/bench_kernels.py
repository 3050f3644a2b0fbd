#!/usr/bin/env python3
"""Benchmark the compiled kernels against the numpy fallback.

Times the two hot paths on a few representative instances:

  * bfs: the all-pairs BFS matrix build (dominates `verify distances`)
  * scan: the full size-3 resolving scan without symmetry reduction
    (dominates `verify lower` and `dim`)

Usage: python benchmarks/bench_kernels.py [--repeat N]
"""

import argparse
import itertools
import time

import numpy as np

from gpdim import kernels
from gpdim.graph import GPParams, build_graph

BFS_INSTANCES = [(38, 3), (80, 3), (200, 3)]
SCAN_INSTANCES = [(38, 3), (47, 3), (62, 3)]


def best_of(repeat, fn, *args):
    times = []
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        times.append(time.perf_counter() - t0)
    return min(times), result


def main():
    parser = argparse.ArgumentParser()
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    backends = kernels.available_backends()
    print(f"backends: {', '.join(backends)} (active: {kernels.BACKEND})")
    print(f"{'kernel':<6} {'instance':<10} " + " ".join(f"{b:>12}" for b in backends))

    for n, m in BFS_INSTANCES:
        adj = build_graph(GPParams(n, m)).adjacency
        row, results = [], []
        for b in backends:
            secs, mat = best_of(args.repeat, kernels.get_backend(b).bfs_all_pairs, adj)
            row.append(f"{secs * 1e3:10.2f}ms")
            results.append(mat)
        assert all(np.array_equal(results[0], r) for r in results[1:])
        print(f"{'bfs':<6} P({n},{m}):".ljust(18) + " ".join(row))

    for n, m in SCAN_INSTANCES:
        g = build_graph(GPParams(n, m))
        dist = kernels.bfs_all_pairs(g.adjacency)
        cands = np.array(
            list(itertools.combinations(range(2 * n), 3)), dtype=np.int64
        )
        row, hits = [], []
        for b in backends:
            secs, hit = best_of(
                args.repeat, kernels.get_backend(b).scan_resolving, dist, cands
            )
            row.append(f"{secs * 1e3:10.2f}ms")
            hits.append(hit)
        assert len(set(hits)) == 1
        print(f"{'scan':<6} P({n},{m}):".ljust(18) + " ".join(row)
              + f"   ({len(cands)} candidates)")


if __name__ == "__main__":
    main()
