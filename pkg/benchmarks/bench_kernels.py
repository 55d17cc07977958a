"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--repeat 3]

Prints one row per workload with the best-of-``repeat`` time for each
backend and the speed-up.
"""
from __future__ import annotations

import argparse
import random
import time

from mintough import kernels


def _random_adj(K, rng, n, p):
    bits = n * (n - 1) // 2
    emask = sum(1 << b for b in range(bits) if rng.random() < p)
    return K.adjacency_from_edge_mask(n, emask)


def _cycle(n):
    return [(1 << ((v - 1) % n)) | (1 << ((v + 1) % n)) for v in range(n)]


def workloads(K):
    rng = random.Random(1)
    g16 = _random_adj(K, rng, 16, 0.5)
    g12 = _random_adj(K, rng, 12, 0.4)
    c14 = _cycle(14)
    yield "toughness n=16 dense", lambda: K.toughness(g16, 16)
    yield "toughness C_16", lambda: K.toughness(_cycle(16), 16)
    yield "minimality C_14", lambda: K.minimality(c14, 14)
    yield "chordal + cliques n=12", lambda: K.peo_cliques(g12, 12, K.is_chordal(g12, 12) or list(range(12)))
    yield "select chordal n=6 (all)", lambda: K.select_graphs(6, 0, 1 << 15, True, True, True)
    yield "closure kernels n=7 trees", lambda: [K.valid_removal_sets(K.prufer_tree(7, i), 7) for i in range(2000)]


def best_of(fn, repeat):
    best = float("inf")
    for _ in range(repeat):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if kernels.compiled is None:
        print("compiled extension not built; only the pure backend is available")
    backends = [("python", kernels.pure)] + ([("cython", kernels.compiled)] if kernels.compiled else [])
    results = {name: dict((w, best_of(f, args.repeat)) for w, f in workloads(K)) for name, K in backends}
    print(f"{'workload':32s} {'python s':>10s} {'cython s':>10s} {'speed-up':>9s}")
    for w in results["python"]:
        py = results["python"][w]
        cy = results.get("cython", {}).get(w)
        tail = f"{cy:10.4f} {py / cy:8.0f}x" if cy else f"{'-':>10s} {'-':>9s}"
        print(f"{w:32s} {py:10.4f} {tail}")


if __name__ == "__main__":
    main()
