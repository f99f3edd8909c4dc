"""Compare the compiled and pure-Python kernels.

    python benchmarks/bench_kernels.py [--repeat 3]

Each row times the same call on both backends and checks the outputs agree.
"""

from __future__ import annotations

import argparse
import random
import sys
import time

from geodex import _backend, _pykernels
from geodex.constructions import g_construction, permutation_digraph
from geodex.search import degree_cap, size_chain


def _best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def _random_graphs(count, n, seed=1):
    rng = random.Random(seed)
    return [tuple(sum(1 << v for v in range(n) if v != u and rng.random() < 0.3) for u in range(n))
            for _ in range(count)]


def cases():
    rand = _random_graphs(300, 12)
    structured = [permutation_digraph(2, 2).digraph, permutation_digraph(2, 3).digraph,
                  g_construction(33, 6).digraph, g_construction(40, 4).digraph]

    def geodetic(k):
        return lambda kern: [kern.geodetic_ok(r, 12, k) for r in rand]

    def canon_random(kern):
        return [kern.canonical_labeling(r, 12) for r in rand]

    def canon_structured(kern):
        return [kern.canonical_labeling(g.rows, g.n) for g in structured]

    def search(n, k, target):
        cap = degree_cap(n, k)
        args = ([0], 1, n, k, size_chain(n, target), cap, cap, False, True, True, 0, 0.0, 0)
        return lambda kern: kern.search(*args)

    yield "geodetic check, 300 random n=12, k=2", geodetic(2)
    yield "geodetic check, 300 random n=12, k=4", geodetic(4)
    yield "canonical labeling, 300 random n=12", canon_random
    yield "canonical labeling, structured n=12..60", canon_structured
    yield "strong search n=9 k=2 size 18", search(9, 2, 18)
    yield "strong search n=12 k=3 size 20", search(12, 3, 20)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args(argv)
    if _backend.compiled is None:
        print("compiled extension not available; build with `pip install -e . --no-build-isolation`")
        return 1
    print(f"{'case':44} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for name, fn in cases():
        tp, outp = _best_of(lambda: fn(_pykernels), args.repeat)
        tc, outc = _best_of(lambda: fn(_backend.compiled), args.repeat)
        if outp != outc:
            print(f"{name}: backends disagree", file=sys.stderr)
            return 2
        print(f"{name:44} {tp:10.4f} {tc:11.4f} {tp / tc:8.1f}x")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
