"""Benchmark the compiled GF(p) kernels against the pure-Python fallback.

Usage: python benchmarks/bench_gf.py [--sizes 50,100,200] [--prime 32003]
                                     [--repeats 3] [--seed 0]

Both backends are imported directly, so the comparison runs regardless of
which one the package selected at import time.
"""

import argparse
import random
import time

from invarank import _gfpure

try:
    from invarank import _gfcore
except ImportError:
    _gfcore = None


def timeit(fn, repeats):
    best = float("inf")
    for _ in range(repeats):
        start = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - start)
    return best


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--sizes", default="50,100,200")
    ap.add_argument("--prime", type=int, default=32003)
    ap.add_argument("--repeats", type=int, default=3)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()

    sizes = [int(s) for s in args.sizes.split(",")]
    p = args.prime
    rng = random.Random(args.seed)

    if _gfcore is None:
        print("compiled backend unavailable; timing the fallback only")

    header = f"{'op':>8} {'n':>5} {'python':>12}"
    if _gfcore:
        header += f" {'cython':>12} {'speedup':>8}"
    print(header)
    for n in sizes:
        a = [rng.randrange(p) for _ in range(n * n)]
        b = [rng.randrange(p) for _ in range(n * n)]
        for op, call in (("matmul", lambda mod: mod.gf_matmul(a, b, n, n, n, p)),
                         ("rank", lambda mod: mod.gf_rank(a, n, n, p)),
                         ("rref", lambda mod: mod.gf_rref(a, n, n, p))):
            t_py = timeit(lambda: call(_gfpure), args.repeats)
            line = f"{op:>8} {n:>5} {t_py:>12.6f}"
            if _gfcore:
                assert_same(call(_gfpure), call(_gfcore))
                t_cy = timeit(lambda: call(_gfcore), args.repeats)
                line += f" {t_cy:>12.6f} {t_py / t_cy:>7.1f}x"
            print(line)


def assert_same(x, y):
    def norm(v):
        if isinstance(v, int):
            return v
        if isinstance(v, tuple):
            return [v[0], list(v[1]), list(v[2])]
        return list(v)
    if norm(x) != norm(y):
        raise AssertionError("backend results disagree")


if __name__ == "__main__":
    main()
