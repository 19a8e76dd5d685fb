"""Time the compiled kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--repeat 3] [--quick]

Each row runs the same inputs through both backends, checks that the outputs
agree, and reports the best-of-N wall time and the speedup.
"""
from __future__ import annotations

import argparse
import time

import numpy as np

from circspec import _fallback
from circspec.graphs import expand_divisor_set, to_dense, unitary_cayley
from circspec.numtheory import euler_phi, proper_divisors
from circspec.ops import line_graph
from circspec.spectra import ramanujan_row

try:
    from circspec import _kernels
except ImportError:
    _kernels = None


def best_of(fn, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        t = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t)
    return best, out


def jacobi_case(n):
    g = to_dense(expand_divisor_set(unitary_cayley(n)))
    a = np.ascontiguousarray(line_graph(g).adj, dtype=np.float64)
    label = f"jacobi L(X_{n}), order {a.shape[0]}"

    def run(mod):
        diag, sweeps = mod.jacobi_eigenvalues(a.copy(), 1e-12 * max(1.0, np.linalg.norm(a)), 100)
        return np.sort(diag)
    return label, run, lambda x, y: np.allclose(x, y, atol=1e-8)


def prime_case(p):
    masks = np.arange(1, 1 << ((p - 1) // 2), dtype=np.int64)
    return f"prime counts p={p}, {masks.size} masks", lambda mod: mod.prime_distinct_counts(p, masks), np.array_equal


def gray_case(n):
    divs = proper_divisors(n)
    rows = np.ascontiguousarray(np.stack([ramanujan_row(n, d) for d in divs]), dtype=np.int64)
    degs = np.array([euler_phi(n // d) for d in divs], dtype=np.int64)
    # target degree n/2 (the degree of a regular graph with half the vertices as neighbours)
    # and an all-zero spectrum, which nothing realizes, so the whole walk runs
    target = np.zeros(n, dtype=np.int64)
    total = 1 << len(divs)
    return (f"gray walk n={n}, {total} subsets",
            lambda mod: mod.gray_realizable(rows, degs, target, n // 2, 0, total), lambda x, y: x == y)


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--quick", action="store_true", help="smaller inputs")
    args = ap.parse_args(argv)
    if _kernels is None:
        print("compiled extension not built; run `python3 setup.py build_ext --inplace`")
        return 1
    if args.quick:
        cases = [jacobi_case(7), prime_case(19), gray_case(60)]
    else:
        cases = [jacobi_case(11), jacobi_case(13), prime_case(23), prime_case(29), gray_case(240), gray_case(360)]
    print(f"{'case':40s} {'compiled':>10s} {'fallback':>10s} {'speedup':>8s}  agree")
    for label, run, same in cases:
        tc, oc = best_of(lambda: run(_kernels), args.repeat)
        tf, of = best_of(lambda: run(_fallback), args.repeat)
        print(f"{label:40s} {tc:10.4f} {tf:10.4f} {tf / tc:8.1f}x  {bool(same(oc, of))}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
