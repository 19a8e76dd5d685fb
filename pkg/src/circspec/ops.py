"""Graph operations: explicit constructions and the matching spectral rules.

The rules act on Spectrum values so integral inputs stay exact; the explicit
constructions exist to be checked against them with the eigensolver.
"""
from __future__ import annotations

import numpy as np

from .graphs import DenseGraph, DivisorSet, check_cap
from .spectra import Spectrum


def tensor(g: DenseGraph, h: DenseGraph) -> DenseGraph:
    """(u,u') ~ (v,v') iff u ~ v in g and u' ~ v' in h; vertex (u,u') has index u*|h| + u'."""
    check_cap(g.order * h.order)
    return DenseGraph(np.kron(g.adj, h.adj))


def tensor_spectrum(a: Spectrum, b: Spectrum, tol: float | None = None) -> Spectrum:
    pairs = [(x * y, m * k) for x, m in a.entries for y, k in b.entries]
    return Spectrum.from_pairs(pairs, exact=a.exact and b.exact, tol=tol)


def complement(g: DenseGraph) -> DenseGraph:
    if g.loops:
        raise ValueError("complement of a loop-bearing graph is not defined here")
    a = ~g.adj
    np.fill_diagonal(a, False)
    return DenseGraph(a)


def complement_spectrum_regular(s: Spectrum, n: int, tol: float | None = None) -> Spectrum:
    """{n-1-lambda_0} and {-1-lambda_i : i >= 1}, lambda_0 being one copy of the largest value."""
    if s.order != n:
        raise ValueError(f"spectrum has {s.order} values, expected {n}")
    top = s.max
    pairs = [(n - 1 - top, 1)]
    for i, (v, m) in enumerate(s.entries):
        pairs.append((-1 - v, m - 1 if i == 0 else m))
    return Spectrum.from_pairs(pairs, exact=s.exact, tol=tol)


def icg_edge_union(a: DivisorSet, b: DivisorSet) -> DivisorSet:
    if a.n != b.n:
        raise ValueError(f"orders differ: {a.n} vs {b.n}")
    overlap = set(a.divisors) & set(b.divisors)
    if overlap:
        raise ValueError(f"divisor sets overlap on {sorted(overlap)}")
    return DivisorSet(a.n, a.divisors + b.divisors)


def line_graph(g: DenseGraph) -> DenseGraph:
    """Vertices are the edges of g in lexicographic (u < v) order."""
    if g.loops:
        raise ValueError("line graph of a loop-bearing graph is not supported")
    edges = g.edges()
    m = len(edges)
    if m == 0:
        raise ValueError("graph has no edges")
    check_cap(m)
    inc = np.zeros((g.order, m), dtype=np.int32)
    idx = np.arange(m)
    e = np.array(edges)
    inc[e[:, 0], idx] = 1
    inc[e[:, 1], idx] = 1
    a = inc.T @ inc
    np.fill_diagonal(a, 0)
    return DenseGraph(a > 0)


def line_spectrum_regular(s: Spectrum, k: int, n: int, tol: float | None = None) -> Spectrum:
    """Spectrum of L(G) for k-regular G of order n: k + lambda - 2 for each lambda, padded with -2.

    When kn/2 < n (k = 1) the surplus -2 values, coming from lambda = -k, are removed.
    """
    if s.order != n:
        raise ValueError(f"spectrum has {s.order} values, expected {n}")
    if k < 1 or (k * n) % 2:
        raise ValueError(f"need k >= 1 and kn even, got k={k}, n={n}")
    edges = k * n // 2
    pairs = [(k + v - 2, m) for v, m in s.entries]
    extra = edges - n
    if extra >= 0:
        pairs.append((-2, extra))
    else:
        slack = 0 if s.exact else (1e-9 if tol is None else tol) * max(1, k)
        out = []
        need = -extra
        for v, m in pairs:
            if need and abs(v + 2) <= slack:
                drop = min(m, need)
                need -= drop
                m -= drop
            out.append((v, m))
        if need:
            raise ValueError("spectrum lacks the -k eigenvalues required when kn/2 < n")
        pairs = out
    return Spectrum.from_pairs(pairs, exact=s.exact, tol=tol)


def iterated_line_spectrum(s: Spectrum, k: int, n: int, iterations: int,
                           tol: float | None = None) -> Spectrum:
    for _ in range(iterations):
        s = line_spectrum_regular(s, k, n, tol)
        k, n = 2 * k - 2, k * n // 2
    return s


def iterated_line_params(k: int, n: int, iterations: int) -> tuple[int, int]:
    """(regularity, order) of L^iterations(G) for k-regular G of order n."""
    for _ in range(iterations):
        k, n = 2 * k - 2, k * n // 2
    return k, n


def disjoint_copies(g: DenseGraph, r: int) -> DenseGraph:
    """r disjoint copies; copy c occupies vertices c*|g| .. (c+1)*|g| - 1."""
    if r < 1:
        raise ValueError("need at least one copy")
    check_cap(g.order * r)
    return DenseGraph(np.kron(np.eye(r, dtype=bool), g.adj))
