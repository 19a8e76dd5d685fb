"""Circulant and integral-circulant graph models and explicit adjacency."""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from functools import reduce
from math import gcd

import numpy as np

from .numtheory import euler_phi, proper_divisors

DENSE_CAP = 20_000


class DenseCapExceeded(ValueError):
    """Requested explicit graph is larger than DENSE_CAP vertices."""


def check_cap(order: int) -> None:
    if order > DENSE_CAP:
        raise DenseCapExceeded(f"dense graph of order {order} exceeds cap {DENSE_CAP}")


@dataclass(frozen=True)
class SymbolSet:
    """Circulant G(n; S). Residue 0 is present exactly when ``loops`` is set."""

    n: int
    symbol: tuple[int, ...]
    loops: bool = False
    mask: int = field(default=0, init=False, repr=False, compare=False)

    def __init__(self, n: int, symbol, loops: bool = False):
        if n < 1:
            raise ValueError(f"order must be >= 1, got {n}")
        s = {int(x) % n for x in symbol}
        if 0 in s and not loops:
            raise ValueError("0 in symbol requires loops=True")
        if loops:
            s.add(0)
        bad = [x for x in s if (n - x) % n not in s]
        if bad:
            raise ValueError(f"symbol not closed under negation mod {n}: {sorted(bad)}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "symbol", tuple(sorted(s)))
        object.__setattr__(self, "loops", bool(loops))
        object.__setattr__(self, "mask", sum(1 << x for x in s))

    def __contains__(self, x: int) -> bool:
        return bool(self.mask >> (x % self.n) & 1)

    def adjacent(self, i: int, j: int) -> bool:
        return (i - j) % self.n in self

    @property
    def degree(self) -> int:
        return len(self.symbol)

    def to_json(self) -> dict:
        return {"n": self.n, "symbol": list(self.symbol), "loops": self.loops}


@dataclass(frozen=True)
class DivisorSet:
    """ICG_n(D): integral circulant given by a set of proper divisors of n."""

    n: int
    divisors: tuple[int, ...]

    def __init__(self, n: int, divisors):
        if n < 2:
            raise ValueError(f"order must be >= 2, got {n}")
        d = tuple(sorted(set(int(x) for x in divisors)))
        if not d:
            raise ValueError("divisor set must be nonempty")
        bad = [x for x in d if x < 1 or x >= n or n % x]
        if bad:
            raise ValueError(f"{bad} are not proper divisors of {n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "divisors", d)

    def to_json(self) -> dict:
        return {"n": self.n, "divisors": list(self.divisors)}


class DenseGraph:
    """Explicit symmetric adjacency; the diagonal is either all loops or none."""

    __slots__ = ("adj",)

    def __init__(self, adj):
        a = np.array(adj, dtype=bool)
        if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
            raise ValueError(f"adjacency must be a nonempty square matrix, got shape {a.shape}")
        check_cap(a.shape[0])
        if not np.array_equal(a, a.T):
            raise ValueError("adjacency is not symmetric")
        diag = np.diagonal(a)
        if diag.any() and not diag.all():
            raise ValueError("loops must be present at every vertex or at none")
        a.setflags(write=False)
        self.adj = a

    @property
    def order(self) -> int:
        return self.adj.shape[0]

    @property
    def loops(self) -> bool:
        return bool(self.adj[0, 0])

    def degrees(self) -> np.ndarray:
        return self.adj.sum(axis=1)

    def regularity(self) -> int | None:
        deg = self.degrees()
        return int(deg[0]) if (deg == deg[0]).all() else None

    def edges(self) -> list[tuple[int, int]]:
        """Undirected non-loop edges (u < v) in lexicographic order."""
        u, v = np.nonzero(np.triu(self.adj, k=1))
        return list(zip(u.tolist(), v.tolist()))

    def is_connected(self) -> bool:
        seen = np.zeros(self.order, dtype=bool)
        seen[0] = True
        frontier = seen.copy()
        while frontier.any():
            nxt = self.adj[frontier].any(axis=0) & ~seen
            seen |= nxt
            frontier = nxt
        return bool(seen.all())

    def permuted(self, perm) -> DenseGraph:
        """Relabel vertex v as perm[v]."""
        perm = np.asarray(perm)
        if sorted(perm.tolist()) != list(range(self.order)):
            raise ValueError("not a permutation")
        out = np.zeros_like(self.adj)
        out[np.ix_(perm, perm)] = self.adj
        return DenseGraph(out)

    def to_edgelist(self) -> str:
        return "".join(f"{u} {v}\n" for u, v in self.edges())

    def __eq__(self, other) -> bool:
        return isinstance(other, DenseGraph) and np.array_equal(self.adj, other.adj)

    def __repr__(self) -> str:
        return f"DenseGraph(order={self.order}, edges={len(self.edges())}, loops={self.loops})"


def gcd_class(n: int, d: int) -> list[int]:
    """G_n(d) = {k : gcd(k, n) = d, 1 <= k <= n-1}."""
    return [k for k in range(d, n, d) if gcd(k, n) == d]


def expand_divisor_set(spec: DivisorSet) -> SymbolSet:
    s: list[int] = []
    for d in spec.divisors:
        s.extend(gcd_class(spec.n, d))
    return SymbolSet(spec.n, s)


def unitary_cayley(n: int) -> DivisorSet:
    return DivisorSet(n, (1,))


def complete_icg(n: int) -> DivisorSet:
    return DivisorSet(n, proper_divisors(n))


def degree(spec: DivisorSet) -> int:
    return sum(euler_phi(spec.n // d) for d in spec.divisors)


def divisor_gcd(spec: DivisorSet) -> int:
    return reduce(gcd, spec.divisors)


def is_connected(spec: DivisorSet) -> bool:
    return divisor_gcd(spec) == 1


def symbol_connected(sym: SymbolSet) -> bool:
    """G(n; S) is connected iff gcd(n, S) = 1."""
    return reduce(gcd, sym.symbol, sym.n) == 1


def components(spec: DivisorSet) -> tuple[int, DivisorSet]:
    """(g, ICG_{n/g}(D/g)) where g = gcd(D): the graph is g copies of the component.

    Vertex v sits in copy ``v % g`` at local position ``v // g``.
    """
    g = divisor_gcd(spec)
    return g, DivisorSet(spec.n // g, [d // g for d in spec.divisors])


def to_dense(sym: SymbolSet) -> DenseGraph:
    n = sym.n
    check_cap(n)
    lookup = np.zeros(n, dtype=bool)
    lookup[list(sym.symbol)] = True
    idx = np.arange(n)
    return DenseGraph(lookup[(idx[:, None] - idx[None, :]) % n])


def complete_graph(m: int, loops: bool = False) -> DenseGraph:
    """K_m, or K*_m with a loop at every vertex."""
    a = np.ones((m, m), dtype=bool)
    if not loops:
        np.fill_diagonal(a, False)
    return DenseGraph(a)


def cycle_graph(m: int) -> DenseGraph:
    return to_dense(SymbolSet(m, [1, m - 1]))


# --- serialization -------------------------------------------------------

def graph_from_json(obj) -> SymbolSet | DivisorSet:
    if isinstance(obj, str):
        obj = json.loads(obj)
    if "divisors" in obj:
        return DivisorSet(int(obj["n"]), obj["divisors"])
    if "symbol" in obj:
        return SymbolSet(int(obj["n"]), obj["symbol"], loops=bool(obj.get("loops", False)))
    raise ValueError("graph JSON needs a 'symbol' or 'divisors' key")


def dense_from_edgelist(text: str, order: int | None = None) -> DenseGraph:
    pairs = [tuple(int(t) for t in line.split()) for line in text.splitlines() if line.strip()]
    v = order if order is not None else (max(max(p) for p in pairs) + 1 if pairs else 1)
    a = np.zeros((v, v), dtype=bool)
    for u, w in pairs:
        a[u, w] = a[w, u] = True
    return DenseGraph(a)
