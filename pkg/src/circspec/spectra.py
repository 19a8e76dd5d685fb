"""Exact and numeric spectra of circulant graphs, plus an independent eigensolver."""
from __future__ import annotations

import json
import math
import warnings
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from numbers import Real

import numpy as np

from . import kernels
from .graphs import DenseGraph, DivisorSet, SymbolSet, check_cap
from .numtheory import divisors, is_prime, ramanujan

DEFAULT_TOL = 1e-9


class EigensolverError(RuntimeError):
    """Jacobi sweeps did not reduce the off-diagonal norm below tolerance."""


class AmbiguousGrouping(UserWarning):
    pass


def _fmt(v) -> str:
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    return f"{v:.12g}"


@dataclass(frozen=True)
class Spectrum:
    """Multiset of eigenvalues as (value, multiplicity) pairs, values descending.

    ``exact`` spectra hold Python ints; the rest hold floats grouped at some
    tolerance. ``ambiguous`` flags a grouping where two clusters nearly touched.
    """

    entries: tuple[tuple[int | float, int], ...]
    exact: bool
    ambiguous: bool = False

    @classmethod
    def from_exact(cls, values) -> Spectrum:
        counts = Counter(int(v) for v in values)
        return cls(tuple(sorted(counts.items(), key=lambda e: -e[0])), exact=True)

    @classmethod
    def from_pairs(cls, pairs, exact: bool | None = None, tol: float | None = None) -> Spectrum:
        """Build from (value, multiplicity) pairs, merging equal values; zero multiplicities drop."""
        pairs = [(v, int(m)) for v, m in pairs if m]
        if any(m < 0 for _, m in pairs):
            raise ValueError(f"negative multiplicity in {pairs}")
        if exact is None:
            exact = all(isinstance(v, (int, np.integer)) for v, _ in pairs)
        if exact:
            c: Counter = Counter()
            for v, m in pairs:
                c[int(v)] += m
            return cls(tuple(sorted(c.items(), key=lambda e: -e[0])), exact=True)
        values = [float(v) for v, m in pairs for _ in range(m)]
        return group_values(values, tol)

    @property
    def order(self) -> int:
        return sum(m for _, m in self.entries)

    @property
    def distinct(self) -> int:
        return len(self.entries)

    @property
    def max(self):
        return self.entries[0][0]

    def values(self) -> list:
        """All eigenvalues with repetition, descending."""
        return [v for v, m in self.entries for _ in range(m)]

    def distinct_values(self) -> list:
        return [v for v, _ in self.entries]

    def multiplicity(self, value, tol: float = 0.0) -> int:
        return sum(m for v, m in self.entries if abs(v - value) <= tol)

    def trace(self):
        return sum(v * m for v, m in self.entries)

    def matches(self, other: Spectrum, tol: float = 0.0) -> bool:
        """Multiset equality, elementwise on sorted values within tol."""
        a, b = self.values(), other.values()
        if len(a) != len(b):
            return False
        if self.exact and other.exact:
            return a == b
        return bool(np.max(np.abs(np.subtract(a, b)), initial=0.0) <= tol)

    def to_json(self) -> dict:
        return {"entries": [
            {"value": str(v) if self.exact else float(_fmt(v)), "exact": self.exact, "multiplicity": m}
            for v, m in self.entries]}

    @classmethod
    def from_json(cls, obj) -> Spectrum:
        if isinstance(obj, str):
            obj = json.loads(obj)
        entries = obj["entries"]
        exact = all(e.get("exact", False) for e in entries) and bool(entries)
        pairs = [(int(e["value"]) if exact else float(e["value"]), e["multiplicity"]) for e in entries]
        return cls(tuple(pairs), exact=exact)

    def __str__(self) -> str:
        return "{" + ", ".join(f"{_fmt(v)}^{m}" for v, m in self.entries) + "}"


def group_values(values, tol: float | None = None) -> Spectrum:
    """Cluster reals: a value joins the current cluster when within tol of its first member.

    Default tol is DEFAULT_TOL * max(1, max |value|).
    """
    vals = sorted((float(v) for v in values), reverse=True)
    if not vals:
        return Spectrum((), exact=False)
    if tol is None:
        tol = DEFAULT_TOL * max(1.0, max(abs(v) for v in vals))
    clusters: list[list[float]] = [[vals[0]]]
    for v in vals[1:]:
        if clusters[-1][0] - v <= tol:
            clusters[-1].append(v)
        else:
            clusters.append([v])
    ambiguous = any(a[-1] - b[0] < 2 * tol for a, b in zip(clusters, clusters[1:]))
    if ambiguous:
        warnings.warn(f"eigenvalue clusters closer than 2*tol={2 * tol:g}", AmbiguousGrouping, stacklevel=2)
    return Spectrum(tuple((math.fsum(c) / len(c), len(c)) for c in clusters), exact=False, ambiguous=ambiguous)


# --- integral circulants -------------------------------------------------

@lru_cache(maxsize=4096)
def _ramanujan_by_gcd(m: int) -> dict[int, int]:
    return {g: ramanujan(g, m) for g in divisors(m)}


def ramanujan_row(n: int, d: int) -> np.ndarray:
    """c(j, n/d) for j = 0..n-1: the contribution of G_n(d) to every eigenvalue."""
    m = n // d
    table = _ramanujan_by_gcd(m)
    g = np.gcd(np.arange(n), m)
    lut = np.zeros(m + 1, dtype=np.int64)
    for k, v in table.items():
        lut[k] = v
    return lut[g]


def icg_eigenvalues(spec: DivisorSet) -> np.ndarray:
    """Ungrouped exact eigenvalues lambda_0..lambda_{n-1} of ICG_n(D)."""
    lam = np.zeros(spec.n, dtype=np.int64)
    for d in spec.divisors:
        lam += ramanujan_row(spec.n, d)
    return lam


def spectrum_icg(spec: DivisorSet) -> Spectrum:
    return Spectrum.from_exact(icg_eigenvalues(spec).tolist())


# --- general circulants --------------------------------------------------

def circulant_eigenvalues(sym: SymbolSet, chunk: int = 1 << 22) -> np.ndarray:
    """lambda_j = sum_s cos(2 pi j s / n), reduced mod n before scaling."""
    n = sym.n
    s = np.asarray(sym.symbol, dtype=np.int64)
    out = np.empty(n)
    rows = max(1, chunk // max(1, len(s)))
    for start in range(0, n, rows):
        j = np.arange(start, min(n, start + rows), dtype=np.int64)
        arg = (np.outer(j, s) % n) * (2.0 * np.pi / n)
        out[start:start + len(j)] = np.cos(arg).sum(axis=1)
        # negation closure makes the sine parts cancel
        assert np.all(np.abs(np.sin(arg).sum(axis=1)) <= 1e-8 * max(1, len(s)))
    return out


def spectrum_circulant(sym: SymbolSet, tol: float | None = None) -> Spectrum:
    return group_values(circulant_eigenvalues(sym), tol)


@dataclass(frozen=True)
class EigenvalueClassPartition:
    """Multipliers 1..p-1 grouped by the residue set {i*s mod p : s in S}."""

    p: int
    classes: tuple[tuple[int, ...], ...]

    @property
    def distinct_eigenvalues(self) -> int:
        return 1 + len(self.classes)


def prime_order_partition(p: int, sym: SymbolSet) -> EigenvalueClassPartition:
    if not is_prime(p) or sym.n != p:
        raise ValueError(f"prime_order_partition needs a prime order, got p={p}, n={sym.n}")
    if not sym.symbol or 0 in sym.symbol:
        raise ValueError("symbol must be nonempty and loop-free")
    groups: dict[frozenset, list[int]] = {}
    for i in range(1, p):
        groups.setdefault(frozenset(i * s % p for s in sym.symbol), []).append(i)
    classes = sorted(tuple(v) for v in groups.values())
    return EigenvalueClassPartition(p, tuple(classes))


# --- oracle --------------------------------------------------------------

def jacobi_eigenvalues(matrix, off_tol: float | None = None, max_sweeps: int = 100) -> np.ndarray:
    """All eigenvalues of a real symmetric matrix by cyclic Jacobi rotations."""
    a = np.array(matrix, dtype=np.float64, order="C")
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.allclose(a, a.T, atol=0):
        raise ValueError("matrix must be symmetric")
    if off_tol is None:
        off_tol = 1e-12 * max(1.0, float(np.linalg.norm(a)))
    diag, sweeps = kernels.jacobi_eigenvalues(a, float(off_tol), int(max_sweeps))
    if sweeps < 0:
        raise EigensolverError(f"no convergence to {off_tol:g} in {max_sweeps} sweeps")
    return np.sort(diag)[::-1]


def eigensolver_oracle(g: DenseGraph, tol: float | None = None, max_sweeps: int = 100) -> Spectrum:
    check_cap(g.order)
    return group_values(jacobi_eigenvalues(g.adj.astype(np.float64), max_sweeps=max_sweeps), tol)
