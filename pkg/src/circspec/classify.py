"""Distinct-eigenvalue counting, strongly regular detection, circulant realizability."""
from __future__ import annotations

import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from fractions import Fraction
from math import gcd

import numpy as np

from . import kernels
from .graphs import DenseGraph, DivisorSet
from .numtheory import euler_phi, proper_divisors
from .spectra import Spectrum, icg_eigenvalues, ramanujan_row

REALIZABLE_CAP = 20
INT_TOL = 1e-9


class MalformedSpectrum(ValueError):
    """Spectrum inconsistent with the regular-graph / SRG relations."""


@dataclass(frozen=True)
class SrgParams:
    v: int
    r: int
    a: int
    c: int
    theta: int | float
    tau: int | float
    m_theta: int
    m_tau: int

    def to_json(self) -> dict:
        d = asdict(self)
        for key in ("theta", "tau"):
            if isinstance(d[key], float):
                d[key] = float(f"{d[key]:.12g}")
        return d


@dataclass(frozen=True)
class Classification:
    connected: bool
    regularity: int
    distinct_count: int
    srg: SrgParams | None = None

    def to_json(self) -> dict:
        return {"connected": self.connected, "regularity": self.regularity,
                "distinct": self.distinct_count,
                "srg": self.srg.to_json() if self.srg else None}


def _as_int(x, what: str) -> int:
    if isinstance(x, (int, np.integer)):
        return int(x)
    if isinstance(x, Fraction):
        if x.denominator != 1:
            raise MalformedSpectrum(f"{what} = {x} is not an integer")
        return int(x)
    r = round(x)
    if abs(x - r) > INT_TOL * max(1.0, abs(x)):
        raise MalformedSpectrum(f"{what} = {x!r} is not an integer")
    return int(r)


def srg_parameters(spectrum: Spectrum) -> SrgParams:
    """(v, r, a, c) and multiplicities from a connected three-eigenvalue spectrum."""
    if spectrum.distinct != 3:
        raise MalformedSpectrum(f"need 3 distinct eigenvalues, got {spectrum.distinct}")
    (r, mr), (theta, m_th), (tau, m_ta) = spectrum.entries
    v = spectrum.order
    r_int = _as_int(r, "regularity")
    if mr != 1:
        raise MalformedSpectrum("regularity must be a simple eigenvalue")
    if spectrum.exact:
        th, ta = Fraction(theta), Fraction(tau)
    else:
        th, ta = theta, tau
    c = _as_int(th * ta + r_int, "c")
    a = _as_int(th + ta + c, "a")
    m_theta = -((v - 1) * ta + r_int) / (th - ta)
    m_tau = ((v - 1) * th + r_int) / (th - ta)
    if _as_int(m_theta, "m_theta") != m_th or _as_int(m_tau, "m_tau") != m_ta:
        raise MalformedSpectrum(f"multiplicities ({m_th}, {m_ta}) disagree with "
                                f"({float(m_theta)}, {float(m_tau)})")
    return SrgParams(v, r_int, a, c, theta, tau, m_th, m_ta)


def classify(spectrum: Spectrum, order: int, connected: bool) -> Classification:
    if spectrum.order != order:
        raise MalformedSpectrum(f"spectrum has {spectrum.order} values, order is {order}")
    reg = _as_int(spectrum.max, "regularity")
    simple_top = spectrum.entries[0][1] == 1
    if simple_top != connected:
        raise MalformedSpectrum(
            f"connected={connected} but the largest eigenvalue has multiplicity {spectrum.entries[0][1]}")
    srg = srg_parameters(spectrum) if connected and spectrum.distinct == 3 else None
    return Classification(connected, reg, spectrum.distinct, srg)


# --- parity condition on even orders -------------------------------------

def parity_sets(n: int, divisors) -> tuple[frozenset[int], frozenset[int]]:
    d0 = frozenset(d for d in divisors if (n // d) % 2 == 1)
    d1 = frozenset(d for d in divisors if (n // d) % 4 == 2)
    return d0, d1


def parity_condition(spec: DivisorSet) -> tuple[bool, frozenset[int], frozenset[int]]:
    """(D0 == 2*D1, D0, D1) with D0 = {d : n/d odd}, D1 = {d : n/d = 2 mod 4}."""
    if spec.n % 2:
        raise ValueError(f"parity condition needs even n, got {spec.n}")
    d0, d1 = parity_sets(spec.n, spec.divisors)
    return d0 == frozenset(2 * d for d in d1), d0, d1


def parity_statements(n: int, divisors, lam: np.ndarray) -> tuple[bool, bool, bool]:
    d0, d1 = parity_sets(n, divisors)
    odd = lam[1::2]
    return (bool(np.all(odd % 2 == 0)), d0 == frozenset(2 * d for d in d1), bool(np.all(odd == 0)))


def parity_equivalence_check(spec: DivisorSet) -> bool:
    """True iff 'odd-index eigenvalues even', 'D0 = 2 D1' and 'odd-index eigenvalues zero' agree."""
    if spec.n % 2:
        raise ValueError(f"parity check needs even n, got {spec.n}")
    s = parity_statements(spec.n, spec.divisors, icg_eigenvalues(spec))
    return s[0] == s[1] == s[2]


# --- realizability as an integral circulant ------------------------------

def _gray_worker(args):
    return kernels.gray_realizable(*args)


def _jobs(jobs: int | None) -> int:
    env = os.environ.get("SPECTRAL_CIRC_JOBS")
    if env:
        return max(1, int(env))
    return max(1, jobs if jobs is not None else (os.cpu_count() or 1))


def integral_circulant_realizable(target: Spectrum, n: int, jobs: int | None = 1) -> DivisorSet | None:
    """Some ICG_n(D) whose exact spectrum equals target, or None after trying every D."""
    if not target.exact:
        raise ValueError("target spectrum must be exact")
    if target.order != n:
        raise ValueError(f"target has {target.order} values, n = {n}")
    divs = proper_divisors(n)
    k = len(divs)
    if k > REALIZABLE_CAP:
        raise ValueError(f"|D_{n}| = {k} exceeds the enumeration cap {REALIZABLE_CAP}")
    rows = np.ascontiguousarray(np.stack([ramanujan_row(n, d) for d in divs]), dtype=np.int64)
    degs = np.array([euler_phi(n // d) for d in divs], dtype=np.int64)
    tgt = np.array(sorted(target.values()), dtype=np.int64)
    total = 1 << k
    workers = min(_jobs(jobs), total)
    bounds = [total * i // workers for i in range(workers + 1)]
    tasks = [(rows, degs, tgt, int(target.max), bounds[i], bounds[i + 1]) for i in range(workers)]
    if workers == 1:
        results = [_gray_worker(tasks[0])]
    else:
        with ProcessPoolExecutor(workers) as ex:
            results = list(ex.map(_gray_worker, tasks))
    for g in results:
        if g >= 0:
            return DivisorSet(n, [d for b, d in enumerate(divs) if g >> b & 1])
    return None


# --- line-graph circulance obstruction -----------------------------------

def _bipartition(g: DenseGraph) -> tuple[list[int], list[int]] | None:
    color = [-1] * g.order
    color[0] = 0
    stack = [0]
    while stack:
        u = stack.pop()
        for w in np.nonzero(g.adj[u])[0].tolist():
            if color[w] < 0:
                color[w] = 1 - color[u]
                stack.append(w)
            elif color[w] == color[u]:
                return None
    if min(color) < 0:
        return None
    return [v for v in range(g.order) if color[v] == 0], [v for v in range(g.order) if color[v] == 1]


def line_circulant_obstruction(g: DenseGraph) -> bool:
    """True iff g is C_n, K_4 or K_{a,b} with gcd(a, b) = 1.

    False means L(g) is certainly not circulant.
    """
    if g.loops or not g.is_connected():
        raise ValueError("expects a connected loop-free graph")
    deg = g.degrees()
    v = g.order
    if v >= 3 and np.all(deg == 2):
        return True
    if v == 4 and np.all(deg == 3):
        return True
    parts = _bipartition(g) if v >= 2 else None
    if parts is None:
        return False
    left, right = parts
    complete = bool(g.adj[np.ix_(left, right)].all())
    return complete and gcd(len(left), len(right)) == 1
