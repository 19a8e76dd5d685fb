"""Theorem registry: each entry maps an id to its parameter sweep and per-point check.

Every check returns a record ``{"params", "predicted", "computed", "pass"}``
whose params reproduce the point through a single spectrum/classify call.
"""
from __future__ import annotations

import csv
import io
import json
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import product
from math import gcd, sqrt
from typing import Callable

import numpy as np

from .classify import (classify, integral_circulant_realizable, parity_statements)
from .families import (blowup_paley, blowup_tensor_form, cubic_coset_symbol,
                       cubic_polynomial_roots, double_tensor, even_odd_class_icg,
                       even_odd_complement_values, even_odd_params, kd_knd, second_class_icg,
                       second_class_params, witness_preserves_adjacency)
from .graphs import DivisorSet, SymbolSet, complete_icg, expand_divisor_set, to_dense, unitary_cayley
from .numtheory import (cubic_residues, euler_phi, factorize, gaussian_period_cubic, is_prime,
                        is_prime_power, proper_divisors, quadratic_residues)
from .ops import iterated_line_params, iterated_line_spectrum, line_graph
from .search import SEARCH_MAX_P, search_prime
from .spectra import (Spectrum, eigensolver_oracle, prime_order_partition, ramanujan_row,
                      spectrum_circulant, spectrum_icg)
from .classify import _jobs

ORACLE_TOL = 1e-6
IRRATIONAL_TOL = 1e-9


def _rec(params: dict, predicted, computed, ok: bool) -> dict:
    return {"params": params, "predicted": predicted, "computed": computed, "pass": bool(ok)}


def _distinct_str(s: Spectrum) -> list[str]:
    return [str(v) if s.exact else f"{v:.12g}" for v in s.distinct_values()]


# --- unitary Cayley graphs and their line graphs -------------------------

def ucg_spectrum(n: int) -> Spectrum:
    return spectrum_icg(unitary_cayley(n))


def ucg_line_spectrum(n: int, iterations: int) -> Spectrum | None:
    """Spectrum of L^iterations(X_n) via the regular line-graph rule; None once no edges remain."""
    k = euler_phi(n) if n > 1 else 0
    s = ucg_spectrum(n)
    order = n
    for _ in range(iterations):
        if k * order // 2 == 0:
            return None
        s = iterated_line_spectrum(s, k, order, 1)
        k, order = iterated_line_params(k, order, 1)
    if order == 0:
        return None
    return s


def _is_srg(s: Spectrum | None) -> bool:
    # every graph checked here is connected (line graphs of connected graphs)
    return s is not None and classify(s, s.order, True).srg is not None


def _distinct(s: Spectrum | None) -> int:
    return 0 if s is None else s.distinct


def check_t4(n: int) -> dict:
    f = factorize(n)
    predicted = len(f) == 1 and f[0][1] >= 2
    s = ucg_spectrum(n)
    cl = classify(s, n, True)
    ok = (cl.srg is not None) == predicted
    computed = {"srg": cl.srg is not None, "spectrum": str(s)}
    if predicted:
        p, a = f[0]
        q = p ** (a - 1)
        expected = Spectrum.from_pairs([(q * (p - 1), 1), (0, p * (q - 1)), (-q, p - 1)])
        ok = ok and s.matches(expected)
        return _rec({"n": n}, {"srg": True, "spectrum": str(expected)}, computed, ok)
    return _rec({"n": n}, {"srg": False}, computed, ok)


def check_t9(n: int) -> dict:
    f = factorize(n)
    predicted = len(f) == 2 and all(e == 1 for _, e in f)
    s = ucg_spectrum(n)
    ok = (s.distinct == 4) == predicted
    computed = {"distinct": s.distinct, "spectrum": str(s)}
    if predicted:
        (p, _), (q, _) = f
        expected = Spectrum.from_pairs([((p - 1) * (q - 1), 1), (1, (p - 1) * (q - 1)),
                                        (-(p - 1), q - 1), (-(q - 1), p - 1)])
        ok = ok and s.matches(expected)
        return _rec({"n": n}, {"distinct": 4, "spectrum": str(expected)}, computed, ok)
    return _rec({"n": n}, {"distinct": "not 4"}, computed, ok)


def _line_predicate(theorem: str, n: int) -> bool:
    f = factorize(n)
    prime = is_prime(n)
    pow2 = len(f) == 1 and f[0][0] == 2
    if theorem == "T5":
        return (prime and n > 3) or (pow2 and n > 2)
    if theorem == "T7":
        return n == 4
    if theorem == "T10":
        two_p = n % 2 == 0 and is_prime(n // 2) and n // 2 >= 3
        odd_pp = len(f) == 1 and f[0][0] >= 3 and f[0][1] >= 2
        return two_p or odd_pp
    if theorem == "T11":
        return (prime and n > 3) or (pow2 and n > 4) or n == 6
    if theorem == "T12":
        return n == 6
    raise KeyError(theorem)


_LINE_THEOREMS = {"T5": (1, "srg"), "T7": (2, "srg"), "T10": (1, 4), "T11": (2, 4), "T12": (3, 4)}


def check_line(theorem: str, n: int, explicit_max: int = 0) -> dict:
    iterations, target = _LINE_THEOREMS[theorem]
    predicted = _line_predicate(theorem, n)
    s = ucg_line_spectrum(n, iterations)
    got = _is_srg(s) if target == "srg" else _distinct(s) == 4
    computed = {"distinct": _distinct(s), "spectrum": str(s) if s is not None else None}
    ok = got == predicted
    if explicit_max and n <= explicit_max and s is not None:
        g = to_dense(expand_divisor_set(unitary_cayley(n)))
        for _ in range(iterations):
            g = line_graph(g)
        oracle = eigensolver_oracle(g)
        agree = oracle.matches(s, ORACLE_TOL)
        computed["oracle_agrees"] = agree
        ok = ok and agree
    label = "srg" if target == "srg" else "four_distinct"
    return _rec({"n": n, "iterations": iterations}, {label: predicted}, dict(computed, **{label: got}), ok)


# --- prime order ---------------------------------------------------------

def check_t3(p: int) -> dict:
    found = search_prime(p, 3)
    if p % 4 == 1:
        qr = quadratic_residues(p)
        expected = sorted([tuple(sorted(qr)), tuple(sorted(set(range(1, p)) - qr))])
    else:
        expected = []
    got = sorted(s.symbol for s in found)
    return _rec({"p": p, "distinct": 3}, [list(e) for e in expected], [list(g) for g in got], got == expected)


def check_paley_params(p: int) -> dict:
    s = spectrum_circulant(SymbolSet(p, quadratic_residues(p)))
    srg = classify(s, p, True).srg
    h = (p - 1) // 2
    predicted = {"v": p, "r": h, "a": (p - 5) // 4, "c": (p - 1) // 4,
                 "theta": (sqrt(p) - 1) / 2, "tau": -(sqrt(p) + 1) / 2, "m_theta": h, "m_tau": h}
    ok = srg is not None and (srg.v, srg.r, srg.a, srg.c, srg.m_theta, srg.m_tau) == (
        p, h, (p - 5) // 4, (p - 1) // 4, h, h)
    ok = ok and abs(srg.theta - predicted["theta"]) <= IRRATIONAL_TOL and abs(srg.tau - predicted["tau"]) <= IRRATIONAL_TOL
    return _rec({"p": p}, predicted, srg.to_json() if srg else None, ok)


def cubic_symbol_sets(p: int) -> dict[str, tuple[int, ...]]:
    return {f"coset{c}": cubic_coset_symbol(p, c).symbol for c in range(3)}


def check_t47(p: int, exhaustive: bool = True, cosets_only: bool = True) -> dict:
    """Polynomial roots, coset isomorphism, and (optionally) the exhaustive 4-eigenvalue sets.

    With cosets_only the exhaustive part requires every hit to be a single cubic coset;
    otherwise it requires the hits to be exactly the cosets and their complements.
    """
    coeffs = gaussian_period_cubic(p)
    poly = np.poly1d(np.array(coeffs, dtype=float))
    spectra = [spectrum_circulant(cubic_coset_symbol(p, c)) for c in range(3)]
    nontrivial = spectra[0].distinct_values()[1:]
    residual = max(abs(poly(v)) for v in nontrivial) if len(nontrivial) == 3 else float("inf")
    roots = cubic_polynomial_roots(p)
    part = prime_order_partition(p, cubic_coset_symbol(p, 0))
    ok = (spectra[0].distinct == 4 and residual <= 1e-6 and part.distinct_eigenvalues == 4
          and all(s.matches(spectra[0], IRRATIONAL_TOL) for s in spectra[1:]))
    computed = {"eigenvalues": [float(f"{v:.12g}") for v in nontrivial], "max_residual": residual,
                "classes": len(part.classes)}
    predicted = {"polynomial": list(coeffs), "roots": [float(f"{r:.12g}") for r in roots]}
    if exhaustive and p <= SEARCH_MAX_P:
        hits = sorted(s.symbol for s in search_prime(p, 4))
        cosets = sorted(cubic_symbol_sets(p).values())
        full = set(range(1, p))
        closure = sorted(cosets + [tuple(sorted(full - set(c))) for c in cosets])
        computed["four_eigenvalue_sets"] = [list(h) for h in hits]
        computed["non_coset_sets"] = [list(h) for h in hits if h not in cosets]
        if cosets_only:
            predicted["four_eigenvalue_sets"] = [list(c) for c in cosets]
            ok = ok and hits == cosets
        else:
            predicted["four_eigenvalue_sets"] = [list(c) for c in closure]
            ok = ok and hits == closure
    return _rec({"p": p}, predicted, computed, ok)


# --- composite families --------------------------------------------------

def check_t45(n: int, k: int, m: int) -> dict:
    inst = second_class_icg(n, k, m, verify=False)
    s = inst.computed_spectrum()
    ok = s.matches(inst.expected_spectrum) and s.distinct == 4
    return _rec({"n": n, "k": k, "m": m, "divisors": list(inst.graph.divisors)},
                str(inst.expected_spectrum), str(s), ok)


def check_t46(n: int, k: int) -> dict:
    inst = even_odd_class_icg(n, k, verify=False)
    s = inst.computed_spectrum()
    half, q = n // 2, n // k
    predicted_distinct = sorted({half, half - q, -q, 0}, reverse=True)
    comp = spectrum_icg(DivisorSet(n, sorted(set(proper_divisors(n)) - set(inst.graph.divisors))))
    comp_expected = even_odd_complement_values(n, k)
    ok = (s.matches(inst.expected_spectrum) and s.distinct_values() == predicted_distinct
          and comp.distinct_values() == comp_expected)
    return _rec({"n": n, "k": k, "divisors": list(inst.graph.divisors)},
                {"distinct": predicted_distinct, "spectrum": str(inst.expected_spectrum),
                 "complement_distinct": comp_expected},
                {"distinct": s.distinct_values(), "spectrum": str(s),
                 "complement_distinct": comp.distinct_values()}, ok)


def check_t42(n: int) -> dict:
    """(K_d x K*_{n/d}) x (K_d x K*_{n/d}) with d the odd part of n is no ICG_{n^2}."""
    d = n
    while d % 2 == 0:
        d //= 2
    q = n * n // (d * d)
    target = Spectrum.from_pairs([((d - 1) ** 2 * q, 1), (0, n * n - d * d),
                                  (-(d - 1) * q, 2 * (d - 1)), (q, (d - 1) ** 2)])
    witness = integral_circulant_realizable(target, n * n)
    return _rec({"n": n, "d": d, "order": n * n, "subsets": 2 ** len(proper_divisors(n * n))},
                {"spectrum": str(target), "circulant": None},
                {"circulant": witness.to_json() if witness else None}, witness is None)


def check_t43(n: int, d: int) -> dict:
    inst = kd_knd(n, d, verify=False)
    s = inst.computed_spectrum()
    bij = witness_preserves_adjacency(inst.extras["tensor"], inst.graph, inst.extras["witness"])
    ok = bij and s.matches(inst.expected_spectrum)
    return _rec({"n": n, "d": d, "divisors": list(inst.graph.divisors)},
                {"isomorphic": True, "spectrum": str(inst.expected_spectrum)},
                {"isomorphic": bij, "spectrum": str(s)}, ok)


def check_t44(p: int, n: int) -> dict:
    inst = blowup_paley(p, n, verify=False)
    s = inst.computed_spectrum()
    structural = to_dense(inst.graph) == blowup_tensor_form(p, n)
    ok = structural and s.matches(inst.expected_spectrum, IRRATIONAL_TOL) and s.distinct == 4
    return _rec({"p": p, "n": n}, {"spectrum": str(inst.expected_spectrum), "tensor_form": True},
                {"spectrum": str(s), "tensor_form": structural}, ok)


def check_t8(n: int, samples: int = 4096, full_limit: int = 12, seed: int = 0) -> dict:
    """Three-way parity equivalence over every divisor subset of D_n (sampled past full_limit)."""
    divs = proper_divisors(n)
    k = len(divs)
    rows = np.stack([ramanujan_row(n, d) for d in divs])
    if k <= full_limit:
        masks = list(range(1, 1 << k))
    else:
        rng = random.Random(seed * 100003 + n)
        masks = sorted({rng.randrange(1, 1 << k) for _ in range(samples)})
    bad = []
    for start in range(0, len(masks), 4096):
        chunk = np.array(masks[start:start + 4096], dtype=np.int64)
        sel = (chunk[:, None] >> np.arange(k)) & 1
        lam = sel @ rows
        for mask, row in zip(chunk.tolist(), lam):
            subset = [d for b, d in enumerate(divs) if mask >> b & 1]
            st = parity_statements(n, subset, row)
            if not (st[0] == st[1] == st[2]):
                bad.append(subset)
    return _rec({"n": n, "subsets": len(masks), "exhaustive": k <= full_limit},
                {"disagreements": 0}, {"disagreements": len(bad), "examples": bad[:5]}, not bad)


# --- registry ------------------------------------------------------------

@dataclass(frozen=True)
class Theorem:
    tid: str
    description: str
    points: Callable[[int | None], list[tuple]]
    check: Callable[..., dict]
    default_max_n: int | None = None


def _line_points(tid):
    def points(max_n):
        return [(tid, n) for n in range(2, max_n + 1)]
    return points


def _call(check, args):
    return check(*args)


def _t5_check(tid, n, explicit_max=40):
    return check_line(tid, n, explicit_max)


def _kdknd_points(max_n):
    if max_n is None:
        return [(6, 2), (15, 3), (35, 5), (105, 15)]
    return [(n, d) for n in range(4, max_n + 1) for d in range(2, n)
            if n % d == 0 and gcd(d, n // d) == 1]


def _blowup_points(max_n):
    if max_n is None:
        return [(5, 10), (5, 15), (13, 39)]
    return [(p, n) for p in range(5, max_n + 1) if is_prime(p) and p % 4 == 1
            for n in range(2 * p, max_n + 1, p)]


def _t42_points(max_n):
    return [(n,) for n in range(6, (max_n or 6) + 1, 2)
            if n & (n - 1) and len(proper_divisors(n * n)) <= 20]


REGISTRY: dict[str, Theorem] = {t.tid: t for t in [
    Theorem("T3-paley", "prime-order circulants with 3 eigenvalues are exactly QR/QNR, p = 1 mod 4",
            lambda mx: [(p,) for p in ([5, 7, 11, 13, 17, 19, 29] if mx is None else
                                       [q for q in range(5, min(mx, SEARCH_MAX_P) + 1) if is_prime(q)])],
            check_t3),
    Theorem("T4-ucg-srg", "X_n strongly regular iff n is a composite prime power",
            lambda mx: [(n,) for n in range(2, mx + 1)], check_t4, 300),
    Theorem("T5-line-srg", "L(X_n) strongly regular iff n prime > 3 or a power of 2 > 2",
            _line_points("T5"), _t5_check, 100),
    Theorem("T7-L2-srg", "L^2(X_n) strongly regular iff n = 4",
            _line_points("T7"), check_line, 64),
    Theorem("T8-parity", "odd-index eigenvalues even <=> D0 = 2 D1 <=> odd-index eigenvalues zero",
            lambda mx: [(n,) for n in range(2, mx + 1, 2)], check_t8, 60),
    Theorem("T4.2-noncirc", "double tensor with d the odd part of n is not an ICG_{n^2}",
            _t42_points, check_t42, None),
    Theorem("T4.3-kdknd", "K_d x K_{n/d} = ICG_n({d1 d2}) for coprime d, n/d",
            _kdknd_points, check_t43, None),
    Theorem("T4.4-blowup", "blown-up Paley graph has the four predicted eigenvalues",
            _blowup_points, check_t44, None),
    Theorem("T4.5-family", "ICG_n({k does not divide d} + km D_{n/km}) closed-form spectrum",
            lambda mx: list(second_class_params(mx)), check_t45, 120),
    Theorem("T4.6-family", "even/odd divisor class ICG has four eigenvalues; complement too",
            lambda mx: list(even_odd_params(mx)), check_t46, 120),
    Theorem("T4.7-cubic", "cubic-residue circulant eigenvalues are roots of the period cubic",
            lambda mx: [(p,) for p in ([7, 13, 19, 31] if mx is None else
                                       [q for q in range(7, mx + 1) if is_prime(q) and q % 3 == 1])],
            check_t47),
    Theorem("T9-ucg-4eig", "X_n has 4 eigenvalues iff n = pq",
            lambda mx: [(n,) for n in range(2, mx + 1)], check_t9, 300),
    Theorem("T10-line-4eig", "L(X_n) has 4 eigenvalues iff n = 2p or n = p^a (p >= 3, a >= 2)",
            _line_points("T10"), check_line, 64),
    Theorem("T11-L2-4eig", "L^2(X_n) has 4 eigenvalues iff n prime > 3, 2^a > 4, or 6",
            _line_points("T11"), check_line, 64),
    Theorem("T12-L3-4eig", "L^3(X_n) has 4 eigenvalues iff n = 6",
            _line_points("T12"), check_line, 64),
]}


@dataclass
class VerificationReport:
    theorem: str
    parameter_range: dict
    records: list[dict]
    wall_time: float = 0.0
    summary: dict = field(init=False)

    def __post_init__(self) -> None:
        passed = sum(r["pass"] for r in self.records)
        self.summary = {"total": len(self.records), "passed": passed, "failed": len(self.records) - passed}

    @property
    def ok(self) -> bool:
        return self.summary["failed"] == 0

    def to_json(self) -> dict:
        return {"theorem": self.theorem, "parameter_range": self.parameter_range,
                "records": self.records, "summary": self.summary, "pass": self.ok,
                "wall_time": round(self.wall_time, 3)}

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["theorem", "params", "predicted", "computed", "pass"])
        for r in self.records:
            w.writerow([self.theorem] + [json.dumps(r[key], sort_keys=True) for key in
                                         ("params", "predicted", "computed")] + [r["pass"]])
        return buf.getvalue()


def run(tid: str, max_n: int | None = None, jobs: int | None = 1, **kwargs) -> VerificationReport:
    if tid not in REGISTRY:
        raise KeyError(f"unknown theorem id {tid!r}; known: {', '.join(REGISTRY)}")
    th = REGISTRY[tid]
    if max_n is None:
        max_n = th.default_max_n
    points = th.points(max_n)
    check = th.check
    if kwargs:
        from functools import partial
        check = partial(check, **kwargs)
    start = time.perf_counter()
    workers = _jobs(jobs)
    if workers > 1 and len(points) > 1:
        with ProcessPoolExecutor(workers) as ex:
            records = list(ex.map(_call, [check] * len(points), points))
    else:
        records = [check(*pt) for pt in points]
    rng = {"max_n": max_n, "points": len(points)}
    rng.update(kwargs)
    return VerificationReport(tid, rng, records, time.perf_counter() - start)
