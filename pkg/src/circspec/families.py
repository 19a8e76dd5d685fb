"""Named circulant constructions, each paired with its closed-form spectrum."""
from __future__ import annotations

import math
from dataclasses import dataclass, field
from math import gcd, sqrt

import numpy as np

from .graphs import (DenseGraph, DivisorSet, SymbolSet, complete_graph, expand_divisor_set,
                     to_dense)
from .numtheory import (cubic_residues, gaussian_period_cubic, is_prime, least_nonresidue,
                        proper_divisors, quadratic_residues)
from .ops import tensor
from .spectra import Spectrum, eigensolver_oracle, spectrum_circulant, spectrum_icg

IRRATIONAL_TOL = 1e-9


class FamilyMismatch(AssertionError):
    """Computed spectrum differs from the family's closed form."""


@dataclass
class FamilyInstance:
    name: str
    params: dict
    graph: SymbolSet | DivisorSet | DenseGraph
    expected_spectrum: Spectrum
    extras: dict = field(default_factory=dict)
    verified: bool = False

    @property
    def tol(self) -> float:
        return 0.0 if self.expected_spectrum.exact else IRRATIONAL_TOL

    def computed_spectrum(self) -> Spectrum:
        g = self.graph
        if isinstance(g, DivisorSet):
            return spectrum_icg(g)
        if isinstance(g, SymbolSet):
            return spectrum_circulant(g)
        return eigensolver_oracle(g)

    def verify(self) -> FamilyInstance:
        got = self.computed_spectrum()
        tol = self.tol if isinstance(self.graph, (DivisorSet, SymbolSet)) else 1e-6
        if not got.matches(self.expected_spectrum, tol):
            raise FamilyMismatch(f"{self.name}{self.params}: computed {got}, expected {self.expected_spectrum}")
        self.verified = True
        return self

    def to_json(self) -> dict:
        g = self.graph
        if isinstance(g, DenseGraph):
            gj = {"order": g.order, "edges": [list(e) for e in g.edges()], "loops": g.loops}
        else:
            gj = g.to_json()
        return {"name": self.name, "params": self.params, "graph": gj,
                "expected_spectrum": self.expected_spectrum.to_json(), "verified": self.verified}


def _finish(inst: FamilyInstance, verify: bool) -> FamilyInstance:
    return inst.verify() if verify else inst


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise ValueError(msg)


def paley(p: int, verify: bool = True) -> FamilyInstance:
    _require(is_prime(p) and p % 4 == 1, f"Paley graph needs a prime p = 1 mod 4, got {p}")
    h = (p - 1) // 2
    expected = Spectrum.from_pairs([(h, 1), ((sqrt(p) - 1) / 2, h), (-(sqrt(p) + 1) / 2, h)], exact=False)
    return _finish(FamilyInstance("paley", {"p": p}, SymbolSet(p, quadratic_residues(p)), expected), verify)


def cubic_polynomial_roots(p: int) -> list[float]:
    """Real roots, descending, of t^3 + t^2 - (p-1)/3 t - (ap+3p-1)/27."""
    roots = np.roots(np.array(gaussian_period_cubic(p), dtype=float))
    if np.max(np.abs(roots.imag)) > 1e-9:
        raise ArithmeticError(f"cubic for p={p} has non-real roots {roots}")
    return sorted(roots.real.tolist(), reverse=True)


def cubic_coset_symbol(p: int, coset: int) -> SymbolSet:
    _require(is_prime(p) and p % 3 == 1, f"cubic-residue circulant needs a prime p = 1 mod 3, got {p}")
    _require(coset in (0, 1, 2), f"coset must be 0, 1 or 2, got {coset}")
    x = pow(least_nonresidue(p, 3), coset, p)
    return SymbolSet(p, {x * r % p for r in cubic_residues(p)})


def cubic_coset_circulant(p: int, coset: int = 0, verify: bool = True) -> FamilyInstance:
    sym = cubic_coset_symbol(p, coset)
    t = (p - 1) // 3
    expected = Spectrum.from_pairs([(t, 1)] + [(r, t) for r in cubic_polynomial_roots(p)], exact=False)
    return _finish(FamilyInstance("cubic_coset", {"p": p, "coset": coset}, sym, expected), verify)


def multipartite_icg(n: int, d: int, verify: bool = True) -> FamilyInstance:
    """ICG_n({d' in D_n : d does not divide d'}), the complete d-partite graph K_d x K*_{n/d}."""
    _require(1 < d < n and n % d == 0, f"need 1 < d < n with d | n, got n={n}, d={d}")
    spec = DivisorSet(n, [e for e in proper_divisors(n) if e % d])
    expected = Spectrum.from_pairs([((d - 1) * n // d, 1), (0, n - d), (-(n // d), d - 1)])
    return _finish(FamilyInstance("multipartite", {"n": n, "d": d}, spec, expected), verify)


def kd_kstar(d: int, m: int) -> DenseGraph:
    """K_d tensor K*_m."""
    return tensor(complete_graph(d), complete_graph(m, loops=True))


def double_tensor(n: int, m: int, d: int, verify: bool = True) -> FamilyInstance:
    _require(n % d == 0 and m % d == 0 and min(n, m) > d > 1,
             f"need d | n, d | m and min(n, m) > d > 1, got n={n}, m={m}, d={d}")
    g = tensor(kd_kstar(d, n // d), kd_kstar(d, m // d))
    q = m * n // (d * d)
    expected = Spectrum.from_pairs([((d - 1) ** 2 * q, 1), (0, n * m - d * d),
                                    (-(d - 1) * q, 2 * (d - 1)), (q, (d - 1) ** 2)])
    return _finish(FamilyInstance("double_tensor", {"n": n, "m": m, "d": d}, g, expected), verify)


def kd_knd_divisors(n: int, d: int) -> DivisorSet:
    return DivisorSet(n, {a * b for a in proper_divisors(d) for b in proper_divisors(n // d)})


def kd_knd(n: int, d: int, verify: bool = True) -> FamilyInstance:
    """K_d x K_{n/d} for coprime d, n/d, with its ICG form and the witness bijection.

    Vertex (a, b) of the tensor product has index a*(n/d) + b and maps to (a*(n/d) + b*d) mod n.
    """
    e = n // d if d and n % d == 0 else 0
    _require(1 < d < n and n % d == 0 and gcd(d, e) == 1,
             f"need 1 < d < n, d | n and gcd(d, n/d) = 1, got n={n}, d={d}")
    dense = tensor(complete_graph(d), complete_graph(e))
    witness = [(a * e + b * d) % n for a in range(d) for b in range(e)]
    spec = kd_knd_divisors(n, d)
    expected = Spectrum.from_pairs([((d - 1) * (e - 1), 1), (1, (d - 1) * (e - 1)),
                                    (-(d - 1), e - 1), (-(e - 1), d - 1)])
    inst = FamilyInstance("kd_knd", {"n": n, "d": d}, spec, expected,
                          extras={"tensor": dense, "witness": witness})
    return _finish(inst, verify)


def witness_preserves_adjacency(dense: DenseGraph, spec: DivisorSet, witness) -> bool:
    """Bijection check plus edge-by-edge agreement in both directions."""
    if sorted(witness) != list(range(spec.n)):
        return False
    return dense.permuted(witness) == to_dense(expand_divisor_set(spec))


def blowup_symbol(p: int, n: int) -> SymbolSet:
    qr = quadratic_residues(p)
    return SymbolSet(n, {i * p + s for i in range(n // p) for s in qr})


def blowup_paley(p: int, n: int, verify: bool = True) -> FamilyInstance:
    """G(n; union of ip + QR(p)); isomorphic to K*_{n/p} x Paley(p) under (i, r) -> ip + r."""
    _require(is_prime(p) and p % 4 == 1, f"need a prime p = 1 mod 4, got {p}")
    _require(n % p == 0 and n > p, f"need n a proper multiple of p, got n={n}, p={p}")
    q, h = n // p, (p - 1) // 2
    expected = Spectrum.from_pairs([(q * h, 1), (0.0, n - p), (q * (sqrt(p) - 1) / 2, h),
                                    (-q * (sqrt(p) + 1) / 2, h)], exact=False)
    return _finish(FamilyInstance("blowup_paley", {"p": p, "n": n}, blowup_symbol(p, n), expected), verify)


def blowup_tensor_form(p: int, n: int) -> DenseGraph:
    return tensor(complete_graph(n // p, loops=True), to_dense(SymbolSet(p, quadratic_residues(p))))


def second_class_divisors(n: int, k: int, m: int) -> DivisorSet:
    _require(n % k == 0 and 2 <= k <= n - 1, f"need k | n with 2 <= k <= n-1, got n={n}, k={k}")
    _require((n // k) % m == 0 and 2 <= m <= n // k - 1,
             f"need m | n/k with 2 <= m <= n/k - 1, got n={n}, k={k}, m={m}")
    _require(k * m < n, f"need km < n, got k={k}, m={m}, n={n}")
    base = {d for d in proper_divisors(n) if d % k}
    top = {k * m * e for e in proper_divisors(n // (k * m))}
    return DivisorSet(n, base | top)


def second_class_icg(n: int, k: int, m: int, verify: bool = True) -> FamilyInstance:
    spec = second_class_divisors(n, k, m)
    a, b = n // k, n // (k * m)
    expected = Spectrum.from_pairs([(n - a + b - 1, 1), (b - 1, k * m - k),
                                    (-a + b - 1, k - 1), (-1, n - m * k)])
    return _finish(FamilyInstance("second_class", {"n": n, "k": k, "m": m}, spec, expected), verify)


def second_class_params(max_n: int):
    """Every valid (n, k, m) with n <= max_n."""
    for n in range(4, max_n + 1):
        for k in range(2, n):
            if n % k:
                continue
            for m in range(2, n // k):
                if (n // k) % m == 0:
                    yield n, k, m


def even_odd_divisors(n: int, k: int) -> DivisorSet:
    _require(n % 2 == 0 and not is_prime(n) and n > 2, f"need an even composite n, got {n}")
    _require(k % 2 == 1 and n % k == 0 and 2 <= k <= n - 1, f"need an odd divisor 3 <= k < n, got k={k}")
    _require(n % (2 * k) == 0, f"need 2k | n, got n={n}, k={k}")
    return DivisorSet(n, [d for d in proper_divisors(n)
                          if (d % 2 == 0 and d % k) or (d % 2 == 1 and d % k == 0)])


def even_odd_class_icg(n: int, k: int, verify: bool = True) -> FamilyInstance:
    spec = even_odd_divisors(n, k)
    half, q = n // 2, n // k
    expected = Spectrum.from_pairs([(half, 1), (half - q, 1), (-q, k - 1), (0, n - k - 1)])
    return _finish(FamilyInstance("even_odd_class", {"n": n, "k": k}, spec, expected), verify)


def even_odd_params(max_n: int):
    for n in range(6, max_n + 1, 2):
        if is_prime(n):
            continue
        for k in range(3, n, 2):
            if n % k == 0:
                yield n, k


def even_odd_complement_values(n: int, k: int) -> list[int]:
    half, q = n // 2, n // k
    return sorted({half - 1, -1 - half + q, q - 1, -1}, reverse=True)


def paley_self_complement_witness(p: int) -> list[int]:
    """x -> b*x mod p for the least quadratic non-residue b."""
    _require(is_prime(p) and p % 4 == 1, f"need a prime p = 1 mod 4, got {p}")
    b = least_nonresidue(p, 2)
    return [b * x % p for x in range(p)]


def verify_self_complement(p: int, mapping) -> bool:
    g = to_dense(SymbolSet(p, quadratic_residues(p)))
    comp = ~g.adj
    np.fill_diagonal(comp, False)
    return sorted(mapping) == list(range(p)) and np.array_equal(g.permuted(mapping).adj, comp)


def catalogue(verify: bool = True) -> list[FamilyInstance]:
    """Representative instances of every family."""
    return [
        paley(5, verify), paley(13, verify), paley(17, verify),
        cubic_coset_circulant(7, 0, verify), cubic_coset_circulant(13, 0, verify),
        multipartite_icg(6, 3, verify), multipartite_icg(12, 4, verify),
        double_tensor(6, 6, 3, verify), double_tensor(4, 4, 2, verify),
        kd_knd(15, 3, verify), kd_knd(6, 2, verify),
        blowup_paley(5, 15, verify), blowup_paley(5, 10, verify),
        second_class_icg(12, 2, 2, verify), second_class_icg(8, 2, 2, verify),
        even_odd_class_icg(12, 3, verify), even_odd_class_icg(18, 3, verify),
    ]
