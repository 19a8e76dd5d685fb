"""Arithmetic functions and residue machinery.

Everything here is exact integer arithmetic on desk-scale inputs (< 10**7).
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import gcd, isqrt

FactorMap = tuple[tuple[int, int], ...]

MAX_INPUT = 10**12


def _check_positive(n: int, name: str = "n") -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"{name} must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"{name} must be >= 1, got {n}")
    if n > MAX_INPUT:
        raise OverflowError(f"{name}={n} exceeds the supported range")


@lru_cache(maxsize=1 << 16)
def factorize(n: int) -> FactorMap:
    """Prime factorization by trial division, primes ascending.

    >>> factorize(360)
    ((2, 3), (3, 2), (5, 1))
    """
    _check_positive(n)
    out = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        out.append((m, 1))
    return tuple(out)


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    f = factorize(n)
    return len(f) == 1 and f[0][1] == 1


def is_prime_power(n: int) -> bool:
    return n > 1 and len(factorize(n)) == 1


def divisors(n: int) -> list[int]:
    """All positive divisors of n, ascending."""
    _check_positive(n)
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def proper_divisors(n: int) -> list[int]:
    """Divisors of n excluding n itself (the set D_n)."""
    if n < 2:
        raise ValueError(f"proper_divisors needs n >= 2, got {n}")
    return divisors(n)[:-1]


@lru_cache(maxsize=1 << 16)
def euler_phi(n: int) -> int:
    _check_positive(n)
    result = n
    for p, _ in factorize(n):
        result = result // p * (p - 1)
    return result


@lru_cache(maxsize=1 << 16)
def mobius(n: int) -> int:
    _check_positive(n)
    f = factorize(n)
    if any(e > 1 for _, e in f):
        return 0
    return -1 if len(f) % 2 else 1


def ramanujan(j: int, n: int) -> int:
    """Ramanujan sum c(j, n) = mu(t) * phi(n) / phi(t), t = n / gcd(n, j)."""
    _check_positive(n)
    t = n // gcd(n, j)
    mu = mobius(t)
    if mu == 0:
        return 0
    return mu * (euler_phi(n) // euler_phi(t))


def _check_odd_prime(p: int) -> None:
    if not (isinstance(p, int) and p > 2 and is_prime(p)):
        raise ValueError(f"{p} is not an odd prime")


def legendre(a: int, p: int) -> int:
    """Legendre symbol via Euler's criterion."""
    _check_odd_prime(p)
    r = pow(a % p, (p - 1) // 2, p)
    if r == 0:
        return 0
    return 1 if r == 1 else -1


def power_residues(p: int, k: int) -> frozenset[int]:
    """Nonzero residues a mod p for which x**k = a is solvable."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    return frozenset(pow(x, k, p) for x in range(1, p))


def quadratic_residues(p: int) -> frozenset[int]:
    return power_residues(p, 2)


def cubic_residues(p: int) -> frozenset[int]:
    return power_residues(p, 3)


def cubic_residue_symbol(a: int, p: int) -> int:
    """Cubic-residue indicator: 1 for a nonzero cube mod p, -1 for a non-cube, 0 if p | a."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if a % p == 0:
        return 0
    d = gcd(3, p - 1)
    return 1 if pow(a % p, (p - 1) // d, p) == 1 else -1


def least_nonresidue(p: int, k: int) -> int:
    """Smallest positive integer that is not a k-th power residue mod p."""
    res = power_residues(p, k)
    for x in range(2, p):
        if x not in res:
            return x
    raise ValueError(f"every unit mod {p} is a {k}-th power residue")


@dataclass(frozen=True)
class CubicDecomposition:
    """4p = a**2 + 27 b**2 with a = 1 (mod 3) and b >= 0."""

    p: int
    a: int
    b: int

    def __post_init__(self) -> None:
        if 4 * self.p != self.a**2 + 27 * self.b**2 or self.a % 3 != 1 or self.b < 0:
            raise ValueError(f"invalid cubic decomposition {self}")


def cubic_decomposition(p: int) -> CubicDecomposition:
    if not is_prime(p) or p % 3 != 1:
        raise ValueError(f"cubic_decomposition needs a prime p = 1 mod 3, got {p}")
    for b in range(isqrt(4 * p // 27) + 1):
        rest = 4 * p - 27 * b * b
        a = isqrt(rest)
        if a * a == rest:
            return CubicDecomposition(p, a if a % 3 == 1 else -a, b)
    raise RuntimeError(f"no decomposition 4p = a^2 + 27b^2 found for p={p}")


def gaussian_period_cubic(p: int) -> tuple[int, int, int, int]:
    """Integer coefficients (1, 1, c1, c0) of t^3 + t^2 - (p-1)/3 t - (ap+3p-1)/27."""
    dec = cubic_decomposition(p)
    num = dec.a * p + 3 * p - 1
    if num % 27:
        raise RuntimeError(f"constant term not integral for p={p}, a={dec.a}")
    return 1, 1, -((p - 1) // 3), -(num // 27)
