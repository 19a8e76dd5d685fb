import math

import pytest
from hypothesis import given, strategies as st

from circspec import numtheory as nt


def brute_ramanujan(j, n):
    # sum of cos(2 pi j k / n) over units k, rounded
    total = sum(math.cos(2 * math.pi * j * k / n) for k in range(1, n + 1) if math.gcd(k, n) == 1)
    return round(total)


def test_small_tables():
    assert nt.divisors(12) == [1, 2, 3, 4, 6, 12]
    assert nt.proper_divisors(12) == [1, 2, 3, 4, 6]
    assert [nt.euler_phi(n) for n in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]
    assert [nt.mobius(n) for n in range(1, 11)] == [1, -1, -1, 0, -1, 1, -1, 0, 0, 1]
    assert nt.factorize(360) == ((2, 3), (3, 2), (5, 1))


def test_proper_divisors_rejects_one():
    with pytest.raises(ValueError):
        nt.proper_divisors(1)


def test_ramanujan_examples():
    assert nt.ramanujan(0, 9) == 6
    assert nt.ramanujan(3, 9) == -3
    assert nt.ramanujan(1, 9) == 0
    assert nt.ramanujan(1, 6) == 1


@given(st.integers(1, 60), st.integers(0, 120))
def test_ramanujan_matches_unit_cosine_sum(n, j):
    assert nt.ramanujan(j, n) == brute_ramanujan(j, n)


@given(st.integers(1, 300), st.integers(0, 600))
def test_ramanujan_depends_on_gcd_only(n, j):
    assert nt.ramanujan(j, n) == nt.ramanujan(math.gcd(j, n), n)


@given(st.integers(2, 300))
def test_ramanujan_row_sum_vanishes(n):
    assert sum(nt.ramanujan(j, n) for j in range(n)) == 0


def test_legendre_and_residues():
    assert sorted(nt.quadratic_residues(13)) == [1, 3, 4, 9, 10, 12]
    assert nt.legendre(2, 7) == 1 and nt.legendre(3, 7) == -1 and nt.legendre(14, 7) == 0
    with pytest.raises(ValueError):
        nt.legendre(1, 9)
    assert sorted(nt.cubic_residues(7)) == [1, 6]
    assert nt.least_nonresidue(13, 2) == 2


@given(st.sampled_from([5, 7, 11, 13, 17, 19, 23, 29, 31]), st.integers(1, 200), st.integers(1, 200))
def test_legendre_multiplicative(p, a, b):
    assert nt.legendre(a * b, p) == nt.legendre(a, p) * nt.legendre(b, p)


@given(st.sampled_from([7, 13, 19, 31, 37, 43, 61, 67, 73, 79]))
def test_residue_counts(p):
    assert len(nt.quadratic_residues(p)) == (p - 1) // 2
    assert len(nt.cubic_residues(p)) == (p - 1) // 3
    assert all(nt.cubic_residue_symbol(x, p) == 1 for x in nt.cubic_residues(p))


@pytest.mark.parametrize("p,a,b", [(7, 1, 1), (13, -5, 1), (19, 7, 1), (31, 4, 2)])
def test_cubic_decomposition(p, a, b):
    dec = nt.cubic_decomposition(p)
    assert (dec.a, abs(dec.b)) == (a, b)
    assert 4 * p == dec.a ** 2 + 27 * dec.b ** 2 and dec.a % 3 == 1


def test_gaussian_period_cubic_p7():
    # roots are 2cos(2 pi k/7) for the cubic residues {1, 6}
    assert nt.gaussian_period_cubic(7) == (1, 1, -2, -1)
    for k in (1, 2, 3):
        t = 2 * math.cos(2 * math.pi * k / 7)
        assert abs(t ** 3 + t ** 2 - 2 * t - 1) < 1e-12


def kluyver(j, n):
    # c(j, n) = sum over d | gcd(j, n) of mu(n/d) * d, an exact route independent of the closed form
    g = math.gcd(j, n)
    return sum(nt.mobius(n // d) * d for d in range(1, g + 1) if g % d == 0)


def test_ramanujan_matches_kluyver_exhaustive():
    for n in range(1, 151):
        for j in range(0, n):
            assert nt.ramanujan(j, n) == kluyver(j, n), (j, n)
