import pytest
from hypothesis import given, strategies as st

from circspec import search
from circspec.graphs import SymbolSet
from circspec.numtheory import quadratic_residues
from circspec.spectra import spectrum_circulant


@given(st.sampled_from([5, 7, 11, 13]), st.data())
def test_mask_roundtrip(p, data):
    mask = data.draw(st.integers(1, (1 << ((p - 1) // 2)) - 1))
    assert search.symbol_to_mask(search.mask_to_symbol(p, mask)) == mask


@pytest.mark.parametrize("p", [5, 7, 11, 13])
def test_distinct_counts_match_numeric(p):
    counts = search.distinct_counts(p)
    for mask in range(1, 1 << ((p - 1) // 2)):
        sym = search.mask_to_symbol(p, mask)
        assert counts[mask - 1] == spectrum_circulant(sym).distinct


def test_search_13_three_eigenvalues():
    found = [s.symbol for s in search.search_prime(13, 3)]
    qr = tuple(sorted(quadratic_residues(13)))
    qnr = tuple(x for x in range(1, 13) if x not in qr)
    assert sorted(found) == sorted([qr, qnr])


def test_search_7_four_eigenvalues_includes_complements():
    found = [s.symbol for s in search.search_prime(7, 4)]
    assert found == [(1, 6), (2, 5), (3, 4), (1, 2, 5, 6), (1, 3, 4, 6), (2, 3, 4, 5)]


def test_search_limit():
    with pytest.raises(ValueError):
        search.search_prime(37, 3)
