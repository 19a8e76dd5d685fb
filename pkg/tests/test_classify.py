from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st

from circspec import classify as cl
from circspec.graphs import (DivisorSet, SymbolSet, complete_graph, cycle_graph, expand_divisor_set,
                             to_dense)
from circspec.numtheory import divisors
from circspec.ops import line_graph
from circspec.spectra import Spectrum, icg_eigenvalues, spectrum_circulant, spectrum_icg


def common_neighbour_counts(g):
    a = g.adj.astype(int)
    two = a @ a
    off = ~np.eye(g.order, dtype=bool)
    return set(two[g.adj & off].tolist()), set(two[~g.adj & off].tolist())


@pytest.mark.parametrize("n", [4, 8, 9, 25, 27])
def test_srg_params_match_common_neighbours(n):
    spec = DivisorSet(n, [1])
    p = cl.srg_parameters(spectrum_icg(spec))
    adj_counts, non_counts = common_neighbour_counts(to_dense(expand_divisor_set(spec)))
    assert adj_counts == {p.a} and non_counts == {p.c}


def test_paley_13_classification():
    s = spectrum_circulant(SymbolSet(13, [1, 3, 4, 9, 10, 12]))
    c = cl.classify(s, 13, True)
    assert (c.srg.v, c.srg.r, c.srg.a, c.srg.c) == (13, 6, 2, 3)
    assert c.srg.m_theta == c.srg.m_tau == 6


def test_disconnected_is_not_srg():
    c = cl.classify(spectrum_icg(DivisorSet(12, [2, 4])), 12, False)
    assert c.srg is None and c.distinct_count == 3


def test_connected_flag_cross_check():
    with pytest.raises(cl.MalformedSpectrum):
        cl.classify(spectrum_icg(DivisorSet(12, [2, 4])), 12, True)


def test_srg_exact_uses_fractions():
    p = cl.srg_parameters(spectrum_icg(DivisorSet(9, [1])))
    assert (p.v, p.r, p.a, p.c) == (9, 6, 3, 6)
    assert isinstance(p.theta, (int, Fraction))


@pytest.mark.parametrize("n", [6, 8, 12, 18, 20, 24, 30])
def test_parity_equivalence_full(n):
    from itertools import combinations
    from circspec.numtheory import proper_divisors
    divs = proper_divisors(n)
    for r in range(1, len(divs) + 1):
        for sub in combinations(divs, r):
            assert cl.parity_equivalence_check(DivisorSet(n, sub))


def test_realizable_finds_known_icg():
    spec = DivisorSet(36, [1, 4, 9])
    found = cl.integral_circulant_realizable(spectrum_icg(spec), 36)
    assert found is not None
    assert sorted(icg_eigenvalues(found)) == sorted(icg_eigenvalues(spec))


def test_realizable_none_for_kd_kstar_tensor():
    target = Spectrum.from_pairs([(16, 1), (0, 27), (-8, 4), (4, 4)])
    assert cl.integral_circulant_realizable(target, 36) is None


def test_realizable_parallel_matches_serial():
    target = spectrum_icg(DivisorSet(24, [3, 8]))
    a = cl.integral_circulant_realizable(target, 24, jobs=1)
    b = cl.integral_circulant_realizable(target, 24, jobs=2)
    assert sorted(icg_eigenvalues(a)) == sorted(icg_eigenvalues(b))


def test_line_circulant_obstruction():
    assert cl.line_circulant_obstruction(cycle_graph(7))
    assert cl.line_circulant_obstruction(complete_graph(4))
    assert not cl.line_circulant_obstruction(complete_graph(5))
    k23 = np.zeros((5, 5), bool)
    k23[:2, 2:] = k23[2:, :2] = True
    from circspec.graphs import DenseGraph
    assert cl.line_circulant_obstruction(DenseGraph(k23))
    k24 = np.zeros((6, 6), bool)
    k24[:2, 2:] = k24[2:, :2] = True
    assert not cl.line_circulant_obstruction(DenseGraph(k24))
