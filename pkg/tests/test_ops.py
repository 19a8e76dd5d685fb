import pytest
from hypothesis import given, settings, strategies as st

from circspec import ops
from circspec.graphs import (DivisorSet, SymbolSet, complete_graph, cycle_graph, expand_divisor_set,
                             to_dense, unitary_cayley)
from circspec.numtheory import proper_divisors
from circspec.spectra import Spectrum, eigensolver_oracle, spectrum_circulant, spectrum_icg


@st.composite
def small_circulants(draw, max_n=14):
    n = draw(st.integers(3, max_n))
    half = draw(st.sets(st.integers(1, n // 2), min_size=1))
    return SymbolSet(n, sorted(half | {n - h for h in half}))


def test_line_graph_of_x5():
    g = to_dense(expand_divisor_set(unitary_cayley(5)))
    lg = ops.line_graph(g)
    assert lg.order == 10 and lg.regularity() == 6
    assert len(lg.to_edgelist().splitlines()) == 30


def test_line_rule_k4():
    # L(K4) is the octahedron: {4, 0^3, -2^2}
    s = spectrum_icg(DivisorSet(4, [1, 2]))
    assert ops.line_spectrum_regular(s, 3, 4) == Spectrum.from_pairs([(4, 1), (0, 3), (-2, 2)])


def test_line_rule_single_edge():
    # K2 is 1-regular: L(K2) = K1 with spectrum {0}
    s = Spectrum.from_pairs([(1, 1), (-1, 1)])
    assert ops.line_spectrum_regular(s, 1, 2) == Spectrum.from_pairs([(0, 1)])


@settings(max_examples=25, deadline=None)
@given(small_circulants())
def test_line_rule_matches_construction(sym):
    g = to_dense(sym)
    k = sym.degree
    rule = ops.line_spectrum_regular(spectrum_circulant(sym), k, sym.n)
    assert rule.matches(eigensolver_oracle(ops.line_graph(g)), 1e-6)


@settings(max_examples=25, deadline=None)
@given(small_circulants(8), small_circulants(8))
def test_tensor_rule_matches_construction(a, b):
    built = ops.tensor(to_dense(a), to_dense(b))
    rule = ops.tensor_spectrum(spectrum_circulant(a), spectrum_circulant(b))
    assert rule.matches(eigensolver_oracle(built), 1e-6)


@settings(max_examples=25, deadline=None)
@given(small_circulants(20))
def test_complement_rule_matches_construction(sym):
    rule = ops.complement_spectrum_regular(spectrum_circulant(sym), sym.n)
    assert rule.matches(eigensolver_oracle(ops.complement(to_dense(sym))), 1e-6)


def test_complement_rejects_loops():
    with pytest.raises(ValueError):
        ops.complement(complete_graph(3, loops=True))


@given(st.integers(4, 200), st.data())
def test_edge_union_is_additive(n, data):
    divs = proper_divisors(n)
    a = data.draw(st.sets(st.sampled_from(divs), min_size=1))
    rest = [d for d in divs if d not in a]
    if not rest:
        return
    b = data.draw(st.sets(st.sampled_from(rest), min_size=1))
    union = ops.icg_edge_union(DivisorSet(n, a), DivisorSet(n, b))
    from circspec.spectra import icg_eigenvalues
    assert (icg_eigenvalues(union) == icg_eigenvalues(DivisorSet(n, a)) + icg_eigenvalues(DivisorSet(n, b))).all()


def test_edge_union_rejects_overlap():
    with pytest.raises(ValueError):
        ops.icg_edge_union(DivisorSet(6, [1, 2]), DivisorSet(6, [2]))


def test_iterated_line_params():
    assert ops.iterated_line_params(2, 5, 3) == (2, 5)
    assert ops.iterated_line_params(4, 10, 1) == (6, 20)


def test_disjoint_copies_blocks():
    g = ops.disjoint_copies(cycle_graph(3), 2)
    assert g.order == 6 and not g.adj[0, 3] and g.adj[3, 4]
