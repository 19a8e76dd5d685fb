import json
import math

import numpy as np
import pytest
from hypothesis import given, strategies as st

from circspec import graphs as gr


def test_symbol_set_validation():
    with pytest.raises(ValueError):
        gr.SymbolSet(7, [1, 2])  # not closed under negation
    with pytest.raises(ValueError):
        gr.SymbolSet(7, [0, 1, 6])  # 0 without loops
    s = gr.SymbolSet(7, [1, 6], loops=True)
    assert 0 in s.symbol and s.degree == 3


def test_divisor_set_validation():
    with pytest.raises(ValueError):
        gr.DivisorSet(12, [12])
    with pytest.raises(ValueError):
        gr.DivisorSet(12, [5])
    with pytest.raises(ValueError):
        gr.DivisorSet(12, [])


def test_expand_unitary_cayley():
    assert gr.expand_divisor_set(gr.unitary_cayley(12)).symbol == (1, 5, 7, 11)
    assert gr.degree(gr.DivisorSet(12, [2, 3])) == 2 + 2


@given(st.integers(2, 200), st.data())
def test_divisor_set_expansion_properties(n, data):
    from circspec.numtheory import euler_phi, proper_divisors
    divs = data.draw(st.sets(st.sampled_from(proper_divisors(n)), min_size=1))
    spec = gr.DivisorSet(n, divs)
    sym = gr.expand_divisor_set(spec)
    assert all((n - s) % n in sym.symbol for s in sym.symbol)
    assert sym.degree == sum(euler_phi(n // d) for d in divs)
    assert gr.is_connected(spec) == (math.gcd(n, *divs) == 1)
    assert gr.to_dense(sym).is_connected() == gr.is_connected(spec)


@given(st.integers(2, 60), st.data())
def test_dense_circulant_is_regular(n, data):
    half = data.draw(st.sets(st.integers(1, n // 2), min_size=1))
    sym = gr.SymbolSet(n, sorted(half | {n - h for h in half}))
    g = gr.to_dense(sym)
    assert g.regularity() == sym.degree
    assert len(g.edges()) == n * sym.degree // 2


def test_components_map():
    # ICG_12({2, 4}) splits into 2 copies of ICG_6({1, 2}); copy v % 2, local v // 2
    g, local = gr.components(gr.DivisorSet(12, [2, 4]))
    assert (g, local.n, local.divisors) == (2, 6, (1, 2))
    big = gr.to_dense(gr.expand_divisor_set(gr.DivisorSet(12, [2, 4])))
    small = gr.to_dense(gr.expand_divisor_set(local))
    for u in range(12):
        for v in range(12):
            same = u % 2 == v % 2
            assert big.adj[u, v] == (same and small.adj[u // 2, v // 2])


def test_dense_cap():
    with pytest.raises(gr.DenseCapExceeded):
        gr.complete_graph(gr.DENSE_CAP + 1)


def test_json_and_edgelist_roundtrip():
    spec = gr.DivisorSet(10, [1, 5])
    assert gr.graph_from_json(json.dumps(spec.to_json())) == spec
    sym = gr.SymbolSet(6, [0, 1, 5], loops=True)
    assert gr.graph_from_json(sym.to_json()) == sym
    g = gr.to_dense(gr.expand_divisor_set(gr.unitary_cayley(6)))
    text = g.to_edgelist()
    assert len(text.splitlines()) == 6
    assert gr.dense_from_edgelist(text, 6) == g


def test_permuted_preserves_edges():
    g = gr.cycle_graph(5)
    h = g.permuted([1, 2, 3, 4, 0])
    assert h == g
    assert np.array_equal(gr.complete_graph(3, loops=True).adj, np.ones((3, 3), bool))
