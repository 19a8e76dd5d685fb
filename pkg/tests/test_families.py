import math

import numpy as np
import pytest

from circspec import families as fam
from circspec.graphs import DivisorSet, expand_divisor_set, to_dense
from circspec.spectra import Spectrum, eigensolver_oracle, spectrum_icg


def test_catalogue_verifies():
    assert all(inst.verified for inst in fam.catalogue())


def test_second_class_8_2_2_against_oracle():
    inst = fam.second_class_icg(8, 2, 2)
    expected = Spectrum.from_pairs([(5, 1), (1, 2), (-3, 1), (-1, 4)])
    assert inst.expected_spectrum == expected
    dense = to_dense(expand_divisor_set(inst.graph))
    assert eigensolver_oracle(dense).matches(expected, 1e-6)


def test_second_class_rejects_km_equal_n():
    with pytest.raises(ValueError):
        fam.second_class_divisors(8, 2, 4)


def test_kd_knd_105_15_divisors():
    assert fam.kd_knd_divisors(105, 15).divisors == (1, 3, 5)


@pytest.mark.parametrize("n,d", [(6, 2), (15, 3), (35, 5), (105, 15)])
def test_kd_knd_witness(n, d):
    inst = fam.kd_knd(n, d)
    assert fam.witness_preserves_adjacency(inst.extras["tensor"], inst.graph, inst.extras["witness"])
    assert sorted(inst.extras["witness"]) == list(range(n))


def test_multipartite_matches_oracle():
    inst = fam.multipartite_icg(12, 4)
    dense = to_dense(expand_divisor_set(inst.graph))
    assert eigensolver_oracle(dense).matches(inst.expected_spectrum, 1e-6)


def test_blowup_tensor_form_matches_symbol():
    inst = fam.blowup_paley(5, 15)
    assert eigensolver_oracle(fam.blowup_tensor_form(5, 15)).matches(inst.expected_spectrum, 1e-6)


@pytest.mark.parametrize("p", [5, 13, 17])
def test_paley_self_complement(p):
    assert fam.verify_self_complement(p, fam.paley_self_complement_witness(p))


def test_paley_rejects_bad_prime():
    with pytest.raises(ValueError):
        fam.paley(7)


def test_cubic_roots_p7_are_cosines():
    want = sorted((2 * math.cos(2 * math.pi * k / 7) for k in (1, 2, 3)), reverse=True)
    assert np.allclose(fam.cubic_polynomial_roots(7), want, atol=1e-12)


def test_even_odd_complement_values():
    inst = fam.even_odd_class_icg(12, 3)
    from circspec.ops import complement_spectrum_regular
    comp = complement_spectrum_regular(inst.computed_spectrum(), 12)
    assert comp.distinct_values() == fam.even_odd_complement_values(12, 3)


def test_family_mismatch_raises():
    inst = fam.multipartite_icg(6, 3, verify=False)
    inst.expected_spectrum = Spectrum.from_pairs([(6, 6)])
    with pytest.raises(fam.FamilyMismatch):
        inst.verify()


def test_family_json():
    d = fam.paley(5).to_json()
    assert d["graph"] == {"n": 5, "symbol": [1, 4], "loops": False} and d["verified"]


@pytest.mark.parametrize("p", [7, 13, 19, 31])
def test_cubic_cosets_share_spectrum_and_partition(p):
    from circspec.spectra import prime_order_partition, spectrum_circulant
    spectra = [spectrum_circulant(fam.cubic_coset_symbol(p, c)) for c in range(3)]
    assert all(s.matches(spectra[0], 1e-9) for s in spectra)
    assert len(prime_order_partition(p, fam.cubic_coset_symbol(p, 0)).classes) == 3
