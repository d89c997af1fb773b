# tests/test_classify.py
import logging

import pytest

from hyperprime.core.errors import CapExceeded, NotMultiplication, NotProper, NotSub, PremiseFails
from hyperprime.engine import PHI_REGISTRY, ClassKind, classify, construct
from hyperprime.engine.phi import PHI_IDEAL


def test_fix_a_classical_prime(fix_a):
    _, module = fix_a
    assert classify.is_classical_prime(module, 0b0101)


@pytest.mark.parametrize("q", [0b0001, 0b0101, 0b0111, 0b1101])
def test_fix_a_every_proper_sub_is_everything(fix_a, q):
    _, module = fix_a
    assert classify.is_prime(module, q)
    assert classify.is_classical_prime(module, q)
    assert classify.is_weakly_classical_prime(module, q)
    for phi in PHI_REGISTRY.values():
        assert classify.is_phi_classical_prime(module, q, phi)


def test_proper_and_sub_required(fix_a):
    _, module = fix_a
    with pytest.raises(NotProper, match="subhypermodule must be proper"):
        classify.is_classical_prime(module, 0b1111)
    with pytest.raises(NotSub):
        classify.is_classical_prime(module, 0b0011)


def test_z4_zero_is_weakly_but_not_classical(z4):
    _, module = z4
    assert not classify.is_classical_prime(module, 0b0001)
    assert classify.is_weakly_classical_prime(module, 0b0001)
    witness = classify.counterexample(module, 0b0001, ClassKind.CLASSICAL)
    assert (witness.scalars, witness.element) == ((2, 2), 1)
    assert module.g.entries[(witness.scalars, witness.element)] == 0b0001


def test_z4_zero_is_not_prime_under_either_reading(z4):
    _, module = z4
    assert classify.prime_forms(module, 0b0001) == (False, False)
    assert classify.prime_forms(module, 0b0101) == (True, True)


def test_z2_zero_is_prime(z2):
    _, module = z2
    assert classify.is_prime(module, 0b01)
    assert classify.is_classical_prime(module, 0b01)


def test_phi_reductions(z4):
    _, module = z4
    for q in (0b0001, 0b0101):
        assert classify.is_phi_classical_prime(module, q, PHI_REGISTRY["empty"]) == classify.is_classical_prime(module, q)
        assert classify.is_phi_classical_prime(module, q, PHI_REGISTRY["zero"]) == classify.is_weakly_classical_prime(module, q)
        assert classify.is_phi_classical_prime(module, q, PHI_REGISTRY["id"])


def test_phi_ideal_value(fix_a):
    _, module = fix_a
    assert PHI_IDEAL.apply(module, 0b0101) == 0b0101
    assert PHI_IDEAL.apply(module, 0b0001) == 0b0001


def test_classical_zeros(z4, fix_a):
    _, module = z4
    zeros = classify.find_classical_zeros(module, 0b0001)
    assert any(z.scalars == (2, 2) and z.subset == 0b0010 for z in zeros)
    assert classify.has_classical_zero(module, 0b0001, (2, 2), 0b0010)
    assert not classify.has_classical_zero(module, 0b0001, (1, 1), module.full_mask)
    _, fix_a_module = fix_a
    assert classify.find_classical_zeros(fix_a_module, 0b0101) == []


def test_zero_search_warns_when_not_weakly(caplog, z2, z4):
    product = construct.product_module_over_product_ring(z2[1], z4[1])
    q = product.mask_of_labels(["(0,0)", "(1,0)"])
    assert not classify.is_weakly_classical_prime(product, q)
    with caplog.at_level(logging.WARNING, logger="hyperprime.engine.classify"):
        classify.find_classical_zeros(product, q)
    assert any("not weakly classical prime" in r.getMessage() for r in caplog.records)


def test_zero_search_cap(clean_settings, monkeypatch, z4):
    monkeypatch.setenv("HYPERPRIME_ZERO_SEARCH_CAP", "3")
    _, module = z4
    with pytest.raises(CapExceeded):
        classify.find_classical_zeros(module, 0b0001)


def test_free_classical_zero(z4):
    _, module = z4
    whole, two = 0b1111, 0b0101
    # g(<2>, <2>, Z4) = {0}
    assert not classify.is_free_classical_zero(module, 0b0001, (two, two), whole)
    with pytest.raises(PremiseFails):
        classify.is_free_classical_zero(module, 0b0001, (whole, whole), whole)


def test_torsion_free(fix_a, z4):
    _, module = fix_a
    assert classify.is_torsion_free(module)
    assert classify.is_torsion_free(module, strict=False)
    _, z4m = z4
    assert not classify.is_torsion_free(z4m)
    assert not classify.is_torsion_free_element(z4m, 1)  # g(2,2|1) = {0}
    assert classify.is_torsion_free_element(z4m, 1, strict=False) is False


def test_multiplication_modules(fix_a, fix_b, z4):
    assert classify.is_multiplication_module(z4[1])
    assert not classify.is_multiplication_module(fix_a[1])
    assert not classify.is_multiplication_module(fix_b[1])
    assert classify.presentation_ideal(z4[1], 0b0101).members == 0b0101


def test_submodule_product(z4, fix_b):
    _, module = z4
    two = 0b0101
    assert classify.submodule_product(module, [two, two, module.full_mask]) == 0b0001
    assert classify.submodule_product(module, [two, two], a=1) == 0b0001
    assert classify.submodule_product(module, [two], a=1) == 0b0101
    with pytest.raises(NotMultiplication):
        classify.submodule_product(fix_b[1], [0b0011, 0b0011], a=1)
