# tests/test_construct.py
import pytest

from hyperprime.core.errors import ArityMismatch, NotHom, NotSub, RingMismatch
from hyperprime.engine import axioms, classify, construct, subobjects
from hyperprime.engine.builders import regular_module, zmod_ring
from hyperprime.engine.phi import PHI_REGISTRY, lift_phi, product_phi
from hyperprime.engine.tables import rectangle


def test_fix_a_quotient(fix_a):
    _, module = fix_a
    quotient, projection = construct.quotient(module, 0b0101)
    assert quotient.name == "M/[0,2]"
    assert quotient.labels == ["[0,2]", "[0,1,2]", "[0,2,3]"]
    assert quotient.zero.label == "[0,2]"
    assert construct.kernel(projection).members == 0b0101
    assert projection.is_surjective


def test_quotient_of_verified_module_verifies(fix_b):
    _, klein = fix_b
    quotient, projection = construct.quotient(klein, 0b0011)
    assert quotient.labels == ["[0,x]", "[y,z]"]
    assert axioms.verify_module_axioms(quotient).ok
    assert construct.kernel(projection).members == 0b0011


def test_quotient_by_non_sub(fix_a):
    _, module = fix_a
    with pytest.raises(NotSub):
        construct.quotient(module, 0b0011)


def test_lift(z4):
    _, module = z4
    quotient, projection = construct.quotient(module, 0b0101)
    lifted = construct.lift(projection, 0b0101)
    assert lifted.members == quotient.zero_mask
    assert classify.is_classical_prime(quotient, lifted.members)


def test_lifted_phi(z4):
    _, module = z4
    quotient, projection = construct.quotient(module, 0b0001)
    phi_n = lift_phi(PHI_REGISTRY["zero"], projection, 0b0001)
    assert phi_n.name == "zero_N"
    assert phi_n.apply(quotient, quotient.zero_mask) == quotient.zero_mask


def test_same_ring_product(fix_b):
    _, klein = fix_b
    product = construct.product_same_ring(klein, klein)
    assert product.size == 16
    assert product.labels[:4] == ["(0,0)", "(0,x)", "(0,y)", "(0,z)"]
    assert axioms.verify_module_axioms(product).ok


def test_same_ring_product_needs_one_ring(fix_b, z4):
    with pytest.raises(RingMismatch):
        construct.product_same_ring(fix_b[1], z4[1])


def test_product_ring(z2, z4):
    ring = construct.product_rings(z2[0], z4[0])
    assert ring.size == 8
    assert ring.one.label == "(1,1)"
    assert axioms.verify_ring_axioms(ring).ok
    product = construct.product_module_over_product_ring(z2[1], z4[1], ring)
    assert product.ring is ring
    assert axioms.verify_module_axioms(product).ok


def test_product_ring_arity_mismatch(z2):
    with pytest.raises(ArityMismatch):
        construct.product_rings(z2[0], zmod_ring(2, m=2, n=3))


def test_product_phi_on_rectangles(z2, z4):
    left, right = z2[1], z4[1]
    product = construct.product_module_over_product_ring(left, right)
    phi = product_phi(PHI_REGISTRY["zero"], PHI_REGISTRY["id"], left, right)
    q = rectangle(0b01, 0b0101, right.size)
    assert phi.apply(product, q) == rectangle(0b01, 0b0101, right.size)


def test_injection_and_projection(fix_b):
    _, klein = fix_b
    product = construct.product_same_ring(klein, klein)
    inj = construct.injection(klein, klein, product)
    assert inj.is_injective and not inj.is_surjective
    proj = construct.projection_of_product(klein, klein, product, side=1)
    assert proj.is_surjective
    assert construct.kernel(proj).members == rectangle(klein.full_mask, klein.zero_mask, 4)


def test_check_homomorphism(fix_b):
    _, klein = fix_b
    identity = construct.check_homomorphism(list(range(4)), klein, klein)
    assert identity.is_injective and identity.is_surjective
    # swapping x and y is an automorphism of the Klein group
    swap = construct.check_homomorphism([0, 2, 1, 3], klein, klein)
    assert construct.image(swap, 0b0011).members == 0b0101
    assert construct.preimage(swap, 0b0101).members == 0b0011
    with pytest.raises(NotHom):
        construct.check_homomorphism([0, 1, 1, 3], klein, klein)
    with pytest.raises(NotHom):
        construct.check_homomorphism([0, 1], klein, klein)


def test_restrict(fix_b):
    _, klein = fix_b
    line = construct.restrict(klein, 0b0011)
    assert line.labels == ["0", "x"]
    assert axioms.verify_module_axioms(line).ok
    assert [h.members for h in subobjects.enumerate_subhypermodules(line)] == [0b01, 0b11]


def test_same_ring_is_extensional():
    assert construct.same_ring(zmod_ring(3), zmod_ring(3))
    assert not construct.same_ring(zmod_ring(3), zmod_ring(4))


def test_regular_module_over_z3_is_simple():
    module = regular_module(zmod_ring(3))
    assert [h.members for h in subobjects.enumerate_subhypermodules(module)] == [0b001, 0b111]
