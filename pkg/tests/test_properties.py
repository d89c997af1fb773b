# tests/test_properties.py
"""Property-based checks over the regular modules Z_k, k = 2..5."""
from hypothesis import given, settings, strategies as st

from hyperprime.engine.builders import regular_module, zmod_ring
from hyperprime.engine.classify import ClassKind, classify
from hyperprime.engine.phi import PHI_REGISTRY
from hyperprime.engine.subobjects import subobjects

MODULES = {k: regular_module(zmod_ring(k)) for k in range(2, 6)}
SUBS = {k: [h.members for h in subobjects.enumerate_subhypermodules(m)] for k, m in MODULES.items()}

moduli = st.sampled_from(sorted(MODULES))


@st.composite
def proper_subs(draw):
    k = draw(moduli)
    module = MODULES[k]
    q = draw(st.sampled_from([s for s in SUBS[k] if s != module.full_mask]))
    return module, q


@settings(max_examples=20, deadline=None)
@given(k=moduli)
def test_enumeration_matches_oracle(k):
    module = MODULES[k]
    assert SUBS[k] == [h.members for h in subobjects.naive_subhypermodules(module)]


@settings(max_examples=50, deadline=None)
@given(k=moduli, mask=st.integers(min_value=1, max_value=31))
def test_membership_agrees_with_enumeration(k, mask):
    module = MODULES[k]
    mask &= module.full_mask
    if not mask:
        return
    assert subobjects.is_subhypermodule(module, mask) == (mask in SUBS[k])


@settings(max_examples=40, deadline=None)
@given(case=proper_subs())
def test_phi_empty_and_zero_reduce(case):
    module, q = case
    assert classify.is_phi_classical_prime(module, q, PHI_REGISTRY["empty"]) == classify.is_classical_prime(module, q)
    assert classify.is_phi_classical_prime(module, q, PHI_REGISTRY["zero"]) == classify.is_weakly_classical_prime(module, q)
    assert classify.is_phi_classical_prime(module, q, PHI_REGISTRY["id"])


@settings(max_examples=40, deadline=None)
@given(case=proper_subs())
def test_classical_implies_weakly(case):
    module, q = case
    if classify.is_classical_prime(module, q):
        assert classify.is_weakly_classical_prime(module, q)
    if classify.counterexample(module, q, ClassKind.WEAKLY) is None:
        assert classify.is_weakly_classical_prime(module, q)


@settings(max_examples=40, deadline=None)
@given(k=moduli, data=st.data())
def test_colon_is_monotone(k, data):
    module = MODULES[k]
    small = data.draw(st.sampled_from(SUBS[k]))
    large = data.draw(st.sampled_from([s for s in SUBS[k] if s & small == small]))
    assert subobjects.colon_sn(module, small).members & ~subobjects.colon_sn(module, large).members == 0
