# tests/test_axioms.py
import dataclasses

import pytest

from hyperprime.core.errors import RingInvalid
from hyperprime.engine import axioms
from hyperprime.engine.builders import klein_module, regular_module, zmod_ring
from hyperprime.models.structures import ActionTable, HyperOpTable


def test_fix_a_ring_report(fix_a):
    ring, _ = fix_a
    report = axioms.verify_ring_axioms(ring)
    assert report.summary() == "ring R: 4/5 axiom groups pass"
    failing = {c.axiom for c in report.failures()}
    assert failing == {"f'.associativity", "f'.inverse", "f'.reversibility"}
    assoc = next(c for c in report.failures() if c.axiom == "f'.associativity")
    assert assoc.witness == ["0", "0", "1", "1", "1"]


def test_fix_a_module_report(fix_a):
    _, module = fix_a
    report = axioms.verify_module_axioms(module, check_ring=False)
    assert report.summary() == "module M: 4/5 axiom groups pass (unital=false; ring fails axioms)"
    assert {c.axiom for c in report.failures()} == {"f.associativity", "f.inverse", "f.reversibility"}


def test_module_check_refuses_invalid_ring(fix_a):
    _, module = fix_a
    with pytest.raises(RingInvalid):
        axioms.verify_module_axioms(module)


def test_fix_b_passes(fix_b):
    ring, klein = fix_b
    assert axioms.verify_ring_axioms(ring).summary() == "ring Z2: 5/5 axiom groups pass"
    assert axioms.verify_module_axioms(klein).summary() == "module H: pass (unital=true)"


@pytest.mark.parametrize("k", [2, 3, 4, 5])
def test_zmod_structures_pass(k):
    ring = zmod_ring(k)
    assert axioms.verify_ring_axioms(ring).ok
    assert axioms.verify_module_axioms(regular_module(ring)).ok


def test_builders_match_fixtures(z4, fix_b):
    from hyperprime.utils.diff_utils import structure_diff

    ring, module = z4
    built = regular_module(zmod_ring(4), name="Z4M")
    assert structure_diff(module, built) == {}
    assert structure_diff(fix_b[1], klein_module(zmod_ring(2))) == {}


def test_zero_scalar_violation_is_reported(z2):
    ring, module = z2
    entries = dict(module.g.entries)
    entries[((0, 1), 1)] = 0b10
    broken = dataclasses.replace(module, g=ActionTable(2, 2, 2, entries))
    report = axioms.verify_module_axioms(broken)
    assert "g.zero_scalar" in {c.axiom for c in report.failures()}


def test_unital_violation_is_reported(z2):
    ring, module = z2
    entries = dict(module.g.entries)
    entries[((1, 1), 1)] = 0b01
    broken = dataclasses.replace(module, g=ActionTable(2, 2, 2, entries))
    failing = {c.axiom for c in axioms.verify_module_axioms(broken).failures()}
    assert "g.unital" in failing


def test_neutral_violation_is_reported(z2):
    ring, _ = z2
    entries = dict(ring.f_prime.entries)
    entries[(0, 0, 1)] = 0b11
    broken = dataclasses.replace(ring, f_prime=HyperOpTable(3, 2, entries))
    failing = {c.axiom for c in axioms.verify_ring_axioms(broken).failures()}
    assert "f'.neutral" in failing
