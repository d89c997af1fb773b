# tests/test_subobjects.py
import pytest

from hyperprime.core.errors import CapExceeded, EmptySubset, OutOfCarrier, ZeroElement
from hyperprime.engine import subobjects
from hyperprime.engine.builders import regular_module, zmod_ring


def masks(handles):
    return [h.members for h in handles]


def test_fix_a_lattice(fix_a):
    _, module = fix_a
    assert masks(subobjects.enumerate_subhypermodules(module)) == [0b0001, 0b0101, 0b0111, 0b1101, 0b1111]
    assert masks(subobjects.maximal_subhypermodules(module)) == [0b0111, 0b1101]
    assert not subobjects.is_subhypermodule(module, 0b0011)


def test_fix_a_hyperideals(fix_a):
    ring, _ = fix_a
    assert masks(subobjects.enumerate_hyperideals(ring)) == [0b001, 0b101, 0b111]
    assert subobjects.generated_hyperideal(ring, 0).members == 0b001
    assert subobjects.generated_hyperideal(ring, 1).members == 0b111
    assert subobjects.generated_hyperideal(ring, 2).members == 0b101


def test_fix_b_lattice(fix_b):
    _, klein = fix_b
    assert masks(subobjects.enumerate_subhypermodules(klein)) == [0b0001, 0b0011, 0b0101, 0b1001, 0b1111]
    assert masks(subobjects.maximal_subhypermodules(klein)) == [0b0011, 0b0101, 0b1001]


def test_z4_lattice(z4):
    _, module = z4
    assert masks(subobjects.enumerate_subhypermodules(module)) == [0b0001, 0b0101, 0b1111]


@pytest.mark.parametrize("name", ["fix_a", "fix_b", "z2", "z4"])
def test_enumeration_matches_oracle(request, name):
    ring, module = request.getfixturevalue(name)
    assert masks(subobjects.enumerate_subhypermodules(module)) == masks(subobjects.naive_subhypermodules(module))
    assert masks(subobjects.enumerate_hyperideals(ring)) == masks(subobjects.naive_hyperideals(ring))


def test_oracle_refuses_large_carriers(clean_settings, monkeypatch):
    monkeypatch.setenv("HYPERPRIME_ORACLE_CAP", "3")
    module = regular_module(zmod_ring(4))
    with pytest.raises(CapExceeded):
        subobjects.naive_subhypermodules(module)


def test_colon_sets(fix_a):
    _, module = fix_a
    assert subobjects.colon_sn(module, 0b0101).members == 0b111
    assert subobjects.colon_sn(module, 0b0001).members == 0b001
    assert subobjects.colon_sn(module, 0b0111).members == 0b111
    assert subobjects.colon_na(module, 0b0101, 1).members == 0b111
    assert subobjects.colon_na(module, 0b0001, 1).members == 0b001


def test_colon_set_is_intersection(z4):
    _, module = z4
    q = 0b0101  # {0,2}
    joint = subobjects.colon_set(module, q, 0b1010).members
    assert joint == subobjects.colon_na(module, q, 1).members & subobjects.colon_na(module, q, 3).members
    assert joint == 0b0101  # {0,2}


def test_torsion(fix_a, z4):
    _, module = fix_a
    assert all(subobjects.torsion_fm(module, a).members == 0b001 for a in (1, 2, 3))
    assert subobjects.is_faithful(module)
    _, z4m = z4
    assert subobjects.torsion_fm(z4m, 2).members == 0b0101  # 2 * 2 = 0
    assert subobjects.torsion_set(z4m, 0b0001).members == 0b1111
    with pytest.raises(ZeroElement):
        subobjects.torsion_fm(module, 0)


def test_subset_errors(fix_a):
    _, module = fix_a
    with pytest.raises(EmptySubset):
        subobjects.is_subhypermodule(module, 0)
    with pytest.raises(OutOfCarrier):
        subobjects.is_subhypermodule(module, 1 << 4)


def test_is_hyperideal(fix_a, z4):
    ring, _ = fix_a
    assert subobjects.is_hyperideal(ring, 0b101)
    assert not subobjects.is_hyperideal(ring, 0b011)
    z4_ring, _ = z4
    assert subobjects.is_hyperideal(z4_ring, 0b0101)
    assert not subobjects.is_hyperideal(z4_ring, 0b0011)
