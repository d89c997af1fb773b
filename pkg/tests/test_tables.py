# tests/test_tables.py
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from hyperprime.core.errors import ArityMismatch, EmptySubset, OutOfCarrier, StructureError
from hyperprime.engine.tables import (
    bits, canonical_key, components, eval_action, eval_subsets, is_subset, mask_of, rectangle,
)
from hyperprime.formats.structure_file import load_structures
from hyperprime.models.structures import HyperOpTable

FIX_A_RING = load_structures(Path(__file__).resolve().parent.parent / "fixtures" / "fix_a.hyp")[0][0]


def test_bits_and_mask_of():
    assert bits(0b1011) == [0, 1, 3]
    assert mask_of([0, 1, 3]) == 0b1011
    assert bits(0) == []


def test_canonical_key_orders_by_size_then_mask():
    assert sorted([0b1000, 0b0011, 0b0001, 0b0101], key=canonical_key) == [0b0001, 0b1000, 0b0011, 0b0101]


def test_eval_subsets_on_singletons_is_the_table(fix_a):
    ring, _ = fix_a
    assert eval_subsets(ring.f_prime, [1 << 0, 1 << 1, 1 << 2]) == 0b111
    assert eval_subsets(ring.f_prime, [1 << 2, 1 << 1, 1 << 1]) == 0b110


def test_eval_subsets_unions_over_members(fix_a):
    ring, _ = fix_a
    # f'(0,0,0) | f'(0,0,2) | f'(0,2,2) = {0} | {2} | {0,2}
    assert eval_subsets(ring.f_prime, [0b101, 0b101, 0b001]) == 0b101


def test_eval_subsets_errors(fix_a):
    ring, _ = fix_a
    with pytest.raises(ArityMismatch):
        eval_subsets(ring.f_prime, [1, 1])
    with pytest.raises(EmptySubset):
        eval_subsets(ring.f_prime, [1, 0, 1])
    with pytest.raises(OutOfCarrier):
        eval_subsets(ring.f_prime, [1, 1, 1 << 3])


def test_eval_action(fix_a):
    _, module = fix_a
    # nonzero scalars send every nonzero element to 2
    assert eval_action(module.g, [0b110, 0b010], 0b1110) == 0b0100
    assert eval_action(module.g, [0b111, 0b010], 0b1111) == 0b0101


def test_rectangle_and_components():
    r = rectangle(0b11, 0b10, 2)
    assert bits(r) == [1, 3]
    assert components(r, 2) == (0b11, 0b10)


def test_table_rejects_empty_result():
    with pytest.raises(StructureError):
        HyperOpTable(2, 2, {(0, 0): 1, (0, 1): 0, (1, 1): 1})


def test_table_rejects_missing_tuple():
    with pytest.raises(StructureError):
        HyperOpTable(2, 2, {(0, 0): 1, (1, 1): 1})


@settings(max_examples=60, deadline=None)
@given(
    a=st.integers(min_value=1, max_value=7),
    b=st.integers(min_value=1, max_value=7),
    c=st.integers(min_value=1, max_value=7),
    extra=st.integers(min_value=0, max_value=7),
)
def test_eval_subsets_is_monotone(a, b, c, extra):
    f = FIX_A_RING.f_prime
    small = eval_subsets(f, [a, b, c])
    large = eval_subsets(f, [a | extra, b, c])
    assert is_subset(small, large)
