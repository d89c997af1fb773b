# tests/test_parser.py
import pytest

from hyperprime.core.errors import ParseError
from hyperprime.engine import construct
from hyperprime.formats.structure_file import load_structures, parse_structure, serialize_structures
from hyperprime.utils.diff_utils import structure_diff

SMALL = """\
ring Z2 arity 3 3
elements 0 1
zero 0
one 1
f 0 0 0 = 0
f 0 0 1 = 1
f 0 1 1 = 0
f 1 1 1 = 1
g 0 0 0 = 0
g 0 0 1 = 0
g 0 1 1 = 0
g 1 1 1 = 1
"""


def test_fix_a_parses(fix_a):
    ring, module = fix_a
    assert (ring.m, ring.n) == (3, 3)
    assert ring.labels == ["0", "1", "2"]
    assert module.labels == ["0", "1", "2", "3"]
    assert module.unital is False
    assert module.ring is ring
    assert module.f.lookup([2, 1, 0]) == 0b0111
    assert module.g.lookup([2, 1], 3) == 0b0100


def test_tuple_order_is_irrelevant():
    text = SMALL.replace("f 0 1 1 = 0", "f 1 0 1 = 0")
    rings, _ = parse_structure(text)
    assert rings[0].f_prime.lookup([0, 1, 1]) == 0b01


def test_comments_and_blank_lines():
    rings, modules = parse_structure("# header\n\n" + SMALL + "   # trailing\n")
    assert len(rings) == 1 and modules == []


@pytest.mark.parametrize(
    "mutate, fragment",
    [
        (lambda t: t.replace("f 0 1 1 = 0\n", ""), "missing tuple (0,1,1)"),
        (lambda t: t + "f 1 1 0 = 0\n", "duplicate tuple (0,1,1)"),
        (lambda t: t.replace("f 0 1 1 = 0", "f 0 1 1 ="), "empty hyperproduct"),
        (lambda t: t.replace("f 0 1 1 = 0", "f 0 1 7 = 0"), "unknown element label '7'"),
        (lambda t: t.replace("g 1 1 1 = 1", "g 1 1 1 = 0 1"), "single-valued"),
        (lambda t: t.replace("f 0 0 0 = 0", "f 0 0 = 0"), "expects 3 arguments"),
        (lambda t: t + "banana\n", "unknown directive"),
    ],
)
def test_malformed_tables(mutate, fragment):
    with pytest.raises(ParseError) as exc:
        parse_structure(mutate(SMALL))
    assert fragment in str(exc.value)


def test_parse_error_carries_line():
    with pytest.raises(ParseError) as exc:
        parse_structure(SMALL + "f 1 1 0 = 0\n")
    assert exc.value.line == 13
    assert str(exc.value).startswith("line 13:")


def test_module_over_unknown_ring():
    with pytest.raises(ParseError, match="unknown ring"):
        parse_structure("module M over R\nelements 0\nzero 0\n")


@pytest.mark.parametrize("name", ["fix_a.hyp", "fix_b.hyp", "z2.hyp", "z4.hyp"])
def test_round_trip(fixtures_dir, name):
    rings, modules = load_structures(fixtures_dir / name)
    again_rings, again_modules = parse_structure(serialize_structures(rings, modules))
    assert structure_diff(rings[0], again_rings[0]) == {}
    for before, after in zip(modules, again_modules):
        assert structure_diff(before, after) == {}


def test_quotient_and_product_round_trip(fix_b, z2):
    _, klein = fix_b
    quotient, _ = construct.quotient(klein, 0b0011)
    _, parsed = parse_structure(serialize_structures([], [quotient]))
    assert structure_diff(quotient, parsed[0]) == {}

    product = construct.product_module_over_product_ring(klein, z2[1])
    _, parsed = parse_structure(serialize_structures([product.ring], [product]))
    assert structure_diff(product, parsed[0]) == {}


def test_diff_detects_changed_entry(fix_b):
    ring, klein = fix_b
    text = serialize_structures([ring], [klein]).replace("f 0 x y = z", "f 0 x y = z x")
    _, parsed = parse_structure(text)
    assert structure_diff(klein, parsed[0]) != {}
