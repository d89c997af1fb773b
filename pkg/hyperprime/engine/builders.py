# hyperprime/engine/builders.py
"""Classical structures encoded with singleton hyperoperations."""
from functools import reduce
from itertools import combinations_with_replacement
from operator import xor

from hyperprime.core.errors import StructureError
from hyperprime.engine.tables import multisets
from hyperprime.models.structures import ActionTable, Element, HyperOpTable, Hypermodule, Hyperring


def zmod_ring(k: int, m: int = 3, n: int = 3) -> Hyperring:
    """Z_k with f'(x_1..x_m) = {sum mod k} and g' = product mod k."""
    if k < 2:
        raise StructureError("Z_k needs k >= 2")
    f_entries = {key: 1 << (sum(key) % k) for key in combinations_with_replacement(range(k), m)}
    g_entries = {}
    for key in combinations_with_replacement(range(k), n):
        value = 1
        for x in key:
            value = value * x % k
        g_entries[key] = 1 << value
    carrier = tuple(Element(i, str(i)) for i in range(k))
    return Hyperring(
        name=f"Z{k}", m=m, n=n, carrier=carrier,
        f_prime=HyperOpTable(m, k, f_entries),
        g_prime=HyperOpTable(n, k, g_entries),
        zero=carrier[0], one=carrier[1],
    )


def regular_module(ring: Hyperring, name: str = "") -> Hypermodule:
    """R as a hypermodule over itself: f = f', g(r_1..r_{n-1}, a) = {g'(r_1..r_{n-1}, a)}."""
    g_entries = {
        (scalars, a): ring.g_prime.lookup(scalars + (a,))
        for scalars in multisets(ring.size, ring.n - 1)
        for a in range(ring.size)
    }
    return Hypermodule(
        name=name or ring.name, ring=ring, carrier=ring.carrier,
        f=ring.f_prime,
        g=ActionTable(ring.n - 1, ring.size, ring.size, g_entries),
        zero=ring.zero, unital=True,
    )


def klein_module(ring: Hyperring, name: str = "H") -> Hypermodule:
    """Klein four-group {0,x,y,z} as a vector space over a two-element field."""
    if ring.size != 2:
        raise StructureError("the Klein module is built over a two-element ring")
    carrier = tuple(Element(i, label) for i, label in enumerate(("0", "x", "y", "z")))
    f_entries = {key: 1 << reduce(xor, key) for key in combinations_with_replacement(range(4), ring.m)}
    one = ring.one.index
    g_entries = {}
    for scalars in multisets(2, ring.n - 1):
        acts = ring.multiply(scalars + (one,)) == one
        for a in range(4):
            g_entries[(scalars, a)] = 1 << a if acts else 1
    return Hypermodule(
        name=name, ring=ring, carrier=carrier,
        f=HyperOpTable(ring.m, 4, f_entries),
        g=ActionTable(ring.n - 1, 2, 4, g_entries),
        zero=carrier[0], unital=True,
    )
