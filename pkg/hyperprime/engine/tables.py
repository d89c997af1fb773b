# hyperprime/engine/tables.py
"""Bitmask helpers and the subset extension of hyperoperations."""
from itertools import combinations_with_replacement, product
from typing import Iterator, List, Sequence, Tuple

from hyperprime.core.errors import ArityMismatch, EmptySubset, OutOfCarrier
from hyperprime.models.structures import ActionTable, HyperOpTable


def bits(mask: int) -> List[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def mask_of(indices) -> int:
    mask = 0
    for i in indices:
        mask |= 1 << i
    return mask


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


def multisets(size: int, k: int) -> Iterator[Tuple[int, ...]]:
    """Sorted k-tuples over range(size), in lexicographic order."""
    return combinations_with_replacement(range(size), k)


def canonical_key(mask: int) -> Tuple[int, int]:
    """Sort key for subsets: size, then bitmask value."""
    return (mask.bit_count(), mask)


def _sorted_tuples(args: Sequence[int]) -> Iterator[Tuple[int, ...]]:
    first = args[0]
    if all(a == first for a in args):
        return combinations_with_replacement(bits(first), len(args))
    return iter({tuple(sorted(combo)) for combo in product(*(bits(a) for a in args))})


def _check_args(args: Sequence[int], carrier_size: int) -> None:
    for a in args:
        if a == 0:
            raise EmptySubset("hyperoperation argument is empty")
        if a >> carrier_size:
            raise OutOfCarrier("hyperoperation argument leaves the carrier")


def eval_subsets(table: HyperOpTable, args: Sequence[int]) -> int:
    """Union of the table entries over the cartesian product of the argument subsets."""
    if len(args) != table.arity:
        raise ArityMismatch(f"expected {table.arity} arguments, got {len(args)}")
    _check_args(args, table.carrier_size)
    result = 0
    entries = table.entries
    for key in _sorted_tuples(args):
        result |= entries[key]
    return result


def eval_action(action: ActionTable, scalar_sets: Sequence[int], elements: int) -> int:
    """g(A_1, ..., A_{n-1}, B) for scalar subsets A_i of R and B of M."""
    if len(scalar_sets) != action.scalar_arity:
        raise ArityMismatch(f"expected {action.scalar_arity} scalar arguments, got {len(scalar_sets)}")
    _check_args(scalar_sets, action.ring_size)
    _check_args([elements], action.carrier_size)
    result = 0
    entries = action.entries
    members = bits(elements)
    for scalars in _sorted_tuples(scalar_sets):
        for a in members:
            result |= entries[(scalars, a)]
    return result


def rectangle(left: int, right: int, right_size: int) -> int:
    """A x B inside a product carrier indexed i * right_size + j."""
    out = 0
    right_bits = bits(right)
    for i in bits(left):
        for j in right_bits:
            out |= 1 << (i * right_size + j)
    return out


def components(mask: int, right_size: int) -> Tuple[int, int]:
    """Projections of a product subset onto its two factors."""
    left = right = 0
    for p in bits(mask):
        left |= 1 << (p // right_size)
        right |= 1 << (p % right_size)
    return left, right
