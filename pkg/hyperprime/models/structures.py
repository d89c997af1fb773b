# hyperprime/models/structures.py
"""Immutable table representations of finite hyperrings and hypermodules.

Subsets of a carrier are plain ints used as bitmasks: bit ``i`` set means the
element with index ``i`` is a member. Tables are keyed on sorted tuples only,
so commutativity holds by construction.
"""
import enum
from dataclasses import dataclass, field
from functools import cached_property
from math import comb
from typing import Dict, List, Mapping, Optional, Sequence, Tuple, Union

from hyperprime.core.errors import OutOfCarrier, StructureError, UnknownLabel


@dataclass(frozen=True)
class Element:
    index: int
    label: str


@dataclass(frozen=True)
class HyperOpTable:
    arity: int
    carrier_size: int
    entries: Mapping[Tuple[int, ...], int]
    commutative: bool = True

    def __post_init__(self):
        if self.arity < 1 or self.carrier_size < 1:
            raise StructureError(f"invalid table shape: arity {self.arity}, carrier {self.carrier_size}")
        expected = comb(self.carrier_size + self.arity - 1, self.arity)
        if len(self.entries) != expected:
            raise StructureError(
                f"table has {len(self.entries)} entries, expected {expected} sorted {self.arity}-tuples"
            )
        full = (1 << self.carrier_size) - 1
        for key, mask in self.entries.items():
            if len(key) != self.arity or list(key) != sorted(key):
                raise StructureError(f"table key {key} is not a sorted {self.arity}-tuple")
            if key[0] < 0 or key[-1] >= self.carrier_size:
                raise StructureError(f"table key {key} leaves the carrier")
            if mask == 0:
                raise StructureError(f"empty hyperproduct at {key}")
            if mask & ~full:
                raise StructureError(f"result at {key} leaves the carrier")

    def lookup(self, args: Sequence[int]) -> int:
        return self.entries[tuple(sorted(args))]


@dataclass(frozen=True)
class ActionTable:
    """External hyperoperation g: R^(n-1) x M -> P*(M), keyed by (sorted scalars, element)."""
    scalar_arity: int
    ring_size: int
    carrier_size: int
    entries: Mapping[Tuple[Tuple[int, ...], int], int]

    def __post_init__(self):
        expected = comb(self.ring_size + self.scalar_arity - 1, self.scalar_arity) * self.carrier_size
        if len(self.entries) != expected:
            raise StructureError(f"action table has {len(self.entries)} entries, expected {expected}")
        full = (1 << self.carrier_size) - 1
        for (scalars, element), mask in self.entries.items():
            if len(scalars) != self.scalar_arity or list(scalars) != sorted(scalars):
                raise StructureError(f"action key {scalars} is not a sorted {self.scalar_arity}-tuple")
            if not 0 <= element < self.carrier_size:
                raise StructureError(f"action key element {element} leaves the carrier")
            if mask == 0:
                raise StructureError(f"empty hyperproduct at {scalars} | {element}")
            if mask & ~full:
                raise StructureError(f"result at {scalars} | {element} leaves the carrier")

    def lookup(self, scalars: Sequence[int], element: int) -> int:
        return self.entries[(tuple(sorted(scalars)), element)]


class CarrierMixin:
    """Label and bitmask helpers shared by rings and modules."""
    name: str
    carrier: Tuple[Element, ...]
    zero: Element

    @property
    def size(self) -> int:
        return len(self.carrier)

    @property
    def full_mask(self) -> int:
        return (1 << len(self.carrier)) - 1

    @property
    def zero_mask(self) -> int:
        return 1 << self.zero.index

    @property
    def labels(self) -> List[str]:
        return [e.label for e in self.carrier]

    @cached_property
    def _label_index(self) -> Dict[str, int]:
        return {e.label: e.index for e in self.carrier}

    def index_of(self, label: str) -> int:
        try:
            return self._label_index[label]
        except KeyError:
            raise UnknownLabel(f"unknown element label '{label}' in {self.name}") from None

    def mask_of_labels(self, labels: Sequence[str]) -> int:
        mask = 0
        for label in labels:
            mask |= 1 << self.index_of(label)
        return mask

    def labels_of_mask(self, mask: int) -> List[str]:
        return [e.label for e in self.carrier if mask >> e.index & 1]

    def format_mask(self, mask: int) -> str:
        return "{" + ",".join(self.labels_of_mask(mask)) + "}"

    def format_tuple(self, indices: Sequence[int]) -> str:
        return "(" + ",".join(self.carrier[i].label for i in indices) + ")"

    @property
    def addition(self) -> HyperOpTable:
        raise NotImplementedError

    @cached_property
    def inverse_masks(self) -> Tuple[int, ...]:
        """For each x, the set of y with 0 in f(x, y, 0^(m-2))."""
        table = self.addition
        pad = (self.zero.index,) * (table.arity - 2)
        zero_bit = self.zero_mask
        return tuple(
            sum(1 << y for y in range(self.size) if table.lookup((x, y) + pad) & zero_bit)
            for x in range(self.size)
        )


def _check_carrier(name: str, carrier: Sequence[Element]) -> None:
    seen = set()
    for position, element in enumerate(carrier):
        if element.index != position:
            raise StructureError(f"{name}: element '{element.label}' has index {element.index}, expected {position}")
        if element.label in seen:
            raise StructureError(f"{name}: duplicate element label '{element.label}'")
        seen.add(element.label)


@dataclass(frozen=True, eq=False)
class Hyperring(CarrierMixin):
    name: str
    m: int
    n: int
    carrier: Tuple[Element, ...]
    f_prime: HyperOpTable
    g_prime: HyperOpTable
    zero: Element
    one: Element

    def __post_init__(self):
        _check_carrier(self.name, self.carrier)
        if self.m < 2 or self.n < 2:
            raise StructureError(f"{self.name}: arities must be at least 2, got ({self.m},{self.n})")
        if len(self.carrier) < 2:
            raise StructureError(f"{self.name}: single-element rings are not supported")
        if self.f_prime.arity != self.m or self.f_prime.carrier_size != self.size:
            raise StructureError(f"{self.name}: f' must be {self.m}-ary over {self.size} elements")
        if self.g_prime.arity != self.n or self.g_prime.carrier_size != self.size:
            raise StructureError(f"{self.name}: g' must be {self.n}-ary over {self.size} elements")
        for special in (self.zero, self.one):
            if self.carrier[special.index] != special:
                raise StructureError(f"{self.name}: '{special.label}' is not an element")
        if self.zero == self.one:
            raise StructureError(f"{self.name}: zero and one coincide")
        for key, mask in self.g_prime.entries.items():
            if mask & (mask - 1):
                raise StructureError(
                    f"{self.name}: g' must be single-valued, {self.format_tuple(key)} gives {self.format_mask(mask)}"
                )

    @property
    def addition(self) -> HyperOpTable:
        return self.f_prime

    def multiply(self, args: Sequence[int]) -> int:
        """g' as an operation: index of the single element of g'(args)."""
        return self.g_prime.lookup(args).bit_length() - 1

    def unit_tuple(self, r: int, width: int) -> Tuple[int, ...]:
        """(r, 1, ..., 1) of the given width, sorted."""
        return tuple(sorted((r,) + (self.one.index,) * (width - 1)))


@dataclass(frozen=True, eq=False)
class Hypermodule(CarrierMixin):
    name: str
    ring: Hyperring
    carrier: Tuple[Element, ...]
    f: HyperOpTable
    g: ActionTable
    zero: Element
    unital: bool = False

    def __post_init__(self):
        _check_carrier(self.name, self.carrier)
        if self.f.arity != self.ring.m or self.f.carrier_size != self.size:
            raise StructureError(f"{self.name}: f must be {self.ring.m}-ary over {self.size} elements")
        if (
            self.g.scalar_arity != self.ring.n - 1
            or self.g.ring_size != self.ring.size
            or self.g.carrier_size != self.size
        ):
            raise StructureError(f"{self.name}: g must take {self.ring.n - 1} scalars from {self.ring.name}")
        if self.carrier[self.zero.index] != self.zero:
            raise StructureError(f"{self.name}: '{self.zero.label}' is not an element")

    @property
    def m(self) -> int:
        return self.ring.m

    @property
    def n(self) -> int:
        return self.ring.n

    @property
    def addition(self) -> HyperOpTable:
        return self.f

    def unit_action(self, r: int, element: int) -> int:
        """g(r, 1^(n-2), element)."""
        return self.g.lookup(self.ring.unit_tuple(r, self.n - 1), element)


Structure = Union[Hyperring, Hypermodule]


class SubsetRole(str, enum.Enum):
    SUBSET = "subset"
    HYPERIDEAL = "hyperideal"
    SUBHYPERMODULE = "subhypermodule"


@dataclass(frozen=True)
class SubsetHandle:
    parent: Structure = field(compare=False, repr=False)
    members: int
    role: SubsetRole = SubsetRole.SUBSET

    def __post_init__(self):
        if self.members & ~self.parent.full_mask:
            raise OutOfCarrier(f"subset leaves the carrier of {self.parent.name}")

    @property
    def labels(self) -> List[str]:
        return self.parent.labels_of_mask(self.members)

    def __contains__(self, index: int) -> bool:
        return bool(self.members >> index & 1)

    def __len__(self) -> int:
        return self.members.bit_count()

    def __str__(self) -> str:
        return self.parent.format_mask(self.members)


@dataclass(frozen=True)
class ClassicalZeroWitness:
    scalars: Tuple[int, ...]
    subset: int


@dataclass(frozen=True)
class Counterexample:
    """A (scalars, element) pair violating a classification."""
    scalars: Tuple[int, ...]
    element: int


@dataclass(frozen=True)
class Coset:
    representative: int
    members: int


@dataclass(frozen=True, eq=False)
class Homomorphism:
    source: Hypermodule
    target: Hypermodule
    mapping: Tuple[int, ...]
    cosets: Optional[Tuple[Coset, ...]] = None  # set on quotient projections

    def apply(self, mask: int) -> int:
        image = 0
        for a in range(self.source.size):
            if mask >> a & 1:
                image |= 1 << self.mapping[a]
        return image

    def pull(self, mask: int) -> int:
        return sum(1 << a for a in range(self.source.size) if mask >> self.mapping[a] & 1)

    @property
    def is_injective(self) -> bool:
        return len(set(self.mapping)) == len(self.mapping)

    @property
    def is_surjective(self) -> bool:
        return len(set(self.mapping)) == self.target.size
